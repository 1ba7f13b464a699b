#pragma once

#include <gmpxx.h>

#include <vector>

namespace minvar {

/// Power series truncated at a fixed order: exact integer coefficients
/// c_0..c_N. Values are immutable after construction; every operation
/// returns a new series truncated to the smaller operand order.
class TruncatedSeries {
 public:
  /// Zero series of the given order (order >= 0).
  explicit TruncatedSeries(long order);
  /// Takes ownership of c_0..c_N; the vector must be nonempty.
  explicit TruncatedSeries(std::vector<mpz_class> coeffs);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const mpz_class& coeff(long k) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_nonnegative() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

TruncatedSeries one(long order);
TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries mul(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries one_minus(const TruncatedSeries& x);

/// b = 1/(1-a) mod t^{n+1}: b_0 = 1 and b_n = sum_{k=1..n} a_k b_{n-k}.
/// Requires a_0 = 0 and n <= a.order(). Negative input coefficients are
/// legal for the algebra; when input_nonnegative is passed it reports
/// whether all a_k were >= 0 so certification layers can refuse.
TruncatedSeries recip_one_minus(const TruncatedSeries& a, long n,
                                bool* input_nonnegative = nullptr);
TruncatedSeries recip_one_minus(const TruncatedSeries& a);

/// Exact partial sum c_0 + c_1 q + ... + c_N q^N. Requires q >= 0; for
/// nonnegative coefficients this is a certified lower bound of the full
/// series value.
mpq_class eval_lower(const TruncatedSeries& x, const mpq_class& q);

}  // namespace minvar
