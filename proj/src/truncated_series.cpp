#include "minvar/truncated_series.hpp"

#include <stdexcept>

namespace minvar {

TruncatedSeries::TruncatedSeries(long order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least c_0");
}

const mpz_class& TruncatedSeries::coeff(long k) const {
  if (k < 0 || k > order()) throw std::out_of_range("coefficient index beyond truncation order");
  return coeffs_[static_cast<size_t>(k)];
}

bool TruncatedSeries::is_nonnegative() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

TruncatedSeries one(long order) {
  TruncatedSeries r(order);
  std::vector<mpz_class> c(static_cast<size_t>(order) + 1);
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y) {
  long n = std::min(x.order(), y.order());
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) c[k] = x.coeff(k) + y.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& x, const TruncatedSeries& y) {
  long n = std::min(x.order(), y.order());
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    const mpz_class& xi = x.coeff(i);
    if (xi == 0) continue;
    for (long j = 0; i + j <= n; ++j) {
      if (y.coeff(j) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), xi.get_mpz_t(), y.coeff(j).get_mpz_t());
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries one_minus(const TruncatedSeries& x) {
  std::vector<mpz_class> c(static_cast<size_t>(x.order()) + 1);
  for (long k = 0; k <= x.order(); ++k) c[k] = -x.coeff(k);
  c[0] += 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries recip_one_minus(const TruncatedSeries& a, long n, bool* input_nonnegative) {
  if (a.coeff(0) != 0)
    throw std::invalid_argument("reciprocal requires a_0 = 0");
  if (n < 0 || n > a.order())
    throw std::invalid_argument("requested order exceeds the input truncation");
  if (input_nonnegative) *input_nonnegative = a.is_nonnegative();

  std::vector<mpz_class> b(static_cast<size_t>(n) + 1);
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    for (long k = 1; k <= m; ++k) {
      const mpz_class& ak = a.coeff(k);
      if (ak == 0) continue;
      mpz_addmul(b[m].get_mpz_t(), ak.get_mpz_t(), b[m - k].get_mpz_t());
    }
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries recip_one_minus(const TruncatedSeries& a) {
  return recip_one_minus(a, a.order());
}

mpq_class eval_lower(const TruncatedSeries& x, const mpq_class& q) {
  if (q < 0) throw std::invalid_argument("eval_lower requires q >= 0");
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  // integer Horner: acc = sum c_k num^k den^{N-k}, one canonicalization at the end
  mpz_class acc = 0, dp = 1;
  for (long k = x.order(); k >= 0; --k) {
    acc *= num;
    if (x.coeff(k) != 0) mpz_addmul(acc.get_mpz_t(), x.coeff(k).get_mpz_t(), dp.get_mpz_t());
    if (k > 0) dp *= den;
  }
  mpq_class r(std::move(acc), std::move(dp));
  r.canonicalize();
  return r;
}

}  // namespace minvar
