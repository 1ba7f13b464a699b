#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minvar/multiset_spec.hpp"

namespace minvar {

/// The solver could not certify a probe within the configured truncation
/// budget. CLI maps this to exit 3.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact counts b_0..b_N of colored compositions for the spec.
std::vector<mpz_class> b_sequence(const MultisetSpec& spec, long order);

/// value^(1/n) for value >= 1, n >= 1. Relative error stays well below the
/// 1e-9 contract for n up to 1e5 (exact bit length + 128-bit mantissa log).
double nth_root(const mpz_class& value, long n);

struct RootsRow {
  long n;
  mpz_class b;
  std::optional<double> root;  // absent when b = 0
};

struct RootsTable {
  std::vector<RootsRow> rows;
};

/// Rows n = 1..order with exact b_n and its nth root.
RootsTable roots_table(const MultisetSpec& spec, long order);

/// Rows along n = d, 2d, ... where d = gcd of the support below order.
/// Identical to roots_table when d = 1.
RootsTable gcd_subsequence_roots(const MultisetSpec& spec, long order);

/// One side of a certified comparison of a(q) against 1: the truncation
/// order used, the probe, the exact partial sum, and the tail bound added
/// for below-1 certificates (zero for above-1 certificates).
struct CertificateWitness {
  long order = 0;
  mpq_class probe;
  mpq_class partial;
  mpq_class tail;
};

struct RootBracket {
  enum class Kind { Bracketed, NoRootBelowRadius };
  Kind kind = Kind::Bracketed;

  // Bracketed: a(alpha_lo) < 1 and a(alpha_hi) >= 1, both certified.
  mpq_class alpha_lo;
  mpq_class alpha_hi;
  CertificateWitness lo_witness;
  CertificateWitness hi_witness;

  // NoRootBelowRadius: a(q) <= certified_sup < 1 for every q in (0, rho],
  // from the partial sum at rho plus the at-radius tail bound.
  mpq_class rho;
  mpq_class certified_sup;
  long sup_order = 0;
};

struct SolverOptions {
  long max_order = 1'000'000;  // coefficient budget (CLI: MINVAR_MAX_ORDER)
  long initial_order = 64;
  int radius_margin_log2 = 20;  // probes stay below rho * (1 - 2^-margin)
  mpq_class sup_tail_target = mpq_class(1, 10'000);
};

/// Bisection on exact rationals. Each probe q is certified either above
/// (partial sum >= 1) or below (partial sum + tail bound < 1), doubling the
/// truncation order while neither fires. Returns a bracket of width <= eps,
/// or the no-root verdict when the certified supremum over (0, rho] stays
/// below 1. Throws CertificationError when the budget runs out.
RootBracket solve_alpha(const MultisetSpec& spec, const mpq_class& eps,
                        const SolverOptions& opts = {});

/// Reciprocal interval (1/alpha_hi, 1/alpha_lo) with exact endpoints.
/// Rejects no-root verdicts and brackets whose lower endpoint is zero.
std::pair<mpq_class, mpq_class> beta_bracket(const RootBracket& rb);

/// Recomputes both certification predicates from the stored witnesses,
/// independent of any solver state.
bool verify_bracket(const MultisetSpec& spec, const RootBracket& rb);

}  // namespace minvar
