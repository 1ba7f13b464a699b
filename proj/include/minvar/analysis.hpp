#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minvar/multiset_spec.hpp"

namespace minvar {

/// Gap structure of a coefficient support prefix. Blocks are maximal runs
/// of consecutive nonzero coefficients [p_i, q_i]; the block gaps p_{i+1}-q_i
/// and ratios p_{i+1}/q_i witness (strong) lacunarity on the prefix. The
/// support-point gaps/ratios k_{i+1}-k_i and k_{i+1}/k_i are also kept since
/// sparse supports are usually reported pointwise.
struct GapProfile {
  std::vector<long> support;
  std::vector<std::pair<long, long>> blocks;
  std::vector<long> block_gaps;
  std::vector<mpq_class> block_ratios;
  std::vector<long> support_gaps;
  std::vector<mpq_class> support_ratios;
  /// Suffix minima of block_gaps: trailing-window trend indicator. A prefix
  /// can only witness structure, never the limit.
  std::vector<long> trailing_min_gap;
  /// k_{i+1} / log(max{a_{k_1}..a_{k_i}}); nullopt while the running max is 1
  /// (denominator zero, check vacuous).
  std::vector<std::optional<double>> cohn_ratios;
  bool cohn_vacuous = true;
};

GapProfile gap_profile(const MultisetSpec& spec, long bound);

/// conductor() rejects generator sets with gcd > 1; the gcd is attached so
/// callers can switch to the d-subsequence view.
class SemigroupGcdError : public SpecError {
 public:
  SemigroupGcdError(long gcd_value, const std::string& message)
      : SpecError(message), gcd(gcd_value) {}
  long gcd;
};

struct SemigroupReport {
  std::vector<long> generators;
  std::optional<long> frobenius;  // absent when every n >= 1 is representable
  long conductor = 0;
  std::vector<char> table;  // representability for 0..table_bound
  bool representable(long n) const;
};

/// Representability table by dynamic programming; the scan closes once a run
/// of min(generators) consecutive representable integers appears, and the
/// product of the two smallest generators bounds the scan.
SemigroupReport conductor(const std::vector<long>& generators);

}  // namespace minvar
