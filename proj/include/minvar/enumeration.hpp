#pragma once

#include <string>
#include <vector>

#include "minvar/multiset_spec.hpp"

namespace minvar {

/// An ordered list of (weight, color) parts summing to n. Color indices are
/// 0-based and valid iff color < a_weight under the spec.
struct ColoredComposition {
  struct Part {
    long weight;
    long color;
    friend bool operator==(const Part&, const Part&) = default;
  };
  std::vector<Part> parts;
  friend bool operator==(const ColoredComposition&, const ColoredComposition&) = default;
};

struct VarietyAtom {
  enum class Kind { MatrixK, MatrixE, MatrixAB };
  Kind kind;
  long m = 0;  // matrix size for K/E atoms, block size a for AB atoms
  long b = 0;  // block size b for AB atoms
  long weight = 0;
  std::string label() const;  // "M_2(K)", "M_1(E)", "M_{1,2}"
  friend bool operator==(const VarietyAtom&, const VarietyAtom&) = default;
};

struct VarietyDescriptor {
  std::vector<VarietyAtom> atoms;
  std::string label() const;  // atoms joined by '.'
  friend bool operator==(const VarietyDescriptor&, const VarietyDescriptor&) = default;
};

/// Atoms of the given weight in the fixed color order (K-type, then E-type,
/// then AB pairs by ascending a). Empty when a_weight = 0.
std::vector<VarietyAtom> atoms_at(const MultisetSpec& spec, long weight);

/// Streams every colored composition of n exactly once, lexicographically by
/// (weight sequence, color sequence). Single consumer; memory stays O(n).
class CompositionStream {
 public:
  CompositionStream(const MultisetSpec& spec, long n);
  /// Fills out with the next composition; false once exhausted.
  bool next(ColoredComposition& out);

 private:
  void descend();
  bool advance_weights();
  void emit(ColoredComposition& out) const;

  long n_;
  std::vector<long> sup_;    // support weights <= n, ascending
  std::vector<long> mult_;   // color counts per support weight
  std::vector<char> reach_;  // reach_[r]: r is a sum of support weights
  std::vector<long> widx_;   // current weight sequence (indices into sup_)
  std::vector<long> colors_;
  long rem_ = 0;
  bool started_ = false;
  bool done_ = false;
};

inline constexpr long kDefaultOracleBound = 25;

/// Cardinality of the composition stream, counted item by item without the
/// series recurrence. Rejects n above oracle_bound.
mpz_class count_by_enumeration(const MultisetSpec& spec, long n,
                               long oracle_bound = kDefaultOracleBound);

/// Maps each (weight, color) to the color-th atom of that weight. Only the
/// variety families (fg-codim, codim, gk-fg, gk) are accepted.
VarietyDescriptor to_variety(const MultisetSpec& spec, const ColoredComposition& c);

}  // namespace minvar
