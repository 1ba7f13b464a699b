#include "minvar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "minvar/numeric.hpp"

namespace minvar {

GapProfile gap_profile(const MultisetSpec& spec, long bound) {
  if (bound < 1) throw SpecError("bound must be >= 1");
  GapProfile g;
  g.support = spec.support(bound);

  // maximal runs of consecutive support points
  for (size_t i = 0; i < g.support.size(); ++i) {
    if (g.blocks.empty() || g.support[i] != g.blocks.back().second + 1)
      g.blocks.emplace_back(g.support[i], g.support[i]);
    else
      g.blocks.back().second = g.support[i];
  }
  for (size_t i = 1; i < g.blocks.size(); ++i) {
    long p_next = g.blocks[i].first, q_prev = g.blocks[i - 1].second;
    g.block_gaps.push_back(p_next - q_prev);
    g.block_ratios.push_back(make_rational(p_next, q_prev));
  }
  for (size_t i = 1; i < g.support.size(); ++i) {
    g.support_gaps.push_back(g.support[i] - g.support[i - 1]);
    g.support_ratios.push_back(make_rational(g.support[i], g.support[i - 1]));
  }

  g.trailing_min_gap.resize(g.block_gaps.size());
  long running = 0;
  for (size_t i = g.block_gaps.size(); i-- > 0;) {
    running = running == 0 ? g.block_gaps[i] : std::min(running, g.block_gaps[i]);
    g.trailing_min_gap[i] = running;
  }

  // k_{i+1} / log(max{a_{k_1}..a_{k_i}}); vacuous while every coefficient is 1
  mpz_class max_coeff = 0;
  constexpr double kLn2 = 0.6931471805599453;
  for (size_t i = 0; i + 1 < g.support.size(); ++i) {
    mpz_class a = spec.coefficient(g.support[i]);
    if (a > max_coeff) max_coeff = a;
    if (max_coeff <= 1) {
      g.cohn_ratios.push_back(std::nullopt);
    } else {
      double ln_max = static_cast<double>(log2_mpz(max_coeff)) * kLn2;
      g.cohn_ratios.push_back(static_cast<double>(g.support[i + 1]) / ln_max);
      g.cohn_vacuous = false;
    }
  }
  return g;
}

bool SemigroupReport::representable(long n) const {
  if (n < 0) return false;
  if (n < static_cast<long>(table.size())) return table[static_cast<size_t>(n)] != 0;
  return n >= conductor;
}

SemigroupReport conductor(const std::vector<long>& generators) {
  if (generators.empty()) throw SpecError("generator list must be nonempty");
  std::vector<long> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() < 1) throw SpecError("generators must be positive");

  long g = 0;
  for (long v : gens) g = std::gcd(g, v);
  if (g != 1)
    throw SemigroupGcdError(g, "gcd=" + std::to_string(g) +
                                   "; generators must be coprime (use the d-subsequence view)");

  SemigroupReport report;
  report.generators = gens;

  if (gens.front() == 1) {
    report.frobenius = std::nullopt;
    report.conductor = 1;
    report.table = {1, 1};
    return report;
  }

  long g1 = gens[0];
  // Every residue class mod g1 is reached by a sum of at most g1 - 1
  // generators, so the Frobenius number is below (g1 - 1) * max(gens).
  long cap = (g1 - 1) * gens.back() + g1 + 1;
  std::vector<char> table(static_cast<size_t>(cap) + 1, 0);
  table[0] = 1;
  long run = 0, run_start = -1;
  for (long n = 1; n <= cap; ++n) {
    for (long v : gens) {
      if (v > n) break;
      if (table[n - v]) {
        table[n] = 1;
        break;
      }
    }
    if (table[n]) {
      if (run == 0) run_start = n;
      if (++run == g1) {
        report.conductor = run_start;
        report.frobenius = run_start - 1;
        table.resize(static_cast<size_t>(run_start) + g1 + 1);
        for (long m = run_start; m < static_cast<long>(table.size()); ++m) table[m] = 1;
        report.table = std::move(table);
        return report;
      }
    } else {
      run = 0;
    }
  }
  throw std::logic_error("semigroup scan did not terminate within the Sylvester bound");
}

}  // namespace minvar
