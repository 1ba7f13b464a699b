#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minvar/analysis.hpp"
#include "oracles.hpp"

using minvar::conductor;
using minvar::gap_profile;
using minvar::MultisetSpec;
using minvar::SemigroupGcdError;
using minvar::SpecError;

namespace {

// independent bounded-knapsack representability, no run detection
bool brute_representable(const std::vector<long>& gens, long n) {
  if (n == 0) return true;
  for (long g : gens)
    if (g <= n && brute_representable(gens, n - g)) return true;
  return false;
}

}  // namespace

TEST_CASE("fg-codim profile: singleton blocks at the squares, odd gaps") {
  auto g = gap_profile(MultisetSpec::fg_codim(), 100);
  REQUIRE(g.blocks.size() == 10);
  for (size_t i = 0; i < g.blocks.size(); ++i) {
    long s = static_cast<long>(i) + 1;
    CHECK(g.blocks[i] == std::pair<long, long>(s * s, s * s));
  }
  CHECK(g.block_gaps == std::vector<long>{3, 5, 7, 9, 11, 13, 15, 17, 19});
  CHECK(g.cohn_vacuous);  // all coefficients are 1
}

TEST_CASE("fg-codim block gap i equals 2i+1 out to i = 300") {
  auto g = gap_profile(MultisetSpec::fg_codim(), 302 * 302 - 1);
  REQUIRE(g.block_gaps.size() >= 300);
  for (size_t i = 0; i < 300; ++i)
    CHECK(g.block_gaps[i] == 2 * static_cast<long>(i) + 3);
  // gaps grow monotonically here, so every trailing minimum is the gap itself
  for (size_t i = 0; i < g.trailing_min_gap.size(); ++i)
    CHECK(g.trailing_min_gap[i] == g.block_gaps[i]);
}

TEST_CASE("factorial profile merges 1,2 into one block; support ratios are 2,3,4,5") {
  auto g = gap_profile(MultisetSpec::factorial(), 130);
  CHECK(g.support == std::vector<long>{1, 2, 6, 24, 120});
  REQUIRE(g.blocks.size() == 4);
  CHECK(g.blocks[0] == std::pair<long, long>(1, 2));
  CHECK(g.block_gaps == std::vector<long>{4, 18, 96});
  REQUIRE(g.support_ratios.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    CHECK(g.support_ratios[i] == mpq_class(static_cast<long>(i) + 2));
}

TEST_CASE("blocks partition the support exactly") {
  for (const auto& spec : {MultisetSpec::codim(), MultisetSpec::gk(2), MultisetSpec::factorial()}) {
    auto g = gap_profile(spec, 500);
    std::vector<long> rebuilt;
    for (auto [p, q] : g.blocks)
      for (long k = p; k <= q; ++k) rebuilt.push_back(k);
    CHECK(rebuilt == g.support);
    // maximality: the neighbors of every block are outside the support
    for (auto [p, q] : g.blocks) {
      if (p > 1) CHECK(spec.coefficient(p - 1) == 0);
      CHECK(spec.coefficient(q + 1) == 0);
      CHECK(spec.coefficient(p) > 0);
      CHECK(spec.coefficient(q) > 0);
    }
  }
}

TEST_CASE("codim windows [2i^2, 2(i+1)^2] contain the proof's gap for i <= 9") {
  auto spec = MultisetSpec::codim();
  auto g = gap_profile(spec, 2 * 11 * 11);
  for (long i = 1; i <= 9; ++i) {
    long lo = 2 * i * i, hi = 2 * (i + 1) * (i + 1);
    long max_gap = 0;
    for (size_t j = 0; j + 1 < g.support.size(); ++j)
      if (g.support[j] >= lo && g.support[j + 1] <= hi)
        max_gap = std::max(max_gap, g.support_gaps[j]);
    long need = (2 * (2 * i + 1) + 2) / 3;  // ceil(2(2i+1)/3)
    CAPTURE(i); CAPTURE(max_gap); CAPTURE(need);
    CHECK(max_gap >= need);
  }
}

TEST_CASE("cohn ratios are reported once coefficients exceed 1") {
  auto g = gap_profile(MultisetSpec::codim(), 200);
  CHECK_FALSE(g.cohn_vacuous);
  REQUIRE(g.cohn_ratios.size() + 1 == g.support.size());
  // support 1,2 have a_k = 1: vacuous prefix; a_4 = 2 switches the check on
  CHECK_FALSE(g.cohn_ratios[0].has_value());
  CHECK_FALSE(g.cohn_ratios[1].has_value());
  for (size_t i = 2; i < g.cohn_ratios.size(); ++i) REQUIRE(g.cohn_ratios[i].has_value());
  // zeta coefficients grow, so the ratios are all defined past the first point
  auto z = gap_profile(MultisetSpec::zeta(1), 120);
  CHECK_FALSE(z.cohn_vacuous);
}

TEST_CASE("conductor of {1}") {
  auto r = conductor({1});
  CHECK_FALSE(r.frobenius.has_value());
  CHECK(r.conductor == 1);
  CHECK(r.representable(0));
  CHECK(r.representable(123));
}

TEST_CASE("conductor of {4,9} agrees with Sylvester") {
  auto r = conductor({4, 9});
  REQUIRE(r.frobenius.has_value());
  CHECK(*r.frobenius == 23);  // 4*9 - 4 - 9
  CHECK(r.conductor == 24);
  for (long n = 0; n <= 40; ++n) CHECK(r.representable(n) == brute_representable({4, 9}, n));
}

TEST_CASE("conductor of {6,10,15}") {
  auto r = conductor({6, 10, 15});
  REQUIRE(r.frobenius.has_value());
  CHECK(*r.frobenius == 29);
  CHECK(r.conductor == 30);
  for (long n = 0; n <= 45; ++n)
    CHECK(r.representable(n) == brute_representable({6, 10, 15}, n));
}

TEST_CASE("conductor rejects non-coprime generators with the gcd attached") {
  try {
    conductor({2, 4});
    FAIL("expected SemigroupGcdError");
  } catch (const SemigroupGcdError& e) {
    CHECK(e.gcd == 2);
    CHECK(std::string(e.what()).find("gcd=2") != std::string::npos);
  }
  CHECK_THROWS_AS(conductor({}), SpecError);
  CHECK_THROWS_AS(conductor({0, 3}), SpecError);
}

TEST_CASE("family conductors: gk-fg(2) -> 4, gk-fg(3) -> 36") {
  auto r2 = conductor(MultisetSpec::gk_fg(2).support(200));
  CHECK(r2.conductor == 4);
  CHECK(*r2.frobenius == 3);
  auto r3 = conductor(MultisetSpec::gk_fg(3).support(200));
  CHECK(r3.conductor == 36);
  CHECK(*r3.frobenius == 35);
}
