// minvar: counts and enumerates colored compositions over weight multisets,
// certifies alpha/beta growth brackets, and reports gap/semigroup structure.
// Exit codes: 0 success, 2 invalid input or spec, 3 certification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minvar/analysis.hpp"
#include "minvar/enumeration.hpp"
#include "minvar/growth.hpp"
#include "minvar/multiset_spec.hpp"
#include "minvar/numeric.hpp"

using nlohmann::ordered_json;

namespace {

struct Output {
  std::string format = "plain";  // csv | json | plain
  int precision = 10;
};

std::string dec(const mpq_class& q, const Output& out,
                minvar::Rounding r = minvar::Rounding::Nearest) {
  return minvar::decimal_string(q, out.precision, r);
}

std::string dec(double v, const Output& out) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);  // exact binary value
  return minvar::decimal_string(q, out.precision);
}

minvar::SolverOptions solver_options() {
  minvar::SolverOptions opts;
  if (const char* env = std::getenv("MINVAR_MAX_ORDER")) {
    try {
      size_t used = 0;
      long v = std::stol(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      opts.max_order = v;
    } catch (const std::exception&) {
      throw minvar::SpecError(std::string("invalid MINVAR_MAX_ORDER: ") + env);
    }
  }
  return opts;
}

int cmd_coeffs(const std::string& spec_str, long order, const Output& out) {
  auto spec = minvar::MultisetSpec::parse(spec_str);
  auto a = spec.coefficients(order);
  if (out.format == "csv") {
    std::cout << "k,a_k\n";
    for (long k = 1; k <= order; ++k)
      if (a.coeff(k) != 0) std::cout << k << "," << a.coeff(k).get_str() << "\n";
  } else if (out.format == "json") {
    ordered_json rows = ordered_json::array();
    for (long k = 1; k <= order; ++k)
      if (a.coeff(k) != 0) rows.push_back({{"k", k}, {"a_k", a.coeff(k).get_str()}});
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "# coeffs " << spec.name() << " order=" << order << "\n";
    for (long k = 1; k <= order; ++k)
      if (a.coeff(k) != 0) std::cout << k << " " << a.coeff(k).get_str() << "\n";
  }
  return 0;
}

int cmd_roots(const std::string& spec_str, long order, bool subsequence, const Output& out) {
  auto spec = minvar::MultisetSpec::parse(spec_str);
  if (order < 0) throw minvar::SpecError("order must be >= 0");
  minvar::RootsTable table;
  if (order >= 1)
    table = subsequence ? minvar::gcd_subsequence_roots(spec, order)
                        : minvar::roots_table(spec, order);
  if (out.format == "csv") {
    std::cout << "n,b_n,root\n";
    for (const auto& r : table.rows) {
      std::cout << r.n << "," << r.b.get_str() << ",";
      if (r.root) std::cout << dec(*r.root, out);
      std::cout << "\n";
    }
  } else if (out.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows) {
      ordered_json row{{"n", r.n}, {"b_n", r.b.get_str()}};
      row["root"] = r.root ? ordered_json(dec(*r.root, out)) : ordered_json(nullptr);
      rows.push_back(row);
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "# roots " << spec.name() << " order=" << order << "\n";
    for (const auto& r : table.rows)
      std::cout << r.n << " " << r.b.get_str() << " " << (r.root ? dec(*r.root, out) : "-")
                << "\n";
  }
  return 0;
}

int cmd_solve(const std::string& spec_str, const std::string& eps_str, const Output& out) {
  auto spec = minvar::MultisetSpec::parse(spec_str);
  mpq_class eps;
  try {
    eps = minvar::parse_rational(eps_str);
  } catch (const std::invalid_argument& e) {
    throw minvar::SpecError(std::string("invalid eps: ") + e.what());
  }
  auto rb = minvar::solve_alpha(spec, eps, solver_options());
  bool verified = minvar::verify_bracket(spec, rb);

  if (rb.kind == minvar::RootBracket::Kind::NoRootBelowRadius) {
    std::string sup = dec(rb.certified_sup, out, minvar::Rounding::Up);
    mpq_class beta_hint = mpq_class(1) / rb.rho;
    if (out.format == "csv") {
      std::cout << "verdict,alpha_lo,alpha_hi,alpha_mid,beta_lo,beta_hi,beta_mid,width,rho,"
                   "certified_sup,order_lo,order_hi\n";
      std::cout << "no-root-below-radius,,,,,,,," << rb.rho.get_str() << "," << sup << ","
                << rb.sup_order << ",\n";
    } else if (out.format == "json") {
      ordered_json doc{{"verdict", "no-root-below-radius"},
                       {"rho", rb.rho.get_str()},
                       {"certified_sup", sup},
                       {"order", rb.sup_order},
                       {"beta_uncertified", dec(beta_hint, out)},
                       {"verified", verified}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "no-root-below-radius rho=" << rb.rho.get_str() << " certified_sup=" << sup
                << " order=" << rb.sup_order << "\n";
      std::cout << "beta_uncertified: " << dec(beta_hint, out)
                << " (equals 1/rho only as an uncertified limit)\n";
      std::cout << "verified: " << (verified ? "true" : "false") << "\n";
    }
    return 0;
  }

  mpq_class mid = (rb.alpha_lo + rb.alpha_hi) / 2;
  mpq_class width = rb.alpha_hi - rb.alpha_lo;
  std::optional<std::pair<mpq_class, mpq_class>> beta;
  if (rb.alpha_lo > 0) beta = minvar::beta_bracket(rb);
  std::string beta_lo = beta ? beta->first.get_str() : "";
  std::string beta_hi = beta ? beta->second.get_str() : "";
  std::string beta_mid = beta ? dec((beta->first + beta->second) / 2, out) : "";

  if (out.format == "csv") {
    std::cout << "verdict,alpha_lo,alpha_hi,alpha_mid,beta_lo,beta_hi,beta_mid,width,rho,"
                 "certified_sup,order_lo,order_hi\n";
    std::cout << "bracketed," << rb.alpha_lo.get_str() << "," << rb.alpha_hi.get_str() << ","
              << dec(mid, out) << "," << beta_lo << "," << beta_hi << "," << beta_mid << ","
              << dec(width, out) << ",,," << rb.lo_witness.order << "," << rb.hi_witness.order
              << "\n";
  } else if (out.format == "json") {
    ordered_json doc{{"verdict", "bracketed"},
                     {"alpha_lo", rb.alpha_lo.get_str()},
                     {"alpha_hi", rb.alpha_hi.get_str()},
                     {"alpha_mid", dec(mid, out)},
                     {"beta_lo", beta_lo},
                     {"beta_hi", beta_hi},
                     {"beta_mid", beta_mid},
                     {"width", dec(width, out)},
                     {"order_lo", rb.lo_witness.order},
                     {"order_hi", rb.hi_witness.order},
                     {"verified", verified}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "bracketed alpha_mid=" << dec(mid, out) << " beta_mid=" << beta_mid
              << " width=" << dec(width, out) << "\n";
    std::cout << "alpha_lo: " << rb.alpha_lo.get_str() << "\n";
    std::cout << "alpha_hi: " << rb.alpha_hi.get_str() << "\n";
    std::cout << "beta_lo: " << beta_lo << "\n";
    std::cout << "beta_hi: " << beta_hi << "\n";
    std::cout << "order_lo: " << rb.lo_witness.order << "\n";
    std::cout << "order_hi: " << rb.hi_witness.order << "\n";
    std::cout << "verified: " << (verified ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_enumerate(const std::string& spec_str, long n, bool varieties, bool count_only,
                  long limit, long oracle_bound, const Output& out) {
  auto spec = minvar::MultisetSpec::parse(spec_str);
  if (count_only) {
    mpz_class count = minvar::count_by_enumeration(spec, n, oracle_bound);
    if (out.format == "csv")
      std::cout << "count\n" << count.get_str() << "\n";
    else if (out.format == "json")
      std::cout << ordered_json{{"count", count.get_str()}}.dump(2) << "\n";
    else
      std::cout << count.get_str() << "\n";
    return 0;
  }

  minvar::CompositionStream stream(spec, n);
  minvar::ColoredComposition c;
  bool truncated = false;
  long index = 0;
  // json needs the whole document; csv/plain rows go out as the stream runs
  ordered_json rows = ordered_json::array();
  if (out.format == "csv") std::cout << (varieties ? "index,parts,variety\n" : "index,parts\n");
  while (stream.next(c)) {
    if (limit >= 0 && index >= limit) {
      truncated = true;
      break;
    }
    std::string parts;
    for (const auto& p : c.parts) {
      if (!parts.empty()) parts += ' ';
      parts += std::to_string(p.weight) + "#" + std::to_string(p.color);
    }
    if (parts.empty()) parts = "()";
    std::string variety;
    if (varieties) variety = minvar::to_variety(spec, c).label();

    if (out.format == "csv") {
      std::cout << index << "," << parts;
      if (varieties) std::cout << "," << variety;
      std::cout << "\n";
    } else if (out.format == "json") {
      ordered_json row{{"index", index}, {"parts", parts}};
      if (varieties) row["variety"] = variety;
      rows.push_back(std::move(row));
    } else {
      std::cout << (varieties ? variety : parts) << "\n";
    }
    ++index;
  }

  if (out.format == "json") {
    ordered_json doc{{"items", std::move(rows)}, {"truncated", truncated}};
    std::cout << doc.dump(2) << "\n";
  } else if (truncated) {
    std::cout << "# truncated at " << limit << "\n";
  }
  return 0;
}

int cmd_gaps(const std::string& spec_str, long bound, const Output& out) {
  auto spec = minvar::MultisetSpec::parse(spec_str);
  auto g = minvar::gap_profile(spec, bound);

  auto gap_at = [&](size_t i) -> std::string {
    return i + 1 < g.support.size() ? std::to_string(g.support_gaps[i]) : "";
  };
  auto ratio_at = [&](size_t i) -> std::string {
    return i + 1 < g.support.size() ? g.support_ratios[i].get_str() : "";
  };

  if (out.format == "csv") {
    std::cout << "k,gap,ratio\n";
    for (size_t i = 0; i < g.support.size(); ++i)
      std::cout << g.support[i] << "," << gap_at(i) << "," << ratio_at(i) << "\n";
  } else if (out.format == "json") {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < g.support.size(); ++i) {
      ordered_json row{{"k", g.support[i]}};
      row["gap"] = i + 1 < g.support.size() ? ordered_json(g.support_gaps[i]) : ordered_json(nullptr);
      row["ratio"] = i + 1 < g.support.size() ? ordered_json(g.support_ratios[i].get_str())
                                              : ordered_json(nullptr);
      rows.push_back(row);
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "# gaps " << spec.name() << " bound=" << bound << "\n";
    for (size_t i = 0; i < g.support.size(); ++i) {
      std::cout << g.support[i];
      if (i + 1 < g.support.size())
        std::cout << " gap=" << gap_at(i) << " ratio=" << ratio_at(i);
      std::cout << "\n";
    }
    std::cout << "blocks:";
    for (const auto& [p, q] : g.blocks) std::cout << " [" << p << "," << q << "]";
    std::cout << "\nblock_gaps:";
    for (long v : g.block_gaps) std::cout << " " << v;
    std::cout << "\ntrailing_min_gap:";
    for (long v : g.trailing_min_gap) std::cout << " " << v;
    std::cout << "\ncohn:";
    if (g.cohn_vacuous) {
      std::cout << " vacuous (all coefficients are 1)";
    } else {
      for (const auto& r : g.cohn_ratios)
        if (r)
          std::cout << " " << dec(*r, out);
        else
          std::cout << " -";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_semigroup(const std::vector<long>& generators, const Output& out) {
  auto report = minvar::conductor(generators);
  std::string frob = report.frobenius ? std::to_string(*report.frobenius) : "";
  if (out.format == "csv") {
    std::cout << "frobenius,conductor\n" << frob << "," << report.conductor << "\n";
  } else if (out.format == "json") {
    ordered_json doc{{"generators", report.generators}};
    doc["frobenius"] = report.frobenius ? ordered_json(*report.frobenius) : ordered_json(nullptr);
    doc["conductor"] = report.conductor;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "generators:";
    for (long v : report.generators) std::cout << " " << v;
    std::cout << "\nfrobenius: " << (frob.empty() ? "none" : frob) << "\n";
    std::cout << "conductor: " << report.conductor << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colored-composition counting, certified growth brackets, gap analysis"};
  app.require_subcommand(1);
  app.fallthrough(false);

  Output out;
  std::string spec_str, eps_str = "1e-6";
  long order = 10, n = 0, bound = 100, limit = -1, oracle_bound = minvar::kDefaultOracleBound;
  bool varieties = false, count_only = false, subsequence = false;
  std::vector<long> generators;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "csv | json | plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
    cmd->add_option("--precision", out.precision, "significant digits for decimal output")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
  };

  auto* coeffs = app.add_subcommand("coeffs", "nonzero coefficients a_k of the multiset");
  coeffs->add_option("spec", spec_str, "multiset spec string")->required();
  coeffs->add_option("--order", order, "truncation order")->capture_default_str();
  add_common(coeffs);

  auto* roots = app.add_subcommand("roots", "exact b_n with nth roots");
  roots->add_option("spec", spec_str)->required();
  roots->add_option("--order", order)->capture_default_str();
  roots->add_flag("--subsequence", subsequence, "rows along multiples of the support gcd");
  add_common(roots);

  auto* solve = app.add_subcommand("solve", "certified bracket for the root of a(t)=1");
  solve->add_option("spec", spec_str)->required();
  solve->add_option("--eps", eps_str, "bracket width (rational or decimal)")
      ->capture_default_str();
  add_common(solve);

  auto* enumerate = app.add_subcommand("enumerate", "list colored compositions of n");
  enumerate->add_option("spec", spec_str)->required();
  enumerate->add_option("--n", n, "composition target")->required();
  enumerate->add_flag("--varieties", varieties, "print minimal-variety descriptors");
  enumerate->add_flag("--count-only", count_only, "count by exhaustive enumeration");
  enumerate->add_option("--limit", limit, "stop after this many items");
  enumerate->add_option("--oracle-bound", oracle_bound, "largest n --count-only accepts")
      ->capture_default_str();
  add_common(enumerate);

  auto* gaps = app.add_subcommand("gaps", "support gap/ratio profile");
  gaps->add_option("spec", spec_str)->required();
  gaps->add_option("--bound", bound, "largest exponent inspected")->capture_default_str();
  add_common(gaps);

  auto* semigroup = app.add_subcommand("semigroup", "Frobenius number and conductor");
  semigroup->add_option("generators", generators, "semigroup generators")->required();
  add_common(semigroup);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(spec_str, order, out);
    if (roots->parsed()) return cmd_roots(spec_str, order, subsequence, out);
    if (solve->parsed()) return cmd_solve(spec_str, eps_str, out);
    if (enumerate->parsed())
      return cmd_enumerate(spec_str, n, varieties, count_only, limit, oracle_bound, out);
    if (gaps->parsed()) return cmd_gaps(spec_str, bound, out);
    if (semigroup->parsed()) return cmd_semigroup(generators, out);
  } catch (const minvar::CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const minvar::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
