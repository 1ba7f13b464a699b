#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cli_runner.hpp"

using cli::lines_of;
using cli::run;
using cli::split_csv_row;

TEST_CASE("coeffs emits only nonzero rows") {
  auto r = run("coeffs fg-codim --order 10 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "k,a_k\n1,1\n4,1\n9,1\n");
}

TEST_CASE("coeffs codim order 16 includes the multiplicity-3 row") {
  auto r = run("coeffs codim --order 16 --format csv");
  CHECK(r.exit_code == 0);
  bool found = false;
  for (const auto& line : lines_of(r.out)) found = found || line == "16,3";
  CHECK(found);
}

TEST_CASE("missing multiset file exits 2") {
  auto r = run("coeffs file:missing.json");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown flags and specs exit 2") {
  CHECK(run("coeffs fg-codim --bogus 3").exit_code == 2);
  CHECK(run("coeffs not-a-family").exit_code == 2);
  CHECK(run("solve fg-codim --eps nonsense").exit_code == 2);
  CHECK(run("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("roots csv has the pinned header and 16 data rows") {
  auto r = run("roots fg-codim --order 16 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 17);
  CHECK(lines[0] == "n,b_n,root");
  CHECK(split_csv_row(lines[16])[1] == "124");
}

TEST_CASE("roots of a custom file give the Fibonacci column") {
  const char* path = "cli_fib_tmp.json";
  {
    std::ofstream f(path);
    f << R"({"name": "fib", "terms": [[1, 1], [2, 1]]})";
  }
  auto r = run(std::string("roots file:") + path + " --order 6 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  std::vector<std::string> b;
  for (size_t i = 1; i < lines.size(); ++i) b.push_back(split_csv_row(lines[i])[1]);
  CHECK(b == std::vector<std::string>{"1", "2", "3", "5", "8", "13"});
  std::remove(path);
}

TEST_CASE("roots order 0 prints the header only") {
  auto r = run("roots fg-codim --order 0 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,b_n,root\n");
}

TEST_CASE("solve plain output carries the bracket summary") {
  auto r = run("solve fg-codim --eps 1e-6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("bracketed alpha_mid=0.705") != std::string::npos);
  CHECK(r.out.find("verified: true") != std::string::npos);
}

TEST_CASE("solve zeta reports the no-root verdict") {
  auto r = run("solve zeta:n=1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no-root-below-radius rho=1/2") != std::string::npos);
}

TEST_CASE("solve emits parseable json mirroring the csv fields") {
  auto r = run("solve gk-fg:d=2 --eps 1e-6 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "bracketed");
  CHECK(doc["verified"] == true);
  double mid = std::stod(doc["alpha_mid"].get<std::string>());
  CHECK(mid > 0.7);
  CHECK(mid < 0.9);
}

TEST_CASE("solve exits 3 when the truncation budget cannot certify") {
  auto r = run("solve fg-codim --eps 1e-12", "MINVAR_MAX_ORDER=8 ");
  CHECK(r.exit_code == 3);
  auto bad = run("solve fg-codim", "MINVAR_MAX_ORDER=abc ");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("enumerate respects --limit with a truncation marker") {
  auto r = run("enumerate fg-codim --n 9 --limit 3 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);  // header + 3 items + marker
  CHECK(lines[4] == "# truncated at 3");
}

TEST_CASE("enumerate --count-only uses the enumeration oracle") {
  auto r = run("enumerate fg-codim --n 9 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "11\n");
  CHECK(run("enumerate fg-codim --n 30 --count-only").exit_code == 2);  // oracle bound
}

TEST_CASE("enumerate --varieties lists descriptors; non-variety specs exit 2") {
  auto r = run("enumerate codim --n 4 --varieties");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  CHECK(lines.size() == 7);
  CHECK(lines.back() == "M_{1,1}");
  CHECK(run("enumerate factorial --n 4 --varieties").exit_code == 2);
}

TEST_CASE("gaps csv ratio column matches the factorial ratios") {
  auto r = run("gaps factorial --bound 130 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "k,gap,ratio");
  std::vector<std::string> ratios;
  for (size_t i = 1; i + 1 < lines.size(); ++i) ratios.push_back(split_csv_row(lines[i])[2]);
  CHECK(ratios == std::vector<std::string>{"2", "3", "4", "5"});
}

TEST_CASE("semigroup command") {
  auto r = run("semigroup 4 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("frobenius: 23") != std::string::npos);
  CHECK(r.out.find("conductor: 24") != std::string::npos);
  CHECK(run("semigroup 2 4").exit_code == 2);
  auto csv = run("semigroup 6 10 15 --format csv");
  CHECK(csv.out == "frobenius,conductor\n29,30\n");
}

TEST_CASE("repeated invocations are byte-identical") {
  for (const char* args : {"roots codim --order 40 --format csv",
                           "solve fg-codim --eps 1e-6 --format json",
                           "enumerate gk:d=2 --n 10 --format csv",
                           "gaps zeta:n=1 --bound 200 --format json"}) {
    auto a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json outputs parse for every command") {
  for (const char* args : {"coeffs codim --order 30 --format json",
                           "roots factorial --order 12 --format json",
                           "enumerate codim --n 4 --varieties --format json",
                           "gaps factorial --bound 130 --format json",
                           "semigroup 4 9 --format json"}) {
    auto r = run(args);
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out, nullptr, /*allow_exceptions=*/false);
    CHECK_FALSE(doc.is_discarded());
  }
}

TEST_CASE("roots --subsequence walks multiples of the support gcd") {
  const char* path = "cli_even_tmp.json";
  {
    std::ofstream f(path);
    f << R"({"name": "even", "terms": [[2, 1], [4, 1]]})";
  }
  auto r = run(std::string("roots file:") + path + " --order 10 --subsequence --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(split_csv_row(lines[1])[0] == "2");
  CHECK(split_csv_row(lines[5])[0] == "10");
  CHECK(split_csv_row(lines[5])[1] == "8");  // {1,2}-compositions of 5
  std::remove(path);
}

TEST_CASE("precision flag widens root output") {
  auto narrow = run("roots fg-codim --order 4 --format csv --precision 4");
  auto wide = run("roots fg-codim --order 4 --format csv --precision 14");
  CHECK(narrow.out.find("1.189") != std::string::npos);
  CHECK(wide.out.find("1.1892071150027") != std::string::npos);
}
