#include "doctest.h"

#include <algorithm>
#include <set>

#include "qkk/suites.hpp"

using namespace qkk;

namespace {

SuiteConfig config(const std::string& suite, double q = -0.5, int lmax = 12) {
  SuiteConfig c;
  c.suite = suite;
  c.q = q;
  c.lmax = lmax;
  return c;
}

const SuiteInfo& info(const std::string& name) {
  const auto& cat = suite_catalog();
  return *std::find_if(cat.begin(), cat.end(), [&](const SuiteInfo& s) { return s.name == name; });
}

}  // namespace

TEST_CASE("catalog") {
  const auto& cat = suite_catalog();
  CHECK(cat.size() >= 11);
  std::set<std::string> names;
  for (const auto& s : cat) names.insert(s.name);
  for (const char* n : {"relations", "podles", "lemma1", "lemma2", "lemma3", "fredholm", "rotation", "degenerate",
                        "koszul", "fusion", "foq", "all"})
    CHECK(names.count(n) == 1);
  CHECK(catalog_json().dump().find("Koszul") != std::string::npos);
}

TEST_CASE("every check names an anchor from the catalog") {
  for (const auto& s : suite_catalog()) {
    if (s.name == "all" || s.name == "lemma2") continue;
    auto rep = run_suite(config(s.name));
    CHECK(!rep.checks().empty());
    for (const auto& c : rep.checks()) {
      INFO(s.name << ": " << c.name << " -> " << c.anchor);
      CHECK(std::find(s.anchors.begin(), s.anchors.end(), c.anchor) != s.anchors.end());
    }
  }
}

TEST_CASE("lemma1 example run") {
  auto rep = run_suite([] {
    auto c = config("lemma1", -0.7, 30);
    c.t_grid = 11;
    return c;
  }());
  CHECK(rep.overall());
  const auto n = std::count_if(rep.checks().begin(), rep.checks().end(),
                               [](const Check& c) { return c.anchor == info("lemma1").anchors[0]; });
  CHECK(n == 6);
}

TEST_CASE("koszul example run") {
  auto c = config("koszul");
  c.n = 3;
  c.D = 10;
  auto rep = run_suite(c);
  CHECK(rep.overall());
  CHECK(rep.results()["K0"]["group"] == "Z");
  CHECK(rep.results()["K1"]["generator"] == "[u]");
}

TEST_CASE("usage errors are distinct from failures") {
  CHECK_THROWS_AS(run_suite(config("rotation", 0.5)), UsageError);
  CHECK_THROWS_AS(run_suite(config("nonsense")), UsageError);
  CHECK_THROWS_AS(run_suite(config("relations", 1.5)), UsageError);
  CHECK_THROWS_AS(run_suite(config("relations", 1.0)), UsageError);
  CHECK_THROWS_AS(run_suite(config("relations", 0.0)), UsageError);
  auto half = config("lemma3");
  half.lmax = HalfInt::from_twice(21);
  CHECK_THROWS_AS(run_suite(half), UsageError);
  auto grid = config("lemma1");
  grid.t_grid = 1;
  CHECK_THROWS_AS(run_suite(grid), UsageError);
  auto tol = config("relations");
  tol.tol_identity = -1;
  CHECK_THROWS_AS(run_suite(tol), UsageError);
}

TEST_CASE("reports refuse to serialize without checks") {
  VerificationReport empty("relations");
  CHECK_THROWS_AS(empty.to_json(), std::logic_error);
}

TEST_CASE("parameters echo and determinism") {
  auto a = run_suite(config("foq")).to_json();
  auto b = run_suite(config("foq")).to_json();
  CHECK(a.dump() == b.dump());
  CHECK(a["parameters"]["lmax"] == "12");
  CHECK(a["seed"] == 20240611);
  auto c = config("relations");
  c.lmax = HalfInt::from_twice(9);
  CHECK(run_suite(c).to_json()["parameters"]["lmax"] == "9/2");
}

TEST_CASE("all at positive q skips rotation") {
  auto rep = run_suite(config("all", 0.3, 20));
  CHECK(rep.overall());
  CHECK(rep.results()["skipped"].size() == 1);
}
