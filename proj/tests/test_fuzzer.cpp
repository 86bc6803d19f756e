#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fuzcon/errors.hpp"
#include "fuzcon/fuzzer.hpp"

using namespace fuzcon;

namespace {

std::uint64_t reference_splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool monotone_brute(const BinaryConnective& b, int n) {
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double v = b(double(i) / n, double(j) / n);
      if (v < 0 || v > 1) return false;
      if (i < n && b(double(i + 1) / n, double(j) / n) < v) return false;
      if (j < n && b(double(i) / n, double(j + 1) / n) < v) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("SplitMix64 matches the reference sequence") {
  SplitMix64 r(0);
  CHECK(r.next() == 0xe220a8397b1dcdafULL);
  for (std::uint64_t seed : {1ULL, 42ULL, 0xdeadbeefULL}) {
    SplitMix64 a(seed);
    std::uint64_t s = seed;
    for (int k = 0; k < 1000; ++k) REQUIRE(a.next() == reference_splitmix(s));
  }
  SplitMix64 u(7);
  std::uint64_t s = 7;
  for (int k = 0; k < 1000; ++k) {
    double v = u.uniform();
    REQUIRE(v == double(reference_splitmix(s) >> 11) * 0x1.0p-53);
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
  }
}

TEST_CASE("generation is deterministic") {
  GeneratorParams p;
  GeneratedConnective a = generate_connective(5, p);
  GeneratedConnective b = generate_connective(5, p);
  CHECK(a.grid.values == b.grid.values);
  CHECK(a.mode == b.mode);
  CHECK(a.mode_params == b.mode_params);
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) REQUIRE(a.connective(i / 40.0, j / 40.0) == b.connective(i / 40.0, j / 40.0));
  }
}

TEST_CASE("generated conjunctions satisfy the boundary conditions") {
  GeneratorParams p;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    for (bool comm : {false, true}) {
      p.commutative = comm;
      BinaryConnective c = generate_connective(seed, p).connective;
      INFO(seed);
      CHECK(c(0, 0.37) == 0.0);
      CHECK(c(0.37, 0) == 0.0);
      CHECK(c(1, 0) == 0.0);
      CHECK(c(0, 1) == 0.0);
      CHECK(c(1, 1) == 1.0);
    }
  }
  p.kind = Kind::disjunction;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    BinaryConnective d = generate_connective(seed, p).connective;
    CHECK(d(0, 0) == 0.0);
    CHECK(d(1, 0) == 1.0);
    CHECK(d(0, 1) == 1.0);
    CHECK(d(1, 0.37) == 1.0);
  }
}

TEST_CASE("commutative instances are exactly symmetric") {
  GeneratorParams p;
  p.commutative = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratedConnective g = generate_connective(seed, p);
    for (int i = 0; i <= 64; ++i) {
      for (int j = 0; j <= 64; ++j) {
        double x = i / 64.0, y = j / 64.0;
        REQUIRE(g.connective(x, y) == g.connective(y, x));
      }
    }
    for (int i = 0; i < g.grid.m; ++i) {
      for (int j = 0; j < g.grid.m; ++j) REQUIRE(g.grid.at(i, j) == g.grid.at(j, i));
    }
  }
}

TEST_CASE("generated instances are monotone by brute force") {
  GeneratorParams p;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    p.commutative = seed % 2 == 0;
    p.kind = seed % 3 == 0 ? Kind::disjunction : Kind::conjunction;
    GeneratedConnective g = generate_connective(seed, p);
    INFO(seed);
    CHECK(g.grid.monotone());
    CHECK(monotone_brute(g.connective, 96));
  }
  BinaryConnective r = random_monotone_connective(3, 7, Kind::conjunction, false);
  CHECK(monotone_brute(r, 60));
}

TEST_CASE("bilinear interpolation reproduces nodes") {
  GeneratorParams p;
  p.discontinuity = 0.0;
  GeneratedConnective g = generate_connective(11, p);
  int m = g.grid.m;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      REQUIRE(g.grid(double(i) / (m - 1), double(j) / (m - 1)) == doctest::Approx(g.grid.at(i, j)).epsilon(1e-12));
    }
  }
  double mid = g.grid(0.5 / (m - 1), 0.5 / (m - 1));
  double avg = (g.grid.at(0, 0) + g.grid.at(1, 0) + g.grid.at(0, 1) + g.grid.at(1, 1)) / 4;
  CHECK(mid == doctest::Approx(avg).epsilon(1e-12));
}

TEST_CASE("non-commutative search finds a four-flag counterexample") {
  SearchOptions o;
  o.budget = 300;
  o.threads = 1;
  auto ce = search_counterexample("THM_3_1", o);
  REQUIRE(ce.has_value());
  CHECK(ce->result.fails());
  CHECK(is_counterexample("THM_3_1", ce->result));
  CheckResult again = run_target("THM_3_1", generate_connective(ce->seed, o.generator), o.config);
  CHECK(again.verdict == ce->result.verdict);
  CHECK(to_json(again).dump() == to_json(ce->result).dump());
}

TEST_CASE("commutative search finds none") {
  SearchOptions o;
  o.budget = 60;
  o.threads = 1;
  o.generator.commutative = true;
  CHECK(!search_counterexample("THM_3_1", o).has_value());
  o.generator.kind = Kind::disjunction;
  CHECK(!search_counterexample("THM_3_2", o).has_value());
}

TEST_CASE("unknown target") {
  SearchOptions o;
  o.budget = 1;
  CHECK_THROWS_AS(search_counterexample("NOPE", o), UnknownTarget);
}

TEST_CASE("csv output") {
  GeneratedConnective g = generate_connective(1, GeneratorParams{});
  std::ostringstream a, b;
  write_grid_csv(g.grid, a);
  write_samples_csv(g.connective, 5, b);
  CHECK(a.str().rfind("x,y,value\n", 0) == 0);
  CHECK(b.str().rfind("x,y,value\n", 0) == 0);
  int lines = 0;
  for (char c : b.str()) lines += c == '\n';
  CHECK(lines == 26);
  int glines = 0;
  for (char c : a.str()) glines += c == '\n';
  CHECK(glines == g.grid.m * g.grid.m + 1);
}
