#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fuzcon/analysis.hpp"
#include "fuzcon/catalog.hpp"
#include "fuzcon/errors.hpp"
#include "fuzcon/fuzzer.hpp"
#include "fuzcon/induction.hpp"

using namespace fuzcon;

namespace {

constexpr int kScan = 1000000;

// Exhaustive scan over kScan+1 uniformly spaced t: the last t in the zero set
// (conjunction) or the first t in the one set (disjunction).
double scan_oracle(const BinaryConnective& b, double x) {
  if (b.kind == Kind::conjunction) {
    double best = 0.0;
    for (int k = 0; k <= kScan; ++k) {
      double t = static_cast<double>(k) / kScan;
      if (b(x, t) <= 0.0) best = t;
    }
    return best;
  }
  for (int k = 0; k <= kScan; ++k) {
    double t = static_cast<double>(k) / kScan;
    if (b(x, t) >= 1.0) return t;
  }
  return 1.0;
}

void check_against_oracle(const BinaryConnective& b, const std::vector<double>& xs) {
  NumericConfig cfg;
  InducedNegation n = natural_negation(b, cfg);
  for (double x : xs) {
    double want = scan_oracle(b, x);
    INFO(b.name << " x=" << x);
    CHECK(std::abs(n(x) - want) <= 1e-5);
  }
}

std::vector<double> grid(int n) { return uniform_grid(n); }

}  // namespace

TEST_CASE("worked examples") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  InducedNegation tl = natural_negation(cat.connective("T_L"), cfg);
  CHECK(tl(0.3) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(tl.is_negation);
  for (double x : grid(101)) CHECK(std::abs(tl(x) - (1 - x)) <= cfg.eps_eq);
  InducedNegation c3 = natural_negation(cat.connective("C_3"), cfg);
  CHECK(c3(1.0) == 1.0);
  CHECK_FALSE(c3.is_negation);
  InducedNegation d5 = natural_negation(cat.connective("D_5"), cfg);
  CHECK(d5(0.5) == doctest::Approx(0.25).epsilon(1e-12));
  InducedNegation r41 = natural_negation(cat.connective("remark41_D"), cfg);
  for (double x : grid(101)) CHECK(std::abs(r41(x) - (1 - x)) <= cfg.eps_eq);
}

TEST_CASE("boundary values are automatic") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  for (const Fixture* f : cat.of_kind(Kind::conjunction)) {
    CHECK(natural_negation(f->connective, cfg)(0.0) == 1.0);
  }
  for (const Fixture* f : cat.of_kind(Kind::disjunction)) {
    CHECK(natural_negation(f->connective, cfg)(1.0) == 0.0);
  }
}

TEST_CASE("kind errors") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  CHECK_THROWS_AS(natural_negation_of_conjunction(cat.connective("D_2"), cfg), KindMismatch);
  CHECK_THROWS_AS(natural_negation_of_disjunction(cat.connective("T_M"), cfg), KindMismatch);
  CHECK_THROWS_AS(implication_from_dn(cat.connective("T_M"), cat.function("N_S"), cfg),
                  KindMismatch);
  UnaryFunction bad = UnaryFunction::parse("bad", "x");
  CHECK_THROWS_AS(implication_from_dn(cat.connective("D_2"), bad, cfg), InvalidNegation);
}

TEST_CASE("bisection agrees with exhaustive scan on catalog fixtures") {
  const Catalog& cat = load_catalog();
  std::vector<double> xs = {0.0, 0.1, 0.25, 1.0 / 3, 0.5, 0.6, 0.75, 0.9, 1.0};
  for (const Fixture& fx : cat.fixtures) {
    if (fx.connective.kind != Kind::conjunction && fx.connective.kind != Kind::disjunction) {
      continue;
    }
    check_against_oracle(fx.connective, xs);
  }
}

TEST_CASE("bisection agrees with exhaustive scan on generated connectives") {
  GeneratorParams p;
  p.m = 17;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    p.kind = seed % 2 ? Kind::conjunction : Kind::disjunction;
    p.commutative = seed % 3 == 0;
    GeneratedConnective g = generate_connective(seed, p);
    check_against_oracle(g.connective, {0.0, 0.125, 0.3, 0.5, 0.8125, 1.0});
  }
}

TEST_CASE("generated grid conjunction: all grid x") {
  BinaryConnective c = random_monotone_connective(7, 17, Kind::conjunction, false);
  check_against_oracle(c, grid(17));
}

TEST_CASE("induced negations are non-increasing") {
  NumericConfig cfg;
  for (const Fixture& fx : load_catalog().fixtures) {
    if (fx.connective.kind != Kind::conjunction && fx.connective.kind != Kind::disjunction) {
      continue;
    }
    InducedNegation n = natural_negation(fx.connective, cfg);
    double prev = 2.0;
    for (double x : grid(1025)) {
      double v = n(x);
      REQUIRE(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("zero-set rules") {
  NumericConfig cfg;
  for (const Fixture* f : load_catalog().of_kind(Kind::conjunction)) {
    const BinaryConnective& c = f->connective;
    InducedNegation n = natural_negation(c, cfg);
    bool left = c.flags.left_continuous.value_or(false);
    for (double x : grid(65)) {
      double nx = n(x);
      if (left) CHECK(c(x, nx) <= cfg.eps_zero);
      for (double y : grid(65)) {
        bool zero = c(x, y) <= cfg.eps_zero;
        INFO(c.name << " at " << x << "," << y);
        if (zero) CHECK(y <= nx + cfg.eps_eq);
        if (y < nx - cfg.eps_eq) CHECK(zero);
        if (left) CHECK(zero == (nx >= y - cfg.eps_eq));
      }
    }
  }
}

TEST_CASE("one-set rules") {
  NumericConfig cfg;
  for (const Fixture* f : load_catalog().of_kind(Kind::disjunction)) {
    const BinaryConnective& d = f->connective;
    InducedNegation n = natural_negation(d, cfg);
    bool right = d.flags.right_continuous.value_or(false);
    for (double x : grid(65)) {
      double nx = n(x);
      if (right) CHECK(d(x, nx) >= 1.0 - cfg.eps_one);
      for (double y : grid(65)) {
        bool one = d(x, y) >= 1.0 - cfg.eps_one;
        INFO(d.name << " at " << x << "," << y);
        if (one) CHECK(y >= nx - cfg.eps_eq);
        if (y > nx + cfg.eps_eq) CHECK(one);
        if (right) CHECK(one == (nx <= y + cfg.eps_eq));
      }
    }
  }
}

TEST_CASE("pseudo-inverse") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  UnaryFunction pi = pseudo_inverse(cat.function("remark42_N"), cfg);
  for (double x : grid(101)) {
    if (x == 0.0) continue;
    CHECK(std::abs(pi(x) - (-0.5 * x + 0.5)) <= cfg.eps_eq);
  }
  UnaryFunction ps = pseudo_inverse(cat.function("N_S"), cfg);
  for (double x : grid(101)) CHECK(std::abs(ps(x) - (1 - x)) <= cfg.eps_eq);
  const UnaryFunction& g1 = cat.function("N_G1");
  UnaryFunction pg = pseudo_inverse(g1, cfg);
  for (double y : {0.1, 0.5, 0.99, 1.0}) {
    double best = 0.0;
    for (int k = 0; k <= kScan; ++k) {
      double x = static_cast<double>(k) / kScan;
      if (g1(x) > y) best = x;
    }
    CHECK(std::abs(pg(y) - best) <= 1e-5);
  }
  CHECK_THROWS_AS(pseudo_inverse(UnaryFunction::parse("c", "0.5"), cfg), ConstantFunction);
  UnaryFunction wave = UnaryFunction::parse("w", "piece(x < 0.5 : x; else : 1.5 - x)");
  CHECK_THROWS_AS(pseudo_inverse(wave, cfg), NotMonotone);
}

TEST_CASE("aleph") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  const UnaryFunction& n = cat.function("remark42_N");
  UnaryFunction a = aleph(n, cfg);
  CHECK(a(0.0) == 1.0);
  CHECK(a(0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(n(a(0.8)) - 0.8) <= cfg.eps_eq);
  UnaryFunction as = aleph(cat.function("N_S"), cfg);
  for (double x : grid(101)) CHECK(std::abs(as(x) - (1 - x)) <= cfg.eps_eq);
  CHECK(std::abs(cat.function("N_S")(as(0.4)) - 0.4) <= cfg.eps_eq);
  CHECK_THROWS_AS(aleph(cat.function("N_G1"), cfg), NotContinuousNegation);
}

TEST_CASE("(D,N)-implications") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  BinaryConnective igd = implication_from_dn(cat.connective("D_2"), cat.function("N_S"), cfg);
  CHECK(igd(0.7, 0.4) == 0.4);
  CHECK(sup_distance(igd, cat.connective("I_GD"), 101) <= 1e-12);
  BinaryConnective iwb = implication_from_dn(cat.connective("D_7"), cat.function("N_G2"), cfg);
  CHECK(iwb(1.0, 0.3) == 0.3);
  CHECK(sup_distance(iwb, cat.connective("I_WB"), 101) <= 1e-12);
  for (const char* d : {"D_1", "D_2", "D_3", "D_4", "D_5", "D_6", "D_7"}) {
    for (const char* nn : {"N_S", "N_G1", "N_G2", "N_4"}) {
      CHECK(implication_from_dn(cat.connective(d), cat.function(nn), cfg)(0, 0) == 1.0);
    }
  }
}

TEST_CASE("negation of an implication") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  UnaryFunction rc = negation_of_implication(cat.connective("I_RC"), cfg);
  CHECK(rc(0.3) == doctest::Approx(0.7).epsilon(1e-15));
  UnaryFunction i6 = negation_of_implication(cat.connective("I_6"), cfg);
  UnaryFunction rs = negation_of_implication(cat.connective("I_RS"), cfg);
  for (double x : grid(257)) {
    CHECK(i6(x) == cat.function("N_G2")(x));
    CHECK(rs(x) == cat.function("N_G1")(x));
  }
  BinaryConnective notimp = BinaryConnective::parse("m", Kind::raw, "min(x, y)");
  CHECK_THROWS_AS(negation_of_implication(notimp, cfg), AxiomsFailed);
}

TEST_CASE("disjunction from an implication") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  BinaryConnective d3 = disjunction_from_implication(cat.connective("I_3"), cfg);
  CHECK(sup_distance(d3, cat.connective("D_3"), 101) <= cfg.eps_eq);
  BinaryConnective d = disjunction_from_implication(cat.connective("I_RC"),
                                                    cat.function("remark42_N"), cfg);
  for (double x : grid(51)) {
    for (double y : grid(51)) {
      double want = x == 0.0 ? y : 0.5 * (x + y - x * y + 1);
      REQUIRE(std::abs(d(x, y) - want) <= 1e-12);
    }
  }
  CHECK(sup_distance(d, cat.connective("thm42_D"), 101) <= 1e-12);
  CHECK_THROWS_AS(disjunction_from_implication(cat.connective("I_RS"), cfg),
                  NotContinuousNegation);
}

TEST_CASE("search helpers") {
  auto s = sup_of_down_set([](double t) { return t <= 0.3; }, 80);
  REQUIRE(s);
  CHECK(*s == doctest::Approx(0.3).epsilon(1e-15));
  auto i = inf_of_up_set([](double t) { return t >= 0.6; }, 80);
  REQUIRE(i);
  CHECK(*i == doctest::Approx(0.6).epsilon(1e-15));
  CHECK_FALSE(sup_of_down_set([](double) { return false; }, 80));
}
