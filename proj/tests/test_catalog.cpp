#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fuzcon/analysis.hpp"
#include "fuzcon/catalog.hpp"
#include "fuzcon/errors.hpp"

using namespace fuzcon;

namespace {

std::vector<double> grid(int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
  return g;
}

// All ordered pairs along each axis, not just neighbours.
bool monotone_all_pairs(const BinaryConnective& b, int n, int sx, int sy) {
  auto g = grid(n);
  for (double y : g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (sx * (b(g[j], y) - b(g[i], y)) < 0) return false;
        if (sy * (b(y, g[j]) - b(y, g[i])) < 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("catalog contents") {
  const Catalog& cat = load_catalog();
  for (const char* n : {"C_0", "C_1", "C_2", "C_3", "C_4", "C_5", "T_M", "T_P", "T_L", "T_D",
                        "T_nM", "D_1", "D_2", "D_3", "D_4", "D_5", "D_6", "D_7", "T3_F1", "T3_F2",
                        "T3_F3", "T3_F4", "T3_F5", "T3_F6", "ex32i_C", "ex32ii_C", "ex33_C",
                        "remark41_D", "thm42_D", "I_GD", "I_WB", "I_RS", "I_RC", "I_3", "I_4",
                        "I_5"}) {
    CHECK_MESSAGE(cat.has_connective(n), n);
  }
  for (const char* n : {"N_S", "N_G1", "N_G2", "N_4", "N_5", "ex32i_N", "ex32ii_N", "remark42_N"}) {
    CHECK_MESSAGE(cat.has_function(n), n);
  }
  CHECK_THROWS_AS(cat.connective("nope"), UnknownName);
  CHECK_THROWS_AS(cat.function("nope"), UnknownName);
  for (const Fixture& fx : cat.fixtures) CHECK(!fx.provenance.empty());
}

TEST_CASE("table expectations") {
  const Catalog& cat = load_catalog();
  CHECK(cat.find_fixture("T_L")->expected_induced_negation->function->name == "N_S");
  CHECK(cat.find_fixture("C_0")->expected_induced_negation->not_a_negation);
  CHECK(cat.find_fixture("C_3")->expected_induced_negation->not_a_negation);
  int listed = 0;
  for (const Fixture* f : cat.of_kind(Kind::conjunction)) {
    if (f->connective.name.rfind("ex", 0) == 0) continue;
    if (f->expected_induced_negation && !f->expected_induced_negation->not_a_negation) ++listed;
  }
  CHECK(listed == 9);
  const Fixture& d4 = *cat.find_fixture("D_4");
  const UnaryFunction& n4 = *d4.expected_induced_negation->function;
  const BinaryConnective& i4 = *d4.expected_implication;
  for (double x : grid(11)) {
    CHECK(n4(x) == doctest::Approx(std::sqrt(1 - x * x)).epsilon(1e-15));
    for (double y : grid(11)) {
      CHECK(i4(x, y) == doctest::Approx(std::min(1.0, 1 - x * x + y * y)).epsilon(1e-15));
    }
  }
  for (const char* n : {"D_1", "D_2", "D_3", "D_4", "D_5", "D_6", "D_7"}) {
    const Fixture& fx = *cat.find_fixture(n);
    CHECK(fx.expected_induced_negation.has_value());
    CHECK(fx.expected_implication.has_value());
  }
  const Fixture& t3 = *cat.find_fixture("T3_F1");
  CHECK(t3.expected_verdicts.size() == 3);
}

TEST_CASE("every fixture passes its own validation") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  for (const Fixture& fx : cat.fixtures) {
    CheckResult r = validate_connective(fx.connective, cfg);
    INFO(fx.connective.name << " " << to_json(r).dump());
    CHECK(r.holds());
  }
  for (const UnaryFunction& f : cat.functions) {
    if (f.name.rfind("remark42_pinv", 0) == 0) continue;
    CheckResult r = validate_negation(f, cfg);
    INFO(f.name << " " << to_json(r).dump());
    CHECK(r.holds());
  }
}

TEST_CASE("boundary conditions and monotonicity by brute force") {
  const Catalog& cat = load_catalog();
  for (const Fixture& fx : cat.fixtures) {
    const BinaryConnective& b = fx.connective;
    INFO(b.name);
    for (double x : grid(65)) {
      for (double y : grid(65)) {
        double v = b(x, y);
        REQUIRE(v >= 0.0);
        REQUIRE(v <= 1.0);
      }
    }
    switch (b.kind) {
      case Kind::conjunction:
        CHECK(b(1, 1) == 1.0);
        CHECK(b(0, 0) == 0.0);
        CHECK(b(1, 0) == 0.0);
        CHECK(b(0, 1) == 0.0);
        for (double t : grid(65)) {
          REQUIRE(b(t, 0) == 0.0);
          REQUIRE(b(0, t) == 0.0);
        }
        CHECK(monotone_all_pairs(b, 65, 1, 1));
        break;
      case Kind::disjunction:
        CHECK(b(0, 0) == 0.0);
        CHECK(b(1, 1) == 1.0);
        CHECK(b(1, 0) == 1.0);
        CHECK(b(0, 1) == 1.0);
        for (double t : grid(65)) {
          REQUIRE(b(t, 1) == 1.0);
          REQUIRE(b(1, t) == 1.0);
        }
        CHECK(monotone_all_pairs(b, 65, 1, 1));
        break;
      case Kind::implication:
        CHECK(monotone_all_pairs(b, 65, -1, 1));
        CHECK(b(0, 0) == 1.0);
        CHECK(b(1, 1) == 1.0);
        CHECK(b(1, 0) == 0.0);
        break;
      case Kind::raw:
        break;
    }
  }
}

TEST_CASE("declared flags: T_P holds everything") {
  NumericConfig cfg;
  CheckResult r = validate_connective(load_catalog().connective("T_P"), cfg);
  CHECK(r.holds());
  CHECK(r.details.at("commutative") == "holds");
  CHECK(r.details.at("associative") == "holds");
  CHECK(r.details.at("neutral_element") == "holds");
}

TEST_CASE("ex32i declared commutative fails with a genuine witness") {
  NumericConfig cfg;
  BinaryConnective c = load_catalog().connective("ex32i_C");
  c.flags.commutative = true;
  CheckResult r = validate_connective(c, cfg);
  REQUIRE(r.fails());
  REQUIRE(r.witness);
  double a = r.witness->point.at(0), b = r.witness->point.at(1);
  CHECK(std::abs(c(a, b) - c(b, a)) > 0.1);
  CHECK(r.witness->value("b(x,y)") == c(a, b));
  CHECK(r.witness->value("b(y,x)") == c(b, a));
  // (0.5, 0.25) is symmetric: both orders are 0.
  CHECK(c(0.25, 0.5) == 0.0);
  CHECK(c(0.5, 0.25) == 0.0);
}

TEST_CASE("one-sided continuity flags of D_1") {
  NumericConfig cfg;
  BinaryConnective d1 = load_catalog().connective("D_1");
  CHECK(d1.flags.left_continuous == true);
  CHECK(d1.flags.right_continuous == false);
  Operands ops;
  ops.disjunction = d1;
  CHECK(check_law("LEFT_CONTINUOUS", ops, cfg).holds());
  CheckResult rc = check_law("RIGHT_CONTINUOUS", ops, cfg);
  CHECK(rc.fails());
  REQUIRE(rc.witness);
  CHECK(rc.witness->point.at(0) == 0.0);
}

TEST_CASE("validate_negation") {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();
  CHECK(validate_negation(cat.function("N_S"), cfg).holds());
  CHECK(validate_negation(cat.function("N_G2"), cfg).holds());
  UnaryFunction one = UnaryFunction::parse("one", "1");
  CheckResult r = validate_negation(one, cfg);
  REQUIRE(r.fails());
  CHECK(r.witness->point.at(0) == 1.0);
  CHECK(r.witness->value("N(1)") == 1.0);
  UnaryFunction up = UnaryFunction::parse("up", "piece(x = 0 : 1; x = 1 : 0; else : x)");
  CHECK(validate_negation(up, cfg).fails());
}

TEST_CASE("fixtures are bit-identical across builds") {
  Catalog a = build_catalog();
  const Catalog& b = load_catalog();
  REQUIRE(a.fixtures.size() == b.fixtures.size());
  CHECK(a.export_definitions() == b.export_definitions());
  for (std::size_t k = 0; k < a.fixtures.size(); ++k) {
    for (double x : grid(17)) {
      for (double y : grid(17)) {
        REQUIRE(a.fixtures[k].connective(x, y) == b.fixtures[k].connective(x, y));
      }
    }
  }
}
