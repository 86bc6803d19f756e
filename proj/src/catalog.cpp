#include "fuzcon/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "fuzcon/errors.hpp"

namespace fuzcon {

namespace {

struct FlagSpec {
  std::optional<bool> comm, assoc, left, right;
  std::optional<NeutralElement> neutral;
};

Flags flags(FlagSpec s) {
  return Flags{s.comm, s.assoc, s.left, s.right, s.neutral};
}

constexpr NeutralElement one_both{1.0, NeutralElement::Side::both};
constexpr NeutralElement zero_both{0.0, NeutralElement::Side::both};
constexpr NeutralElement zero_left{0.0, NeutralElement::Side::left};
constexpr NeutralElement zero_right{0.0, NeutralElement::Side::right};

class Builder {
 public:
  Catalog cat;

  Builder() {
    cat.fixtures.reserve(128);
    cat.functions.reserve(64);
  }

  const UnaryFunction& fn(const std::string& name, const std::string& src,
                          const std::string& prov) {
    cat.functions.push_back(UnaryFunction::parse(name, src, prov));
    return cat.functions.back();
  }

  Fixture& bin(const std::string& name, Kind kind, const std::string& src, FlagSpec f,
               const std::string& prov) {
    Fixture fx;
    fx.connective = BinaryConnective::parse(name, kind, src, flags(f), prov);
    fx.provenance = prov;
    cat.fixtures.push_back(std::move(fx));
    return cat.fixtures.back();
  }

  const UnaryFunction& function(const std::string& name) const { return cat.function(name); }
  const BinaryConnective& connective(const std::string& name) const {
    return cat.connective(name);
  }

  void expect_negation(Fixture& fx, const std::string& fn_name) {
    fx.expected_induced_negation = ExpectedNegation{false, function(fn_name)};
  }
  void expect_not_negation(Fixture& fx) {
    fx.expected_induced_negation = ExpectedNegation{true, std::nullopt};
  }
};

}  // namespace

const Fixture* Catalog::find_fixture(std::string_view name) const {
  for (const Fixture& f : fixtures) {
    if (f.connective.name == name) return &f;
  }
  return nullptr;
}

const BinaryConnective& Catalog::connective(std::string_view name) const {
  if (const Fixture* f = find_fixture(name)) return f->connective;
  throw UnknownName("unknown connective '" + std::string(name) + "'");
}

bool Catalog::has_function(std::string_view name) const {
  return std::any_of(functions.begin(), functions.end(),
                     [&](const UnaryFunction& f) { return f.name == name; });
}

const UnaryFunction& Catalog::function(std::string_view name) const {
  for (const UnaryFunction& f : functions) {
    if (f.name == name) return f;
  }
  throw UnknownName("unknown function '" + std::string(name) + "'");
}

std::vector<const Fixture*> Catalog::of_kind(Kind kind) const {
  std::vector<const Fixture*> out;
  for (const Fixture& f : fixtures) {
    if (f.connective.kind == kind) out.push_back(&f);
  }
  return out;
}

std::string Catalog::export_definitions() const {
  std::string out = "# fuzcon catalog export\n";
  for (const UnaryFunction& f : functions) {
    out += "# " + f.provenance + "\n";
    out += f.name + "(x) := " + (f.expr ? f.expr->print() : std::string("?")) + "\n";
  }
  for (const Fixture& fx : fixtures) {
    const BinaryConnective& b = fx.connective;
    out += "# " + to_string(b.kind) + "; " + fx.provenance + "\n";
    out += b.name + "(x,y) := " + (b.expr ? b.expr->print() : std::string("?")) + "\n";
  }
  return out;
}

Catalog build_catalog() {
  Builder b;
  const std::string T1 = "conjunction table (natural negations)";
  const std::string T2 = "disjunction table ((D,N_D)-implications)";
  const std::string T3 = "independence table (representation conditions)";

  // Negations and other unary functions.
  b.fn("N_S", "1 - x", "standard negation");
  b.fn("N_G1", "piece(x = 0 : 1; else : 0)", "least negation");
  b.fn("N_G2", "piece(x = 1 : 0; else : 1)", "greatest negation");
  b.fn("N_4", "sqrt(1 - x^2)", T2 + ", row D_4");
  b.fn("N_5", "(1 - x)^2", T2 + ", row D_5");
  b.fn("ex32i_N", "(1 - x)^2", "non-commutative example (i): continuous, not strong");
  b.fn("ex32ii_N", "piece(x < 0.5 : 1 - 0.5*x; else : 1 - x)",
       "non-commutative example (ii): discontinuous, strictly decreasing");
  b.fn("remark42_N", "piece(x <= 0.5 : -2*x + 1; else : 0)",
       "continuous negation whose pseudo-inverse is not a negation");
  b.fn("remark42_pinv", "-0.5*x + 0.5", "pseudo-inverse of remark42_N");
  b.fn("remark42_aleph", "piece(x = 0 : 1; else : -0.5*x + 0.5)",
       "strictly decreasing negation patched from remark42_pinv");

  // Conjunction table.
  const Kind C = Kind::conjunction;
  auto& c0 = b.bin("C_0", C, "piece(x = 1 && y = 1 : 1; else : 0)",
                   {true, true, false, true, {}}, T1 + ", row C_0");
  b.expect_not_negation(c0);
  auto& c1 = b.bin("C_1", C, "piece(x = 0 : 0; y = 0 : 0; else : 1)",
                   {true, true, true, false, {}}, T1 + ", row C_1");
  b.expect_negation(c1, "N_G1");
  auto& c2 = b.bin("C_2", C, "piece(x = 1 : y; else : 0)", {false, {}, false, true, {}},
                   T1 + ", row C_2");
  b.expect_negation(c2, "N_G2");
  auto& c3 = b.bin("C_3", C, "piece(y = 1 : x; else : 0)", {false, {}, false, true, {}},
                   T1 + ", row C_3");
  b.expect_not_negation(c3);
  auto& c4 = b.bin("C_4", C, "piece(x + y <= 1 : 0; else : y)", {false, {}, true, false, {}},
                   T1 + ", row C_4");
  b.expect_negation(c4, "N_S");
  auto& c5 = b.bin("C_5", C, "piece(y = 0 : 0; else : x)", {false, {}, true, false, {}},
                   T1 + ", row C_5");
  b.expect_negation(c5, "N_G1");
  auto& tm = b.bin("T_M", C, "min(x, y)", {true, true, true, true, one_both},
                   T1 + ", row T_M (minimum t-norm)");
  b.expect_negation(tm, "N_G1");
  auto& tp = b.bin("T_P", C, "x*y", {true, true, true, true, one_both},
                   T1 + ", row T_P (product t-norm)");
  b.expect_negation(tp, "N_G1");
  auto& tl = b.bin("T_L", C, "max(x + y - 1, 0)", {true, true, true, true, one_both},
                   T1 + ", row T_L (Lukasiewicz t-norm)");
  b.expect_negation(tl, "N_S");
  auto& td = b.bin("T_D", C, "piece(x < 1 && y < 1 : 0; else : min(x, y))",
                   {true, true, false, true, one_both}, T1 + ", row T_D (drastic t-norm)");
  b.expect_negation(td, "N_G2");
  auto& tnm = b.bin("T_nM", C, "piece(x + y <= 1 : 0; else : min(x, y))",
                    {true, true, true, false, one_both}, T1 + ", row T_nM (nilpotent minimum)");
  b.expect_negation(tnm, "N_S");

  auto& e1 = b.bin("ex32i_C", C, "max(x + sqrt(y) - 1, 0)", {false, {}, true, true, {}},
                   "non-commutative conjunction (i): N_C continuous but not strong");
  b.expect_negation(e1, "ex32i_N");
  e1.expected_verdicts = {{"COMMUTATIVE", false},
                          {"NC_CONTINUOUS", true},
                          {"NC_STRICTLY_DECREASING", true},
                          {"NC_STRONG", false}};
  auto& e2 = b.bin("ex32ii_C", C, "piece(x < 0.5 : max(0.5*x + y - 1, 0); else : max(x + y - 1, 0))",
                   {false, {}, false, true, {}},
                   "non-commutative conjunction (ii): N_C strictly decreasing, discontinuous");
  b.expect_negation(e2, "ex32ii_N");
  e2.expected_verdicts = {{"COMMUTATIVE", false},
                          {"NC_CONTINUOUS", false},
                          {"NC_STRICTLY_DECREASING", true}};
  auto& e3 = b.bin("ex33_C", C, "piece(x + y <= 1 : 0; else : y)", {false, {}, true, false, {}},
                   "template family 0 on x+y<=1 (instance: C_4)");
  b.expect_negation(e3, "N_S");
  e3.expected_verdicts = {{"COMMUTATIVE", false}, {"NC_STRONG", true}};

  // Implications.
  const Kind I = Kind::implication;
  b.bin("I_D", I, "piece(x = 0 : 1; else : y)", {}, T2 + ", implication of row D_1");
  b.bin("I_GD", I, "piece(x <= y : 1; else : y)", {}, "Goedel implication (" + T2 + ", row D_2)");
  b.bin("I_3", I, "piece(x <= y : 1; else : 1 - x)", {}, T2 + ", row D_3");
  b.bin("I_4", I, "min(1, 1 - x^2 + y^2)", {}, T2 + ", row D_4");
  b.bin("I_5", I, "min(1, (1 - x)^2 + sqrt(y))", {}, T2 + ", row D_5");
  b.bin("I_6", I, "piece(x = 1 && y < 1 : 0; else : 1)", {}, T2 + ", row D_6");
  b.bin("I_WB", I, "piece(x < 1 : 1; else : y)", {}, "Weber implication (" + T2 + ", row D_7)");
  b.bin("I_RS", I, "piece(x <= y : 1; else : 0)", {}, "Rescher implication (" + T3 + ")");
  b.bin("I_RC", I, "1 - x + x*y", {}, "Reichenbach implication (remark on strictness)");

  // Disjunction table.
  const Kind D = Kind::disjunction;
  struct Row {
    const char* name;
    const char* src;
    FlagSpec flags;
    const char* negation;
    const char* implication;
  };
  const Row rows[] = {
      {"D_1", "piece(x = 0 : y; else : 1)", {false, {}, true, false, zero_left}, "N_G1", "I_D"},
      {"D_2", "piece(x + y >= 1 : 1; else : y)", {false, {}, false, true, zero_left}, "N_S",
       "I_GD"},
      {"D_3", "piece(x + y >= 1 : 1; else : x)", {false, {}, false, true, zero_right}, "N_S",
       "I_3"},
      {"D_4", "min(1, x^2 + y^2)", {true, false, true, true, {}}, "N_4", "I_4"},
      {"D_5", "min(1, x + sqrt(y))", {false, {}, true, true, zero_right}, "N_5", "I_5"},
      {"D_6", "piece(x = 0 && y = 0 : 0; x = 1 : 1; y = 1 : 1; else : x)",
       {false, {}, false, true, zero_right}, "N_G2", "I_6"},
      {"D_7", "piece(x = 0 && y = 0 : 0; x = 1 : 1; y = 1 : 1; else : y)",
       {false, {}, false, true, zero_left}, "N_G2", "I_WB"},
  };
  for (const Row& r : rows) {
    auto& fx = b.bin(r.name, D, r.src, r.flags, T2 + ", row " + r.name);
    b.expect_negation(fx, r.negation);
    fx.expected_implication = b.connective(r.implication);
  }

  auto& r41 = b.bin("remark41_D", D, "piece(x + y > 1 : 1; else : x^2 + y^2)",
                    {true, {}, true, false, {}},
                    "disjunction with N_D = N_S for which (D, N_S) violates excluded middle");
  b.expect_negation(r41, "N_S");
  r41.expected_verdicts = {{"LEM_WITH_N_S", false}, {"LEM_INEQ_WITH_N_S", true}};

  b.bin("thm42_D", D, "piece(x = 0 : y; else : 0.5*(x + y - x*y + 1))",
        {false, {}, true, false, {}},
        "D_I of I_RC built with the aleph of remark42_N; discontinuous in x at 0");

  // Independence table: expected (FI, COND_4_7, NF_CONTINUOUS) pattern.
  struct T3Row {
    const char* name;
    const char* src;
    Kind kind;
    bool fi, cond, cont;
  };
  const T3Row t3[] = {
      {"T3_F1", "piece(x <= y : 1; else : 0)", Kind::implication, true, false, false},
      {"T3_F2", "piece(x = 0 : 1; x < 0.5 : 0.5; else : y)", Kind::raw, false, true, false},
      {"T3_F3", "piece(x <= 0.5 : min(max(-2*x + y + 1, 0), 1); else : 0)", Kind::raw, false, false,
       true},
      {"T3_F4", "piece(x = 0 : 1; x <= 0.5 : max(0.5, y); else : y)", Kind::implication, true,
       true, false},
      {"T3_F5", "piece(x > y : max(1 - 2*x, 0); else : 1)", Kind::implication, true, false, true},
      {"T3_F6", "piece(y = 0 : 1 - x; x < 0.5 : 0; else : 1)", Kind::raw, false, true, true},
  };
  for (const T3Row& r : t3) {
    auto& fx = b.bin(r.name, r.kind, r.src, {}, T3 + ", row " + r.name);
    fx.expected_verdicts = {{"FI", r.fi}, {"COND_4_7", r.cond}, {"NF_CONTINUOUS", r.cont}};
  }
  return std::move(b.cat);
}

const Catalog& load_catalog() {
  static const Catalog catalog = [] {
    Catalog c = build_catalog();
    NumericConfig cfg;
    for (const Fixture& fx : c.fixtures) {
      CheckResult r = validate_connective(fx.connective, cfg);
      if (!r.holds()) {
        throw CatalogCorrupt("fixture '" + fx.connective.name + "' fails validation: " +
                             (r.witness ? r.witness->note : std::string()));
      }
    }
    for (const UnaryFunction& f : c.functions) {
      for (double x : uniform_grid(cfg.grid_n)) {
        double v = f(x);
        if (!(v >= 0.0 && v <= 1.0)) {
          throw CatalogCorrupt("function '" + f.name + "' leaves [0,1]");
        }
      }
    }
    return c;
  }();
  return catalog;
}

}  // namespace fuzcon
