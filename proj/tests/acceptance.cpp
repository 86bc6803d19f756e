#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fuzcon/analysis.hpp"
#include "fuzcon/catalog.hpp"
#include "fuzcon/fuzzer.hpp"
#include "fuzcon/induction.hpp"

using namespace fuzcon;

namespace {

int failures = 0;

void criterion(int id, const char* title, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string note;
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("%s %2d %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, s,
              note.empty() ? "" : ": ", note.c_str());
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::vector<double> grid(int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
  return g;
}

Operands ops_i(const BinaryConnective& i) {
  Operands o;
  o.implication = i;
  return o;
}

Operands ops_dn(const BinaryConnective& d, const UnaryFunction& n) {
  Operands o;
  o.disjunction = d;
  o.negation = n;
  return o;
}

// Brute-force natural negation: largest grid t with C(x,t) <= 0 (conjunction)
// or smallest grid t with D(x,t) >= 1 (disjunction).
double scan_negation(const BinaryConnective& b, double x, int n) {
  if (b.kind == Kind::conjunction) {
    double best = 0.0;
    for (int k = 0; k < n; ++k) {
      double t = static_cast<double>(k) / (n - 1);
      if (b(x, t) <= 0.0) best = t;
    }
    return best;
  }
  for (int k = 0; k < n; ++k) {
    double t = static_cast<double>(k) / (n - 1);
    if (b(x, t) >= 1.0) return t;
  }
  return 1.0;
}

std::vector<UnaryFunction> catalog_negations(const NumericConfig& cfg) {
  std::vector<UnaryFunction> v;
  for (const UnaryFunction& f : load_catalog().functions) {
    if (validate_negation(f, cfg).holds()) v.push_back(f);
  }
  return v;
}

}  // namespace

int main() {
  NumericConfig cfg;
  const Catalog& cat = load_catalog();

  criterion(1, "induced negations of conjunctions", [&](std::string& note) {
    int rows = 0;
    double worst = 0.0;
    bool ok = true;
    for (const char* name : {"C_0", "C_1", "C_2", "C_3", "C_4", "C_5", "T_M", "T_P", "T_L", "T_D",
                             "T_nM"}) {
      const Fixture* fx = cat.find_fixture(name);
      if (!fx->expected_induced_negation) return false;
      InducedNegation n = natural_negation(fx->connective, cfg);
      if (fx->expected_induced_negation->not_a_negation) {
        ok = ok && !n.is_negation && n(1.0) != 0.0;
        continue;
      }
      const UnaryFunction& want = *fx->expected_induced_negation->function;
      std::vector<double> pts = grid(1001);
      for (double b : want.breakpoints) {
        for (double d : {-1e-9, 0.0, 1e-9}) {
          if (b + d >= 0 && b + d <= 1) pts.push_back(b + d);
        }
      }
      double e = 0.0;
      for (double x : pts) e = std::max(e, std::abs(n(x) - want(x)));
      worst = std::max(worst, e);
      ok = ok && n.is_negation && e <= 1e-6;
      ++rows;
    }
    note = std::to_string(rows) + " rows, max error " + sci(worst);
    return ok && rows == 9;
  });

  criterion(2, "induced negations and implications of disjunctions", [&](std::string& note) {
    int rows = 0;
    double wn = 0.0, wi = 0.0;
    bool ok = true;
    for (const char* name : {"D_1", "D_2", "D_3", "D_4", "D_5", "D_6", "D_7"}) {
      const Fixture& fx = *cat.find_fixture(name);
      InducedNegation n = natural_negation(fx.connective, cfg);
      const UnaryFunction& want = *fx.expected_induced_negation->function;
      double en = 0.0;
      for (double x : grid(101)) en = std::max(en, std::abs(n(x) - want(x)));
      BinaryConnective i = implication_from_dn(fx.connective, n.function, cfg);
      double ei = sup_distance(i, *fx.expected_implication, 101);
      wn = std::max(wn, en);
      wi = std::max(wi, ei);
      ok = ok && n.is_negation && en <= 1e-6 && ei <= 1e-6;
      ++rows;
    }
    note = "max N error " + sci(wn) + ", max I error " + sci(wi);
    return ok && rows == 7;
  });

  criterion(3, "independence matrix", [&](std::string& note) {
    int cells = 0, match = 0;
    for (const char* name : {"T3_F1", "T3_F2", "T3_F3", "T3_F4", "T3_F5", "T3_F6"}) {
      const Fixture& fx = *cat.find_fixture(name);
      for (const char* id : {"FI", "COND_4_7", "NF_CONTINUOUS"}) {
        ++cells;
        if (compute_verdict(fx, id, cfg) == fx.expected_verdicts.at(id)) ++match;
      }
    }
    note = std::to_string(match) + "/" + std::to_string(cells) + " cells";
    return cells == 18 && match == 18;
  });

  criterion(4, "four flags agree for commutative connectives", [&](std::string& note) {
    int checked = 0, bad = 0;
    for (const Fixture& fx : cat.fixtures) {
      const BinaryConnective& b = fx.connective;
      if (b.kind != Kind::conjunction && b.kind != Kind::disjunction) continue;
      if (!check_commutativity(b, cfg).holds()) continue;
      InducedNegation n = natural_negation(b, cfg);
      if (!n.is_negation) continue;
      ++checked;
      if (!classify_negation(n.function, cfg).four_flags_agree()) ++bad;
    }
    SearchOptions o;
    o.first_seed = 1;
    o.budget = 1000;
    o.generator.m = 17;
    o.generator.commutative = true;
    auto ce = search_counterexample("THM_3_1", o);
    note = std::to_string(checked) + " catalog, " + std::to_string(bad) + " disagree; fuzz: " +
           (ce ? "disagreement at seed " + std::to_string(ce->seed) : "none in 1000");
    return bad == 0 && !ce;
  });

  criterion(5, "non-strong and discontinuous induced negations", [&](std::string& note) {
    InducedNegation a = natural_negation(cat.connective("ex32i_C"), cfg);
    NegationClassReport ra = classify_negation(a.function, cfg);
    double inv = std::abs(a(a(0.5)) - 0.5);
    bool ok_a = ra.continuous.holds && ra.strictly_decreasing.holds && !ra.strong.holds &&
                inv >= 0.06;
    InducedNegation b = natural_negation(cat.connective("ex32ii_C"), cfg);
    NegationClassReport rb = classify_negation(b.function, cfg);
    bool ok_b = !rb.continuous.holds && rb.strictly_decreasing.holds && rb.continuous.witness &&
                std::abs(rb.continuous.witness->point.at(0) - 0.5) < 1e-6 &&
                rb.continuous.witness->value("jump") >= 0.2;
    bool ok_c = true;
    for (const char* name : {"ex32i_C", "ex32ii_C"}) {
      const BinaryConnective& c = cat.connective(name);
      CheckResult r = check_commutativity(c, cfg);
      ok_c = ok_c && r.fails() && r.witness &&
             std::abs(c(r.witness->point[0], r.witness->point[1]) -
                      c(r.witness->point[1], r.witness->point[0])) > cfg.eps_eq;
    }
    note = "|N(N(0.5))-0.5| = " + sci(inv) +
           (rb.continuous.witness ? ", jump " + sci(rb.continuous.witness->value("jump")) : "");
    return ok_a && ok_b && ok_c;
  });

  criterion(6, "excluded middle fails, both inequalities hold", [&](std::string& note) {
    const BinaryConnective& d = cat.connective("remark41_D");
    Operands o = ops_dn(d, cat.function("N_S"));
    CheckResult lem = check_law("LEM", o, cfg);
    CheckResult ineq = check_law("LEM_INEQ", o, cfg);
    double gap = std::abs(d(0.5, 0.5) - 1.0);
    note = "|D(0.5,0.5)-1| = " + sci(gap);
    return lem.fails() && gap >= 0.4 && ineq.holds();
  });

  criterion(7, "implication round trip", [&](std::string& note) {
    bool ok = true;
    double worst = 0.0, wneutral = 0.0;
    for (const char* name : {"I_3", "I_4", "I_5", "I_RC"}) {
      const BinaryConnective& i = cat.connective(name);
      UnaryFunction ni = negation_of_implication(i, cfg);
      BinaryConnective di = disjunction_from_implication(i, cfg);
      double d = 0.0;
      for (double x : grid(101)) {
        double nx = ni(x);
        for (double y : grid(101)) d = std::max(d, std::abs(di(nx, y) - i(x, y)));
        wneutral = std::max(wneutral, std::abs(di(x, 0.0) - x));
      }
      worst = std::max(worst, d);
      ok = ok && d <= 1e-9;
    }
    note = "sup error " + sci(worst) + ", D_I(x,0) error " + sci(wneutral);
    return ok && wneutral <= 1e-9;
  });

  criterion(8, "discontinuous D_I from a non-strict negation", [&](std::string& note) {
    const BinaryConnective& i = cat.connective("I_RC");
    const UnaryFunction& n = cat.function("remark42_N");
    BinaryConnective d = disjunction_from_implication(i, n, cfg);
    Continuity2D c = detect_continuity_2d(d, cfg);
    Operands o = ops_i(i);
    o.negation = n;
    CheckResult r = verify_theorem("THM_4_2", o, cfg);
    bool at_origin = c.location.size() == 2 && std::abs(c.location[0]) < 1e-6 &&
                     std::abs(c.location[1]) < 1e-6;
    note = "jump " + sci(c.max_jump) + ", verdict " + to_string(r.verdict);
    auto m = r.details.find("missing");
    return !c.continuous && c.max_jump >= 0.4 && at_origin &&
           r.verdict == Verdict::precondition_failed && m != r.details.end() &&
           m->second == "strictness";
  });

  criterion(9, "zero/one-set laws and bisection oracle", [&](std::string& note) {
    bool ok = true;
    int bic = 0, one = 0;
    for (const Fixture& fx : cat.fixtures) {
      const BinaryConnective& b = fx.connective;
      Operands o;
      std::string base;
      if (b.kind == Kind::conjunction) {
        o.conjunction = b;
        base = "ZERO_SET_";
      } else if (b.kind == Kind::disjunction) {
        o.disjunction = b;
        base = "ONE_SET_";
      } else {
        continue;
      }
      ok = ok && check_law(base + "ONE_SIDED", o, cfg).holds();
      ++one;
      bool side = b.kind == Kind::conjunction ? check_law("LEFT_CONTINUOUS", o, cfg).holds()
                                              : check_law("RIGHT_CONTINUOUS", o, cfg).holds();
      if (side) {
        ok = ok && check_law(base + "BICONDITIONAL", o, cfg).holds();
        ++bic;
      }
    }
    std::vector<BinaryConnective> subjects;
    for (const Fixture& fx : cat.fixtures) {
      if (fx.connective.kind == Kind::conjunction || fx.connective.kind == Kind::disjunction) {
        subjects.push_back(fx.connective);
      }
    }
    std::size_t fixtures = subjects.size();
    GeneratorParams p;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      p.kind = seed % 2 ? Kind::conjunction : Kind::disjunction;
      p.commutative = seed % 3 == 0;
      subjects.push_back(generate_connective(seed, p).connective);
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < subjects.size(); ++k) {
      const BinaryConnective& b = subjects[k];
      InducedNegation n = natural_negation(b, cfg);
      int xs = k < fixtures ? 41 : 11;
      for (double x : grid(xs)) worst = std::max(worst, std::abs(n(x) - scan_negation(b, x, 200001)));
    }
    ok = ok && worst <= 1e-5;
    note = std::to_string(one) + " one-sided, " + std::to_string(bic) + " biconditional, oracle error " +
           sci(worst);
    return ok;
  });

  criterion(10, "negation and implication axiom suite", [&](std::string& note) {
    bool ok = true;
    std::vector<UnaryFunction> negs = catalog_negations(cfg);
    for (const UnaryFunction& n : negs) {
      NegationClassReport r = classify_negation(n, cfg);
      ok = ok && r.consistent() && (!r.strong.holds || r.strict.holds);
    }
    std::vector<BinaryConnective> imps;
    for (const Fixture* fx : cat.of_kind(Kind::implication)) imps.push_back(fx->connective);
    int pairs = 0, mism = 0;
    for (const Fixture* fx : cat.of_kind(Kind::disjunction)) {
      for (const UnaryFunction& n : negs) {
        BinaryConnective i = implication_from_dn(fx->connective, n, cfg);
        ok = ok && check_law("FI", ops_i(i), cfg).holds();
        bool ip = check_law("IP", ops_i(i), cfg).holds();
        bool lem1 = check_law("LEM1", ops_dn(fx->connective, n), cfg).holds();
        if (ip != lem1) ++mism;
        imps.push_back(i);
        ++pairs;
      }
    }
    int op = 0;
    for (const BinaryConnective& i : imps) {
      if (!check_law("OP", ops_i(i), cfg).holds()) continue;
      ++op;
      ok = ok && check_law("IP", ops_i(i), cfg).holds();
    }
    note = std::to_string(negs.size()) + " negations, " + std::to_string(pairs) + " (D,N) pairs, " +
           std::to_string(op) + " with OP, " + std::to_string(mism) + " IP/LEM1 mismatches";
    return ok && mism == 0;
  });

  return failures == 0 ? 0 : 1;
}
