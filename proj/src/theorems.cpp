#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "fuzcon/analysis.hpp"
#include "fuzcon/errors.hpp"
#include "fuzcon/induction.hpp"

namespace fuzcon {

namespace {

const char* word(bool b) { return b ? "holds" : "fails"; }

struct Thm {
  std::string_view id;
  const Operands& ops;
  const NumericConfig& cfg;
  CheckResult& r;

  const BinaryConnective& conj() const {
    if (!ops.conjunction) throw SignatureMismatch(std::string(id) + " needs a conjunction operand");
    if (ops.conjunction->kind != Kind::conjunction) {
      throw SignatureMismatch(std::string(id) + ": '" + ops.conjunction->name + "' is not a conjunction");
    }
    return *ops.conjunction;
  }
  const BinaryConnective& disj() const {
    if (!ops.disjunction) throw SignatureMismatch(std::string(id) + " needs a disjunction operand");
    if (ops.disjunction->kind != Kind::disjunction) {
      throw SignatureMismatch(std::string(id) + ": '" + ops.disjunction->name + "' is not a disjunction");
    }
    return *ops.disjunction;
  }
  const BinaryConnective& impl() const {
    if (!ops.implication) throw SignatureMismatch(std::string(id) + " needs an implication operand");
    return *ops.implication;
  }
  const UnaryFunction& neg() const {
    if (!ops.negation) throw SignatureMismatch(std::string(id) + " needs a negation operand");
    return *ops.negation;
  }

  /// Records a hypothesis; returns false (and marks the result) when unmet.
  bool require(bool ok, const std::string& what) {
    r.details["hypothesis:" + what] = word(ok);
    if (!ok && r.verdict == Verdict::holds) {
      r.verdict = Verdict::precondition_failed;
      r.details["missing"] = what;
    }
    return ok;
  }

  /// Records a conclusion; the first failed conclusion supplies the witness.
  void conclude(bool ok, const std::string& what, std::optional<Witness> w = std::nullopt) {
    r.details["conclusion:" + what] = word(ok);
    if (!ok && r.verdict == Verdict::holds) {
      r.verdict = Verdict::fails;
      Witness wit = w.value_or(Witness{{}, {}, ""});
      wit.note = what + (wit.note.empty() ? "" : ": " + wit.note);
      r.witness = wit;
    }
  }

  CheckResult law(std::string_view law_id, const Operands& o) {
    CheckResult c = check_law(law_id, o, cfg);
    r.details["law:" + std::string(law_id)] = to_string(c.verdict);
    return c;
  }

  bool failed() const { return r.verdict != Verdict::holds; }
};

Operands with_i(const BinaryConnective& i) {
  Operands o;
  o.implication = i;
  return o;
}
Operands with_dn(const BinaryConnective& d, const UnaryFunction& n) {
  Operands o;
  o.disjunction = d;
  o.negation = n;
  return o;
}
Operands with_cn(const BinaryConnective& c, const UnaryFunction& n) {
  Operands o;
  o.conjunction = c;
  o.negation = n;
  return o;
}
Operands with_in(const BinaryConnective& i, const UnaryFunction& n) {
  Operands o;
  o.implication = i;
  o.negation = n;
  return o;
}

double unary_distance(const UnaryFunction& a, const UnaryFunction& b, const NumericConfig& cfg,
                      double* at = nullptr) {
  double worst = 0.0;
  for (double x : merge_points(uniform_grid(cfg.grid_n), a.breakpoints)) {
    double d = std::abs(a(x) - b(x));
    if (d > worst) {
      worst = d;
      if (at) *at = x;
    }
  }
  return worst;
}

bool is_negation(const UnaryFunction& n, const NumericConfig& cfg) {
  return validate_negation(n, cfg).holds();
}

Witness flags_witness(const NegationClassReport& c) {
  return Witness{{},
                 {{"strictly_decreasing", c.strictly_decreasing.holds ? 1.0 : 0.0},
                  {"continuous", c.continuous.holds ? 1.0 : 0.0},
                  {"strict", c.strict.holds ? 1.0 : 0.0},
                  {"strong", c.strong.holds ? 1.0 : 0.0}},
                 "classification flags disagree"};
}

void record_flags(Thm& t, const NegationClassReport& c) {
  t.r.details["strictly_decreasing"] = word(c.strictly_decreasing.holds);
  t.r.details["continuous"] = word(c.continuous.holds);
  t.r.details["strict"] = word(c.strict.holds);
  t.r.details["strong"] = word(c.strong.holds);
}

// Four-way agreement for commutative C (resp. D) with N_C (resp. N_D) a negation.
void thm_four_flags(Thm& t, const BinaryConnective& b) {
  if (!t.require(check_commutativity(b, t.cfg).holds(), "commutativity")) return;
  InducedNegation n = natural_negation(b, t.cfg);
  if (!t.require(is_negation(n.function, t.cfg), "induced map is a fuzzy negation")) return;
  NegationClassReport c = classify_negation(n.function, t.cfg);
  record_flags(t, c);
  t.conclude(c.four_flags_agree(), "four classification flags agree", flags_witness(c));
}

void thm_prop_3_2(Thm& t, const BinaryConnective& b) {
  if (!t.require(check_commutativity(b, t.cfg).holds(), "commutativity")) return;
  InducedNegation n = natural_negation(b, t.cfg);
  if (!t.require(is_negation(n.function, t.cfg), "induced map is a fuzzy negation")) return;
  NegationClassReport c = classify_negation(n.function, t.cfg);
  record_flags(t, c);
  t.conclude(!c.continuous.holds || c.strong.holds, "continuous implies strong", c.strong.witness);
  t.conclude(c.continuous.holds || !c.strictly_decreasing.holds,
             "discontinuous implies not strictly decreasing", c.continuous.witness);
}

void thm_prop_3_1(Thm& t) {
  const auto& c = t.conj();
  if (!t.require(check_one_sided_continuity(c, Side::left, t.cfg).holds(), "left-continuity")) return;
  CheckResult bic = t.law("ZERO_SET_BICONDITIONAL", [&] {
    Operands o;
    o.conjunction = c;
    return o;
  }());
  t.conclude(bic.holds(), "C(x,y)=0 iff N_C(x)>=y", bic.witness);
  InducedNegation n = natural_negation_of_conjunction(c, t.cfg);
  std::optional<Witness> w;
  for (double x : uniform_grid(t.cfg.grid2_n)) {
    double v = c(x, n(x));
    if (v > t.cfg.eps_zero && !w) w = Witness{{x, n(x)}, {{"C(x,N_C(x))", v}}, ""};
  }
  t.conclude(!w, "supremum attained", w);
  NegationClassReport cls = classify_negation(n.function, t.cfg);
  t.conclude(cls.left_continuous.holds, "N_C left-continuous", cls.left_continuous.witness);
}

void thm_prop_3_3(Thm& t) {
  const auto& d = t.disj();
  if (!t.require(check_one_sided_continuity(d, Side::right, t.cfg).holds(), "right-continuity")) return;
  Operands o;
  o.disjunction = d;
  CheckResult bic = t.law("ONE_SET_BICONDITIONAL", o);
  t.conclude(bic.holds(), "D(x,y)=1 iff N_D(x)<=y", bic.witness);
  InducedNegation n = natural_negation_of_disjunction(d, t.cfg);
  std::optional<Witness> w;
  for (double x : uniform_grid(t.cfg.grid2_n)) {
    double v = d(x, n(x));
    if (v < 1.0 - t.cfg.eps_one && !w) w = Witness{{x, n(x)}, {{"D(x,N_D(x))", v}}, ""};
  }
  t.conclude(!w, "infimum attained", w);
  NegationClassReport cls = classify_negation(n.function, t.cfg);
  t.conclude(cls.right_continuous.holds, "N_D right-continuous", cls.right_continuous.witness);
}

void equivalence(Thm& t, const CheckResult& a, const CheckResult& b, const std::string& what) {
  bool agree = a.holds() == b.holds();
  std::optional<Witness> w = a.holds() ? b.witness : a.witness;
  t.conclude(agree, what, w);
}

void thm_prop_4_1(Thm& t) {
  const auto& d = t.disj();
  const auto& n = t.neg();
  if (!t.require(check_one_sided_continuity(d, Side::right, t.cfg).holds(), "right-continuity")) return;
  equivalence(t, t.law("LEM", with_dn(d, n)), t.law("LEM_INEQ", with_dn(d, n)),
              "LEM iff the excluded-middle inequalities");
}

void thm_prop_4_2(Thm& t) {
  const auto& c = t.conj();
  const auto& n = t.neg();
  if (!t.require(check_one_sided_continuity(c, Side::left, t.cfg).holds(), "left-continuity")) return;
  equivalence(t, t.law("LC", with_cn(c, n)), t.law("LC_INEQ", with_cn(c, n)),
              "LC iff the contradiction inequalities");
}

void thm_lemma_4_1(Thm& t) {
  const auto& d = t.disj();
  const auto& n = t.neg();
  if (!t.require(t.law("LEM", with_dn(d, n)).holds(), "LEM")) return;
  CheckResult q = t.law("LEM_INEQ", with_dn(d, n));
  t.conclude(q.holds(), "excluded-middle inequalities", q.witness);
}

void thm_lemma_4_2(Thm& t) {
  const auto& c = t.conj();
  const auto& n = t.neg();
  if (!t.require(t.law("LC", with_cn(c, n)).holds(), "LC")) return;
  CheckResult q = t.law("LC_INEQ", with_cn(c, n));
  t.conclude(q.holds(), "contradiction inequalities", q.witness);
}

void thm_lemma_4_3(Thm& t) {
  const auto& d = t.disj();
  const auto& n = t.neg();
  if (!t.require(is_negation(n, t.cfg), "N is a fuzzy negation")) return;
  BinaryConnective i = implication_from_dn(d, n, t.cfg);
  CheckResult fi = t.law("FI", with_i(i));
  t.conclude(fi.holds(), "(i) I_{D,N} is a fuzzy implication", fi.witness);
  Operands od;
  od.disjunction = d;
  equivalence(t, t.law("NP", with_i(i)), t.law("NEUTRAL_0", od), "(ii) NP iff D(0,y)=y");
  bool ca = check_commutativity(d, t.cfg).holds() && check_associativity(d, t.cfg).holds();
  t.r.details["commutative_and_associative"] = word(ca);
  if (ca) {
    CheckResult ep = t.law("EP", with_i(i));
    t.conclude(ep.holds(), "(iii) EP", ep.witness);
  }
}

bool strong(const UnaryFunction& n, const NumericConfig& cfg) {
  return classify_negation(n, cfg).strong.holds;
}

void thm_prop_4_4(Thm& t) {
  const auto& d = t.disj();
  const auto& n = t.neg();
  if (!t.require(is_negation(n, t.cfg), "N is a fuzzy negation")) return;
  InducedNegation nd = natural_negation_of_disjunction(d, t.cfg);
  if (!t.require(is_negation(nd.function, t.cfg), "N_D is a fuzzy negation")) return;
  BinaryConnective i = implication_from_dn(d, n, t.cfg);
  CheckResult lem1 = t.law("LEM1", with_dn(d, n));
  equivalence(t, t.law("IP", with_i(i)), lem1, "(i) IP iff LEM1");
  bool comm = check_commutativity(d, t.cfg).holds();
  t.r.details["commutative"] = word(comm);
  if (comm) {
    double at = 0.0;
    double dist = unary_distance(n, nd.function, t.cfg, &at);
    t.r.details["sup|N - N_D|"] = std::to_string(dist);
    bool rhs = lem1.holds() && dist <= t.cfg.eps_eq && strong(n, t.cfg) && strong(nd.function, t.cfg);
    CheckResult op = t.law("OP", with_i(i));
    t.conclude(op.holds() == rhs, "(ii) OP iff (LEM1, N = N_D, both strong)", op.witness);
  }
}

void thm_prop_4_5(Thm& t) {
  const auto& d = t.disj();
  InducedNegation ndi = natural_negation_of_disjunction(d, t.cfg);
  const UnaryFunction& nd = ndi.function;
  if (!t.require(is_negation(nd, t.cfg), "N_D is a fuzzy negation")) return;
  BinaryConnective i = implication_from_dn(d, nd, t.cfg);
  Operands od;
  od.disjunction = d;
  equivalence(t, t.law("NP", with_i(i)), t.law("NEUTRAL_0", od), "(i) NP iff left neutral 0");
  bool comm = check_commutativity(d, t.cfg).holds();
  bool assoc = comm && check_associativity(d, t.cfg).holds();
  if (comm && assoc) {
    CheckResult ep = t.law("EP", with_i(i));
    t.conclude(ep.holds(), "(ii) EP", ep.witness);
  }
  CheckResult lem1 = t.law("LEM1", with_dn(d, nd));
  equivalence(t, t.law("IP", with_i(i)), lem1, "(iii) IP iff LEM1");
  NegationClassReport cls = classify_negation(nd, t.cfg);
  CheckResult op = t.law("OP", with_i(i));
  t.conclude(op.holds() == (lem1.holds() && cls.strong.holds), "(iv) OP iff (LEM1, N_D strong)",
             op.witness);
  if (comm) {
    CheckResult rcp = t.law("R-CP", with_in(i, nd));
    t.conclude(rcp.holds(), "(v) R-CP(N_D)", rcp.witness);
    if (cls.continuous.holds) {
      CheckResult lcp = t.law("L-CP", with_in(i, nd));
      t.conclude(lcp.holds(), "(v) L-CP(N_D)", lcp.witness);
      CheckResult cp = t.law("CP", with_in(i, nd));
      t.conclude(cp.holds(), "(v) CP(N_D)", cp.witness);
    }
  }
}

/// I rebuilt from (D_I, N_I) on a 101 x 101 grid, D_I(x,0) = x, uniqueness on Ran(N_I).
void round_trip(Thm& t, const BinaryConnective& i, const UnaryFunction& ni) {
  BinaryConnective di = disjunction_from_implication(i, ni, t.cfg);
  BinaryConnective rebuilt;
  rebuilt.name = "I(D_I,N_I)";
  rebuilt.kind = Kind::implication;
  rebuilt.fn = [d = di.fn, n = ni.fn](double x, double y) { return d(n(x), y); };
  std::vector<double> at;
  double dist = sup_distance(i, rebuilt, 101, &at);
  t.r.details["round_trip_sup_error"] = std::to_string(dist);
  t.conclude(dist <= t.cfg.eps_eq, "I = D_I(N_I(x),y)",
             Witness{at, {{"I", i(at[0], at[1])}, {"rebuilt", rebuilt(at[0], at[1])}}, ""});
  double worst = 0.0, wx = 0.0;
  for (double x : uniform_grid(101)) {
    double e = std::abs(di(x, 0.0) - x);
    if (e > worst) worst = e, wx = x;
  }
  t.r.details["right_neutral_sup_error"] = std::to_string(worst);
  t.conclude(worst <= t.cfg.eps_eq, "D_I(x,0) = x",
             Witness{{wx, 0.0}, {{"D_I(x,0)", di(wx, 0.0)}}, ""});
  CheckResult valid = validate_connective(di, t.cfg);
  t.conclude(valid.holds(), "D_I is a fuzzy disjunction", valid.witness);
  // Uniqueness: any D with D(N_I(x),y) = I(x,y) is pinned at v = N_I(x); D_I must agree there.
  double uw = 0.0;
  std::vector<double> upt;
  for (double x : uniform_grid(101)) {
    double v = ni(x);
    for (double y : uniform_grid(101)) {
      double e = std::abs(di(v, y) - i(x, y));
      if (e > uw) uw = e, upt = {x, y};
    }
  }
  t.r.details["uniqueness_sup_error"] = std::to_string(uw);
  t.conclude(uw <= t.cfg.eps_eq, "D pinned on Ran(N_I)",
             Witness{upt, {{"error", uw}}, "D_I(N_I(x),y) != I(x,y)"});
}

/// Checks FI and that N_I is a negation; returns N_I when both hold.
std::optional<UnaryFunction> implication_and_ni(Thm& t, const BinaryConnective& i) {
  if (!t.require(t.law("FI", with_i(i)).holds(), "I is a fuzzy implication")) return std::nullopt;
  UnaryFunction ni = section_at_zero(i);
  ni.name = "N_I";
  if (!t.require(is_negation(ni, t.cfg), "N_I is a fuzzy negation")) return std::nullopt;
  return ni;
}

void thm_4_1(Thm& t) {
  const auto& i = t.impl();
  auto ni = implication_and_ni(t, i);
  if (!ni) return;
  if (!t.require(is_continuous(*ni, t.cfg), "N_I continuous")) return;
  if (!t.require(t.law("COND_4_7", with_i(i)).holds(), "condition COND_4_7")) return;
  round_trip(t, i, *ni);
}

void thm_cor(Thm& t, bool want_strong) {
  const auto& i = t.impl();
  auto ni = implication_and_ni(t, i);
  if (!ni) return;
  NegationClassReport cls = classify_negation(*ni, t.cfg);
  record_flags(t, cls);
  if (!t.require(want_strong ? cls.strong.holds : cls.strict.holds,
                 want_strong ? "N_I strong" : "N_I strict")) {
    return;
  }
  CheckResult c47 = t.law("COND_4_7", with_i(i));
  t.conclude(c47.holds(), "COND_4_7 follows from strictness", c47.witness);
  round_trip(t, i, *ni);
  if (want_strong) {
    UnaryFunction a = aleph(*ni, t.cfg);
    double at = 0.0;
    double d = unary_distance(a, *ni, t.cfg, &at);
    t.conclude(d <= 1e-6, "aleph_I = N_I", Witness{{at}, {{"aleph", a(at)}, {"N_I", (*ni)(at)}}, ""});
  }
}

void thm_4_2(Thm& t) {
  const auto& i = t.impl();
  auto ni = implication_and_ni(t, i);
  if (!ni) return;
  const UnaryFunction& n = t.ops.negation ? *t.ops.negation : *ni;
  if (t.ops.negation && is_continuous(n, t.cfg) && is_negation(n, t.cfg)) {
    BinaryConnective d = disjunction_from_implication(i, n, t.cfg);
    Continuity2D c = detect_continuity_2d(d, t.cfg);
    t.r.details["D_continuous"] = word(c.continuous);
    t.r.details["D_max_jump"] = std::to_string(c.max_jump);
    if (!c.continuous) {
      t.r.details["D_jump_at"] = std::to_string(c.location[0]) + "," + std::to_string(c.location[1]);
      t.r.details["D_jump_varying"] = c.varying == Axis::x ? "x" : "y";
    }
  }
  NegationClassReport cls = classify_negation(n, t.cfg);
  if (!t.require(cls.strict.holds, "strictness")) return;
  if (t.ops.negation) {
    if (!t.require(unary_distance(n, *ni, t.cfg) <= t.cfg.eps_eq, "N = N_I")) return;
  }
  BinaryConnective d = disjunction_from_implication(i, n, t.cfg);
  bool ic = detect_continuity_2d(i, t.cfg).continuous;
  Continuity2D dc = detect_continuity_2d(d, t.cfg);
  t.r.details["I_continuous"] = word(ic);
  t.r.details["D_continuous"] = word(dc.continuous);
  t.conclude(ic == dc.continuous, "I continuous iff D_I continuous",
             Witness{dc.location, {{"jump", dc.max_jump}}, ""});
  round_trip(t, i, n);
}

void thm_lemma_2_1(Thm& t) {
  NegationClassReport c = classify_negation(t.neg(), t.cfg);
  record_flags(t, c);
  if (!t.require(c.strong.holds, "strong")) return;
  t.conclude(c.strict.holds, "strong implies strict", c.strict.witness);
}

void thm_lemma_2_2(Thm& t) {
  const auto& n1 = t.neg();
  if (!t.ops.negation2) throw SignatureMismatch("LEMMA_2_2 needs two negations");
  const auto& n2 = *t.ops.negation2;
  if (!t.require(is_negation(n1, t.cfg) && is_negation(n2, t.cfg), "both are fuzzy negations")) return;
  double worst = 0.0;
  for (double x : merge_points(uniform_grid(t.cfg.grid_n), n2.breakpoints)) {
    worst = std::max(worst, std::abs(n1(n2(x)) - x));
  }
  t.r.details["sup|N1(N2(x)) - x|"] = std::to_string(worst);
  if (!t.require(worst <= t.cfg.eps_eq, "N1 o N2 = id")) return;
  NegationClassReport c1 = classify_negation(n1, t.cfg);
  NegationClassReport c2 = classify_negation(n2, t.cfg);
  t.conclude(c1.continuous.holds, "N1 continuous", c1.continuous.witness);
  t.conclude(c2.strictly_decreasing.holds, "N2 strictly decreasing", c2.strictly_decreasing.witness);
}

void thm_lemma_2_3(Thm& t) {
  const auto& i = t.impl();
  if (!t.require(t.law("OP", with_i(i)).holds(), "OP")) return;
  CheckResult ip = t.law("IP", with_i(i));
  t.conclude(ip.holds(), "IP", ip.witness);
}

void thm_lemma_2_4(Thm& t) {
  const BinaryConnective* b = t.ops.conjunction ? &*t.ops.conjunction
                              : t.ops.disjunction ? &*t.ops.disjunction
                                                  : nullptr;
  if (!b) throw SignatureMismatch("LEMMA_2_4 needs a conjunction or disjunction");
  if (!t.require(validate_connective(*b, t.cfg).holds(), "valid " + to_string(b->kind))) return;
  double a = b->kind == Kind::conjunction ? 0.0 : 1.0;
  std::optional<Witness> w;
  for (double x : uniform_grid(t.cfg.grid_n)) {
    if ((*b)(x, a) != a || (*b)(a, x) != a) {
      w = Witness{{x, a}, {{"b(x,a)", (*b)(x, a)}, {"b(a,x)", (*b)(a, x)}}, ""};
      break;
    }
  }
  t.conclude(!w, "absorbing element", w);
}

void thm_lemma_4_5(Thm& t) {
  const auto& n = t.neg();
  if (!t.require(is_negation(n, t.cfg), "N is a fuzzy negation")) return;
  if (!t.require(is_continuous(n, t.cfg), "N continuous")) return;
  UnaryFunction a = aleph(n, t.cfg);
  CheckResult an = validate_negation(a, t.cfg);
  t.conclude(an.holds(), "aleph is a fuzzy negation", an.witness);
  NegationClassReport ac = classify_negation(a, t.cfg);
  t.conclude(ac.strictly_decreasing.holds, "aleph strictly decreasing", ac.strictly_decreasing.witness);
  UnaryFunction back = pseudo_inverse(a, t.cfg);
  double at = 0.0;
  double d = unary_distance(back, n, t.cfg, &at);
  t.r.details["sup|pinv(aleph) - N|"] = std::to_string(d);
  t.conclude(d <= 1e-6, "pinv(aleph) = N", Witness{{at}, {{"pinv(aleph)", back(at)}, {"N", n(at)}}, ""});
  double w1 = 0.0, x1 = 0.0, w2 = 0.0, x2 = 0.0;
  for (double x : uniform_grid(t.cfg.grid_n)) {
    double e = std::abs(n(a(x)) - x);
    if (e > w1) w1 = e, x1 = x;
    double r = a(x);
    double e2 = std::abs(a(n(r)) - r);
    if (e2 > w2) w2 = e2, x2 = r;
  }
  t.conclude(w1 <= 1e-9, "N o aleph = id", Witness{{x1}, {{"N(aleph(x))", n(a(x1))}}, ""});
  t.conclude(w2 <= 1e-9, "aleph o N = id on Ran(aleph)", Witness{{x2}, {{"aleph(N(x))", a(n(x2))}}, ""});
}

void thm_lemma_4_6(Thm& t) {
  const auto& i = t.impl();
  std::optional<UnaryFunction> ni;
  try {
    ni = negation_of_implication(i, t.cfg);
  } catch (const AxiomsFailed& e) {
    t.require(false, std::string("(I1), (I3), (I5): ") + e.what());
    return;
  }
  t.require(true, "(I1), (I3), (I5)");
  CheckResult v = validate_negation(*ni, t.cfg);
  t.conclude(v.holds(), "N_I is a fuzzy negation", v.witness);
}

void thm_lemma_4_7(Thm& t) {
  const auto& i = t.impl();
  auto ni = implication_and_ni(t, i);
  if (!ni) return;
  if (!t.require(is_continuous(*ni, t.cfg), "N_I continuous")) return;
  BinaryConnective d = disjunction_from_implication(i, *ni, t.cfg);
  CheckResult v = validate_connective(d, t.cfg);
  t.conclude(v.holds(), "D_I is a fuzzy disjunction", v.witness);
}

/// Statement (ii) of the (I2) / R-CP(N_I) characterization.
bool statement_ii(Thm& t, const BinaryConnective& i, const UnaryFunction& ni) {
  const auto g = uniform_grid(t.cfg.grid2_n);
  bool i2 = true;
  for (double x : g) {
    for (std::size_t k = 0; i2 && k + 1 < g.size(); ++k) {
      i2 = i(x, g[k + 1]) >= i(x, g[k]) - t.cfg.eps_eq;
    }
  }
  bool rcp = t.law("R-CP", with_in(i, ni)).holds();
  bool cont = is_negation(ni, t.cfg) && is_continuous(ni, t.cfg);
  t.r.details["(ii) I2"] = word(i2);
  t.r.details["(ii) R-CP(N_I)"] = word(rcp);
  t.r.details["(ii) N_I continuous negation"] = word(cont);
  return i2 && rcp && cont;
}

void thm_lemma_4_8(Thm& t, bool natural) {
  const auto& i = t.impl();
  UnaryFunction ni = section_at_zero(i);
  ni.name = "N_I";
  bool ii = statement_ii(t, i, ni);
  bool st_i = false;
  if (is_negation(ni, t.cfg) && is_continuous(ni, t.cfg) && t.law("FI", with_i(i)).holds()) {
    BinaryConnective d = disjunction_from_implication(i, ni, t.cfg);
    bool valid = validate_connective(d, t.cfg).holds();
    bool comm = check_commutativity(d, t.cfg).holds();
    bool neutral = check_neutral(d, NeutralElement{0.0, NeutralElement::Side::both}, t.cfg).holds();
    BinaryConnective rebuilt;
    rebuilt.kind = Kind::implication;
    rebuilt.fn = [df = d.fn, n = ni.fn](double x, double y) { return df(n(x), y); };
    bool rep = sup_distance(i, rebuilt, 101) <= t.cfg.eps_eq;
    st_i = valid && comm && neutral && rep;
    t.r.details["(i) D_I commutative"] = word(comm);
    t.r.details["(i) D_I neutral 0"] = word(neutral);
    t.r.details["(i) representation"] = word(rep);
    if (natural && st_i) {
      InducedNegation nd = natural_negation_of_disjunction(d, t.cfg);
      bool same = unary_distance(nd.function, ni, t.cfg) <= 1e-6;
      t.r.details["(i) N = N_D"] = word(same);
      st_i = same;
    }
  }
  if (natural) {
    t.r.details["open_question"] =
        "statement (ii) lists continuous/strict/strong variants that (i) does not; only the "
        "continuous variant is checked";
  }
  t.r.details["statement_i"] = word(st_i);
  t.r.details["statement_ii"] = word(ii);
  t.conclude(st_i == ii, "(i) iff (ii)",
             Witness{{}, {{"statement_i", st_i ? 1.0 : 0.0}, {"statement_ii", ii ? 1.0 : 0.0}}, ""});
}

using ThmFn = std::function<void(Thm&)>;

const std::map<std::string, ThmFn, std::less<>>& registry() {
  static const std::map<std::string, ThmFn, std::less<>> thms = {
      {"THM_3_1", [](Thm& t) { thm_four_flags(t, t.conj()); }},
      {"THM_3_2", [](Thm& t) { thm_four_flags(t, t.disj()); }},
      {"PROP_3_1", thm_prop_3_1},
      {"PROP_3_2", [](Thm& t) { thm_prop_3_2(t, t.conj()); }},
      {"PROP_3_3", thm_prop_3_3},
      {"PROP_3_4", [](Thm& t) { thm_prop_3_2(t, t.disj()); }},
      {"PROP_4_1", thm_prop_4_1},
      {"PROP_4_2", thm_prop_4_2},
      {"LEMMA_4_1", thm_lemma_4_1},
      {"LEMMA_4_2", thm_lemma_4_2},
      {"LEMMA_4_3", thm_lemma_4_3},
      {"PROP_4_4", thm_prop_4_4},
      {"PROP_4_5", thm_prop_4_5},
      {"THM_4_1", thm_4_1},
      {"COR_4_1", [](Thm& t) { thm_cor(t, false); }},
      {"COR_4_2", [](Thm& t) { thm_cor(t, true); }},
      {"THM_4_2", thm_4_2},
      {"LEMMA_2_1", thm_lemma_2_1},
      {"LEMMA_2_2", thm_lemma_2_2},
      {"LEMMA_2_3", thm_lemma_2_3},
      {"LEMMA_2_4", thm_lemma_2_4},
      {"LEMMA_4_5", thm_lemma_4_5},
      {"LEMMA_4_6", thm_lemma_4_6},
      {"LEMMA_4_7", thm_lemma_4_7},
      {"LEMMA_4_8", [](Thm& t) { thm_lemma_4_8(t, false); }},
      {"THM_4_3", [](Thm& t) { thm_lemma_4_8(t, true); }},
  };
  return thms;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return ids;
}

CheckResult verify_theorem(std::string_view theorem_id, const Operands& ops,
                           const NumericConfig& cfg) {
  const auto& reg = registry();
  auto it = reg.find(theorem_id);
  if (it == reg.end()) throw UnknownTheorem("unknown theorem '" + std::string(theorem_id) + "'");
  CheckResult r;
  r.law_id = std::string(theorem_id);
  r.operands = ops.names();
  r.config = cfg;
  Thm t{theorem_id, ops, cfg, r};
  it->second(t);
  return r;
}

bool compute_verdict(const Fixture& fx, std::string_view id, const NumericConfig& cfg) {
  const BinaryConnective& b = fx.connective;
  if (id == "FI" || id == "COND_4_7") {
    BinaryConnective i = b;
    i.kind = Kind::implication;
    return check_law(id, with_i(i), cfg).holds();
  }
  if (id == "NF_CONTINUOUS") return is_continuous(section_at_zero(b), cfg);
  if (id == "COMMUTATIVE") return check_commutativity(b, cfg).holds();
  if (id == "NC_CONTINUOUS" || id == "NC_STRICTLY_DECREASING" || id == "NC_STRONG") {
    NegationClassReport c = classify_negation(natural_negation(b, cfg).function, cfg);
    if (id == "NC_CONTINUOUS") return c.continuous.holds;
    if (id == "NC_STRICTLY_DECREASING") return c.strictly_decreasing.holds;
    return c.strong.holds;
  }
  if (id == "LEM_WITH_N_S" || id == "LEM_INEQ_WITH_N_S") {
    const UnaryFunction& ns = load_catalog().function("N_S");
    return check_law(id == "LEM_WITH_N_S" ? "LEM" : "LEM_INEQ", with_dn(b, ns), cfg).holds();
  }
  throw UnknownName("unknown verdict id '" + std::string(id) + "'");
}

}  // namespace fuzcon
