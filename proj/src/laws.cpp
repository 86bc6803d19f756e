#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "fuzcon/analysis.hpp"
#include "fuzcon/errors.hpp"
#include "fuzcon/induction.hpp"

namespace fuzcon {

namespace {

enum class Role { conjunction, disjunction, implication, negation, binary };

/// Keeps the largest violation seen so far.
struct Worst {
  double magnitude = 0.0;
  std::optional<Witness> witness;

  void offer(double m, Witness w) {
    if (!witness || m > magnitude) {
      magnitude = m;
      witness = std::move(w);
    }
  }
};

struct Ctx {
  std::string_view law;
  const Operands& ops;
  const NumericConfig& cfg;
  CheckResult& r;
  Worst worst;

  const BinaryConnective& binary(Role role) const {
    const std::optional<BinaryConnective>* slot = nullptr;
    Kind want = Kind::raw;
    switch (role) {
      case Role::conjunction: slot = &ops.conjunction; want = Kind::conjunction; break;
      case Role::disjunction: slot = &ops.disjunction; want = Kind::disjunction; break;
      case Role::implication: slot = &ops.implication; want = Kind::implication; break;
      default: break;
    }
    if (role == Role::binary) {
      if (ops.conjunction) return *ops.conjunction;
      if (ops.disjunction) return *ops.disjunction;
      if (ops.implication) return *ops.implication;
      throw SignatureMismatch(std::string(law) + " needs a binary operand");
    }
    if (!*slot) throw SignatureMismatch(std::string(law) + " needs a " + to_string(want) + " operand");
    const BinaryConnective& b = **slot;
    bool ok = b.kind == want || (want == Kind::implication && b.kind == Kind::raw);
    if (!ok) {
      throw SignatureMismatch(std::string(law) + ": '" + b.name + "' is a " + to_string(b.kind) +
                              ", expected a " + to_string(want));
    }
    return b;
  }

  const UnaryFunction& negation() const {
    if (!ops.negation) throw SignatureMismatch(std::string(law) + " needs a negation operand");
    return *ops.negation;
  }

  void finish() {
    if (worst.witness) {
      r.verdict = Verdict::fails;
      r.witness = worst.witness;
      r.details["max_violation"] = std::to_string(worst.magnitude);
    }
  }
};

std::vector<double> unary_points(const NumericConfig& cfg, const UnaryFunction& n) {
  return merge_points(uniform_grid(cfg.grid_n), n.breakpoints);
}

std::vector<double> pair_points(const NumericConfig& cfg, const std::vector<double>& extra = {}) {
  auto pts = merge_points(uniform_grid(cfg.grid2_n), extra);
  // Cap the breakpoint-enriched axis so pair checks stay bounded.
  if (pts.size() > static_cast<std::size_t>(2 * cfg.grid2_n)) return uniform_grid(cfg.grid2_n);
  return pts;
}

bool is_one(double v, const NumericConfig& cfg) { return v >= 1.0 - cfg.eps_one; }
bool is_zero(double v, const NumericConfig& cfg) { return v <= cfg.eps_zero; }

void law_fi(Ctx& c) {
  BinaryConnective b = c.binary(Role::implication);
  b.kind = Kind::implication;
  b.flags = {};
  CheckResult v = validate_connective(b, c.cfg);
  if (!v.holds()) {
    c.r.verdict = Verdict::fails;
    c.r.witness = v.witness;
  }
}

void law_np(Ctx& c) {
  const auto& i = c.binary(Role::implication);
  for (double y : uniform_grid(c.cfg.grid_n)) {
    double v = i(1.0, y);
    double d = std::abs(v - y);
    if (d > c.cfg.eps_eq) c.worst.offer(d, Witness{{1.0, y}, {{"I(1,y)", v}, {"y", y}}, "I(1,y) != y"});
  }
}

void law_ep(Ctx& c) {
  const auto& i = c.binary(Role::implication);
  const auto g = uniform_grid(c.cfg.ep_n);
  for (double x : g) {
    for (double y : g) {
      for (double z : g) {
        double a = i(x, i(y, z));
        double b = i(y, i(x, z));
        double d = std::abs(a - b);
        if (d > c.cfg.eps_eq) {
          c.worst.offer(d, Witness{{x, y, z}, {{"I(x,I(y,z))", a}, {"I(y,I(x,z))", b}},
                                   "I(x,I(y,z)) != I(y,I(x,z))"});
        }
      }
    }
  }
}

void law_ip(Ctx& c) {
  const auto& i = c.binary(Role::implication);
  for (double x : uniform_grid(c.cfg.grid_n)) {
    double v = i(x, x);
    if (!is_one(v, c.cfg)) c.worst.offer(1.0 - v, Witness{{x, x}, {{"I(x,x)", v}}, "I(x,x) != 1"});
  }
}

void law_op(Ctx& c) {
  const auto& i = c.binary(Role::implication);
  const auto g = uniform_grid(c.cfg.grid2_n);
  for (double x : g) {
    for (double y : g) {
      double v = i(x, y);
      if (x <= y && !is_one(v, c.cfg)) {
        c.worst.offer(1.0 - v, Witness{{x, y}, {{"I(x,y)", v}}, "x <= y but I(x,y) != 1"});
      } else if (x > y && v == 1.0) {
        c.worst.offer(x - y, Witness{{x, y}, {{"I(x,y)", v}}, "I(x,y) = 1 but x > y"});
      }
    }
  }
}

enum class Contraposition { full, left, right };

void law_cp(Ctx& c, Contraposition kind) {
  const auto& i = c.binary(Role::implication);
  const auto& n = c.negation();
  const auto g = pair_points(c.cfg, n.breakpoints);
  std::vector<double> ng(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) ng[k] = n(g[k]);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      double x = g[a], y = g[b], nx = ng[a], ny = ng[b];
      double lhs, rhs;
      const char *ls, *rs;
      switch (kind) {
        case Contraposition::full:
          lhs = i(x, y), rhs = i(ny, nx), ls = "I(x,y)", rs = "I(N(y),N(x))";
          break;
        case Contraposition::left:
          lhs = i(nx, y), rhs = i(ny, x), ls = "I(N(x),y)", rs = "I(N(y),x)";
          break;
        default:
          lhs = i(x, ny), rhs = i(y, nx), ls = "I(x,N(y))", rs = "I(y,N(x))";
          break;
      }
      double d = std::abs(lhs - rhs);
      if (d > c.cfg.eps_eq) {
        c.worst.offer(d, Witness{{x, y}, {{ls, lhs}, {rs, rhs}}, std::string(ls) + " != " + rs});
      }
    }
  }
}

void law_lem(Ctx& c, bool first, bool second) {
  const auto& d = c.binary(Role::disjunction);
  const auto& n = c.negation();
  for (double x : unary_points(c.cfg, n)) {
    double nx = n(x);
    if (first) {
      double v = d(nx, x);
      if (!is_one(v, c.cfg)) {
        c.worst.offer(1.0 - v, Witness{{x}, {{"D(N(x),x)", v}, {"N(x)", nx}}, "D(N(x),x) != 1"});
      }
    }
    if (second) {
      double v = d(x, nx);
      if (!is_one(v, c.cfg)) {
        c.worst.offer(1.0 - v, Witness{{x}, {{"D(x,N(x))", v}, {"N(x)", nx}}, "D(x,N(x)) != 1"});
      }
    }
  }
}

void law_lc(Ctx& c, bool first, bool second) {
  const auto& k = c.binary(Role::conjunction);
  const auto& n = c.negation();
  for (double x : unary_points(c.cfg, n)) {
    double nx = n(x);
    if (first) {
      double v = k(nx, x);
      if (!is_zero(v, c.cfg)) {
        c.worst.offer(v, Witness{{x}, {{"C(N(x),x)", v}, {"N(x)", nx}}, "C(N(x),x) != 0"});
      }
    }
    if (second) {
      double v = k(x, nx);
      if (!is_zero(v, c.cfg)) {
        c.worst.offer(v, Witness{{x}, {{"C(x,N(x))", v}, {"N(x)", nx}}, "C(x,N(x)) != 0"});
      }
    }
  }
}

void law_lem_ineq(Ctx& c) {
  const auto& d = c.binary(Role::disjunction);
  const auto& n = c.negation();
  InducedNegation nd = natural_negation_of_disjunction(d, c.cfg);
  for (double x : unary_points(c.cfg, n)) {
    double nx = n(x);
    double ndn = nd(nx);
    if (ndn > x + c.cfg.eps_eq) {
      c.worst.offer(ndn - x, Witness{{x}, {{"N_D(N(x))", ndn}, {"x", x}}, "N_D(N(x)) > x"});
    }
    double ndx = nd(x);
    if (nx < ndx - c.cfg.eps_eq) {
      c.worst.offer(ndx - nx, Witness{{x}, {{"N(x)", nx}, {"N_D(x)", ndx}}, "N(x) < N_D(x)"});
    }
  }
}

void law_lc_ineq(Ctx& c) {
  const auto& k = c.binary(Role::conjunction);
  const auto& n = c.negation();
  InducedNegation nc = natural_negation_of_conjunction(k, c.cfg);
  for (double x : unary_points(c.cfg, n)) {
    double nx = n(x);
    double ncn = nc(nx);
    if (ncn < x - c.cfg.eps_eq) {
      c.worst.offer(x - ncn, Witness{{x}, {{"N_C(N(x))", ncn}, {"x", x}}, "N_C(N(x)) < x"});
    }
    double ncx = nc(x);
    if (nx > ncx + c.cfg.eps_eq) {
      c.worst.offer(nx - ncx, Witness{{x}, {{"N(x)", nx}, {"N_C(x)", ncx}}, "N(x) > N_C(x)"});
    }
  }
}

void law_cond_4_7(Ctx& c) {
  const auto& i = c.binary(Role::implication);
  UnaryFunction ni = section_at_zero(i);
  const auto xs = pair_points(c.cfg, ni.breakpoints);
  const auto ys = uniform_grid(c.cfg.grid2_n);
  std::vector<double> nv(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) nv[k] = ni(xs[k]);
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return nv[a] < nv[b]; });
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && nv[order[end]] - nv[order[start]] <= c.cfg.eps_eq) ++end;
    if (end - start > 1) {
      std::vector<std::size_t> group(order.begin() + start, order.begin() + end);
      std::sort(group.begin(), group.end());
      double x1 = xs[group.front()];
      std::vector<double> row(ys.size());
      for (std::size_t t = 0; t < ys.size(); ++t) row[t] = i(x1, ys[t]);
      for (std::size_t m = 1; m < group.size(); ++m) {
        double x2 = xs[group[m]];
        for (std::size_t t = 0; t < ys.size(); ++t) {
          double v = i(x2, ys[t]);
          double d = std::abs(v - row[t]);
          if (d > c.cfg.eps_eq) {
            c.worst.offer(d, Witness{{x1, x2, ys[t]},
                                     {{"N_I(x1)", nv[group.front()]}, {"N_I(x2)", nv[group[m]]},
                                      {"I(x1,y)", row[t]}, {"I(x2,y)", v}},
                                     "N_I(x1) = N_I(x2) but I(x1,y) != I(x2,y)"});
          }
        }
      }
    }
    start = end;
  }
}

void law_neutral(Ctx& c, bool left) {
  const auto& d = c.binary(Role::disjunction);
  for (double t : uniform_grid(c.cfg.grid_n)) {
    double v = left ? d(0.0, t) : d(t, 0.0);
    double e = std::abs(v - t);
    if (e > c.cfg.eps_eq) {
      c.worst.offer(e, left ? Witness{{0.0, t}, {{"D(0,y)", v}}, "D(0,y) != y"}
                            : Witness{{t, 0.0}, {{"D(x,0)", v}}, "D(x,0) != x"});
    }
  }
}

void law_zero_set(Ctx& c, bool biconditional) {
  const auto& k = c.binary(Role::conjunction);
  InducedNegation nc = natural_negation_of_conjunction(k, c.cfg);
  const auto g = uniform_grid(c.cfg.grid2_n);
  for (double x : g) {
    double n = nc(x);
    for (double y : g) {
      double v = k(x, y);
      bool zero = is_zero(v, c.cfg);
      auto w = [&](const char* note) {
        return Witness{{x, y}, {{"C(x,y)", v}, {"N_C(x)", n}}, note};
      };
      if (zero && y > n) c.worst.offer(y - n, w("C(x,y) = 0 but y > N_C(x)"));
      if (biconditional) {
        if (!zero && y <= n) c.worst.offer(v, w("N_C(x) >= y but C(x,y) != 0"));
      } else if (!zero && y < n) {
        c.worst.offer(v, w("y < N_C(x) but C(x,y) != 0"));
      }
    }
  }
}

void law_one_set(Ctx& c, bool biconditional) {
  const auto& d = c.binary(Role::disjunction);
  InducedNegation nd = natural_negation_of_disjunction(d, c.cfg);
  const auto g = uniform_grid(c.cfg.grid2_n);
  for (double x : g) {
    double n = nd(x);
    for (double y : g) {
      double v = d(x, y);
      bool one = is_one(v, c.cfg);
      auto w = [&](const char* note) {
        return Witness{{x, y}, {{"D(x,y)", v}, {"N_D(x)", n}}, note};
      };
      if (one && y < n) c.worst.offer(n - y, w("D(x,y) = 1 but y < N_D(x)"));
      if (biconditional) {
        if (!one && y >= n) c.worst.offer(1.0 - v, w("N_D(x) <= y but D(x,y) != 1"));
      } else if (!one && y > n) {
        c.worst.offer(1.0 - v, w("y > N_D(x) but D(x,y) != 1"));
      }
    }
  }
}

void adopt(Ctx& c, CheckResult sub) {
  if (!sub.holds()) {
    c.r.verdict = sub.verdict;
    c.r.witness = sub.witness;
  }
  for (auto& [k, v] : sub.details) c.r.details[k] = v;
}

using LawFn = std::function<void(Ctx&)>;

const std::map<std::string, LawFn, std::less<>>& registry() {
  static const std::map<std::string, LawFn, std::less<>> laws = {
      {"FI", law_fi},
      {"NP", law_np},
      {"EP", law_ep},
      {"IP", law_ip},
      {"OP", law_op},
      {"CP", [](Ctx& c) { law_cp(c, Contraposition::full); }},
      {"L-CP", [](Ctx& c) { law_cp(c, Contraposition::left); }},
      {"R-CP", [](Ctx& c) { law_cp(c, Contraposition::right); }},
      {"LEM1", [](Ctx& c) { law_lem(c, true, false); }},
      {"LEM2", [](Ctx& c) { law_lem(c, false, true); }},
      {"LEM", [](Ctx& c) { law_lem(c, true, true); }},
      {"LEM_INEQ", law_lem_ineq},
      {"LC1", [](Ctx& c) { law_lc(c, true, false); }},
      {"LC2", [](Ctx& c) { law_lc(c, false, true); }},
      {"LC", [](Ctx& c) { law_lc(c, true, true); }},
      {"LC_INEQ", law_lc_ineq},
      {"COND_4_7", law_cond_4_7},
      {"NEUTRAL_0", [](Ctx& c) { law_neutral(c, true); }},
      {"RIGHT_NEUTRAL_0", [](Ctx& c) { law_neutral(c, false); }},
      {"ZERO_SET_BICONDITIONAL", [](Ctx& c) { law_zero_set(c, true); }},
      {"ZERO_SET_ONE_SIDED", [](Ctx& c) { law_zero_set(c, false); }},
      {"ONE_SET_BICONDITIONAL", [](Ctx& c) { law_one_set(c, true); }},
      {"ONE_SET_ONE_SIDED", [](Ctx& c) { law_one_set(c, false); }},
      {"COMMUTATIVE", [](Ctx& c) { adopt(c, check_commutativity(c.binary(Role::binary), c.cfg)); }},
      {"ASSOCIATIVE", [](Ctx& c) { adopt(c, check_associativity(c.binary(Role::binary), c.cfg)); }},
      {"LEFT_CONTINUOUS",
       [](Ctx& c) {
         adopt(c, check_one_sided_continuity(c.binary(Role::binary), Side::left, c.cfg));
       }},
      {"RIGHT_CONTINUOUS",
       [](Ctx& c) {
         adopt(c, check_one_sided_continuity(c.binary(Role::binary), Side::right, c.cfg));
       }},
      {"NEGATION", [](Ctx& c) { adopt(c, validate_negation(c.negation(), c.cfg)); }},
      {"CONTINUOUS_2D", [](Ctx& c) { adopt(c, continuity_2d_result(c.binary(Role::binary), c.cfg)); }},
  };
  return laws;
}

}  // namespace

std::vector<std::string> Operands::names() const {
  std::vector<std::string> out;
  for (const auto* b : {&conjunction, &disjunction, &implication}) {
    if (*b) out.push_back((*b)->name);
  }
  for (const auto* n : {&negation, &negation2}) {
    if (*n) out.push_back((*n)->name);
  }
  return out;
}

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return ids;
}

CheckResult check_law(std::string_view law_id, const Operands& ops, const NumericConfig& cfg) {
  const auto& reg = registry();
  auto it = reg.find(law_id);
  if (it == reg.end()) throw UnknownName("unknown law '" + std::string(law_id) + "'");
  CheckResult r;
  r.law_id = std::string(law_id);
  r.operands = ops.names();
  r.config = cfg;
  Ctx c{law_id, ops, cfg, r, {}};
  it->second(c);
  c.finish();
  return r;
}

}  // namespace fuzcon
