#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzcon/catalog.hpp"
#include "fuzcon/continuity.hpp"

namespace fuzcon {

namespace {

CheckResult start(std::string law, const std::string& operand, const NumericConfig& cfg) {
  CheckResult r;
  r.law_id = std::move(law);
  r.operands = {operand};
  r.config = cfg;
  return r;
}

void fail(CheckResult& r, Witness w) {
  if (r.verdict == Verdict::holds) {
    r.verdict = Verdict::fails;
    r.witness = std::move(w);
  }
}

std::string verdict_word(bool ok) { return ok ? "holds" : "fails"; }

}  // namespace

CheckResult check_commutativity(const BinaryConnective& b, const NumericConfig& cfg) {
  CheckResult r = start("COMMUTATIVE", b.name, cfg);
  auto g = uniform_grid(cfg.grid2_n);
  double worst = 0.0;
  std::optional<Witness> w;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      double a = b(g[i], g[j]);
      double c = b(g[j], g[i]);
      double d = std::abs(a - c);
      if (d > cfg.eps_eq && d > worst) {
        worst = d;
        w = Witness{{g[i], g[j]}, {{"b(x,y)", a}, {"b(y,x)", c}}, "b(x,y) != b(y,x)"};
      }
    }
  }
  if (w) fail(r, *w);
  return r;
}

CheckResult check_associativity(const BinaryConnective& b, const NumericConfig& cfg) {
  CheckResult r = start("ASSOCIATIVE", b.name, cfg);
  auto g = uniform_grid(cfg.ep_n);
  double worst = 0.0;
  std::optional<Witness> w;
  for (double x : g) {
    for (double y : g) {
      double xy = b(x, y);
      for (double z : g) {
        double lhs = b(xy, z);
        double rhs = b(x, b(y, z));
        double d = std::abs(lhs - rhs);
        if (d > cfg.eps_eq && d > worst) {
          worst = d;
          w = Witness{{x, y, z}, {{"b(b(x,y),z)", lhs}, {"b(x,b(y,z))", rhs}},
                      "b(b(x,y),z) != b(x,b(y,z))"};
        }
      }
    }
  }
  if (w) fail(r, *w);
  return r;
}

CheckResult check_neutral(const BinaryConnective& b, const NeutralElement& e,
                          const NumericConfig& cfg) {
  CheckResult r = start("NEUTRAL_ELEMENT", b.name, cfg);
  r.details["value"] = std::to_string(e.value);
  bool left = e.side != NeutralElement::Side::right;
  bool right = e.side != NeutralElement::Side::left;
  for (double t : uniform_grid(cfg.grid2_n)) {
    if (left) {
      double v = b(e.value, t);
      if (std::abs(v - t) > cfg.eps_eq) {
        fail(r, Witness{{e.value, t}, {{"b(e,y)", v}, {"y", t}}, "left neutral element fails"});
      }
    }
    if (right) {
      double v = b(t, e.value);
      if (std::abs(v - t) > cfg.eps_eq) {
        fail(r, Witness{{t, e.value}, {{"b(x,e)", v}, {"x", t}}, "right neutral element fails"});
      }
    }
  }
  return r;
}

CheckResult check_one_sided_continuity(const BinaryConnective& b, Side side,
                                       const NumericConfig& cfg) {
  CheckResult r = start(side == Side::left ? "LEFT_CONTINUOUS" : "RIGHT_CONTINUOUS", b.name, cfg);
  r.details["caveat"] = "numerical verdict at resolution (grid2_n, delta_jump, tau_jump)";
  const auto lines = uniform_grid(65);
  const auto base = uniform_grid(cfg.grid2_n);
  double worst = 0.0;
  std::optional<Witness> w;
  for (Axis fixed : {Axis::x, Axis::y}) {
    for (double v : lines) {
      auto points = merge_points(base, b.section_breakpoints(fixed, v));
      std::function<double(double)> f;
      if (fixed == Axis::x) {
        f = [&](double t) { return b(v, t); };
      } else {
        f = [&](double t) { return b(t, v); };
      }
      for (double p : points) {
        double j = one_sided_jump(f, p, side, cfg);
        if (j > cfg.tau_jump && j > worst) {
          worst = j;
          double q = side == Side::left ? p - cfg.delta_jump.back() : p + cfg.delta_jump.back();
          std::vector<double> pt = fixed == Axis::x ? std::vector<double>{v, p}
                                                    : std::vector<double>{p, v};
          w = Witness{pt,
                      {{"jump", j}, {"value", f(p)}, {"near_value", f(q)}},
                      std::string("one-sided jump while varying ") +
                          (fixed == Axis::x ? "y" : "x")};
        }
      }
    }
  }
  if (w) fail(r, *w);
  return r;
}

CheckResult validate_connective(const BinaryConnective& b, const NumericConfig& cfg) {
  CheckResult r = start("VALID_" + to_string(b.kind), b.name, cfg);
  auto exact = [&](double x, double y, double want, const char* what) {
    double v = b(x, y);
    if (v != want) {
      fail(r, Witness{{x, y}, {{"value", v}, {"expected", want}}, what});
    }
  };
  switch (b.kind) {
    case Kind::conjunction:
      exact(1, 1, 1, "boundary C(1,1)=1");
      exact(0, 0, 0, "boundary C(0,0)=0");
      exact(1, 0, 0, "boundary C(1,0)=0");
      exact(0, 1, 0, "boundary C(0,1)=0");
      break;
    case Kind::disjunction:
      exact(0, 0, 0, "boundary D(0,0)=0");
      exact(1, 1, 1, "boundary D(1,1)=1");
      exact(1, 0, 1, "boundary D(1,0)=1");
      exact(0, 1, 1, "boundary D(0,1)=1");
      break;
    case Kind::implication:
      exact(0, 0, 1, "(I3) I(0,0)=1");
      exact(1, 1, 1, "(I4) I(1,1)=1");
      exact(1, 0, 0, "(I5) I(1,0)=0");
      break;
    case Kind::raw:
      break;
  }

  const auto g = uniform_grid(cfg.grid2_n);
  const std::size_t n = g.size();
  std::vector<double> v(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double val = b(g[i], g[j]);
      v[i * n + j] = val;
      if (!(val >= 0.0 && val <= 1.0)) {
        fail(r, Witness{{g[i], g[j]}, {{"value", val}}, "value outside [0,1]"});
      }
    }
  }
  // Axis-wise monotonicity: +1 non-decreasing, -1 non-increasing.
  int sx = 0, sy = 0;
  if (b.kind == Kind::conjunction || b.kind == Kind::disjunction) {
    sx = sy = 1;
  } else if (b.kind == Kind::implication) {
    sx = -1;
    sy = 1;
  }
  for (std::size_t i = 0; i < n && (sx || sy); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sx && i + 1 < n) {
        double a = v[i * n + j], c = v[(i + 1) * n + j];
        if (sx * (c - a) < -cfg.eps_eq) {
          fail(r, Witness{{g[i], g[j], g[i + 1], g[j]}, {{"b(x1,y)", a}, {"b(x2,y)", c}},
                          sx > 0 ? "not non-decreasing in x" : "(I1) not non-increasing in x"});
        }
      }
      if (sy && j + 1 < n) {
        double a = v[i * n + j], c = v[i * n + j + 1];
        if (c - a < -cfg.eps_eq) {
          fail(r, Witness{{g[i], g[j], g[i], g[j + 1]}, {{"b(x,y1)", a}, {"b(x,y2)", c}},
                          b.kind == Kind::implication ? "(I2) not non-decreasing in y"
                                                      : "not non-decreasing in y"});
        }
      }
    }
  }
  if (b.kind == Kind::conjunction || b.kind == Kind::disjunction) {
    double absorbing = b.kind == Kind::conjunction ? 0.0 : 1.0;
    for (double t : g) {
      double a = b(t, absorbing), c = b(absorbing, t);
      if (a != absorbing || c != absorbing) {
        fail(r, Witness{{t, absorbing}, {{"b(t,a)", a}, {"b(a,t)", c}},
                        "absorbing element violated"});
      }
    }
  }

  auto measure = [&](const std::string& flag, std::optional<bool> declared, CheckResult m) {
    r.details[flag] = verdict_word(m.holds());
    if (declared && *declared != m.holds()) {
      Witness w = m.witness.value_or(Witness{{}, {}, ""});
      w.note = "declared " + flag + "=" + (*declared ? "true" : "false") +
               " but measured " + verdict_word(m.holds()) +
               (w.note.empty() ? "" : ": " + w.note);
      fail(r, w);
    }
  };
  const Flags& f = b.flags;
  if (f.commutative) measure("commutative", f.commutative, check_commutativity(b, cfg));
  if (f.associative) measure("associative", f.associative, check_associativity(b, cfg));
  if (f.left_continuous) {
    measure("left_continuous", f.left_continuous, check_one_sided_continuity(b, Side::left, cfg));
  }
  if (f.right_continuous) {
    measure("right_continuous", f.right_continuous,
            check_one_sided_continuity(b, Side::right, cfg));
  }
  if (f.neutral) measure("neutral_element", true, check_neutral(b, *f.neutral, cfg));
  return r;
}

CheckResult validate_negation(const UnaryFunction& f, const NumericConfig& cfg) {
  CheckResult r = start("NEGATION", f.name, cfg);
  double at0 = f(0.0), at1 = f(1.0);
  if (at0 != 1.0) fail(r, Witness{{0.0}, {{"N(0)", at0}}, "(N1) N(0) != 1"});
  if (at1 != 0.0) fail(r, Witness{{1.0}, {{"N(1)", at1}}, "(N1) N(1) != 0"});
  auto pts = merge_points(uniform_grid(cfg.grid_n), f.breakpoints);
  double prev = f(pts.front());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    double cur = f(pts[i]);
    if (!(cur >= 0.0 && cur <= 1.0)) {
      fail(r, Witness{{pts[i]}, {{"N(x)", cur}}, "value outside [0,1]"});
    }
    if (cur > prev + cfg.eps_eq) {
      fail(r, Witness{{pts[i - 1], pts[i]}, {{"N(x1)", prev}, {"N(x2)", cur}},
                      "(N2) N is not non-increasing"});
    }
    prev = cur;
  }
  return r;
}

}  // namespace fuzcon
