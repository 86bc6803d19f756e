#include <algorithm>
#include <cmath>

#include "fuzcon/analysis.hpp"

namespace fuzcon {

namespace {

Witness jump_witness(const JumpWitness& j) {
  const char* side = j.side == Side::left ? "left" : j.side == Side::right ? "right" : "between samples";
  return Witness{{j.at},
                 {{"jump", j.magnitude}, {"value", j.value}, {"near_value", j.near_value}},
                 std::string("jump (") + side + ")"};
}

}  // namespace

bool NegationClassReport::consistent() const {
  if (strong.holds && !strict.holds) return false;
  if (strict.holds && !(strictly_decreasing.holds && continuous.holds)) return false;
  if (strict.holds != (strictly_decreasing.holds && continuous.holds)) return false;
  return true;
}

bool NegationClassReport::four_flags_agree() const {
  bool a = strictly_decreasing.holds;
  return continuous.holds == a && strict.holds == a && strong.holds == a;
}

NegationClassReport classify_negation(const UnaryFunction& n, const NumericConfig& cfg) {
  NegationClassReport rep;
  const auto pts = merge_points(uniform_grid(cfg.grid_n), n.breakpoints);
  std::vector<double> v(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) v[i] = n(pts[i]);

  double worst_plateau = -1.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double d = v[i] - v[i + 1];
    if (d < -cfg.eps_eq && rep.non_increasing.holds) {
      rep.non_increasing = {false, Witness{{pts[i], pts[i + 1]},
                                           {{"N(x1)", v[i]}, {"N(x2)", v[i + 1]}},
                                           "N increases"}};
    }
    if (d <= cfg.eps_eq) {
      // report the widest plateau run start
      double width = pts[i + 1] - pts[i];
      if (width > worst_plateau) {
        worst_plateau = width;
        rep.strictly_decreasing = {false, Witness{{pts[i], pts[i + 1]},
                                                  {{"N(x1)", v[i]}, {"N(x2)", v[i + 1]}},
                                                  "plateau: equal values at distinct points"}};
      }
    }
  }

  ContinuityReport c = scan_continuity(n.fn, pts, cfg);
  rep.continuous.holds = c.continuous;
  if (c.worst) rep.continuous.witness = jump_witness(*c.worst);
  rep.left_continuous.holds = c.left_continuous;
  if (c.worst_left) rep.left_continuous.witness = jump_witness(*c.worst_left);
  rep.right_continuous.holds = c.right_continuous;
  if (c.worst_right) rep.right_continuous.witness = jump_witness(*c.worst_right);

  rep.strict.holds = rep.strictly_decreasing.holds && rep.continuous.holds;
  if (!rep.strict.holds) {
    rep.strict.witness =
        !rep.strictly_decreasing.holds ? rep.strictly_decreasing.witness : rep.continuous.witness;
  }

  double worst = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double e = std::abs(n(v[i]) - pts[i]);
    if (e > worst) {
      worst = e;
      at = i;
    }
  }
  rep.max_involution_error = worst;
  if (worst > cfg.eps_eq) {
    rep.strong = {false, Witness{{pts[at]}, {{"N(x)", v[at]}, {"N(N(x))", n(v[at])}},
                                 "N(N(x)) != x"}};
  }
  return rep;
}

double sup_distance(const BinaryConnective& a, const BinaryConnective& b, int n,
                    std::vector<double>* argmax) {
  double worst = 0.0;
  const auto g = uniform_grid(n);
  for (double x : g) {
    for (double y : g) {
      double d = std::abs(a(x, y) - b(x, y));
      if (d > worst || (argmax && argmax->empty())) {
        worst = std::max(worst, d);
        if (argmax) *argmax = {x, y};
      }
    }
  }
  return worst;
}

Continuity2D detect_continuity_2d(const BinaryConnective& b, const NumericConfig& cfg) {
  Continuity2D out;
  const auto coarse = uniform_grid(65);
  const auto fine = uniform_grid(cfg.grid2_n);
  for (Axis fixed : {Axis::x, Axis::y}) {
    // Lines along grid values plus guard boundaries met by the coarse lines.
    std::vector<double> extra;
    Axis other = fixed == Axis::x ? Axis::y : Axis::x;
    for (double v : coarse) {
      auto bp = b.section_breakpoints(other, v);
      extra.insert(extra.end(), bp.begin(), bp.end());
    }
    extra = normalize_breakpoints(std::move(extra));
    if (extra.size() > 64) {
      std::vector<double> thinned;
      for (std::size_t i = 0; i < extra.size(); i += extra.size() / 64 + 1) thinned.push_back(extra[i]);
      extra = std::move(thinned);
    }
    for (double v : merge_points(coarse, extra)) {
      std::function<double(double)> f;
      if (fixed == Axis::x) {
        f = [&](double t) { return b(v, t); };
      } else {
        f = [&](double t) { return b(t, v); };
      }
      auto pts = merge_points(fine, b.section_breakpoints(fixed, v));
      ContinuityReport c = scan_continuity(f, pts, cfg);
      if (!c.continuous && c.worst && c.worst->magnitude > out.max_jump) {
        out.continuous = false;
        out.max_jump = c.worst->magnitude;
        out.location = fixed == Axis::x ? std::vector<double>{v, c.worst->at}
                                        : std::vector<double>{c.worst->at, v};
        out.varying = fixed == Axis::x ? Axis::y : Axis::x;
      }
    }
  }
  return out;
}

CheckResult continuity_2d_result(const BinaryConnective& b, const NumericConfig& cfg) {
  CheckResult r;
  r.law_id = "CONTINUOUS_2D";
  r.operands = {b.name};
  r.config = cfg;
  r.details["caveat"] = "numerical verdict at resolution (grid2_n, delta_jump, tau_jump)";
  Continuity2D c = detect_continuity_2d(b, cfg);
  r.details["max_jump"] = std::to_string(c.max_jump);
  if (!c.continuous) {
    r.verdict = Verdict::fails;
    r.witness = Witness{c.location, {{"jump", c.max_jump}},
                        std::string("jump while varying ") + (c.varying == Axis::x ? "x" : "y")};
  }
  return r;
}

}  // namespace fuzcon
