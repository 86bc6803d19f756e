#include "fuzcon/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <array>

namespace fuzcon {

namespace {

double extrapolate(const std::vector<double>& d) {
  if (d.size() < 3) return d.back();
  double d1 = d[d.size() - 3];
  double d2 = d[d.size() - 2];
  double d3 = d[d.size() - 1];
  double a = d1 - d2;
  double b = d2 - d3;
  if (std::abs(b) <= 1e-15 || std::abs(a) <= 1e-15) return d3;
  double r = a / b;
  if (r <= 1.0 + 1e-9) return d3;
  return std::max(0.0, d3 - b / (r - 1.0));
}

struct JumpCell {
  double a, b, fa, fb;
  double change() const { return std::abs(fb - fa); }
};

// Splits c into 8 and descends into pieces whose increment exceeds the
// smaller neighbouring increment by more than tau.
void refine(const std::function<double(double)>& f, const JumpCell& c, double tau, int& budget,
            std::optional<JumpCell>& hit) {
  constexpr int k = 8;
  double m = 0.5 * (c.a + c.b);
  if (m == c.a || m == c.b) {
    if (c.change() > tau && (!hit || c.change() > hit->change())) hit = c;
    return;
  }
  if (budget <= 0) return;
  std::array<double, k + 1> x, y;
  x[0] = c.a;
  y[0] = c.fa;
  x[k] = c.b;
  y[k] = c.fb;
  for (int i = 1; i < k; ++i) {
    x[i] = c.a + (c.b - c.a) * i / k;
    y[i] = f(x[i]);
  }
  budget -= k - 1;
  std::array<double, k> d;
  for (int i = 0; i < k; ++i) d[i] = std::abs(y[i + 1] - y[i]);
  for (int i = 0; i < k; ++i) {
    double before = i > 0 ? d[i - 1] : 0.0;
    double after = i + 1 < k ? d[i + 1] : 0.0;
    if (d[i] <= tau || d[i] - std::min(before, after) <= tau) continue;
    refine(f, {x[i], x[i + 1], y[i], y[i + 1]}, tau, budget, hit);
  }
}

void keep_worst(std::optional<JumpWitness>& slot, const JumpWitness& w) {
  if (!slot || w.magnitude > slot->magnitude) slot = w;
}

}  // namespace

double one_sided_jump(const std::function<double(double)>& f, double p, Side side,
                      const NumericConfig& cfg) {
  return one_sided_jump(f, p, f(p), side, cfg);
}

double one_sided_jump(const std::function<double(double)>& f, double p, double fp, Side side,
                      const NumericConfig& cfg) {
  double sign = side == Side::left ? -1.0 : 1.0;
  const std::size_t n = cfg.delta_jump.size();
  for (double delta : cfg.delta_jump) {
    double q = p + sign * delta;
    if (q < 0.0 || q > 1.0) return 0.0;
  }
  std::vector<double> d(n);
  d[n - 1] = std::abs(f(p + sign * cfg.delta_jump[n - 1]) - fp);
  if (d[n - 1] <= cfg.tau_jump) return d[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = std::abs(f(p + sign * cfg.delta_jump[i]) - fp);
  double est = extrapolate(d);
  const std::size_t k = d.size();
  if (k >= 2) {
    double d2 = cfg.delta_jump[k - 2], d3 = cfg.delta_jump[k - 1];
    double lin = d[k - 1] - (d[k - 2] - d[k - 1]) * d3 / (d2 - d3);
    est = std::min(est, std::max(0.0, lin));
  }
  if (est > cfg.tau_jump) {
    double delta = cfg.delta_jump.back();
    for (int k = 0; k < 6; ++k) {
      delta *= 0.1;
      double q = p + sign * delta;
      if (q == p) break;
      double dk = std::abs(f(q) - fp);
      if (dk <= cfg.tau_jump) return dk;
    }
  }
  return est;
}

ContinuityReport scan_continuity(const std::function<double(double)>& f,
                                 const std::vector<double>& points, const NumericConfig& cfg) {
  ContinuityReport rep;
  const double smallest = cfg.delta_jump.back();
  std::vector<double> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) v[i] = f(points[i]);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double p = points[i];
    for (Side side : {Side::left, Side::right}) {
      double j = one_sided_jump(f, p, v[i], side, cfg);
      if (j > cfg.tau_jump) {
        double q = side == Side::left ? p - smallest : p + smallest;
        JumpWitness w{p, side, j, v[i], f(q)};
        if (side == Side::left) {
          rep.left_continuous = false;
          keep_worst(rep.worst_left, w);
        } else {
          rep.right_continuous = false;
          keep_worst(rep.worst_right, w);
        }
        keep_worst(rep.worst, w);
      }
    }
  }

  // Jumps strictly between sample points.
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    double di = std::abs(v[i + 1] - v[i]);
    if (di <= cfg.tau_jump) continue;
    double before = i > 0 ? std::abs(v[i] - v[i - 1]) : 0.0;
    double after = i + 2 < points.size() ? std::abs(v[i + 2] - v[i + 1]) : 0.0;
    if (di - std::min(before, after) <= cfg.tau_jump) continue;
    std::optional<JumpCell> hit;
    int budget = 20000;
    refine(f, {points[i], points[i + 1], v[i], v[i + 1]}, cfg.tau_jump, budget, hit);
    if (hit && hit->a != points[i] && hit->b != points[i + 1]) {
      rep.continuous = false;
      keep_worst(rep.worst, JumpWitness{hit->b, Side::unknown, hit->change(), hit->fb, hit->fa});
    }
  }
  rep.continuous = rep.continuous && rep.left_continuous && rep.right_continuous;
  return rep;
}

}  // namespace fuzcon
