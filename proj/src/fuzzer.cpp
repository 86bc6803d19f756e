#include "fuzcon/fuzzer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <thread>

#include "fuzcon/analysis.hpp"
#include "fuzcon/errors.hpp"
#include "fuzcon/induction.hpp"

namespace fuzcon {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double MonotoneGridFunction::operator()(double x, double y) const {
  const double s = x * (m - 1), t = y * (m - 1);
  int i = std::min(static_cast<int>(s), m - 2);
  int j = std::min(static_cast<int>(t), m - 2);
  double fx = s - i, fy = t - j;
  double lo = at(i, j) + fy * (at(i, j + 1) - at(i, j));
  double hi = at(i + 1, j) + fy * (at(i + 1, j + 1) - at(i + 1, j));
  return lo + fx * (hi - lo);
}

bool MonotoneGridFunction::monotone() const {
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i + 1 < m && at(i + 1, j) < at(i, j)) return false;
      if (j + 1 < m && at(i, j + 1) < at(i, j)) return false;
    }
  }
  return true;
}

std::string to_string(Discontinuity d) {
  switch (d) {
    case Discontinuity::none: return "none";
    case Discontinuity::zero_rectangle: return "zero_rectangle";
    case Discontinuity::lift_rectangle: return "lift_rectangle";
    case Discontinuity::cut: return "cut";
  }
  return "?";
}

namespace {

// Conjunction-shaped grid: x = 0 / y = 0 lines at most theta, x = 1 / y = 1
// lines above theta away from the axes, (1,1) = 1.
std::vector<double> conjunction_grid(SplitMix64& rng, int m, double theta, bool symmetric) {
  std::vector<double> g(static_cast<std::size_t>(m) * m);
  auto v = [&](int i, int j) -> double& { return g[static_cast<std::size_t>(i) * m + j]; };
  // Trend theta * (x^p + y^q) crosses theta along a random decreasing curve.
  const double p = std::exp2(rng.uniform(-1.0, 1.0));
  const double q = std::exp2(rng.uniform(-1.0, 1.0));
  const double noise = rng.uniform(0.0, 0.4);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double u = rng.uniform();
      if (i == 0 || j == 0) {
        v(i, j) = theta * u;
      } else if (i == m - 1 || j == m - 1) {
        v(i, j) = theta + (1.0 - theta) * (0.5 * u + 0x1.0p-20);
      } else {
        double s = std::pow(double(i) / (m - 1), p) + std::pow(double(j) / (m - 1), q);
        double t = s <= 1.0 ? theta * s : theta + (1.0 - theta) * std::min(1.0, s - 1.0);
        v(i, j) = std::clamp(t + noise * (u - 0.5), 0.0, 1.0);
      }
    }
  }
  v(0, 0) = 0.0;
  v(m - 1, 0) = v(0, m - 1) = theta;
  v(m - 1, m - 1) = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i > 0) v(i, j) = std::max(v(i, j), v(i - 1, j));
      if (j > 0) v(i, j) = std::max(v(i, j), v(i, j - 1));
    }
  }
  if (symmetric) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        double a = 0.5 * (v(i, j) + v(j, i));
        v(i, j) = v(j, i) = a;
      }
    }
  }
  return g;
}

}  // namespace

GeneratedConnective generate_connective(std::uint64_t seed, const GeneratorParams& p) {
  if (p.m < 3) throw ConfigError("generator grid size m must be >= 3");
  if (!(p.theta >= 0.0 && p.theta < 1.0)) throw ConfigError("generator theta must be in [0,1)");
  SplitMix64 rng(seed);
  GeneratedConnective out;
  out.seed = seed;
  const int m = p.m;
  const bool sym = p.commutative;
  auto base = conjunction_grid(rng, m, p.theta, sym);

  out.grid.m = m;
  out.grid.kind = p.kind;
  if (p.kind == Kind::conjunction || p.kind == Kind::raw) {
    out.grid.values = base;
  } else {
    out.grid.values.resize(base.size());
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        out.grid.values[static_cast<std::size_t>(i) * m + j] =
            1.0 - base[static_cast<std::size_t>(m - 1 - i) * m + (m - 1 - j)];
      }
    }
  }

  if (rng.uniform() < p.discontinuity) {
    out.mode = static_cast<Discontinuity>(1 + static_cast<int>(rng.next() % 3));
    switch (out.mode) {
      case Discontinuity::zero_rectangle:
      case Discontinuity::lift_rectangle:
        out.mode_params = {rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9), rng.uniform(0.2, 1.0),
                           rng.uniform() < 0.5 ? 0.0 : 1.0};
        break;
      default:
        out.mode_params = {rng.uniform(0.1, 0.9), rng.uniform(0.05, 0.3),
                           rng.uniform() < 0.5 ? 0.0 : 1.0};
        break;
    }
  }

  // Conjunction-shaped evaluation on the base grid; other kinds are derived.
  MonotoneGridFunction cg{m, base, Kind::conjunction};
  const double theta = p.theta;
  const Discontinuity mode = out.mode;
  const std::vector<double> mp = out.mode_params;
  auto below = [](double v, double a, bool closed) { return closed ? v <= a : v < a; };
  auto above = [](double v, double a, bool closed) { return closed ? v >= a : v > a; };
  auto one = [=](double x, double y) {
    double v = std::max(0.0, (cg(x, y) - theta) / (1.0 - theta));
    switch (mode) {
      case Discontinuity::zero_rectangle: {
        bool closed = mp[3] != 0.0;
        bool in = below(x, mp[0], closed) && below(y, mp[1], closed);
        if (sym) in = in || (below(y, mp[0], closed) && below(x, mp[1], closed));
        if (in) v = 0.0;
        break;
      }
      case Discontinuity::lift_rectangle: {
        bool closed = mp[3] != 0.0;
        bool in = above(x, mp[0], closed) && above(y, mp[1], closed) && x > 0.0 && y > 0.0;
        if (sym) in = in || (above(y, mp[0], closed) && above(x, mp[1], closed) && x > 0.0 && y > 0.0);
        if (in) v = std::max(v, mp[2]);
        break;
      }
      case Discontinuity::cut: {
        bool closed = mp[2] != 0.0;
        bool in = below(x, mp[0], closed);
        if (sym) in = in || below(y, mp[0], closed);
        if (in) v = std::max(0.0, v - mp[1]);
        break;
      }
      case Discontinuity::none:
        break;
    }
    return v;
  };
  std::function<double(double, double)> conj;
  if (sym) {
    conj = [one](double x, double y) { return x <= y ? one(x, y) : one(y, x); };
  } else {
    conj = one;
  }

  BinaryConnective& b = out.connective;
  b.name = "fuzz_" + to_string(p.kind) + "_" + std::to_string(seed);
  b.kind = p.kind;
  b.provenance = "generated: seed " + std::to_string(seed) + ", m " + std::to_string(m) +
                 (sym ? ", commutative" : "") + ", mode " + to_string(mode);
  switch (p.kind) {
    case Kind::conjunction:
      b.fn = conj;
      break;
    case Kind::disjunction:
      b.fn = [conj](double x, double y) {
        if (x == 1.0 || y == 1.0) return 1.0;
        return 1.0 - conj(1.0 - x, 1.0 - y);
      };
      break;
    case Kind::implication:
      b.fn = [conj](double x, double y) {
        if (x == 0.0 || y == 1.0) return 1.0;
        return 1.0 - conj(x, 1.0 - y);
      };
      break;
    case Kind::raw:
      b.fn = cg;
      break;
  }
  std::vector<double> knots = uniform_grid(m);
  for (std::size_t k = 0; k + 1 < mp.size() && k < 2; ++k) knots.push_back(mp[k]);
  if (p.kind != Kind::conjunction && p.kind != Kind::raw) {
    for (double& k : knots) k = 1.0 - k;
  }
  std::sort(knots.begin(), knots.end());
  b.sections = [knots](Axis, double) { return knots; };
  if (sym && p.kind != Kind::implication && p.kind != Kind::raw) b.flags.commutative = true;
  return out;
}

BinaryConnective random_monotone_connective(std::uint64_t seed, int m, Kind kind,
                                            bool commutative) {
  GeneratorParams p;
  p.m = m;
  p.kind = kind;
  p.commutative = commutative;
  return generate_connective(seed, p).connective;
}

CheckResult run_target(std::string_view target, const GeneratedConnective& g,
                       const NumericConfig& cfg) {
  const BinaryConnective& b = g.connective;
  if (target == "THM_3_1" || target == "THM_3_2") {
    Kind want = target == "THM_3_1" ? Kind::conjunction : Kind::disjunction;
    if (b.kind != want) throw UnknownTarget(std::string(target) + " needs generated " + to_string(want) + "s");
    CheckResult r;
    r.law_id = std::string(target) + "_EQUIVALENCE";
    r.operands = {b.name};
    r.config = cfg;
    InducedNegation n = natural_negation(b, cfg);
    if (!validate_negation(n.function, cfg).holds()) {
      r.verdict = Verdict::precondition_failed;
      r.details["missing"] = "induced map is a fuzzy negation";
      return r;
    }
    NegationClassReport c = classify_negation(n.function, cfg);
    auto w = [](bool v) { return v ? 1.0 : 0.0; };
    r.details["strictly_decreasing"] = c.strictly_decreasing.holds ? "holds" : "fails";
    r.details["continuous"] = c.continuous.holds ? "holds" : "fails";
    r.details["strict"] = c.strict.holds ? "holds" : "fails";
    r.details["strong"] = c.strong.holds ? "holds" : "fails";
    if (!c.four_flags_agree()) {
      r.verdict = Verdict::fails;
      std::vector<double> pt;
      if (c.continuous.witness) pt = c.continuous.witness->point;
      else if (c.strictly_decreasing.witness) pt = c.strictly_decreasing.witness->point;
      else if (c.strong.witness) pt = c.strong.witness->point;
      r.witness = Witness{pt,
                          {{"strictly_decreasing", w(c.strictly_decreasing.holds)},
                           {"continuous", w(c.continuous.holds)},
                           {"strict", w(c.strict.holds)},
                           {"strong", w(c.strong.holds)}},
                          "classification flags of the induced negation disagree"};
    }
    return r;
  }
  Operands ops;
  switch (b.kind) {
    case Kind::conjunction: ops.conjunction = b; break;
    case Kind::disjunction: ops.disjunction = b; break;
    default: ops.implication = b; break;
  }
  if (target == "LEM") {
    if (b.kind != Kind::disjunction) throw UnknownTarget("LEM needs generated disjunctions");
    InducedNegation n = natural_negation_of_disjunction(b, cfg);
    ops.negation = n.function;
    CheckResult lem = check_law("LEM", ops, cfg);
    CheckResult ineq = check_law("LEM_INEQ", ops, cfg);
    lem.details["LEM_INEQ"] = to_string(ineq.verdict);
    if (lem.fails() && !ineq.holds()) lem.verdict = Verdict::precondition_failed;
    return lem;
  }
  const auto& laws = law_ids();
  if (std::find(laws.begin(), laws.end(), target) != laws.end()) return check_law(target, ops, cfg);
  const auto& thms = theorem_ids();
  if (std::find(thms.begin(), thms.end(), target) != thms.end()) {
    return verify_theorem(target, ops, cfg);
  }
  throw UnknownTarget("unknown search target '" + std::string(target) + "'");
}

bool is_counterexample(std::string_view, const CheckResult& r) { return r.fails(); }

std::optional<Counterexample> search_counterexample(std::string_view target,
                                                    const SearchOptions& o) {
  const auto& laws = law_ids();
  const auto& thms = theorem_ids();
  bool known = target == "THM_3_1" || target == "THM_3_2" || target == "LEM" ||
               std::find(laws.begin(), laws.end(), target) != laws.end() ||
               std::find(thms.begin(), thms.end(), target) != thms.end();
  if (!known) throw UnknownTarget("unknown search target '" + std::string(target) + "'");
  if (o.budget <= 0) return std::nullopt;

  int threads = o.threads > 0 ? o.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, o.budget);
  std::atomic<int> next{0};
  std::atomic<int> best{o.budget};
  std::mutex mu;
  std::optional<Counterexample> found;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      int k = next.fetch_add(1);
      if (k >= o.budget || k >= best.load()) return;
      try {
        GeneratedConnective g = generate_connective(o.first_seed + k, o.generator);
        CheckResult r = run_target(target, g, o.config);
        if (is_counterexample(target, r)) {
          std::lock_guard lock(mu);
          if (k < best.load()) {
            best = k;
            found = Counterexample{g.seed, std::move(g), std::move(r)};
          }
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        best = -1;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return found;
}

void write_grid_csv(const MonotoneGridFunction& g, std::ostream& out) {
  out << "x,y,value\n" << std::setprecision(17);
  for (int i = 0; i < g.m; ++i) {
    for (int j = 0; j < g.m; ++j) {
      out << static_cast<double>(i) / (g.m - 1) << ',' << static_cast<double>(j) / (g.m - 1) << ','
          << g.at(i, j) << '\n';
    }
  }
}

void write_samples_csv(const BinaryConnective& b, int n, std::ostream& out) {
  out << "x,y,value\n" << std::setprecision(17);
  for (double x : uniform_grid(n)) {
    for (double y : uniform_grid(n)) out << x << ',' << y << ',' << b(x, y) << '\n';
  }
}

}  // namespace fuzcon
