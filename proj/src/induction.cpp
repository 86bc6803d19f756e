#include "fuzcon/induction.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "fuzcon/catalog.hpp"
#include "fuzcon/continuity.hpp"
#include "fuzcon/errors.hpp"

namespace fuzcon {

namespace {

/// Thread-safe point cache for functions defined by bisection.
class Memo {
 public:
  explicit Memo(std::function<double(double)> compute) : compute_(std::move(compute)) {}

  double operator()(double x) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(x); it != cache_.end()) return it->second;
    }
    double v = compute_(x);
    std::lock_guard lock(mu_);
    cache_.emplace(x, v);
    return v;
  }

 private:
  std::function<double(double)> compute_;
  std::mutex mu_;
  std::unordered_map<double, double> cache_;
};

/// Natural negation by bisection in t, cached per x. pred(x, .) holds on a
/// down-set (sup) or up-set (inf) that shrinks (sup) or grows (inf) as x
/// grows, so the brackets of cached neighbours bound the search at new x.
class NaturalMemo {
 public:
  enum class Mode { sup, inf };

  NaturalMemo(std::function<bool(double, double)> pred, Mode mode, int iters)
      : pred_(std::move(pred)), mode_(mode), iters_(iters) {}

  /// The sup (inf) of the set, or nullopt when it is empty.
  std::optional<double> operator()(double x) {
    std::optional<double> yes, no;
    {
      std::lock_guard lock(mu_);
      auto it = cache_.lower_bound(x);
      if (it != cache_.end() && it->first == x) return it->second.yes;
      const Bracket* above = it != cache_.end() ? &it->second : nullptr;
      const Bracket* below = it != cache_.begin() ? &std::prev(it)->second : nullptr;
      if (mode_ == Mode::sup) {
        if (above) yes = above->yes;
        if (below) no = below->no;
      } else {
        if (below) yes = below->yes;
        if (above) no = above->no;
      }
    }
    Bracket b = solve(x, yes, no);
    std::lock_guard lock(mu_);
    cache_.emplace(x, b);
    return b.yes;
  }

 private:
  struct Bracket {
    std::optional<double> yes;  // largest (sup) / smallest (inf) point known in the set
    std::optional<double> no;   // nearest point known outside the set
  };

  Bracket solve(double x, std::optional<double> yes, std::optional<double> no) const {
    const double inner = mode_ == Mode::sup ? 1.0 : 0.0;
    const double outer = 1.0 - inner;
    if (!no) {
      if (pred_(x, inner)) return {inner, std::nullopt};
      no = inner;
    }
    if (!yes) {
      if (!pred_(x, outer)) return {std::nullopt, outer};
      yes = outer;
    }
    double a = *yes, b = *no;
    for (int k = 0; k < iters_; ++k) {
      double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      (pred_(x, mid) ? a : b) = mid;
    }
    return {a, b};
  }

  std::function<bool(double, double)> pred_;
  Mode mode_;
  int iters_;
  std::mutex mu_;
  std::map<double, Bracket> cache_;
};

// Values within 8 ulps of 0 or 1 become the endpoint.
double snap(double v) {
  constexpr double tol = 8 * std::numeric_limits<double>::epsilon();
  if (v < tol) return 0.0;
  if (v > 1.0 - tol) return 1.0;
  return v;
}

std::function<double(double)> memoized(std::function<double(double)> compute) {
  auto memo = std::make_shared<Memo>(std::move(compute));
  return [memo](double x) { return (*memo)(x); };
}

// Boundary conditions and monotonicity on a coarse grid; the full check is
// validate_connective.
void require_validated(const BinaryConnective& b) {
  const auto g = uniform_grid(17);
  const bool conj = b.kind == Kind::conjunction;
  const double absorbing = conj ? 0.0 : 1.0;
  bool ok = conj ? (b(1, 1) == 1 && b(0, 0) == 0 && b(1, 0) == 0 && b(0, 1) == 0)
                 : (b(0, 0) == 0 && b(1, 1) == 1 && b(1, 0) == 1 && b(0, 1) == 1);
  for (std::size_t i = 0; ok && i < g.size(); ++i) {
    ok = b(g[i], absorbing) == absorbing && b(absorbing, g[i]) == absorbing;
    for (std::size_t j = 0; ok && j + 1 < g.size(); ++j) {
      ok = b(g[i], g[j + 1]) >= b(g[i], g[j]) && b(g[j + 1], g[i]) >= b(g[j], g[i]);
    }
  }
  if (!ok) {
    throw NotValidated("'" + b.name + "' is not a valid " + to_string(b.kind));
  }
}

}  // namespace

std::optional<double> sup_of_down_set(const std::function<bool(double)>& pred, int iters) {
  if (pred(1.0)) return 1.0;
  if (!pred(0.0)) return std::nullopt;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < iters; ++k) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::optional<double> inf_of_up_set(const std::function<bool(double)>& pred, int iters) {
  if (pred(0.0)) return 0.0;
  if (!pred(1.0)) return std::nullopt;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < iters; ++k) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

InducedNegation natural_negation_of_conjunction(const BinaryConnective& c,
                                                const NumericConfig& cfg) {
  if (c.kind != Kind::conjunction) {
    throw KindMismatch("'" + c.name + "' is a " + to_string(c.kind) + ", not a conjunction");
  }
  require_validated(c);
  const double eps = cfg.eps_zero;
  const int iters = cfg.bisect_iters;
  auto memo = std::make_shared<NaturalMemo>(
      [fn = c.fn, eps](double x, double t) { return fn(x, t) <= eps; }, NaturalMemo::Mode::sup,
      iters);
  auto compute = [memo](double x) {
    auto s = (*memo)(x);
    if (!s) throw Error("zero set of C(x,.) is empty; the absorbing element is violated");
    return snap(*s);
  };
  InducedNegation n;
  n.source = c.name;
  n.function.name = "N_C(" + c.name + ")";
  n.function.fn = compute;
  n.function.provenance = "natural negation of " + c.name;
  n.is_negation = std::abs(n.function(1.0)) <= cfg.eps_eq;
  return n;
}

InducedNegation natural_negation_of_disjunction(const BinaryConnective& d,
                                                const NumericConfig& cfg) {
  if (d.kind != Kind::disjunction) {
    throw KindMismatch("'" + d.name + "' is a " + to_string(d.kind) + ", not a disjunction");
  }
  require_validated(d);
  const double eps = cfg.eps_one;
  const int iters = cfg.bisect_iters;
  auto memo = std::make_shared<NaturalMemo>(
      [fn = d.fn, eps](double x, double t) { return fn(x, t) >= 1.0 - eps; },
      NaturalMemo::Mode::inf, iters);
  auto compute = [memo](double x) {
    auto s = (*memo)(x);
    if (!s) throw Error("one set of D(x,.) is empty; the absorbing element is violated");
    return snap(*s);
  };
  InducedNegation n;
  n.source = d.name;
  n.function.name = "N_D(" + d.name + ")";
  n.function.fn = compute;
  n.function.provenance = "natural negation of " + d.name;
  n.is_negation = std::abs(n.function(0.0) - 1.0) <= cfg.eps_eq;
  return n;
}

InducedNegation natural_negation(const BinaryConnective& b, const NumericConfig& cfg) {
  if (b.kind == Kind::conjunction) return natural_negation_of_conjunction(b, cfg);
  if (b.kind == Kind::disjunction) return natural_negation_of_disjunction(b, cfg);
  throw KindMismatch("'" + b.name + "' is neither a conjunction nor a disjunction");
}

UnaryFunction pseudo_inverse(const UnaryFunction& f, const NumericConfig& cfg) {
  const auto pts = merge_points(uniform_grid(cfg.grid_n), f.breakpoints);
  const double f0 = f(0.0), f1 = f(1.0);
  if (f0 == f1) throw ConstantFunction("'" + f.name + "' has f(0) = f(1)");
  const double dir = f1 > f0 ? 1.0 : -1.0;
  double prev = f0;
  for (double p : pts) {
    double v = f(p);
    if (dir * (v - prev) < -cfg.eps_eq) {
      throw NotMonotone("'" + f.name + "' is not monotone near x = " + std::to_string(p));
    }
    prev = v;
  }
  const int iters = cfg.bisect_iters;
  auto compute = [f, dir, iters](double y) {
    auto s = sup_of_down_set([&](double x) { return (f(x) - y) * dir < 0.0; }, iters);
    return s.value_or(0.0);
  };
  UnaryFunction g;
  g.name = "pinv(" + f.name + ")";
  g.fn = memoized(compute);
  std::vector<double> bps;
  for (double b : f.breakpoints) {
    for (double q : {b - 1e-9, b, b + 1e-9}) {
      if (q >= 0.0 && q <= 1.0) bps.push_back(f(q));
    }
  }
  g.breakpoints = normalize_breakpoints(std::move(bps));
  g.provenance = "pseudo-inverse of " + f.name;
  return g;
}

bool is_continuous(const UnaryFunction& f, const NumericConfig& cfg) {
  auto pts = merge_points(uniform_grid(cfg.grid_n), f.breakpoints);
  return scan_continuity(f.fn, pts, cfg).continuous;
}

UnaryFunction aleph(const UnaryFunction& n, const NumericConfig& cfg) {
  CheckResult valid = validate_negation(n, cfg);
  if (!valid.holds()) {
    throw NotContinuousNegation("'" + n.name + "' is not a fuzzy negation: " +
                                valid.witness->note);
  }
  if (!is_continuous(n, cfg)) {
    throw NotContinuousNegation("'" + n.name + "' is not continuous");
  }
  UnaryFunction inv = pseudo_inverse(n, cfg);
  UnaryFunction a;
  a.name = "aleph(" + n.name + ")";
  a.fn = [inv = inv.fn](double x) { return x == 0.0 ? 1.0 : inv(x); };
  a.breakpoints = inv.breakpoints;
  a.provenance = "pseudo-inverse of " + n.name + " patched to 1 at 0";
  return a;
}

BinaryConnective implication_from_dn(const BinaryConnective& d, const UnaryFunction& n,
                                     const NumericConfig& cfg) {
  if (d.kind != Kind::disjunction) {
    throw KindMismatch("'" + d.name + "' is a " + to_string(d.kind) + ", not a disjunction");
  }
  require_validated(d);
  CheckResult valid = validate_negation(n, cfg);
  if (!valid.holds()) {
    throw InvalidNegation("'" + n.name + "' is not a fuzzy negation: " + valid.witness->note);
  }
  BinaryConnective i;
  i.name = "I(" + d.name + "," + n.name + ")";
  i.kind = Kind::implication;
  i.fn = [d = d.fn, n = n.fn](double x, double y) { return d(n(x), y); };
  i.sections = [d, n](Axis fixed, double v) {
    if (fixed == Axis::x) return d.section_breakpoints(Axis::x, n(v));
    return n.breakpoints;
  };
  i.provenance = "(D,N)-implication of " + d.name + " and " + n.name;
  // Composition of a disjunction with a negation is always an implication.
  for (double x : uniform_grid(9)) {
    for (double y : uniform_grid(9)) {
      double v = i(x, y);
      if (!(v >= 0.0 && v <= 1.0)) throw AxiomsFailed("composed implication leaves [0,1]");
    }
  }
  if (i(0, 0) != 1 || i(1, 1) != 1 || i(1, 0) != 0) {
    throw AxiomsFailed("composed implication violates (I3)-(I5)");
  }
  return i;
}

UnaryFunction section_at_zero(const BinaryConnective& f) {
  UnaryFunction n;
  n.name = "N_F(" + f.name + ")";
  n.fn = [fn = f.fn](double x) { return fn(x, 0.0); };
  n.breakpoints = f.section_breakpoints(Axis::y, 0.0);
  n.provenance = "x -> " + f.name + "(x,0)";
  return n;
}

UnaryFunction negation_of_implication(const BinaryConnective& i, const NumericConfig& cfg) {
  if (i(0, 0) != 1.0) throw AxiomsFailed("(I3) fails for '" + i.name + "'");
  if (i(1, 0) != 0.0) throw AxiomsFailed("(I5) fails for '" + i.name + "'");
  const auto g = uniform_grid(cfg.grid2_n);
  for (double y : g) {
    double prev = i(0.0, y);
    for (std::size_t k = 1; k < g.size(); ++k) {
      double cur = i(g[k], y);
      if (cur > prev + cfg.eps_eq) {
        throw AxiomsFailed("(I1) fails for '" + i.name + "' at x = " + std::to_string(g[k]) +
                           ", y = " + std::to_string(y));
      }
      prev = cur;
    }
  }
  UnaryFunction n = section_at_zero(i);
  n.name = "N_I(" + i.name + ")";
  return n;
}

BinaryConnective disjunction_from_implication(const BinaryConnective& i, const UnaryFunction& n,
                                              const NumericConfig& cfg) {
  UnaryFunction a = aleph(n, cfg);
  BinaryConnective d;
  d.name = "D_I(" + i.name + "," + n.name + ")";
  d.kind = Kind::disjunction;
  d.fn = [i = i.fn, a = a.fn](double x, double y) { return i(a(x), y); };
  d.sections = [i, a](Axis fixed, double v) {
    if (fixed == Axis::x) return i.section_breakpoints(Axis::x, a(v));
    return a.breakpoints;
  };
  d.provenance = "disjunction I(aleph(x), y) of " + i.name + " with aleph from " + n.name;
  return d;
}

BinaryConnective disjunction_from_implication(const BinaryConnective& i,
                                              const NumericConfig& cfg) {
  UnaryFunction n = negation_of_implication(i, cfg);
  if (!is_continuous(n, cfg)) {
    throw NotContinuousNegation("N_I of '" + i.name + "' is not continuous");
  }
  BinaryConnective d = disjunction_from_implication(i, n, cfg);
  d.name = "D_I(" + i.name + ")";
  return d;
}

}  // namespace fuzcon
