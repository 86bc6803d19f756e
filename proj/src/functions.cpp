#include "fuzcon/functions.hpp"

#include <algorithm>

#include "fuzcon/errors.hpp"

namespace fuzcon {

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::conjunction: return "conjunction";
    case Kind::disjunction: return "disjunction";
    case Kind::implication: return "implication";
    case Kind::raw: return "raw";
  }
  return "raw";
}

BinaryConnective BinaryConnective::from_expr(std::string name, Kind kind, ConnectiveExpr expr,
                                             Flags flags, std::string provenance) {
  if (expr.arity() != 2) throw ArityMismatch("connective '" + name + "' must be binary");
  BinaryConnective b;
  b.name = std::move(name);
  b.kind = kind;
  b.fn = [expr](double x, double y) { return expr(x, y); };
  b.flags = flags;
  b.sections = [expr](Axis axis, double v) { return fuzcon::section_breakpoints(expr, axis, v); };
  b.expr = std::move(expr);
  b.provenance = std::move(provenance);
  return b;
}

BinaryConnective BinaryConnective::parse(std::string name, Kind kind, std::string_view source,
                                         Flags flags, std::string provenance) {
  return from_expr(std::move(name), kind, parse_connective(source, 2), flags,
                   std::move(provenance));
}

UnaryFunction UnaryFunction::from_expr(std::string name, ConnectiveExpr expr,
                                       std::string provenance) {
  if (expr.arity() != 1) throw ArityMismatch("function '" + name + "' must be unary");
  UnaryFunction f;
  f.name = std::move(name);
  f.fn = [expr](double x) { return expr(x); };
  f.breakpoints = fuzcon::section_breakpoints(expr, Axis::x, 0.0);
  f.expr = std::move(expr);
  f.provenance = std::move(provenance);
  return f;
}

UnaryFunction UnaryFunction::parse(std::string name, std::string_view source,
                                   std::string provenance) {
  return from_expr(std::move(name), parse_connective(source, 1), std::move(provenance));
}

std::vector<double> uniform_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
  g.back() = 1.0;
  return g;
}

std::vector<double> merge_points(std::vector<double> grid, const std::vector<double>& extra) {
  grid.insert(grid.end(), extra.begin(), extra.end());
  std::erase_if(grid, [](double t) { return !(t >= 0.0 && t <= 1.0); });
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace fuzcon
