#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzcon/expr.hpp"

namespace fuzcon {

enum class Kind { conjunction, disjunction, implication, raw };

std::string to_string(Kind kind);

struct NeutralElement {
  enum class Side { left, right, both };
  double value = 0.0;
  Side side = Side::both;
};

/// Structural flags as stated for a connective. An empty optional means
/// "not declared"; verification reports the measured value either way.
struct Flags {
  std::optional<bool> commutative;
  std::optional<bool> associative;
  std::optional<bool> left_continuous;
  std::optional<bool> right_continuous;
  std::optional<NeutralElement> neutral;
};

/// Breakpoints of the section obtained by fixing one coordinate.
using SectionFn = std::function<Breakpoints1D(Axis fixed_axis, double fixed_value)>;

/// An evaluable map [0,1]^2 -> [0,1].
struct BinaryConnective {
  std::string name;
  Kind kind = Kind::raw;
  std::function<double(double, double)> fn;
  Flags flags;
  SectionFn sections;               // may be empty
  std::optional<ConnectiveExpr> expr;
  std::string provenance;

  double operator()(double x, double y) const { return fn(x, y); }
  Breakpoints1D section_breakpoints(Axis fixed_axis, double fixed_value) const {
    return sections ? sections(fixed_axis, fixed_value) : Breakpoints1D{};
  }

  static BinaryConnective from_expr(std::string name, Kind kind, ConnectiveExpr expr,
                                    Flags flags = {}, std::string provenance = {});
  /// Parses `source` as a binary expression.
  static BinaryConnective parse(std::string name, Kind kind, std::string_view source,
                                Flags flags = {}, std::string provenance = {});
};

/// An evaluable map [0,1] -> [0,1].
struct UnaryFunction {
  std::string name;
  std::function<double(double)> fn;
  Breakpoints1D breakpoints;
  std::optional<ConnectiveExpr> expr;
  std::string provenance;

  double operator()(double x) const { return fn(x); }

  static UnaryFunction from_expr(std::string name, ConnectiveExpr expr,
                                 std::string provenance = {});
  static UnaryFunction parse(std::string name, std::string_view source,
                             std::string provenance = {});
};

/// i/(n-1) for i = 0..n-1, with the last point exactly 1.
std::vector<double> uniform_grid(int n);

/// Union of a grid and extra points, sorted and deduplicated, within [0,1].
std::vector<double> merge_points(std::vector<double> grid, const std::vector<double>& extra);

}  // namespace fuzcon
