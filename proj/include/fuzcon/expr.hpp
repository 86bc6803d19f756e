#pragma once

// Piecewise closed-form expressions over the unit interval / unit square.
//
// Grammar (see docs/grammar.md for the full EBNF):
//
//   expr    := sum
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   primary := number | 'x' | 'y' | '(' expr ')'
//            | ('min' | 'max') '(' expr (',' expr)+ ')'
//            | 'sqrt' '(' expr ')' | 'pow' '(' expr ',' exponent ')'
//            | 'piece' '(' branch (';' branch)* ')'
//   branch  := (guard | 'else') ':' expr
//   guard   := compare ('&&' compare)*
//   compare := sum ('<' | '<=' | '=' | '==' | '>' | '>=') sum

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fuzcon {

/// Sorted, deduplicated interior points of (0,1).
using Breakpoints1D = std::vector<double>;

/// Exact rational literal, converted to binary floating point once.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class Op { constant, var_x, var_y, add, sub, mul, div, neg, min, max, sqrt, pow, piece };
enum class Relation { lt, le, eq, gt, ge };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Comparison {
  Relation rel;
  NodePtr lhs;
  NodePtr rhs;
};

struct Branch {
  std::vector<Comparison> guard;  // empty means `else`
  NodePtr value;
};

struct Node {
  Op op = Op::constant;
  Rational literal;          // constant value, or the exponent of pow
  double value = 0.0;        // literal.value(), cached
  std::vector<NodePtr> args;
  std::vector<Branch> branches;
};

/// An immutable parsed expression of arity 1 (variable x) or 2 (x and y).
class ConnectiveExpr {
 public:
  ConnectiveExpr(NodePtr root, int arity) : root_(std::move(root)), arity_(arity) {}

  int arity() const { return arity_; }
  const Node& root() const { return *root_; }

  /// Throws ArityMismatch when called with the wrong number of coordinates.
  double operator()(double x) const;
  double operator()(double x, double y) const;

  /// Canonical, fully parenthesized source text; re-parses to an equal function.
  std::string print() const;

 private:
  NodePtr root_;
  int arity_;
};

/// Parses and registers an expression: syntax, branch coverage and range are
/// checked. `arity` overrides the arity deduced from the variables used.
ConnectiveExpr parse_connective(std::string_view source,
                                std::optional<int> arity = std::nullopt);

/// Syntax-only parse (no coverage or range validation).
ConnectiveExpr parse_expression(std::string_view source,
                                std::optional<int> arity = std::nullopt);

double evaluate(const ConnectiveExpr& expr, std::span<const double> point);

enum class Axis { x, y };

/// Interior points where the 1-D section can switch branch or min/max
/// argument. For a unary expression the fixed axis is ignored.
Breakpoints1D section_breakpoints(const ConnectiveExpr& expr, Axis fixed_axis,
                                  double fixed_value);

/// Sorts, drops points outside (0,1) and merges near-duplicates.
Breakpoints1D normalize_breakpoints(std::vector<double> points);

/// One `name := expr` line of a definition file.
struct Definition {
  std::string name;
  std::string source;
  ConnectiveExpr expr;
  int line = 0;
};

/// Parses a definition file: one `name := <expr>` per line, `#` comments.
/// An optional signature `name(x)` or `name(x,y)` fixes the arity.
std::vector<Definition> parse_definitions(std::string_view text);

}  // namespace fuzcon
