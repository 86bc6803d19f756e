#include "fuzcon/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "fuzcon/errors.hpp"

namespace fuzcon {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  number, ident, plus, minus, star, slash, caret, lparen, rparen, comma,
  semicolon, colon, lt, le, eq, gt, ge, andand, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) {
        ++i;
      }
      out.push_back({Tok::number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "<=") { out.push_back({Tok::le, "<=", start}); i += 2; continue; }
    if (two == ">=") { out.push_back({Tok::ge, ">=", start}); i += 2; continue; }
    if (two == "==") { out.push_back({Tok::eq, "==", start}); i += 2; continue; }
    if (two == "&&") { out.push_back({Tok::andand, "&&", start}); i += 2; continue; }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case ';': kind = Tok::semicolon; break;
      case ':': kind = Tok::colon; break;
      case '<': kind = Tok::lt; break;
      case '>': kind = Tok::gt; break;
      case '=': kind = Tok::eq; break;
      default:
        throw SyntaxError(start, "a token", std::string("'") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "end of input", src.size()});
  return out;
}

Rational parse_rational(const Token& t) {
  const std::string& s = t.text;
  auto dot = s.find('.');
  if (std::count(s.begin(), s.end(), '.') > 1 || s == ".") {
    throw SyntaxError(t.pos, "a number", "'" + s + "'");
  }
  std::string digits = s;
  std::int64_t den = 1;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    for (std::size_t k = dot; k < s.size() - 1; ++k) den *= 10;
  }
  // strip leading zeros so the significant-digit limit is meaningful
  auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  if (digits.size() > 17 || s.size() - (dot == std::string::npos ? 0 : 1) > 18) {
    throw SyntaxError(t.pos, "a number with at most 17 significant digits", "'" + s + "'");
  }
  std::int64_t num = std::stoll(digits);
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

NodePtr make_const(Rational r) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->literal = r;
  n->value = r.value();
  return n;
}

NodePtr make_node(Op op, std::vector<NodePtr> args) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return n;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  NodePtr parse_all() {
    NodePtr e = sum();
    expect(Tok::end, "end of input");
    return e;
  }

  bool uses_y() const { return uses_y_; }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) {
      throw SyntaxError(peek().pos, what, "'" + peek().text + "'");
    }
    return toks_[pos_++];
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (accept(Tok::plus)) {
        lhs = make_node(Op::add, {lhs, product()});
      } else if (accept(Tok::minus)) {
        lhs = make_node(Op::sub, {lhs, product()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept(Tok::star)) {
        lhs = make_node(Op::mul, {lhs, unary()});
      } else if (accept(Tok::slash)) {
        lhs = make_node(Op::div, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept(Tok::minus)) return make_node(Op::neg, {unary()});
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept(Tok::caret)) {
      auto n = std::make_shared<Node>();
      n->op = Op::pow;
      n->args = {base};
      n->literal = exponent();
      n->value = n->literal.value();
      return n;
    }
    return base;
  }

  // exponent := ['-'] number ['/' number] | '(' exponent ')'
  Rational exponent() {
    if (accept(Tok::lparen)) {
      Rational r = exponent();
      expect(Tok::rparen, "')'");
      return r;
    }
    bool negative = accept(Tok::minus);
    Rational r = parse_rational(expect(Tok::number, "a rational exponent"));
    if (accept(Tok::slash)) {
      Rational d = parse_rational(expect(Tok::number, "a rational denominator"));
      if (d.num == 0) throw SyntaxError(toks_[pos_ - 1].pos, "a non-zero denominator", "0");
      r = {r.num * d.den, r.den * d.num};
      std::int64_t g = std::gcd(r.num, r.den);
      if (g > 1) {
        r.num /= g;
        r.den /= g;
      }
    }
    if (negative) r.num = -r.num;
    return r;
  }

  NodePtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        ++pos_;
        return make_const(parse_rational(t));
      case Tok::lparen: {
        ++pos_;
        NodePtr e = sum();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::ident:
        ++pos_;
        return named(t);
      default:
        throw SyntaxError(t.pos, "a number, variable, function or '('", "'" + t.text + "'");
    }
  }

  NodePtr named(const Token& t) {
    if (t.text == "x") return make_node(Op::var_x, {});
    if (t.text == "y") {
      uses_y_ = true;
      return make_node(Op::var_y, {});
    }
    if (t.text == "min" || t.text == "max") {
      expect(Tok::lparen, "'('");
      std::vector<NodePtr> args{sum()};
      expect(Tok::comma, "','");
      args.push_back(sum());
      while (accept(Tok::comma)) args.push_back(sum());
      expect(Tok::rparen, "')'");
      return make_node(t.text == "min" ? Op::min : Op::max, std::move(args));
    }
    if (t.text == "sqrt") {
      expect(Tok::lparen, "'('");
      NodePtr a = sum();
      expect(Tok::rparen, "')'");
      return make_node(Op::sqrt, {a});
    }
    if (t.text == "pow") {
      expect(Tok::lparen, "'('");
      NodePtr base = sum();
      expect(Tok::comma, "','");
      auto n = std::make_shared<Node>();
      n->op = Op::pow;
      n->args = {base};
      n->literal = exponent();
      n->value = n->literal.value();
      expect(Tok::rparen, "')'");
      return n;
    }
    if (t.text == "piece") return piece();
    throw SyntaxError(t.pos, "x, y, min, max, sqrt, pow or piece", "'" + t.text + "'");
  }

  NodePtr piece() {
    expect(Tok::lparen, "'('");
    auto n = std::make_shared<Node>();
    n->op = Op::piece;
    bool saw_else = false;
    do {
      if (saw_else) {
        throw SyntaxError(peek().pos, "')' after the else branch", "'" + peek().text + "'");
      }
      Branch b;
      if (peek().kind == Tok::ident && peek().text == "else") {
        ++pos_;
        saw_else = true;
      } else {
        b.guard.push_back(comparison());
        while (accept(Tok::andand)) b.guard.push_back(comparison());
      }
      expect(Tok::colon, "':'");
      b.value = sum();
      n->branches.push_back(std::move(b));
    } while (accept(Tok::semicolon));
    expect(Tok::rparen, "')' or ';'");
    return n;
  }

  Comparison comparison() {
    NodePtr lhs = sum();
    Relation rel;
    switch (peek().kind) {
      case Tok::lt: rel = Relation::lt; break;
      case Tok::le: rel = Relation::le; break;
      case Tok::eq: rel = Relation::eq; break;
      case Tok::gt: rel = Relation::gt; break;
      case Tok::ge: rel = Relation::ge; break;
      default:
        throw SyntaxError(peek().pos, "a comparison operator", "'" + peek().text + "'");
    }
    ++pos_;
    return {rel, lhs, sum()};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool uses_y_ = false;
};

// ---------------------------------------------------------------------------
// Evaluation

double ipow(double base, std::int64_t e) {
  bool inverse = e < 0;
  std::uint64_t n = inverse ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  double result = 1.0;
  double b = base;
  while (n > 0) {
    if (n & 1U) result *= b;
    b *= b;
    n >>= 1U;
  }
  return inverse ? 1.0 / result : result;
}

double eval_node(const Node& n, double x, double y);

bool holds(const Comparison& c, double x, double y) {
  double a = eval_node(*c.lhs, x, y);
  double b = eval_node(*c.rhs, x, y);
  switch (c.rel) {
    case Relation::lt: return a < b;
    case Relation::le: return a <= b;
    case Relation::eq: return a == b;
    case Relation::gt: return a > b;
    case Relation::ge: return a >= b;
  }
  return false;
}

double eval_node(const Node& n, double x, double y) {
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::var_x: return x;
    case Op::var_y: return y;
    case Op::add: return eval_node(*n.args[0], x, y) + eval_node(*n.args[1], x, y);
    case Op::sub: return eval_node(*n.args[0], x, y) - eval_node(*n.args[1], x, y);
    case Op::mul: return eval_node(*n.args[0], x, y) * eval_node(*n.args[1], x, y);
    case Op::div: return eval_node(*n.args[0], x, y) / eval_node(*n.args[1], x, y);
    case Op::neg: return -eval_node(*n.args[0], x, y);
    case Op::min: {
      double v = eval_node(*n.args[0], x, y);
      for (std::size_t i = 1; i < n.args.size(); ++i) v = std::min(v, eval_node(*n.args[i], x, y));
      return v;
    }
    case Op::max: {
      double v = eval_node(*n.args[0], x, y);
      for (std::size_t i = 1; i < n.args.size(); ++i) v = std::max(v, eval_node(*n.args[i], x, y));
      return v;
    }
    case Op::sqrt: return std::sqrt(eval_node(*n.args[0], x, y));
    case Op::pow: {
      double b = eval_node(*n.args[0], x, y);
      if (n.literal.den == 1 && n.literal.num >= -64 && n.literal.num <= 64) {
        return ipow(b, n.literal.num);
      }
      return std::pow(b, n.value);
    }
    case Op::piece:
      for (const Branch& br : n.branches) {
        bool all = std::all_of(br.guard.begin(), br.guard.end(),
                               [&](const Comparison& c) { return holds(c, x, y); });
        if (all) return eval_node(*br.value, x, y);
      }
      {
        std::ostringstream msg;
        msg << "no piecewise branch matches the point (" << x << ", " << y << ")";
        throw CoverageError(msg.str());
      }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// ---------------------------------------------------------------------------
// Canonical printer

std::string print_rational(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  std::int64_t d = r.den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  const int k = std::max(twos, fives);
  if (d == 1 && k <= 18) {
    std::int64_t p10 = 1;
    for (int i = 0; i < k; ++i) p10 *= 10;
    std::int64_t f = p10 / r.den;
    std::int64_t mag = r.num < 0 ? -r.num : r.num;
    if (mag <= std::numeric_limits<std::int64_t>::max() / f) {
      std::string digits = std::to_string(mag * f);
      if (digits.size() <= static_cast<std::size_t>(k)) {
        digits.insert(0, static_cast<std::size_t>(k) + 1 - digits.size(), '0');
      }
      digits.insert(digits.size() - k, ".");
      return r.num < 0 ? "(-" + digits + ")" : digits;
    }
  }
  return "(" + std::to_string(r.num) + "/" + std::to_string(r.den) + ")";
}

std::string print_node(const Node& n);

std::string print_comparison(const Comparison& c) {
  static constexpr const char* names[] = {"<", "<=", "=", ">", ">="};
  return print_node(*c.lhs) + " " + names[static_cast<int>(c.rel)] + " " + print_node(*c.rhs);
}

std::string print_node(const Node& n) {
  auto bin = [&](const char* op) {
    return "(" + print_node(*n.args[0]) + " " + op + " " + print_node(*n.args[1]) + ")";
  };
  switch (n.op) {
    case Op::constant: return print_rational(n.literal);
    case Op::var_x: return "x";
    case Op::var_y: return "y";
    case Op::add: return bin("+");
    case Op::sub: return bin("-");
    case Op::mul: return bin("*");
    case Op::div: return bin("/");
    case Op::neg: return "(-" + print_node(*n.args[0]) + ")";
    case Op::min:
    case Op::max: {
      std::string s = n.op == Op::min ? "min(" : "max(";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) s += ", ";
        s += print_node(*n.args[i]);
      }
      return s + ")";
    }
    case Op::sqrt: return "sqrt(" + print_node(*n.args[0]) + ")";
    case Op::pow: {
      std::string e = n.literal.den == 1
                          ? std::to_string(n.literal.num)
                          : std::to_string(n.literal.num) + "/" + std::to_string(n.literal.den);
      return "pow(" + print_node(*n.args[0]) + ", " + e + ")";
    }
    case Op::piece: {
      std::string s = "piece(";
      for (std::size_t i = 0; i < n.branches.size(); ++i) {
        const Branch& b = n.branches[i];
        if (i) s += "; ";
        if (b.guard.empty()) {
          s += "else";
        } else {
          for (std::size_t k = 0; k < b.guard.size(); ++k) {
            if (k) s += " && ";
            s += print_comparison(b.guard[k]);
          }
        }
        s += " : " + print_node(*b.value);
      }
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Breakpoints

struct SwitchPair {
  const Node* lhs;
  const Node* rhs;
};

void collect_switches(const Node& n, std::vector<SwitchPair>& out) {
  for (const NodePtr& a : n.args) collect_switches(*a, out);
  if (n.op == Op::min || n.op == Op::max) {
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      for (std::size_t j = i + 1; j < n.args.size(); ++j) {
        out.push_back({n.args[i].get(), n.args[j].get()});
      }
    }
  }
  for (const Branch& b : n.branches) {
    for (const Comparison& c : b.guard) {
      collect_switches(*c.lhs, out);
      collect_switches(*c.rhs, out);
      out.push_back({c.lhs.get(), c.rhs.get()});
    }
    collect_switches(*b.value, out);
  }
}

// Roots of a 1-D function on (0,1): exact for affine sections, otherwise a
// sign-change scan refined by bisection.
void section_roots(const std::function<double(double)>& d, std::vector<double>& out) {
  double g0 = d(0.0);
  double g1 = d(1.0);
  double gm = d(0.5);
  if (std::isfinite(g0) && std::isfinite(g1) && std::isfinite(gm) &&
      std::abs(gm - 0.5 * (g0 + g1)) <= 1e-12 * (1.0 + std::abs(g0) + std::abs(g1))) {
    if ((g0 < 0 && g1 > 0) || (g0 > 0 && g1 < 0)) out.push_back(g0 / (g0 - g1));
    return;
  }
  constexpr int samples = 1024;
  double prev_t = 0.0;
  double prev = g0;
  for (int i = 1; i <= samples; ++i) {
    double t = static_cast<double>(i) / samples;
    double cur = d(t);
    if (std::isfinite(prev) && std::isfinite(cur)) {
      if (cur == 0.0 && i < samples) {
        out.push_back(t);
      } else if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) {
        double lo = prev_t;
        double hi = t;
        for (int k = 0; k < 100; ++k) {
          double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          double v = d(mid);
          if ((v < 0) == (prev < 0) && v != 0.0) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        out.push_back(0.5 * (lo + hi));
      }
    }
    prev = cur;
    prev_t = t;
  }
}

NodePtr checked_parse(std::string_view source, std::optional<int> arity, int& out_arity) {
  Parser p(source);
  NodePtr root = p.parse_all();
  int deduced = p.uses_y() ? 2 : 1;
  if (arity) {
    if (*arity != 1 && *arity != 2) throw ArityMismatch("arity must be 1 or 2");
    if (*arity == 1 && deduced == 2) {
      throw ArityMismatch("unary expression must not use the variable y");
    }
    deduced = *arity;
  }
  out_arity = deduced;
  return root;
}

}  // namespace

double ConnectiveExpr::operator()(double x) const {
  if (arity_ != 1) throw ArityMismatch("binary expression evaluated at a single coordinate");
  return eval_node(*root_, x, 0.0);
}

double ConnectiveExpr::operator()(double x, double y) const {
  if (arity_ != 2) throw ArityMismatch("unary expression evaluated at two coordinates");
  return eval_node(*root_, x, y);
}

std::string ConnectiveExpr::print() const { return print_node(*root_); }

ConnectiveExpr parse_expression(std::string_view source, std::optional<int> arity) {
  int a = 1;
  NodePtr root = checked_parse(source, arity, a);
  return ConnectiveExpr(std::move(root), a);
}

ConnectiveExpr parse_connective(std::string_view source, std::optional<int> arity) {
  ConnectiveExpr e = parse_expression(source, arity);
  // Registration: every validation-grid point must select a branch and map into [0,1].
  constexpr int n = 64;
  constexpr double tol = 1e-12;
  auto check = [&](double x, double y) {
    double v = e.arity() == 1 ? e(x) : e(x, y);
    if (!(v >= -tol && v <= 1.0 + tol)) {
      std::ostringstream msg;
      msg << "value " << v << " outside [0,1] at (" << x;
      if (e.arity() == 2) msg << ", " << y;
      msg << ")";
      throw RangeError(msg.str());
    }
  };
  for (int i = 0; i <= n; ++i) {
    double x = static_cast<double>(i) / n;
    if (e.arity() == 1) {
      check(x, 0.0);
    } else {
      for (int j = 0; j <= n; ++j) check(x, static_cast<double>(j) / n);
    }
  }
  return e;
}

double evaluate(const ConnectiveExpr& expr, std::span<const double> point) {
  if (static_cast<int>(point.size()) != expr.arity()) {
    throw ArityMismatch("point has " + std::to_string(point.size()) +
                        " coordinates, expression arity is " + std::to_string(expr.arity()));
  }
  return point.size() == 1 ? expr(point[0]) : expr(point[0], point[1]);
}

Breakpoints1D normalize_breakpoints(std::vector<double> points) {
  std::erase_if(points, [](double t) { return !(t > 0.0 && t < 1.0); });
  std::sort(points.begin(), points.end());
  std::vector<double> out;
  for (double t : points) {
    if (out.empty() || t - out.back() > 1e-12) out.push_back(t);
  }
  return out;
}

Breakpoints1D section_breakpoints(const ConnectiveExpr& expr, Axis fixed_axis,
                                  double fixed_value) {
  std::vector<SwitchPair> switches;
  collect_switches(expr.root(), switches);
  std::vector<double> roots;
  for (const SwitchPair& s : switches) {
    auto at = [&](const Node& n, double t) {
      try {
        if (expr.arity() == 1) return eval_node(n, t, 0.0);
        return fixed_axis == Axis::x ? eval_node(n, fixed_value, t) : eval_node(n, t, fixed_value);
      } catch (const CoverageError&) {
        return std::numeric_limits<double>::quiet_NaN();
      }
    };
    section_roots([&](double t) { return at(*s.lhs, t) - at(*s.rhs, t); }, roots);
  }
  return normalize_breakpoints(std::move(roots));
}

std::vector<Definition> parse_definitions(std::string_view text) {
  std::vector<Definition> defs;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    auto sep = line.find(":=");
    if (sep == std::string::npos) {
      throw SyntaxError(0, "'name := expr' on definition line " + std::to_string(lineno),
                        "'" + line + "'");
    }
    std::string head = trim(line.substr(0, sep));
    std::string body = trim(line.substr(sep + 2));
    std::optional<int> arity;
    if (auto paren = head.find('('); paren != std::string::npos) {
      std::string sig = head.substr(paren);
      sig.erase(std::remove_if(sig.begin(), sig.end(), ::isspace), sig.end());
      if (sig == "(x)") {
        arity = 1;
      } else if (sig == "(x,y)") {
        arity = 2;
      } else {
        throw SyntaxError(paren, "signature (x) or (x,y) on definition line " +
                                     std::to_string(lineno), "'" + sig + "'");
      }
      head = trim(head.substr(0, paren));
    }
    if (head.empty() || !std::all_of(head.begin(), head.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        })) {
      throw SyntaxError(0, "an identifier on definition line " + std::to_string(lineno),
                        "'" + head + "'");
    }
    try {
      defs.push_back({head, body, parse_connective(body, arity), lineno});
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.position(), e.expected() + " (definition '" + head + "', line " +
                                          std::to_string(lineno) + ")", "invalid input");
    }
  }
  return defs;
}

}  // namespace fuzcon
