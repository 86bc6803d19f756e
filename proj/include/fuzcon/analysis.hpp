#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzcon/catalog.hpp"
#include "fuzcon/config.hpp"
#include "fuzcon/continuity.hpp"
#include "fuzcon/functions.hpp"
#include "fuzcon/report.hpp"

namespace fuzcon {

struct FlagVerdict {
  bool holds = true;
  std::optional<Witness> witness;
};

/// Classification of a fuzzy negation. Continuity verdicts are numerical
/// verdicts at resolution (grid_n, delta_jump, tau_jump).
struct NegationClassReport {
  FlagVerdict non_increasing;
  FlagVerdict continuous;
  FlagVerdict left_continuous;
  FlagVerdict right_continuous;
  FlagVerdict strictly_decreasing;
  FlagVerdict strict;  // strictly decreasing and continuous
  FlagVerdict strong;  // involutive within eps_eq
  double max_involution_error = 0.0;

  /// strong => strict => (strictly decreasing and continuous).
  bool consistent() const;
  /// All four of strictly decreasing / continuous / strict / strong agree.
  bool four_flags_agree() const;
};

NegationClassReport classify_negation(const UnaryFunction& n, const NumericConfig& cfg);

/// Operands of laws and theorems; which ones are needed depends on the id.
struct Operands {
  std::optional<BinaryConnective> conjunction;
  std::optional<BinaryConnective> disjunction;
  std::optional<BinaryConnective> implication;
  std::optional<UnaryFunction> negation;
  std::optional<UnaryFunction> negation2;

  std::vector<std::string> names() const;
};

/// Registered law ids (see docs/laws.md for each law's statement and signature).
const std::vector<std::string>& law_ids();

/// Exhaustive grid check of one law. The witness of a failure is the point
/// of largest violation. Throws SignatureMismatch / UnknownName.
CheckResult check_law(std::string_view law_id, const Operands& ops, const NumericConfig& cfg);

const std::vector<std::string>& theorem_ids();

/// Numerical check of a theorem's conclusion on concrete operands; when a
/// hypothesis is not met the verdict is precondition_failed and
/// details["missing"] names it. Throws UnknownTheorem / SignatureMismatch.
CheckResult verify_theorem(std::string_view theorem_id, const Operands& ops,
                           const NumericConfig& cfg);

struct Continuity2D {
  bool continuous = true;
  double max_jump = 0.0;
  std::vector<double> location;  // (x, y) of the largest jump
  Axis varying = Axis::x;        // coordinate that varies across the jump
};

/// Scans 1-D sections in both directions along grid lines and guard
/// boundaries and reports the largest one-sided jump.
Continuity2D detect_continuity_2d(const BinaryConnective& b, const NumericConfig& cfg);

/// Continuity2D as a CheckResult with law id CONTINUOUS_2D.
CheckResult continuity_2d_result(const BinaryConnective& b, const NumericConfig& cfg);

/// Largest |a(x,y) - b(x,y)| over an n x n uniform grid; the argmax is stored.
double sup_distance(const BinaryConnective& a, const BinaryConnective& b, int n,
                    std::vector<double>* argmax = nullptr);

/// Computes a fixture's expected-verdict id (FI, COND_4_7, NF_CONTINUOUS,
/// COMMUTATIVE, NC_CONTINUOUS, NC_STRICTLY_DECREASING, NC_STRONG,
/// LEM_WITH_N_S, LEM_INEQ_WITH_N_S). Throws UnknownName for other ids.
bool compute_verdict(const Fixture& fx, std::string_view id, const NumericConfig& cfg);

}  // namespace fuzcon
