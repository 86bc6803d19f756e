#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzcon/config.hpp"
#include "fuzcon/continuity.hpp"
#include "fuzcon/functions.hpp"
#include "fuzcon/report.hpp"

namespace fuzcon {

/// Expected natural negation: a closed form, or the marker that the induced
/// map is not a fuzzy negation.
struct ExpectedNegation {
  bool not_a_negation = false;
  std::optional<UnaryFunction> function;
};

struct Fixture {
  BinaryConnective connective;
  std::optional<ExpectedNegation> expected_induced_negation;
  std::optional<BinaryConnective> expected_implication;
  /// Verdict ids understood by expected_verdict() mapped to the stated outcome.
  std::map<std::string, bool> expected_verdicts;
  std::string provenance;
};

/// Named connectives and unary functions. Immutable after construction.
class Catalog {
 public:
  std::vector<Fixture> fixtures;
  std::vector<UnaryFunction> functions;

  const Fixture* find_fixture(std::string_view name) const;
  const BinaryConnective& connective(std::string_view name) const;  // throws UnknownName
  const UnaryFunction& function(std::string_view name) const;       // throws UnknownName
  bool has_connective(std::string_view name) const { return find_fixture(name) != nullptr; }
  bool has_function(std::string_view name) const;

  std::vector<const Fixture*> of_kind(Kind kind) const;

  /// Definition-file text (`name(x,y) := expr`), one entry per fixture and function.
  std::string export_definitions() const;
};

/// The built-in fixtures. Built and validated once; throws CatalogCorrupt if
/// a fixture fails its own validation.
const Catalog& load_catalog();

/// Builds the catalog without running validation.
Catalog build_catalog();

/// Kind-specific boundary conditions, axis-wise monotonicity on a
/// grid2_n x grid2_n grid, and a measured verdict for every structural flag.
/// A declared flag that disagrees with its measurement fails the check.
/// details[<flag>] holds "holds"/"fails" for every measured flag.
CheckResult validate_connective(const BinaryConnective& b, const NumericConfig& cfg);

/// N(0)=1 and N(1)=0 exactly, and non-increase on grid plus breakpoints.
CheckResult validate_negation(const UnaryFunction& f, const NumericConfig& cfg);

/// Measures whether the connective is left- (resp. right-) continuous in
/// each variable; the witness locates the worst jump.
CheckResult check_one_sided_continuity(const BinaryConnective& b, Side side,
                                       const NumericConfig& cfg);

/// b(x,y) = b(y,x) within eps_eq on the grid2_n grid; witness is the worst pair.
CheckResult check_commutativity(const BinaryConnective& b, const NumericConfig& cfg);

/// b(b(x,y),z) = b(x,b(y,z)) within eps_eq on ep_n^3 triples.
CheckResult check_associativity(const BinaryConnective& b, const NumericConfig& cfg);

/// b(e,y) = y (left) and/or b(x,e) = x (right) within eps_eq on the grid.
CheckResult check_neutral(const BinaryConnective& b, const NeutralElement& e,
                          const NumericConfig& cfg);

}  // namespace fuzcon
