#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fuzcon/config.hpp"
#include "fuzcon/functions.hpp"

namespace fuzcon {

/// Natural negation of a conjunction or disjunction, realized by bisection
/// at query time and memoized per queried point.
struct InducedNegation {
  UnaryFunction function;
  std::string source;
  /// N_C(1) = 0 (conjunction) or N_D(0) = 1 (disjunction), within eps_eq.
  bool is_negation = false;

  double operator()(double x) const { return function(x); }
};

/// sup of {t in [0,1] : pred(t)} for a predicate true on a down-set.
/// Empty set yields nullopt.
std::optional<double> sup_of_down_set(const std::function<bool(double)>& pred, int iters);

/// inf of {t in [0,1] : pred(t)} for a predicate true on an up-set.
std::optional<double> inf_of_up_set(const std::function<bool(double)>& pred, int iters);

/// N_C(x) = sup{t : C(x,t) = 0}. Throws KindMismatch / NotValidated.
InducedNegation natural_negation_of_conjunction(const BinaryConnective& c,
                                                const NumericConfig& cfg);

/// N_D(x) = inf{t : D(x,t) = 1}. Throws KindMismatch / NotValidated.
InducedNegation natural_negation_of_disjunction(const BinaryConnective& d,
                                                const NumericConfig& cfg);

/// Dispatches on the connective's kind.
InducedNegation natural_negation(const BinaryConnective& b, const NumericConfig& cfg);

/// f^(-1)(y) = sup{x : (f(x) - y)(f(1) - f(0)) < 0}, with sup of the empty
/// set taken as 0. Throws NotMonotone / ConstantFunction.
UnaryFunction pseudo_inverse(const UnaryFunction& f, const NumericConfig& cfg);

/// The strictly decreasing negation built from a continuous negation N:
/// N^(-1) on (0,1], 1 at 0. Throws InvalidNegation / NotContinuousNegation.
UnaryFunction aleph(const UnaryFunction& n, const NumericConfig& cfg);

/// I(x,y) = D(N(x),y). Throws KindMismatch / InvalidNegation.
BinaryConnective implication_from_dn(const BinaryConnective& d, const UnaryFunction& n,
                                     const NumericConfig& cfg);

/// x -> F(x,0) without any axiom check.
UnaryFunction section_at_zero(const BinaryConnective& f);

/// N_I(x) = I(x,0). Throws AxiomsFailed unless (I1), (I3), (I5) hold on the grid.
UnaryFunction negation_of_implication(const BinaryConnective& i, const NumericConfig& cfg);

/// D_I(x,y) = I(aleph_I(x), y) with aleph_I built from N_I.
/// Throws NotContinuousNegation when N_I is not continuous.
BinaryConnective disjunction_from_implication(const BinaryConnective& i,
                                              const NumericConfig& cfg);

/// D(x,y) = I(aleph(x), y) with aleph built from the supplied negation.
BinaryConnective disjunction_from_implication(const BinaryConnective& i, const UnaryFunction& n,
                                              const NumericConfig& cfg);

/// Continuity verdict of a unary function on grid_n points plus breakpoints.
bool is_continuous(const UnaryFunction& f, const NumericConfig& cfg);

}  // namespace fuzcon
