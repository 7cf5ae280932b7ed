#pragma once

#include "dlselect/core_model.hpp"
#include "dlselect/lasso_solver.hpp"

namespace dlselect {

/// Relative boundary tolerance separating tight dual constraints from slack
/// ones: j counts as active when |X_j' theta| >= lambda * (1 - tol_active).
inline constexpr double kDefaultTolActive = 1e-4;

/// The (unique) dual optimum recovered from a primal fit, with the tight
/// constraint set used for variable selection.
struct DualState {
  Vector theta;
  double lambda = 0.0;
  /// X_j' theta per predictor.
  Vector correlations;
  /// Dual active set: constraints on the feasible boundary.
  ActiveSet active;
  /// min over inactive j of (lambda - |X_j' theta|); +inf when none inactive.
  double feasibility_margin = 0.0;
  double tol_active = kDefaultTolActive;
};

/// theta = Y - X beta, plus correlations, active set and margins. Throws
/// InfeasibleDual when the correlations exceed lambda by more than ten times
/// the fit's KKT tolerance, which signals a bad fit rather than a dual bug.
DualState dual_vector(const Dataset& ds, const LassoFit& fit,
                      double tol_active = kDefaultTolActive);

/// g(theta) = theta'Y - 0.5 theta'theta, equivalently
/// 0.5||Y||^2 - 0.5||theta - Y||^2.
double dual_objective(const Vector& Y, const Vector& theta);

/// Primal objective minus the dual objective at the radially-repaired
/// feasible dual point; nonnegative up to roundoff and a convergence
/// certificate when small.
double duality_gap(const Dataset& ds, const LassoFit& fit);

/// Tight-constraint indices {j : |X_j' theta| >= lambda (1 - tol_active)}.
/// Throws DegenerateLambda at lambda = 0 where every constraint is trivially
/// tight.
ActiveSet dual_active_set(const DualState& state);

}  // namespace dlselect
