#include "dlselect/dual_selector.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "dlselect/errors.hpp"

namespace dlselect {

DualState dual_vector(const Dataset& ds, const LassoFit& fit,
                      double tol_active) {
  if (fit.beta.size() != static_cast<Eigen::Index>(ds.p())) {
    throw DimensionMismatch("dual_vector: beta length does not match design");
  }
  if (!(tol_active >= 0.0) || tol_active >= 1.0) {
    throw InvalidArgument("dual_vector: tol_active must lie in [0, 1)");
  }
  if (fit.lambda <= 0.0) {
    throw DegenerateLambda(
        "dual_vector: lambda must be positive; at lambda = 0 every dual "
        "constraint is tight and the active set is meaningless");
  }

  DualState state;
  state.lambda = fit.lambda;
  state.tol_active = tol_active;
  state.theta = ds.Y - ds.X * fit.beta;
  state.correlations = ds.X.transpose() * state.theta;

  const double max_corr = state.correlations.cwiseAbs().maxCoeff();
  // Roundoff and solver slack push |X_j' theta| slightly past lambda even at
  // an exact optimum, so the feasibility check budgets for the KKT residual
  // the fit was accepted with.
  const double slack = 10.0 * std::max(fit.tol_kkt_used, fit.kkt_residual);
  if (max_corr > fit.lambda + slack) {
    throw InfeasibleDual(max_corr, fit.lambda);
  }

  const double cut = fit.lambda * (1.0 - tol_active);
  std::vector<int> active;
  double margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < state.correlations.size(); ++j) {
    const double a = std::abs(state.correlations[j]);
    if (a >= cut) {
      active.push_back(static_cast<int>(j));
    } else {
      margin = std::min(margin, fit.lambda - a);
    }
  }
  state.active = ActiveSet(active, static_cast<int>(ds.p()));
  state.feasibility_margin = margin;
  return state;
}

double dual_objective(const Vector& Y, const Vector& theta) {
  if (Y.size() != theta.size()) {
    throw DimensionMismatch("dual_objective: Y and theta differ in length");
  }
  return theta.dot(Y) - 0.5 * theta.squaredNorm();
}

double duality_gap(const Dataset& ds, const LassoFit& fit) {
  if (fit.lambda <= 0.0) {
    throw DegenerateLambda("duality_gap: lambda must be positive");
  }
  Vector theta = ds.Y - ds.X * fit.beta;
  const double max_corr = (ds.X.transpose() * theta).cwiseAbs().maxCoeff();
  // Radial repair: scale theta back inside the feasible polytope
  // {|X_j' t| <= lambda} before evaluating the dual objective, so the gap is
  // a valid certificate even when the iterate is slightly infeasible.
  if (max_corr > fit.lambda && max_corr > 0.0) {
    theta *= fit.lambda / max_corr;
  }
  const double primal = lasso_objective(ds, fit.beta, fit.lambda);
  return primal - dual_objective(ds.Y, theta);
}

ActiveSet dual_active_set(const DualState& state) {
  if (state.lambda <= 0.0) {
    throw DegenerateLambda("dual_active_set: lambda must be positive");
  }
  return state.active;
}

}  // namespace dlselect
