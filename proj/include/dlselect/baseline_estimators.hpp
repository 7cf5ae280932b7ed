#pragma once

#include "dlselect/core_model.hpp"
#include "dlselect/lasso_solver.hpp"

namespace dlselect {

struct RidgeFit {
  Vector beta;
  double lambda2 = 0.0;
  /// ||(X'X + lambda2 I) beta - X'Y||_inf, the normal-equation defect.
  double normal_residual = 0.0;
  /// True when the n x n system beta = X'(XX' + lambda2 I)^{-1} Y was used.
  bool used_dual_form = false;
};

/// argmin 0.5||Y - X beta||^2 + (lambda2/2)||beta||^2 via the normal
/// equations; switches to the equivalent n x n system when p > n. Throws
/// NonPositiveLambda for lambda2 <= 0.
RidgeFit fit_ridge(const Dataset& ds, double lambda2);

/// Elastic net fit. Shares the LassoFit shape; `lambda` holds lambda1 and
/// the KKT residual is for the composite l1 + squared-l2 subgradient.
struct EnetFit {
  Vector beta;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int iterations = 0;
  double kkt_residual = 0.0;
  double objective = 0.0;
  double tol_kkt_used = 0.0;
  std::vector<double> sweep_objectives;

  ActiveSet support() const { return ActiveSet::support(beta); }
};

/// 0.5||Y - X beta||^2 + lambda1 ||beta||_1 + (lambda2/2)||beta||^2.
double enet_objective(const Dataset& ds, const Vector& beta, double lambda1,
                      double lambda2);

/// Coordinate descent on the naive elastic net (no (1 + lambda2) rescaling).
/// lambda1, lambda2 >= 0 and not both zero. Throws NotConverged like the
/// l1 solver; the best iterate rides along in the exception's LassoFit.
EnetFit fit_enet(const Dataset& ds, double lambda1, double lambda2,
                 const SolverOptions& opts = {});

/// Same solve started from beta0.
EnetFit fit_enet_warm(const Dataset& ds, double lambda1, double lambda2,
                      const Vector& beta0, const SolverOptions& opts = {});

}  // namespace dlselect
