#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlselect/core_model.hpp"

namespace dlselect {

struct SolverOptions {
  /// Relative objective-change tolerance per sweep.
  double tol_obj = 1e-9;
  /// Absolute KKT tolerance. Unset resolves to 1e-7 * lambda_max(ds).
  std::optional<double> tol_kkt;
  int max_sweeps = 100000;
  /// Fixed cyclic coordinate order (a permutation of 0..p-1); identity when unset.
  std::optional<std::vector<int>> coord_order;

  void validate() const;
};

struct LassoFit {
  Vector beta;
  double lambda = 0.0;
  /// v = X'(Y - X beta)/lambda clamped to [-1, 1]; empty when lambda == 0.
  Vector subgradient;
  int iterations = 0;
  /// max_j |X_j'(Y - X beta) - lambda v_j| with v_j = sign(beta_j) on the support.
  double kkt_residual = 0.0;
  double objective = 0.0;
  /// Absolute KKT tolerance the solve used (resolved from SolverOptions).
  double tol_kkt_used = 0.0;
  /// Objective after each sweep; nonincreasing up to roundoff.
  std::vector<double> sweep_objectives;
  /// False only for the lambda = 0 minimum-norm fallback on rank-deficient designs.
  bool unique_minimizer = true;

  ActiveSet support() const { return ActiveSet::support(beta); }
};

/// Sweep cap reached before both convergence criteria held. Carries the best
/// iterate so callers can inspect or resume it.
struct NotConverged : Error {
  LassoFit best;
  explicit NotConverged(LassoFit fit)
      : Error("lasso solver hit max_sweeps = " + std::to_string(fit.iterations) +
              " at lambda = " + std::to_string(fit.lambda) +
              " with kkt_residual = " + std::to_string(fit.kkt_residual)),
        best(std::move(fit)) {}
};

/// sign(z) * max(|z| - gamma, 0).
double soft_threshold(double z, double gamma);

/// max_j |X_j'Y|; the smallest penalty at which beta = 0 is optimal.
double lambda_max(const Dataset& ds);

/// 0.5 ||Y - X beta||^2 + lambda ||beta||_1.
double lasso_objective(const Dataset& ds, const Vector& beta, double lambda);

/// Cyclic coordinate descent. Converged when the relative objective change
/// is <= tol_obj and the KKT residual is <= tol_kkt.
LassoFit fit_lasso(const Dataset& ds, double lambda, const SolverOptions& opts = {});

/// Same solve started from beta0 (warm start).
LassoFit fit_lasso_warm(const Dataset& ds, double lambda, const Vector& beta0,
                        const SolverOptions& opts = {});

/// One fit per grid value, warm-started from the previous fit. The grid must
/// be strictly decreasing and nonnegative.
std::vector<LassoFit> lasso_path(const Dataset& ds, const std::vector<double>& grid,
                                 const SolverOptions& opts = {});

/// Cumulative solver-call counters, for instrumentation and tuning-cost
/// assertions. Thread safe.
struct SolverCounters {
  static std::uint64_t lasso_fits();
  static std::uint64_t ridge_solves();
  static std::uint64_t enet_fits();
  static void reset();
};

}  // namespace dlselect
