#pragma once

#include <vector>

#include "dlselect/baseline_estimators.hpp"
#include "dlselect/core_model.hpp"
#include "dlselect/dual_selector.hpp"
#include "dlselect/lasso_solver.hpp"

namespace dlselect {

/// One probed grid value during tuning.
struct TuneEntry {
  double lambda = 0.0;
  double val_mse = 0.0;
  /// Lasso support size (lambda1 loop) or selected-set size (lambda2 loop).
  int support_size = 0;
};

struct PipelineDiagnostics {
  double lasso_kkt = 0.0;
  double lasso_objective = 0.0;
  int lasso_iterations = 0;
  double dual_feasibility_margin = 0.0;
  double gap = 0.0;
  /// Lasso support contained in the dual active set (always expected).
  bool containment_ok = true;
  /// Empty dual selection replaced by the single best-correlated column.
  bool fallback_used = false;
  std::vector<TuneEntry> lambda1_trace;
  std::vector<TuneEntry> lambda2_trace;
};

struct PipelineResult {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  ActiveSet selected;
  /// Ridge values on `selected`, exact zeros elsewhere.
  Vector beta;
  PipelineDiagnostics diagnostics;
};

/// Column subset of ds at S, std_record subset to match. Throws
/// EmptySelection when S is empty.
Dataset reduced_design(const Dataset& ds, const ActiveSet& S);

/// Scatter reduced-design coefficients into a length-ambient vector with
/// exact zeros off S.
Vector embed_coefficients(const Vector& reduced_beta, const ActiveSet& S);

/// Selection stage: lasso fit, dual vector, dual active set.
struct SelectionArtifacts {
  ActiveSet selected;
  DualState dual;
  LassoFit fit;
};

/// Steps 1-3: fit at lambda1, recover the dual vector, read off the tight
/// constraints. Throws EmptySelection when no constraint is tight (lambda1
/// too large).
SelectionArtifacts dlselect(const Dataset& ds, double lambda1,
                            const SolverOptions& opts = {},
                            double tol_active = kDefaultTolActive);

/// Full run at fixed penalties: selection then a ridge refit on the reduced
/// design embedded back into p coordinates.
PipelineResult dlselect_ridge(const Dataset& ds, double lambda1, double lambda2,
                              const SolverOptions& opts = {},
                              double tol_active = kDefaultTolActive);

struct Lambda1Choice {
  double lambda1 = 0.0;
  /// The winning fit, so callers need no extra solve.
  LassoFit fit;
  std::vector<TuneEntry> trace;
};

struct Lambda2Choice {
  double lambda2 = 0.0;
  RidgeFit fit;
  std::vector<TuneEntry> trace;
};

/// lambda1 minimizing validation MSE of the lasso predictor itself. The
/// grid must be positive and strictly decreasing (fits are warm-started).
/// Ties within 1e-12 go to the larger lambda.
Lambda1Choice tune_lambda1(const Dataset& train, const Dataset& val,
                           const std::vector<double>& grid,
                           const SolverOptions& opts = {});

/// lambda2 minimizing ridge validation MSE on the reduced designs.
/// Duplicates are dropped; ties go to the larger lambda.
Lambda2Choice tune_lambda2(const Dataset& train_reduced, const Dataset& val_reduced,
                           const std::vector<double>& grid);

/// size log-spaced values from max_j |X_j'Y| down to ratio times it,
/// descending.
std::vector<double> default_lambda1_grid(const Dataset& train, int size = 50,
                                         double ratio = 1e-3);

/// size log-spaced values spanning [lo, hi], descending.
std::vector<double> default_lambda2_grid(int size = 50, double lo = 1e-4,
                                         double hi = 1e4);

/// Algorithm with both penalties tuned sequentially on (train, val): two
/// independent one-dimensional searches, |grid1| lasso fits plus |grid2|
/// ridge solves. An empty dual selection at the tuned lambda1 falls back to
/// the largest-|X_j'Y| single column (diagnostics.fallback_used).
PipelineResult dlselect_ridge_tuned(const Dataset& train, const Dataset& val,
                                    const std::vector<double>& grid1,
                                    const std::vector<double>& grid2,
                                    const SolverOptions& opts = {},
                                    double tol_active = kDefaultTolActive);

}  // namespace dlselect
