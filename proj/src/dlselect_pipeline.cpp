#include "dlselect/dlselect_pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "dlselect/errors.hpp"

namespace dlselect {

namespace {

double validation_mse(const Dataset& val, const Vector& beta) {
  return (val.Y - val.X * beta).squaredNorm() / static_cast<double>(val.n());
}

}  // namespace

Dataset reduced_design(const Dataset& ds, const ActiveSet& S) {
  if (S.ambient() != static_cast<int>(ds.p())) {
    throw DimensionMismatch("reduced_design: active set ambient does not match p");
  }
  if (S.empty_set()) throw EmptySelection("reduced_design: empty selection");

  Dataset red;
  red.X.resize(ds.n(), S.size());
  for (int i = 0; i < S.size(); ++i) {
    red.X.col(i) = ds.X.col(S.indices()[static_cast<std::size_t>(i)]);
  }
  red.Y = ds.Y;
  red.standardized = ds.standardized;
  if (ds.std_record.col_means.size() == ds.p()) {
    red.std_record.col_means.resize(S.size());
    red.std_record.col_scales.resize(S.size());
    for (int i = 0; i < S.size(); ++i) {
      const int j = S.indices()[static_cast<std::size_t>(i)];
      red.std_record.col_means[i] = ds.std_record.col_means[j];
      red.std_record.col_scales[i] = ds.std_record.col_scales[j];
    }
    red.std_record.y_mean = ds.std_record.y_mean;
  }
  return red;
}

Vector embed_coefficients(const Vector& reduced_beta, const ActiveSet& S) {
  if (reduced_beta.size() != S.size()) {
    throw DimensionMismatch("embed_coefficients: length does not match the selection");
  }
  Vector beta = Vector::Zero(S.ambient());
  for (int i = 0; i < S.size(); ++i) {
    beta[S.indices()[static_cast<std::size_t>(i)]] = reduced_beta[i];
  }
  return beta;
}

SelectionArtifacts dlselect(const Dataset& ds, double lambda1, const SolverOptions& opts,
                            double tol_active) {
  if (lambda1 <= 0.0) throw DegenerateLambda("dlselect: lambda1 must be positive");
  SelectionArtifacts art;
  art.fit = fit_lasso(ds, lambda1, opts);
  art.dual = dual_vector(ds, art.fit, tol_active);
  art.selected = dual_active_set(art.dual);
  if (art.selected.empty_set()) {
    throw EmptySelection("dlselect: no dual constraint is tight; lambda1 too large");
  }
  return art;
}

PipelineResult dlselect_ridge(const Dataset& ds, double lambda1, double lambda2,
                              const SolverOptions& opts, double tol_active) {
  SelectionArtifacts art = dlselect(ds, lambda1, opts, tol_active);
  const Dataset red = reduced_design(ds, art.selected);
  const RidgeFit ridge = fit_ridge(red, lambda2);

  PipelineResult result;
  result.lambda1 = lambda1;
  result.lambda2 = lambda2;
  result.selected = art.selected;
  result.beta = embed_coefficients(ridge.beta, art.selected);
  result.diagnostics.lasso_kkt = art.fit.kkt_residual;
  result.diagnostics.lasso_objective = art.fit.objective;
  result.diagnostics.lasso_iterations = art.fit.iterations;
  result.diagnostics.dual_feasibility_margin = art.dual.feasibility_margin;
  result.diagnostics.gap = duality_gap(ds, art.fit);
  result.diagnostics.containment_ok = art.fit.support().is_subset_of(art.selected);
  return result;
}

Lambda1Choice tune_lambda1(const Dataset& train, const Dataset& val,
                           const std::vector<double>& grid, const SolverOptions& opts) {
  if (grid.empty()) throw InvalidArgument("tune_lambda1: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0.0) throw InvalidArgument("tune_lambda1: grid values must be positive");
    if (i > 0 && grid[i] >= grid[i - 1])
      throw InvalidArgument("tune_lambda1: grid must be strictly decreasing");
  }
  if (train.p() != val.p()) throw DimensionMismatch("tune_lambda1: train/val differ in p");

  Lambda1Choice choice;
  double best = std::numeric_limits<double>::infinity();
  Vector warm = Vector::Zero(train.p());
  for (double lam : grid) {
    LassoFit fit = fit_lasso_warm(train, lam, warm, opts);
    warm = fit.beta;
    const double m = validation_mse(val, fit.beta);
    choice.trace.push_back({lam, m, fit.support().size()});
    if (m < best - 1e-12) {
      best = m;
      choice.lambda1 = lam;
      choice.fit = std::move(fit);
    }
  }
  return choice;
}

Lambda2Choice tune_lambda2(const Dataset& train_reduced, const Dataset& val_reduced,
                           const std::vector<double>& grid) {
  if (grid.empty()) throw InvalidArgument("tune_lambda2: empty grid");
  if (train_reduced.p() != val_reduced.p()) {
    throw DimensionMismatch("tune_lambda2: train/val differ in p");
  }
  std::vector<double> sorted = grid;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Lambda2Choice choice;
  double best = std::numeric_limits<double>::infinity();
  for (double lam : sorted) {
    RidgeFit fit = fit_ridge(train_reduced, lam);
    const double m = validation_mse(val_reduced, fit.beta);
    choice.trace.push_back({lam, m, static_cast<int>(train_reduced.p())});
    if (m < best - 1e-12) {
      best = m;
      choice.lambda2 = lam;
      choice.fit = std::move(fit);
    }
  }
  return choice;
}

std::vector<double> default_lambda1_grid(const Dataset& train, int size, double ratio) {
  if (size < 1) throw InvalidArgument("grid size must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidArgument("grid ratio must lie in (0, 1)");
  const double lmax = (train.X.transpose() * train.Y).cwiseAbs().maxCoeff();
  if (lmax <= 0.0) throw DegenerateLambda("default_lambda1_grid: X'Y is identically zero");
  std::vector<double> grid(static_cast<std::size_t>(size));
  if (size == 1) {
    grid[0] = lmax;
    return grid;
  }
  const double step = std::log(ratio) / (size - 1);
  for (int i = 0; i < size; ++i) {
    grid[static_cast<std::size_t>(i)] = lmax * std::exp(step * i);
  }
  return grid;
}

std::vector<double> default_lambda2_grid(int size, double lo, double hi) {
  if (size < 1) throw InvalidArgument("grid size must be positive");
  if (!(lo > 0.0 && lo < hi)) throw InvalidArgument("grid bounds must satisfy 0 < lo < hi");
  std::vector<double> grid(static_cast<std::size_t>(size));
  if (size == 1) {
    grid[0] = hi;
    return grid;
  }
  const double step = (std::log(lo) - std::log(hi)) / (size - 1);
  for (int i = 0; i < size; ++i) {
    grid[static_cast<std::size_t>(i)] = std::exp(std::log(hi) + step * i);
  }
  return grid;
}

PipelineResult dlselect_ridge_tuned(const Dataset& train, const Dataset& val,
                                    const std::vector<double>& grid1,
                                    const std::vector<double>& grid2,
                                    const SolverOptions& opts, double tol_active) {
  Lambda1Choice c1 = tune_lambda1(train, val, grid1, opts);

  PipelineResult result;
  result.lambda1 = c1.lambda1;
  result.diagnostics.lambda1_trace = std::move(c1.trace);
  result.diagnostics.lasso_kkt = c1.fit.kkt_residual;
  result.diagnostics.lasso_objective = c1.fit.objective;
  result.diagnostics.lasso_iterations = c1.fit.iterations;

  const DualState dual = dual_vector(train, c1.fit, tol_active);
  result.diagnostics.dual_feasibility_margin = dual.feasibility_margin;
  result.diagnostics.gap = duality_gap(train, c1.fit);

  ActiveSet selected = dual_active_set(dual);
  if (selected.empty_set()) {
    // Degenerate but possible on pathological validation sets; emit the
    // single best-correlated column rather than no model at all.
    Eigen::Index j = 0;
    (train.X.transpose() * train.Y).cwiseAbs().maxCoeff(&j);
    selected = ActiveSet({static_cast<int>(j)}, static_cast<int>(train.p()));
    result.diagnostics.fallback_used = true;
  }
  result.selected = selected;
  result.diagnostics.containment_ok =
      result.diagnostics.fallback_used || c1.fit.support().is_subset_of(selected);

  Lambda2Choice c2 = tune_lambda2(reduced_design(train, selected),
                                  reduced_design(val, selected), grid2);
  result.lambda2 = c2.lambda2;
  result.diagnostics.lambda2_trace = std::move(c2.trace);
  result.beta = embed_coefficients(c2.fit.beta, selected);
  return result;
}

}  // namespace dlselect
