#include "dlselect/lasso_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "dlselect/solver_detail.hpp"

namespace dlselect {

namespace {

std::atomic<std::uint64_t> g_lasso_fits{0};
std::atomic<std::uint64_t> g_ridge_solves{0};
std::atomic<std::uint64_t> g_enet_fits{0};

}  // namespace

std::uint64_t SolverCounters::lasso_fits() { return g_lasso_fits.load(); }
std::uint64_t SolverCounters::ridge_solves() { return g_ridge_solves.load(); }
std::uint64_t SolverCounters::enet_fits() { return g_enet_fits.load(); }
void SolverCounters::reset() {
  g_lasso_fits = 0;
  g_ridge_solves = 0;
  g_enet_fits = 0;
}

namespace detail {
void count_ridge_solve() { ++g_ridge_solves; }
void count_enet_fit() { ++g_enet_fits; }
}  // namespace detail

void SolverOptions::validate() const {
  if (tol_obj <= 0.0) throw InvalidArgument("tol_obj must be positive");
  if (tol_kkt && *tol_kkt <= 0.0) throw InvalidArgument("tol_kkt must be positive");
  if (max_sweeps < 1) throw InvalidArgument("max_sweeps must be at least 1");
}

double soft_threshold(double z, double gamma) {
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return 0.0;
}

double lambda_max(const Dataset& ds) {
  if (!ds.standardized) throw InvalidArgument("lambda_max needs a standardized dataset");
  return (ds.X.transpose() * ds.Y).cwiseAbs().maxCoeff();
}

double lasso_objective(const Dataset& ds, const Vector& beta, double lambda) {
  if (beta.size() != ds.p()) throw DimensionMismatch("coefficient length does not match p");
  return 0.5 * (ds.Y - ds.X * beta).squaredNorm() + lambda * beta.lpNorm<1>();
}

namespace detail {

std::vector<int> resolve_order(const SolverOptions& opts, int p) {
  if (!opts.coord_order) {
    std::vector<int> order(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) order[static_cast<std::size_t>(j)] = j;
    return order;
  }
  const std::vector<int>& order = *opts.coord_order;
  if (static_cast<int>(order.size()) != p)
    throw InvalidArgument("coord_order must be a permutation of 0..p-1");
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (int j : order) {
    if (j < 0 || j >= p || seen[static_cast<std::size_t>(j)])
      throw InvalidArgument("coord_order must be a permutation of 0..p-1");
    seen[static_cast<std::size_t>(j)] = true;
  }
  return order;
}

double resolve_tol_kkt(const Dataset& ds, const SolverOptions& opts) {
  if (opts.tol_kkt) return *opts.tol_kkt;
  const double lmax = (ds.X.transpose() * ds.Y).cwiseAbs().maxCoeff();
  return 1e-7 * std::max(lmax, 1e-300);
}

double kkt_residual(const Vector& grad, const Vector& beta, double lambda) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    const double r = beta[j] != 0.0
                         ? std::abs(grad[j] - lambda * (beta[j] > 0.0 ? 1.0 : -1.0))
                         : std::max(0.0, std::abs(grad[j]) - lambda);
    worst = std::max(worst, r);
  }
  return worst;
}

Vector clamped_subgradient(const Vector& grad, double lambda) {
  return (grad / lambda).cwiseMax(-1.0).cwiseMin(1.0);
}

}  // namespace detail

namespace {

// Minimum-norm least squares for the lambda = 0 case. Rank deficiency makes
// the minimizer non-unique; the fit is flagged accordingly.
LassoFit least_squares_fit(const Dataset& ds, const SolverOptions& opts) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(ds.X);
  LassoFit fit;
  fit.beta = cod.solve(ds.Y);
  fit.lambda = 0.0;
  fit.unique_minimizer = cod.rank() == ds.p();
  const Vector grad = ds.X.transpose() * (ds.Y - ds.X * fit.beta);
  fit.kkt_residual = grad.cwiseAbs().maxCoeff();
  fit.objective = lasso_objective(ds, fit.beta, 0.0);
  fit.tol_kkt_used = detail::resolve_tol_kkt(ds, opts);
  fit.sweep_objectives.push_back(fit.objective);
  return fit;
}

}  // namespace

LassoFit fit_lasso_warm(const Dataset& ds, double lambda, const Vector& beta0,
                        const SolverOptions& opts) {
  opts.validate();
  if (lambda < 0.0) throw InvalidArgument("lambda must be nonnegative");
  if (beta0.size() != ds.p()) throw DimensionMismatch("warm start length does not match p");
  ++g_lasso_fits;
  if (lambda == 0.0) return least_squares_fit(ds, opts);

  const Eigen::Index p = ds.p();
  const std::vector<int> order = detail::resolve_order(opts, static_cast<int>(p));
  const double tol_kkt = detail::resolve_tol_kkt(ds, opts);

  const Vector colsq = ds.X.colwise().squaredNorm();
  Vector beta = beta0;
  Vector resid = ds.Y - ds.X * beta;

  LassoFit fit;
  fit.lambda = lambda;
  fit.tol_kkt_used = tol_kkt;
  double obj = 0.5 * resid.squaredNorm() + lambda * beta.lpNorm<1>();

  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    for (int j : order) {
      if (colsq[j] <= 0.0) {
        beta[j] = 0.0;
        continue;
      }
      const double z = ds.X.col(j).dot(resid) + colsq[j] * beta[j];
      const double bj = soft_threshold(z, lambda) / colsq[j];
      if (bj != beta[j]) {
        resid += ds.X.col(j) * (beta[j] - bj);
        beta[j] = bj;
      }
    }
    // Periodic residual refresh against drift from incremental updates.
    if (sweep % 256 == 0) resid = ds.Y - ds.X * beta;

    const double new_obj = 0.5 * resid.squaredNorm() + lambda * beta.lpNorm<1>();
    fit.sweep_objectives.push_back(new_obj);
    const double rel_change = std::abs(obj - new_obj) / std::max(1.0, std::abs(new_obj));
    obj = new_obj;
    fit.iterations = sweep;

    if (rel_change <= opts.tol_obj) {
      const Vector grad = ds.X.transpose() * resid;
      const double res = detail::kkt_residual(grad, beta, lambda);
      if (res <= tol_kkt) {
        fit.beta = std::move(beta);
        fit.kkt_residual = res;
        fit.objective = new_obj;
        fit.subgradient = detail::clamped_subgradient(grad, lambda);
        return fit;
      }
    }
  }

  const Vector grad = ds.X.transpose() * resid;
  fit.beta = std::move(beta);
  fit.kkt_residual = detail::kkt_residual(grad, fit.beta, lambda);
  fit.objective = obj;
  fit.subgradient = detail::clamped_subgradient(grad, lambda);
  throw NotConverged(std::move(fit));
}

LassoFit fit_lasso(const Dataset& ds, double lambda, const SolverOptions& opts) {
  return fit_lasso_warm(ds, lambda, Vector::Zero(ds.p()), opts);
}

std::vector<LassoFit> lasso_path(const Dataset& ds, const std::vector<double>& grid,
                                 const SolverOptions& opts) {
  if (grid.empty()) throw InvalidArgument("lambda grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0) throw InvalidArgument("lambda grid values must be nonnegative");
    if (i > 0 && grid[i] >= grid[i - 1])
      throw InvalidArgument("lambda grid must be strictly decreasing");
  }
  std::vector<LassoFit> fits;
  fits.reserve(grid.size());
  Vector warm = Vector::Zero(ds.p());
  for (double lam : grid) {
    fits.push_back(fit_lasso_warm(ds, lam, warm, opts));
    warm = fits.back().beta;
  }
  return fits;
}

}  // namespace dlselect
