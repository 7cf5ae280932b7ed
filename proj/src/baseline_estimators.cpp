#include "dlselect/baseline_estimators.hpp"

#include <cmath>
#include <vector>

#include "dlselect/errors.hpp"
#include "dlselect/solver_detail.hpp"

namespace dlselect {

RidgeFit fit_ridge(const Dataset& ds, double lambda2) {
  if (lambda2 <= 0.0) throw NonPositiveLambda(lambda2);
  const Eigen::Index n = ds.n();
  const Eigen::Index p = ds.p();
  detail::count_ridge_solve();

  RidgeFit fit;
  fit.lambda2 = lambda2;
  const Vector xty = ds.X.transpose() * ds.Y;

  if (p > n) {
    // beta = X'(XX' + lambda2 I)^{-1} Y, cheaper and identical by the
    // Woodbury identity.
    Matrix K = ds.X * ds.X.transpose();
    K.diagonal().array() += lambda2;
    fit.beta = ds.X.transpose() * Eigen::LLT<Matrix>(K).solve(ds.Y);
    fit.used_dual_form = true;
  } else {
    Matrix A = ds.X.transpose() * ds.X;
    A.diagonal().array() += lambda2;
    fit.beta = Eigen::LLT<Matrix>(A).solve(xty);
  }

  const Vector defect =
      ds.X.transpose() * (ds.X * fit.beta) + lambda2 * fit.beta - xty;
  fit.normal_residual = defect.cwiseAbs().maxCoeff();
  return fit;
}

double enet_objective(const Dataset& ds, const Vector& beta, double lambda1,
                      double lambda2) {
  if (beta.size() != ds.p()) {
    throw DimensionMismatch("enet_objective: coefficient length does not match p");
  }
  return 0.5 * (ds.Y - ds.X * beta).squaredNorm() + lambda1 * beta.lpNorm<1>() +
         0.5 * lambda2 * beta.squaredNorm();
}

namespace {

// Composite KKT residual: grad_j = X_j'(Y - X beta) - lambda2 beta_j must lie
// in lambda1 * d||beta||_1.
double enet_kkt(const Vector& grad_ls, const Vector& beta, double lambda1,
                double lambda2) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    const double g = grad_ls[j] - lambda2 * beta[j];
    const double r = beta[j] != 0.0
                         ? std::abs(g - lambda1 * (beta[j] > 0.0 ? 1.0 : -1.0))
                         : std::max(0.0, std::abs(g) - lambda1);
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace

EnetFit fit_enet(const Dataset& ds, double lambda1, double lambda2,
                 const SolverOptions& opts) {
  return fit_enet_warm(ds, lambda1, lambda2, Vector::Zero(ds.p()), opts);
}

EnetFit fit_enet_warm(const Dataset& ds, double lambda1, double lambda2,
                      const Vector& beta0, const SolverOptions& opts) {
  opts.validate();
  if (lambda1 < 0.0 || lambda2 < 0.0)
    throw InvalidArgument("elastic net penalties must be nonnegative");
  if (lambda1 == 0.0 && lambda2 == 0.0)
    throw InvalidArgument("elastic net needs lambda1 > 0 or lambda2 > 0");
  if (beta0.size() != ds.p())
    throw DimensionMismatch("warm start length does not match p");
  detail::count_enet_fit();

  const Eigen::Index p = ds.p();
  const std::vector<int> order = detail::resolve_order(opts, static_cast<int>(p));
  const double tol_kkt = detail::resolve_tol_kkt(ds, opts);

  const Vector colsq = ds.X.colwise().squaredNorm();
  Vector beta = beta0;
  Vector resid = ds.Y - ds.X * beta;

  EnetFit fit;
  fit.lambda1 = lambda1;
  fit.lambda2 = lambda2;
  fit.tol_kkt_used = tol_kkt;
  double obj = 0.5 * resid.squaredNorm() + lambda1 * beta.lpNorm<1>() +
               0.5 * lambda2 * beta.squaredNorm();

  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    for (int j : order) {
      const double denom = colsq[j] + lambda2;
      if (denom <= 0.0) {
        beta[j] = 0.0;
        continue;
      }
      const double z = ds.X.col(j).dot(resid) + colsq[j] * beta[j];
      const double bj = soft_threshold(z, lambda1) / denom;
      if (bj != beta[j]) {
        resid += ds.X.col(j) * (beta[j] - bj);
        beta[j] = bj;
      }
    }
    if (sweep % 256 == 0) resid = ds.Y - ds.X * beta;

    const double new_obj = 0.5 * resid.squaredNorm() + lambda1 * beta.lpNorm<1>() +
                           0.5 * lambda2 * beta.squaredNorm();
    fit.sweep_objectives.push_back(new_obj);
    const double rel_change = std::abs(obj - new_obj) / std::max(1.0, std::abs(new_obj));
    obj = new_obj;
    fit.iterations = sweep;

    if (rel_change <= opts.tol_obj) {
      const Vector grad = ds.X.transpose() * resid;
      const double res = enet_kkt(grad, beta, lambda1, lambda2);
      if (res <= tol_kkt) {
        fit.beta = std::move(beta);
        fit.kkt_residual = res;
        fit.objective = new_obj;
        return fit;
      }
    }
  }

  LassoFit best;
  best.beta = std::move(beta);
  best.lambda = lambda1;
  best.iterations = fit.iterations;
  best.kkt_residual = enet_kkt(ds.X.transpose() * resid, best.beta, lambda1, lambda2);
  best.objective = obj;
  best.tol_kkt_used = tol_kkt;
  best.sweep_objectives = std::move(fit.sweep_objectives);
  throw NotConverged(std::move(best));
}

}  // namespace dlselect
