// Acceptance harness: one [PASS]/[FAIL] line per criterion, exit code equal
// to the number of failures. Tolerances and seeds are pinned here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dlselect/design_conditions.hpp"
#include "dlselect/dlselect_pipeline.hpp"
#include "dlselect/dual_selector.hpp"
#include "dlselect/evaluation_harness.hpp"
#include "dlselect/lasso_solver.hpp"
#include "dlselect/reference_designs.hpp"
#include "dlselect/rng.hpp"
#include "dlselect/sim_designs.hpp"
#include "oracles.hpp"

using namespace dlselect;

namespace {

struct Criterion {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// --- 1. solver vs exhaustive sign-pattern oracle -------------------------

Criterion criterion1() {
  double max_err = 0.0;
  double max_gap = 0.0;
  int solved = 0;
  Rng master(101);
  for (int i = 0; i < 200; ++i) {
    const int n = 10 + i % 21;
    const int p = 2 + i % 5;
    const Dataset ds = oracles::random_instance(10000 + static_cast<std::uint64_t>(i), n, p);
    const double lmax = lambda_max(ds);
    const double lambda = (0.05 + 0.9 * master.uniform01()) * lmax;

    SolverOptions opts;
    opts.tol_obj = 1e-14;
    opts.tol_kkt = 1e-10 * lmax;
    const LassoFit fit = fit_lasso(ds, lambda, opts);

    const auto oracle = oracles::sign_pattern_lasso(ds.X, ds.Y, lambda);
    if (!oracle) return {false, "oracle found no admissible sign pattern at instance " +
                                    std::to_string(i)};
    max_err = std::max(max_err, (fit.beta - *oracle).cwiseAbs().maxCoeff());
    max_gap = std::max(max_gap,
                       duality_gap(ds, fit) / (1.0 + std::abs(fit.objective)));
    ++solved;
  }
  const bool pass = solved == 200 && max_err <= 1e-6 && max_gap <= 1e-8;
  return {pass, "200 instances, max coordinate error " + fmt(max_err) +
                    ", max normalized gap " + fmt(max_gap)};
}

// --- 2. reference example matrices ----------------------------------------

Criterion criterion2() {
  const auto t0 = std::chrono::steady_clock::now();

  bool psd_ok = true;
  for (double rho : {0.05, 0.25, 0.45, 0.5 - 1e-7, 0.5, -0.5}) {
    psd_ok = psd_ok && check_psd(border_noise_covariance(rho)).holds;
  }
  for (double rho : {0.5 + 1e-7, 0.6, -0.6}) {
    psd_ok = psd_ok && !check_psd(border_noise_covariance(rho)).holds;
  }

  double ic_err = 0.0;
  const ActiveSet S4({0, 1, 2, 3}, 5);
  Eigen::VectorXi ones5 = Eigen::VectorXi::Zero(5);
  ones5.head(4).setOnes();
  for (int k = 1; k <= 9; ++k) {
    const double rho = 0.05 * k;
    const double margin = check_ic(border_noise_covariance(rho), S4, SignVector(ones5)).margin;
    ic_err = std::max(ic_err, std::abs(margin - (1.0 - 4.0 * rho)));
  }

  const ActiveSet S6({0, 1, 2, 3, 4, 5}, 7);
  Eigen::VectorXi ones7 = Eigen::VectorXi::Zero(7);
  ones7.head(6).setOnes();
  bool singular_ok = false;
  try {
    check_ic(duplicated_pairs_covariance(0.2), S6, SignVector(ones7));
  } catch (const SingularC11&) {
    singular_ok = true;
  }

  auto cands = enumerate_candidate_submatrices(
      duplicated_pairs_covariance(0.2).topLeftCorner(6, 6));
  std::sort(cands.begin(), cands.end());
  const std::vector<std::vector<int>> expected = {
      {0, 2, 4, 5}, {0, 3, 4, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}};
  const bool cands_ok = cands == expected;

  const bool pic_ok =
      check_pic(duplicated_pairs_covariance(0.2), S6, SignVector(ones7)).holds &&
      !check_pic(duplicated_pairs_covariance(0.3), S6, SignVector(ones7)).holds;

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass =
      psd_ok && ic_err <= 1e-10 && singular_ok && cands_ok && pic_ok && secs < 1.0;
  return {pass, std::string("PSD boundary ") + (psd_ok ? "ok" : "WRONG") +
                    ", IC margin error " + fmt(ic_err) + ", SingularC11 " +
                    (singular_ok ? "raised" : "MISSING") + ", candidates " +
                    (cands_ok ? "4/4" : "WRONG") + ", PIC 0.2/0.3 " +
                    (pic_ok ? "ok" : "WRONG") + ", " + fmt(secs) + " s"};
}

// --- 3. containment: support inside the dual active set -------------------

Criterion criterion3() {
  int violations = 0;
  double worst_margin = 1.0;
  Rng master(103);
  for (int i = 0; i < 500; ++i) {
    const int p = 2 + i % 19;
    const int n = p + 5 + i % 30;
    const bool duplicate = p >= 2 && i % 3 == 0;
    const Dataset ds =
        oracles::random_instance(30000 + static_cast<std::uint64_t>(i), n, p, duplicate);
    const double lambda = (0.02 + 0.9 * master.uniform01()) * lambda_max(ds);

    SolverOptions opts;
    opts.tol_obj = 1e-12;
    opts.tol_kkt = 1e-6 * lambda;
    const LassoFit fit = fit_lasso(ds, lambda, opts);
    const DualState dual = dual_vector(ds, fit);
    const ActiveSet active = dual_active_set(dual);
    const ActiveSet support = fit.support();
    if (!support.is_subset_of(active)) ++violations;
    for (int j : support.indices()) {
      worst_margin =
          std::min(worst_margin, std::abs(dual.correlations[j]) / lambda - (1.0 - 1e-4));
    }
  }
  return {violations == 0, "500 pairs, " + std::to_string(violations) +
                               " violations, worst support tightness slack " +
                               fmt(worst_margin)};
}

// --- 4. equality of dual set and support under IC -------------------------

Criterion criterion4() {
  Rng master(104);
  int accepted = 0;
  int equal_cases = 0;
  int attempts = 0;
  while (accepted < 100 && attempts < 2000) {
    ++attempts;
    const int p = 6 + accepted % 7;
    const int n = 3 * p;
    Matrix W(p, p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) W(a, b) = master.normal();
    Matrix C = (0.15 / p) * (W + W.transpose());
    for (int j = 0; j < p; ++j) C(j, j) = 1.0;
    if (!check_psd(C).holds) continue;

    const int s = 1 + accepted % (p / 2);
    std::vector<int> perm(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) perm[static_cast<std::size_t>(j)] = j;
    for (int j = p - 1; j > 0; --j) {
      const int k = static_cast<int>(master.uniform01() * (j + 1));
      std::swap(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(k)]);
    }
    std::vector<int> support(perm.begin(), perm.begin() + s);
    std::sort(support.begin(), support.end());
    Vector beta = Vector::Zero(p);
    for (int j : support) beta[j] = master.uniform01() < 0.5 ? 1.0 : -1.0;
    const ActiveSet S(support, p);

    double margin = 0.0;
    try {
      margin = check_ic(C, S, sign_vector(beta)).margin;
    } catch (const SingularC11&) {
      continue;
    }
    if (margin <= 0.1) continue;
    ++accepted;

    const Dataset ds =
        noiseless_instance(C, beta, n, 40000 + static_cast<std::uint64_t>(accepted));
    double min_corr = std::numeric_limits<double>::infinity();
    for (int j : support) min_corr = std::min(min_corr, std::abs(ds.X.col(j).dot(ds.Y)));
    const double bound = 0.5 * margin * min_corr;
    const double lambda = (0.05 + 0.95 * master.uniform01()) * bound;

    SolverOptions opts;
    opts.tol_obj = 1e-13;
    opts.tol_kkt = 1e-7 * lambda;
    const LassoFit fit = fit_lasso(ds, lambda, opts);
    const ActiveSet active = dual_active_set(dual_vector(ds, fit));
    if (active.indices() == fit.support().indices()) ++equal_cases;
  }
  const bool pass = accepted == 100 && equal_cases == 100;
  return {pass, std::to_string(equal_cases) + "/" + std::to_string(accepted) +
                    " designs with dual set == lasso support (" +
                    std::to_string(attempts) + " sampled)"};
}

// --- 5. PIC implies exact dual selection ----------------------------------

// Group design: k mutually orthogonal groups of exact duplicates plus one
// correlated noise column; PIC margin 1 - sum of noise correlations.
struct GroupDesign {
  Matrix C;
  std::vector<int> support;
  Vector beta;
  int p = 0;
};

GroupDesign make_group_design(int k, const std::vector<int>& copies, double zeta) {
  GroupDesign d;
  int p = 1;
  for (int g = 0; g < k; ++g) p += copies[static_cast<std::size_t>(g)];
  d.p = p;
  d.C = Matrix::Identity(p, p);
  d.beta = Vector::Zero(p);
  int col = 0;
  for (int g = 0; g < k; ++g) {
    const int m = copies[static_cast<std::size_t>(g)];
    const double cg = zeta / (k * std::sqrt(static_cast<double>(m)));
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) d.C(col + a, col + b) = 1.0;
      d.C(col + a, p - 1) = cg;
      d.C(p - 1, col + a) = cg;
      d.support.push_back(col + a);
      d.beta[col + a] = 1.0;
    }
    col += m;
  }
  return d;
}

bool sweep_selects_exactly(const Dataset& ds, const std::vector<int>& support) {
  const auto n = static_cast<double>(ds.n());
  for (int i = 0; i < 10; ++i) {
    const double lambda = n * (0.05 + 0.07 * i);
    SolverOptions opts;
    opts.tol_obj = 1e-13;
    opts.tol_kkt = 1e-7 * lambda;
    const LassoFit fit = fit_lasso(ds, lambda, opts);
    const ActiveSet active = dual_active_set(dual_vector(ds, fit));
    if (active.indices() != support) return false;
  }
  return true;
}

Criterion criterion5() {
  int cases = 0;
  int ok = 0;

  // The 7x7 family across its PIC-safe correlations.
  Vector beta7 = Vector::Zero(7);
  beta7.head(6).setOnes();
  const std::vector<int> support7 = {0, 1, 2, 3, 4, 5};
  for (double rho : {0.05, 0.1, 0.15, 0.2}) {
    const ActiveSet S(support7, 7);
    if (check_pic(duplicated_pairs_covariance(rho), S, sign_vector(beta7)).margin <= 0.05) {
      continue;
    }
    ++cases;
    const Dataset ds = noiseless_instance(duplicated_pairs_covariance(rho), beta7, 40,
                                          50000 + static_cast<std::uint64_t>(cases));
    if (sweep_selects_exactly(ds, support7)) ++ok;
  }

  // 20 randomized duplicated-group constructions.
  Rng master(105);
  for (int i = 0; i < 20; ++i) {
    const int k = 2 + i % 4;
    std::vector<int> copies(static_cast<std::size_t>(k), 1);
    for (int g = 0; g < k; ++g) {
      copies[static_cast<std::size_t>(g)] = 1 + static_cast<int>(master.uniform01() * 3.0);
    }
    if (*std::max_element(copies.begin(), copies.end()) < 2) copies[0] = 2;
    const double zeta = 0.3 + 0.6 * master.uniform01();
    const GroupDesign d = make_group_design(k, copies, zeta);

    const ActiveSet S(d.support, d.p);
    const double margin = check_pic(d.C, S, sign_vector(d.beta)).margin;
    if (margin <= 0.05) return {false, "construction " + std::to_string(i) +
                                           " missed the PIC margin filter"};
    ++cases;
    const Dataset ds =
        noiseless_instance(d.C, d.beta, 4 * d.p, 51000 + static_cast<std::uint64_t>(i));
    if (sweep_selects_exactly(ds, d.support)) ++ok;
  }

  const bool pass = cases == 24 && ok == cases;
  return {pass, std::to_string(ok) + "/" + std::to_string(cases) +
                    " designs selected exactly the true support across the sweep"};
}

// --- 6 and 7: scaled benchmark orderings ----------------------------------

const MethodResult& find_method(const ExperimentResult& res, Method m) {
  for (const MethodResult& mr : res.methods) {
    if (mr.method == m) return mr;
  }
  throw InvalidArgument("method missing from the experiment result");
}

Criterion criterion6() {
  DesignSpec spec;
  spec.kind = DesignKind::block_diagonal;
  spec.p = 100;
  spec.block_size = 10;
  spec.num_blocks = 10;
  spec.rho = 0.9;
  spec.s = 20;
  spec.n_train = 200;
  spec.n_val = 200;
  spec.n_test = 1000;
  spec.sigma = 1.0;
  spec.design_seed = 20260814;
  spec.reps = 20;

  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult res = run_experiment(spec, all_methods(), GridConfig{}, 0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const MethodResult& lasso = find_method(res, Method::Lasso);
  const MethodResult& ridge = find_method(res, Method::Ridge);
  const MethodResult& dls = find_method(res, Method::DLSelectRidge);

  const bool dls_tpr_ok = dls.median_tpr == 1.0;
  const bool lasso_tpr_ok = lasso.median_tpr <= 0.8;
  const bool mse_ok = dls.median_mse < ridge.median_mse;
  const bool time_ok = secs < 600.0;
  const bool pass = dls_tpr_ok && lasso_tpr_ok && mse_ok && time_ok &&
                    res.failures.empty() && res.containment_violations == 0;
  return {pass, "median TPR dlselect " + fmt(dls.median_tpr) + " (want 1.0), lasso " +
                    fmt(lasso.median_tpr) + " (want <= 0.8); median MSE dlselect " +
                    fmt(dls.median_mse) + " vs ridge " + fmt(ridge.median_mse) + "; " +
                    fmt(secs) + " s"};
}

Criterion criterion7() {
  DesignSpec spec;
  spec.kind = DesignKind::identity;
  spec.p = 100;
  spec.s = 20;
  spec.n_train = 200;
  spec.n_val = 200;
  spec.n_test = 1000;
  spec.sigma = 1.0;
  spec.design_seed = 20260814;
  spec.reps = 20;

  const ExperimentResult res = run_experiment(spec, all_methods(), GridConfig{}, 0);
  const MethodResult& lasso = find_method(res, Method::Lasso);
  const MethodResult& ridge = find_method(res, Method::Ridge);
  const MethodResult& enet = find_method(res, Method::Enet);
  const MethodResult& dls = find_method(res, Method::DLSelectRidge);

  const bool tpr_ok =
      lasso.median_tpr == 1.0 && enet.median_tpr == 1.0 && dls.median_tpr == 1.0;
  const bool mse_ok = lasso.median_mse <= ridge.median_mse;
  const bool pass = tpr_ok && mse_ok && res.failures.empty();
  return {pass, "median TPR lasso/enet/dlselect " + fmt(lasso.median_tpr) + "/" +
                    fmt(enet.median_tpr) + "/" + fmt(dls.median_tpr) +
                    "; median MSE lasso " + fmt(lasso.median_mse) + " <= ridge " +
                    fmt(ridge.median_mse)};
}

// --- 8. property suites ----------------------------------------------------

Criterion criterion8() {
  std::vector<std::string> broken;

  {  // standardization idempotence
    const Dataset ds = oracles::random_instance(801, 40, 6);
    const Dataset again = standardize(ds.X, ds.Y);
    if ((again.X - ds.X).cwiseAbs().maxCoeff() > 1e-12 ||
        (again.Y - ds.Y).cwiseAbs().maxCoeff() > 1e-12) {
      broken.push_back("standardize idempotence");
    }
  }
  {  // per-sweep objective monotonicity
    const Dataset ds = oracles::random_instance(802, 60, 10);
    const LassoFit fit = fit_lasso(ds, 0.2 * lambda_max(ds));
    for (std::size_t i = 1; i < fit.sweep_objectives.size(); ++i) {
      if (fit.sweep_objectives[i] >
          fit.sweep_objectives[i - 1] + 1e-12 * (1.0 + std::abs(fit.sweep_objectives[i]))) {
        broken.push_back("sweep monotonicity");
        break;
      }
    }
  }
  {  // enet penalty reductions
    const Dataset ds = oracles::random_instance(803, 50, 8);
    const double lmax = lambda_max(ds);
    SolverOptions opts;
    opts.tol_obj = 1e-13;
    opts.tol_kkt = 1e-11 * lmax;
    const double l1 = 0.3 * lmax;
    if ((fit_enet(ds, l1, 0.0, opts).beta - fit_lasso(ds, l1, opts).beta)
            .cwiseAbs()
            .maxCoeff() > 1e-8) {
      broken.push_back("enet->lasso reduction");
    }
    if ((fit_enet(ds, 0.0, 4.0, opts).beta - fit_ridge(ds, 4.0).beta).cwiseAbs().maxCoeff() >
        1e-8) {
      broken.push_back("enet->ridge reduction");
    }
  }
  {  // grouping effect on duplicated columns
    const Dataset dup = oracles::random_instance(804, 50, 6, true);
    SolverOptions opts;
    opts.tol_obj = 1e-15;
    opts.tol_kkt = 1e-12 * lambda_max(dup);
    const EnetFit fit = fit_enet(dup, 0.1 * lambda_max(dup), 1.0, opts);
    if (std::abs(fit.beta[0] - fit.beta[1]) > 1e-8 || std::abs(fit.beta[0]) < 1e-6) {
      broken.push_back("grouping effect");
    }
  }
  {  // bitwise reproducibility
    DesignSpec spec;
    spec.kind = DesignKind::identity;
    spec.p = 8;
    spec.s = 3;
    spec.n_train = 40;
    spec.n_val = 40;
    spec.n_test = 40;
    spec.design_seed = 805;
    spec.reps = 2;
    GridConfig grids;
    grids.lambda1_size = 10;
    grids.lambda2_size = 10;
    const std::string a = write_raw_metrics(run_experiment(spec, all_methods(), grids));
    const std::string b = write_raw_metrics(run_experiment(spec, all_methods(), grids));
    if (a != b) broken.push_back("bitwise determinism");
  }
  {  // tuning call count
    const Dataset train = oracles::random_instance(806, 50, 8);
    const Dataset val = oracles::random_instance(807, 50, 8);
    const auto grid1 = default_lambda1_grid(train, 13);
    const auto grid2 = default_lambda2_grid(9);
    SolverCounters::reset();
    dlselect_ridge_tuned(train, val, grid1, grid2);
    if (SolverCounters::lasso_fits() != grid1.size() ||
        SolverCounters::ridge_solves() != grid2.size()) {
      broken.push_back("tuning call count");
    }
  }

  if (broken.empty()) return {true, "6/6 property suites"};
  std::string detail = "broken:";
  for (const std::string& b : broken) detail += " " + b + ";";
  return {false, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"lasso matches the exhaustive sign-pattern oracle", criterion1},
      {"reference 5x5/7x7 condition checks", criterion2},
      {"lasso support contained in the dual active set", criterion3},
      {"dual set equals lasso support under the IC", criterion4},
      {"PIC designs select exactly the true support", criterion5},
      {"scaled block-diagonal benchmark ordering", criterion6},
      {"scaled identity benchmark pattern", criterion7},
      {"property suites", criterion8},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %zu: %s (%s; %.1f s)\n", c.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), c.detail.c_str(), secs);
    std::fflush(stdout);
    if (!c.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  } else {
    std::printf("all %zu criteria passed\n", criteria.size());
  }
  return failures;
}
