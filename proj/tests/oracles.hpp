#pragma once

// Brute-force reference computations kept independent of the library's
// solve paths: exhaustive sign-pattern lasso optima, long-double objective
// recomputation, and two-pass statistics.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "dlselect/core_model.hpp"
#include "dlselect/rng.hpp"

namespace oracles {

using dlselect::Matrix;
using dlselect::Vector;

// 0.5||Y - X beta||^2 + lambda ||beta||_1 accumulated in long double.
inline long double objective_ld(const Matrix& X, const Vector& Y, const Vector& beta,
                                double lambda) {
  long double rss = 0.0L;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    long double r = Y[i];
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      r -= static_cast<long double>(X(i, j)) * static_cast<long double>(beta[j]);
    }
    rss += r * r;
  }
  long double l1 = 0.0L;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    l1 += fabsl(static_cast<long double>(beta[j]));
  }
  return 0.5L * rss + static_cast<long double>(lambda) * l1;
}

// Global lasso minimizer by enumerating all 3^p sign patterns: solve each
// pattern's stationarity system, keep the KKT-feasible candidates, return
// the one with the lowest objective. Every candidate's objective is at
// least the optimum's, so slack on the feasibility check can only admit
// ties, never a wrong winner.
inline std::optional<Vector> sign_pattern_lasso(const Matrix& X, const Vector& Y, double lambda,
                                                double slack = 1e-7) {
  const Eigen::Index p = X.cols();
  std::optional<Vector> best;
  long double best_obj = std::numeric_limits<long double>::infinity();
  std::vector<int> sigma(static_cast<std::size_t>(p), 0);
  std::uint64_t total = 1;
  for (Eigen::Index j = 0; j < p; ++j) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (Eigen::Index j = 0; j < p; ++j) {
      const int digit = static_cast<int>(c % 3);
      sigma[static_cast<std::size_t>(j)] = digit == 2 ? -1 : digit;
      c /= 3;
    }
    std::vector<Eigen::Index> active;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (sigma[static_cast<std::size_t>(j)] != 0) active.push_back(j);
    }

    Vector beta = Vector::Zero(p);
    if (!active.empty()) {
      const Eigen::Index a = static_cast<Eigen::Index>(active.size());
      Matrix xa(X.rows(), a);
      Vector sa(a);
      for (Eigen::Index k = 0; k < a; ++k) {
        xa.col(k) = X.col(active[static_cast<std::size_t>(k)]);
        sa[k] = sigma[static_cast<std::size_t>(active[static_cast<std::size_t>(k)])];
      }
      Eigen::FullPivLU<Matrix> lu(xa.transpose() * xa);
      if (!lu.isInvertible()) continue;
      const Vector ba = lu.solve(xa.transpose() * Y - lambda * sa);
      bool sign_ok = true;
      for (Eigen::Index k = 0; k < a; ++k) {
        if (ba[k] * sa[k] < -1e-12) sign_ok = false;
        beta[active[static_cast<std::size_t>(k)]] = ba[k];
      }
      if (!sign_ok) continue;
    }
    const Vector resid = Y - X * beta;
    bool feasible = true;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (sigma[static_cast<std::size_t>(j)] == 0 &&
          std::abs(X.col(j).dot(resid)) > lambda + slack) {
        feasible = false;
      }
    }
    if (!feasible) continue;
    const long double obj = objective_ld(X, Y, beta, lambda);
    if (obj < best_obj) {
      best_obj = obj;
      best = beta;
    }
  }
  return best;
}

// Sample correlation via the standard two-pass formula.
inline double two_pass_correlation(const Vector& a, const Vector& b) {
  const double ma = a.mean();
  const double mb = b.mean();
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Standardized dataset from a seeded Gaussian design, a sparse alternating
// truth, and unit noise. With duplicate set, column 1 copies column 0.
inline dlselect::Dataset random_instance(std::uint64_t seed, Eigen::Index n, Eigen::Index p,
                                         bool duplicate = false) {
  dlselect::Rng rng(seed);
  Matrix X = rng.normal_matrix(n, p);
  if (duplicate && p >= 2) X.col(1) = X.col(0);
  Vector beta = Vector::Zero(p);
  const Eigen::Index s = std::max<Eigen::Index>(1, p / 2);
  for (Eigen::Index j = 0; j < s; ++j) beta[j] = (j % 2 == 0) ? 1.5 : -2.0;
  const Vector Y = X * beta + rng.normal_vector(n);
  return dlselect::standardize(X, Y);
}

}  // namespace oracles
