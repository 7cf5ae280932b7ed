#include "dlselect/design_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dlselect/errors.hpp"

namespace dlselect {

SignVector::SignVector(Eigen::VectorXi values) : values_(std::move(values)) {
  for (Eigen::Index j = 0; j < values_.size(); ++j) {
    if (values_[j] < -1 || values_[j] > 1) {
      throw InvalidArgument("sign vector entries must be -1, 0, or +1");
    }
  }
}

SignVector sign_vector(const Vector& beta) {
  Eigen::VectorXi v(beta.size());
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    v[j] = beta[j] > 0.0 ? 1 : (beta[j] < 0.0 ? -1 : 0);
  }
  return SignVector(std::move(v));
}

std::string ConditionReport::describe() const {
  const char* name = kind == ConditionKind::PSD   ? "PSD"
                     : kind == ConditionKind::IC  ? "IC"
                     : kind == ConditionKind::PIC ? "PIC"
                                                  : "BetaMin";
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s: %s (margin %.6g)", name,
                holds ? "holds" : "fails", margin);
  return buf;
}

namespace {

void require_symmetric(const Matrix& C, const char* where) {
  if (C.rows() != C.cols()) throw AsymmetricInput(std::string(where) + ": matrix not square");
  const double dev = (C - C.transpose()).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw AsymmetricInput(std::string(where) + ": matrix deviates from symmetry by " +
                          std::to_string(dev));
  }
}

// Active-block sign entries, validated nonzero on S.
Vector active_signs(const ActiveSet& S, const SignVector& signs, Eigen::Index p) {
  if (signs.size() != p) {
    throw DimensionMismatch("sign vector length does not match the matrix dimension");
  }
  Vector s1(S.size());
  for (int i = 0; i < S.size(); ++i) {
    const int v = signs[S.indices()[static_cast<std::size_t>(i)]];
    if (v == 0) throw InvalidArgument("sign vector must be nonzero on the active set");
    s1[i] = v;
  }
  return s1;
}

// C(s, r) saturating at cap + 1 so the comparison never overflows.
std::size_t binomial_capped(int s, int r, std::size_t cap) {
  if (r < 0 || r > s) return 0;
  r = std::min(r, s - r);
  std::size_t result = 1;
  for (int i = 1; i <= r; ++i) {
    const double next = static_cast<double>(result) * (s - r + i) / i;
    if (next > static_cast<double>(cap)) return cap + 1;
    result = static_cast<std::size_t>(next + 0.5);
  }
  return result;
}

}  // namespace

ConditionReport check_psd(const Matrix& C, const ConditionOptions& opts) {
  require_symmetric(C, "check_psd");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(C, Eigen::EigenvaluesOnly);
  ConditionReport rep;
  rep.kind = ConditionKind::PSD;
  rep.margin = eig.eigenvalues().minCoeff();
  rep.holds = rep.margin >= -opts.tol_cond;
  rep.details.assign(eig.eigenvalues().data(),
                     eig.eigenvalues().data() + eig.eigenvalues().size());
  return rep;
}

ConditionReport check_ic(const Matrix& C, const ActiveSet& S, const SignVector& signs,
                         const ConditionOptions& opts) {
  require_symmetric(C, "check_ic");
  if (S.ambient() != static_cast<int>(C.rows())) {
    throw DimensionMismatch("check_ic: active set ambient does not match the matrix");
  }
  if (S.empty_set()) throw EmptySupport("check_ic: active set is empty");

  const CovariancePartition part = partition_covariance(C, S);
  const Vector s1 = active_signs(S, signs, C.rows());

  Eigen::JacobiSVD<Matrix> svd(part.c11, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (!(cond <= opts.cond_limit)) throw SingularC11(cond);

  ConditionReport rep;
  rep.kind = ConditionKind::IC;
  if (part.c21.rows() == 0) {
    // No complement: the condition is vacuous.
    rep.margin = 1.0;
    rep.holds = true;
    return rep;
  }
  const Vector vals = (part.c21 * svd.solve(s1)).cwiseAbs();
  Eigen::Index worst = 0;
  const double norm = vals.maxCoeff(&worst);
  rep.margin = 1.0 - norm;
  rep.holds = rep.margin > opts.tol_cond;
  rep.witness.push_back(S.complement()[static_cast<std::size_t>(worst)]);
  rep.details.assign(vals.data(), vals.data() + vals.size());
  return rep;
}

std::vector<std::vector<int>> enumerate_candidate_submatrices(const Matrix& C11,
                                                              double tol_rank,
                                                              std::size_t cap) {
  require_symmetric(C11, "enumerate_candidate_submatrices");
  const int s = static_cast<int>(C11.rows());
  if (s == 0) throw EmptySupport("enumerate_candidate_submatrices: empty block");

  Eigen::JacobiSVD<Matrix> svd(C11);
  const double smax = svd.singularValues()(0);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) >= tol_rank * smax) ++r;
  }
  if (r == 0) throw EmptySupport("enumerate_candidate_submatrices: zero matrix");

  if (binomial_capped(s, r, cap) > cap) throw CombinatorialBlowup(cap);

  // Lexicographic walk over all r-subsets of {0..s-1}.
  std::vector<int> subset(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) subset[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> candidates;
  while (true) {
    Matrix crr(r, r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        crr(a, b) = C11(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)]);
    Eigen::JacobiSVD<Matrix> sub_svd(crr);
    const double sub_max = sub_svd.singularValues()(0);
    const double sub_min = sub_svd.singularValues()(sub_svd.singularValues().size() - 1);
    if (sub_max > 0.0 && sub_min >= tol_rank * sub_max) candidates.push_back(subset);

    int i = r - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == s - r + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < r; ++k)
      subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k - 1)] + 1;
  }
  return candidates;
}

ConditionReport check_pic(const Matrix& C, const ActiveSet& S, const SignVector& signs,
                          const ConditionOptions& opts) {
  require_symmetric(C, "check_pic");
  if (S.ambient() != static_cast<int>(C.rows())) {
    throw DimensionMismatch("check_pic: active set ambient does not match the matrix");
  }
  if (S.empty_set()) throw EmptySupport("check_pic: active set is empty");

  const CovariancePartition part = partition_covariance(C, S);
  const Vector s1 = active_signs(S, signs, C.rows());
  const auto candidates = enumerate_candidate_submatrices(part.c11, opts.tol_rank, opts.cap);

  ConditionReport rep;
  rep.kind = ConditionKind::PIC;
  rep.margin = std::numeric_limits<double>::infinity();
  rep.details.reserve(candidates.size());
  for (const auto& R : candidates) {
    const int r = static_cast<int>(R.size());
    Matrix crr(r, r);
    Vector sr(r);
    for (int a = 0; a < r; ++a) {
      sr[a] = s1[R[static_cast<std::size_t>(a)]];
      for (int b = 0; b < r; ++b)
        crr(a, b) = part.c11(R[static_cast<std::size_t>(a)], R[static_cast<std::size_t>(b)]);
    }
    // C21 * G * s1 only sees the R-columns of C21 and the R-entries of s1.
    Matrix c21_r(part.c21.rows(), r);
    for (int a = 0; a < r; ++a) c21_r.col(a) = part.c21.col(R[static_cast<std::size_t>(a)]);
    const double value =
        part.c21.rows() == 0
            ? 0.0
            : (c21_r * crr.fullPivLu().solve(sr)).cwiseAbs().maxCoeff();
    const double cand_margin = 1.0 - value;
    rep.details.push_back(cand_margin);
    if (cand_margin < rep.margin) {
      rep.margin = cand_margin;
      rep.witness.clear();
      for (int a : R)
        rep.witness.push_back(S.indices()[static_cast<std::size_t>(a)]);
    }
  }
  rep.holds = rep.margin > opts.tol_cond;
  return rep;
}

double beta_min_margin(const Vector& beta, const ActiveSet& S) {
  if (S.empty_set()) throw EmptySupport("beta_min_margin: active set is empty");
  if (S.ambient() != static_cast<int>(beta.size())) {
    throw DimensionMismatch("beta_min_margin: active set ambient does not match beta");
  }
  double m = std::numeric_limits<double>::infinity();
  for (int j : S.indices()) m = std::min(m, std::abs(beta[j]));
  return m;
}

}  // namespace dlselect
