#include "dlselect/core_model.hpp"

#include <algorithm>
#include <cmath>

namespace dlselect {

ActiveSet::ActiveSet(std::vector<int> indices, int ambient)
    : indices_(std::move(indices)), ambient_(ambient) {
  if (ambient_ < 0) throw IndexOutOfRange("ambient dimension must be nonnegative");
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= ambient_)
      throw IndexOutOfRange("active-set index " + std::to_string(indices_[i]) +
                            " outside [0, " + std::to_string(ambient_) + ")");
    if (i > 0 && indices_[i] == indices_[i - 1])
      throw IndexOutOfRange("duplicate active-set index " + std::to_string(indices_[i]));
  }
}

ActiveSet ActiveSet::all(int ambient) {
  std::vector<int> idx(static_cast<std::size_t>(ambient));
  for (int j = 0; j < ambient; ++j) idx[static_cast<std::size_t>(j)] = j;
  return ActiveSet(std::move(idx), ambient);
}

ActiveSet ActiveSet::support(const Vector& beta) {
  std::vector<int> idx;
  for (Eigen::Index j = 0; j < beta.size(); ++j)
    if (beta[j] != 0.0) idx.push_back(static_cast<int>(j));
  return ActiveSet(std::move(idx), static_cast<int>(beta.size()));
}

bool ActiveSet::contains(int j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

bool ActiveSet::is_subset_of(const ActiveSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

std::vector<int> ActiveSet::complement() const {
  std::vector<int> comp;
  comp.reserve(static_cast<std::size_t>(ambient_ - size()));
  std::size_t k = 0;
  for (int j = 0; j < ambient_; ++j) {
    if (k < indices_.size() && indices_[k] == j) {
      ++k;
    } else {
      comp.push_back(j);
    }
  }
  return comp;
}

Dataset standardize(const Matrix& X, const Vector& Y) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  if (Y.size() != n)
    throw DimensionMismatch("response length " + std::to_string(Y.size()) +
                            " does not match " + std::to_string(n) + " rows");
  if (n < 2) throw DimensionMismatch("need at least 2 observations");
  if (p < 1) throw DimensionMismatch("need at least 1 predictor");
  if (!X.allFinite() || !Y.allFinite())
    throw NonFiniteInput("design or response contains NaN/Inf");

  Dataset ds;
  ds.std_record.col_means = X.colwise().mean();
  ds.std_record.y_mean = Y.mean();
  ds.std_record.col_scales.resize(p);

  ds.X.resize(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    Vector centered = X.col(j).array() - ds.std_record.col_means[j];
    const double scale = std::sqrt(centered.squaredNorm() / static_cast<double>(n));
    const double col_mag = X.col(j).cwiseAbs().maxCoeff();
    if (scale <= 1e-13 * std::max(1.0, col_mag))
      throw ZeroVarianceColumn(static_cast<int>(j));
    ds.std_record.col_scales[j] = scale;
    ds.X.col(j) = centered / scale;
  }
  ds.Y = Y.array() - ds.std_record.y_mean;
  ds.standardized = true;
  return ds;
}

Matrix empirical_covariance(const Dataset& ds) {
  if (!ds.standardized) throw InvalidArgument("empirical_covariance needs a standardized dataset");
  const double inv_n = 1.0 / static_cast<double>(ds.n());
  Matrix C = Matrix::Zero(ds.p(), ds.p());
  C.selfadjointView<Eigen::Lower>().rankUpdate(ds.X.transpose(), inv_n);
  C.triangularView<Eigen::StrictlyUpper>() = C.transpose();
  return C;
}

CovariancePartition partition_covariance(const Matrix& C, const ActiveSet& S) {
  if (C.rows() != C.cols()) throw DimensionMismatch("covariance must be square");
  if (S.ambient() != C.rows())
    throw IndexOutOfRange("active set ambient " + std::to_string(S.ambient()) +
                          " does not match covariance dimension " + std::to_string(C.rows()));
  const std::vector<int>& act = S.indices();
  const std::vector<int> red = S.complement();
  CovariancePartition part;
  part.c11 = C(act, act);
  part.c12 = C(act, red);
  part.c21 = C(red, act);
  part.c22 = C(red, red);
  return part;
}

Matrix assemble_partition(const CovariancePartition& part) {
  const Eigen::Index s = part.c11.rows();
  const Eigen::Index q = part.c22.rows();
  Matrix C(s + q, s + q);
  C.topLeftCorner(s, s) = part.c11;
  C.topRightCorner(s, q) = part.c12;
  C.bottomLeftCorner(q, s) = part.c21;
  C.bottomRightCorner(q, q) = part.c22;
  return C;
}

Vector to_original_scale(const Vector& beta_std, const StdRecord& rec, double& intercept) {
  if (beta_std.size() != rec.col_scales.size())
    throw DimensionMismatch("coefficient length does not match standardization record");
  Vector beta = beta_std.cwiseQuotient(rec.col_scales);
  intercept = rec.y_mean - beta.dot(rec.col_means);
  return beta;
}

}  // namespace dlselect
