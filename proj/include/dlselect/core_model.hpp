#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dlselect/errors.hpp"

namespace dlselect {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Per-column centering/scaling record kept so coefficients can be mapped
/// back to the original scale. Scales are sqrt((1/n) sum (x - mean)^2).
struct StdRecord {
  Vector col_means;
  Vector col_scales;
  double y_mean = 0.0;
};

/// A regression problem: n x p design and length-n response. When
/// `standardized` is set, every column has mean 0 and (1/n) X_j'X_j = 1,
/// and Y has mean 0 (centered, never rescaled).
struct Dataset {
  Matrix X;
  Vector Y;
  bool standardized = false;
  StdRecord std_record;

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index p() const { return X.cols(); }
};

/// Strictly increasing set of column indices in [0, ambient).
class ActiveSet {
 public:
  ActiveSet() = default;

  /// Indices must be sortable into a duplicate-free increasing sequence,
  /// each in [0, ambient). Throws IndexOutOfRange otherwise.
  ActiveSet(std::vector<int> indices, int ambient);

  static ActiveSet all(int ambient);
  static ActiveSet empty(int ambient) { return ActiveSet({}, ambient); }

  /// Support of a coefficient vector: indices with beta_j != 0.
  static ActiveSet support(const Vector& beta);

  const std::vector<int>& indices() const { return indices_; }
  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty_set() const { return indices_.empty(); }
  bool contains(int j) const;
  bool is_subset_of(const ActiveSet& other) const;
  std::vector<int> complement() const;

  bool operator==(const ActiveSet& other) const {
    return ambient_ == other.ambient_ && indices_ == other.indices_;
  }

 private:
  std::vector<int> indices_;
  int ambient_ = 0;
};

/// Blocks of the empirical covariance under the permutation that places the
/// active columns first: c11 is s x s, c21 = c12' is (p-s) x s.
struct CovariancePartition {
  Matrix c11;
  Matrix c12;
  Matrix c21;
  Matrix c22;
};

/// Center every column, scale it to (1/n) X_j'X_j = 1, and center Y.
/// Throws ZeroVarianceColumn for constant columns, DimensionMismatch when
/// |Y| != n or n < 2, NonFiniteInput on NaN/Inf entries.
Dataset standardize(const Matrix& X, const Vector& Y);

/// C = (1/n) X'X, exactly symmetric. Requires a standardized dataset.
Matrix empirical_covariance(const Dataset& ds);

/// Extract the active-first blocks of a symmetric C.
CovariancePartition partition_covariance(const Matrix& C, const ActiveSet& S);

/// Reassemble the permuted covariance from its blocks (inverse of
/// partition_covariance up to the active-first ordering).
Matrix assemble_partition(const CovariancePartition& part);

/// Map standardized-scale coefficients back to the original X/Y scale.
/// Returns the slope vector; `intercept` receives the recovered constant.
Vector to_original_scale(const Vector& beta_std, const StdRecord& rec, double& intercept);

}  // namespace dlselect
