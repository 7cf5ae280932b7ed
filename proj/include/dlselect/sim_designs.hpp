#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "dlselect/core_model.hpp"

namespace dlselect {

enum class DesignKind {
  block_diagonal,
  single_block_noise,
  single_block,
  toeplitz,
  identity,
};

DesignKind design_kind_from_string(const std::string& name);
std::string to_string(DesignKind kind);

/// Parameters of one simulated experiment family.
struct DesignSpec {
  DesignKind kind = DesignKind::identity;
  int p = 0;
  double rho = 0.0;
  /// block_diagonal: num_blocks blocks of block_size (product = p).
  /// single_block_noise: size of the leading correlated block.
  int block_size = 0;
  int num_blocks = 0;
  int n_train = 0;
  int n_val = 0;
  int n_test = 0;
  /// Sparsity: the first s coefficients are 1, the rest 0.
  int s = 0;
  double sigma = 1.0;
  std::uint64_t design_seed = 0;
  /// Replication count.
  int reps = 1;

  /// Throws InvalidSpec on inconsistent parameters.
  void validate() const;
};

/// One replication: shared fixed X per split, fresh noise.
struct ReplicationData {
  Dataset train;
  Dataset val;
  Dataset test;
  Vector beta_true;
  ActiveSet support_true;
  std::uint64_t replication_seed = 0;
};

/// Symmetric unit-diagonal covariance for spec.kind.
Matrix make_covariance(const DesignSpec& spec);

/// First s entries 1, rest 0, with the matching support.
std::pair<Vector, ActiveSet> true_beta(const DesignSpec& spec);

/// n rows i.i.d. N(0, Sigma) via Cholesky; a failed factorization retries
/// once with 1e-10 jitter on the diagonal, then throws NotPSD.
Matrix sample_mvn(const Matrix& Sigma, Eigen::Index n, std::uint64_t seed);

/// Standardized train/val/test with X fixed by design_seed (identical for
/// every rep_index) and noise drawn fresh per (design_seed, rep_index).
ReplicationData generate_replication(const DesignSpec& spec, int rep_index);

}  // namespace dlselect
