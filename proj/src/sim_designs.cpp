#include "dlselect/sim_designs.hpp"

#include <cmath>

#include "dlselect/errors.hpp"
#include "dlselect/rng.hpp"

namespace dlselect {

namespace {

// Stream tags for seed derivation; the X tags ignore rep_index so the
// design stays fixed across replications.
constexpr std::uint64_t kTagTrainX = 11;
constexpr std::uint64_t kTagValX = 12;
constexpr std::uint64_t kTagTestX = 13;
constexpr std::uint64_t kTagTrainNoise = 21;
constexpr std::uint64_t kTagValNoise = 22;
constexpr std::uint64_t kTagTestNoise = 23;
constexpr std::uint64_t kTagRep = 31;

}  // namespace

DesignKind design_kind_from_string(const std::string& name) {
  if (name == "block_diagonal") return DesignKind::block_diagonal;
  if (name == "single_block_noise") return DesignKind::single_block_noise;
  if (name == "single_block") return DesignKind::single_block;
  if (name == "toeplitz") return DesignKind::toeplitz;
  if (name == "identity") return DesignKind::identity;
  throw InvalidSpec("unknown design kind: " + name);
}

std::string to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::block_diagonal: return "block_diagonal";
    case DesignKind::single_block_noise: return "single_block_noise";
    case DesignKind::single_block: return "single_block";
    case DesignKind::toeplitz: return "toeplitz";
    case DesignKind::identity: return "identity";
  }
  throw InvalidSpec("unknown design kind");
}

void DesignSpec::validate() const {
  if (p < 1) throw InvalidSpec("p must be positive");
  if (!(rho > -1.0 && rho < 1.0)) throw InvalidSpec("rho must lie in (-1, 1)");
  if (s < 0 || s > p) throw InvalidSpec("sparsity s must lie in [0, p]");
  if (sigma < 0.0) throw InvalidSpec("sigma must be nonnegative");
  if (n_train < 2 || n_val < 2 || n_test < 2)
    throw InvalidSpec("each split needs at least 2 observations");
  if (reps < 1) throw InvalidSpec("replication count must be positive");
  switch (kind) {
    case DesignKind::block_diagonal:
      if (block_size < 1 || num_blocks < 1 || block_size * num_blocks != p)
        throw InvalidSpec("block_diagonal needs block_size * num_blocks = p");
      break;
    case DesignKind::single_block_noise:
      if (block_size < 1 || block_size > p)
        throw InvalidSpec("single_block_noise needs 1 <= block_size <= p");
      break;
    default:
      break;
  }
}

Matrix make_covariance(const DesignSpec& spec) {
  spec.validate();
  Matrix C = Matrix::Identity(spec.p, spec.p);
  switch (spec.kind) {
    case DesignKind::block_diagonal:
      for (int b = 0; b < spec.num_blocks; ++b) {
        const int lo = b * spec.block_size;
        for (int i = 0; i < spec.block_size; ++i)
          for (int j = 0; j < spec.block_size; ++j)
            if (i != j) C(lo + i, lo + j) = spec.rho;
      }
      break;
    case DesignKind::single_block_noise:
      for (int i = 0; i < spec.block_size; ++i)
        for (int j = 0; j < spec.block_size; ++j)
          if (i != j) C(i, j) = spec.rho;
      break;
    case DesignKind::single_block:
      for (int i = 0; i < spec.p; ++i)
        for (int j = 0; j < spec.p; ++j)
          if (i != j) C(i, j) = spec.rho;
      break;
    case DesignKind::toeplitz:
      for (int i = 0; i < spec.p; ++i)
        for (int j = 0; j < spec.p; ++j)
          C(i, j) = std::pow(spec.rho, std::abs(i - j));
      break;
    case DesignKind::identity:
      break;
  }
  return C;
}

std::pair<Vector, ActiveSet> true_beta(const DesignSpec& spec) {
  if (spec.s < 0 || spec.s > spec.p) throw InvalidSpec("sparsity s must lie in [0, p]");
  Vector beta = Vector::Zero(spec.p);
  std::vector<int> support;
  for (int j = 0; j < spec.s; ++j) {
    beta[j] = 1.0;
    support.push_back(j);
  }
  return {beta, ActiveSet(support, spec.p)};
}

Matrix sample_mvn(const Matrix& Sigma, Eigen::Index n, std::uint64_t seed) {
  if (Sigma.rows() != Sigma.cols()) throw AsymmetricInput("sample_mvn: Sigma must be square");
  if ((Sigma - Sigma.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw AsymmetricInput("sample_mvn: Sigma must be symmetric");
  if (n < 1) throw InvalidArgument("sample_mvn: n must be positive");

  Eigen::LLT<Matrix> llt(Sigma);
  Matrix L;
  if (llt.info() == Eigen::Success) {
    L = llt.matrixL();
  } else {
    Matrix jittered = Sigma;
    jittered.diagonal().array() += 1e-10;
    Eigen::LLT<Matrix> retry(jittered);
    if (retry.info() != Eigen::Success)
      throw NotPSD("sample_mvn: Sigma is not positive semidefinite");
    L = retry.matrixL();
  }
  Rng rng(seed);
  return rng.normal_matrix(n, Sigma.rows()) * L.transpose();
}

ReplicationData generate_replication(const DesignSpec& spec, int rep_index) {
  spec.validate();
  if (rep_index < 0) throw InvalidArgument("rep_index must be nonnegative");

  const Matrix Sigma = make_covariance(spec);
  auto [beta, support] = true_beta(spec);
  const std::uint64_t rep = static_cast<std::uint64_t>(rep_index);

  const auto make_split = [&](int n, std::uint64_t x_tag, std::uint64_t noise_tag) {
    const Matrix X = sample_mvn(Sigma, n, derive_seed(spec.design_seed, 0, x_tag));
    Rng noise(derive_seed(spec.design_seed, rep + 1, noise_tag));
    const Vector Y = X * beta + spec.sigma * noise.normal_vector(n);
    return standardize(X, Y);
  };

  ReplicationData data;
  data.train = make_split(spec.n_train, kTagTrainX, kTagTrainNoise);
  data.val = make_split(spec.n_val, kTagValX, kTagValNoise);
  data.test = make_split(spec.n_test, kTagTestX, kTagTestNoise);
  data.beta_true = std::move(beta);
  data.support_true = std::move(support);
  data.replication_seed = derive_seed(spec.design_seed, rep + 1, kTagRep);
  return data;
}

}  // namespace dlselect
