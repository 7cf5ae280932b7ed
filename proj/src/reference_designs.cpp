#include "dlselect/reference_designs.hpp"

#include <cmath>

#include "dlselect/errors.hpp"
#include "dlselect/rng.hpp"

namespace dlselect {

Matrix border_noise_covariance(double rho) {
  Matrix C = Matrix::Identity(5, 5);
  for (int j = 0; j < 4; ++j) {
    C(j, 4) = rho;
    C(4, j) = rho;
  }
  return C;
}

Matrix duplicated_pairs_covariance(double rho) {
  Matrix C = Matrix::Identity(7, 7);
  C(0, 1) = C(1, 0) = 1.0;
  C(2, 3) = C(3, 2) = 1.0;
  for (int j = 0; j < 6; ++j) {
    C(j, 6) = rho;
    C(6, j) = rho;
  }
  return C;
}

Matrix realize_gram(const Matrix& C, Eigen::Index n, std::uint64_t seed) {
  if (C.rows() != C.cols()) throw AsymmetricInput("realize_gram: C must be square");
  const Eigen::Index p = C.rows();
  if (n < p) throw InvalidArgument("realize_gram: need n >= p");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(C);
  const double min_eig = eig.eigenvalues().minCoeff();
  if (min_eig < -1e-8) {
    throw NotPSD("realize_gram: C has eigenvalue " + std::to_string(min_eig));
  }
  const Vector roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix sqrt_c = eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().transpose();

  Rng rng(seed);
  Eigen::HouseholderQR<Matrix> qr(rng.normal_matrix(n, p));
  const Matrix Q = qr.householderQ() * Matrix::Identity(n, p);
  return std::sqrt(static_cast<double>(n)) * Q * sqrt_c;
}

Dataset noiseless_instance(const Matrix& C, const Vector& beta, Eigen::Index n,
                           std::uint64_t seed) {
  if (beta.size() != C.rows()) {
    throw DimensionMismatch("noiseless_instance: beta length does not match C");
  }
  Dataset ds;
  ds.X = realize_gram(C, n, seed);
  ds.Y = ds.X * beta;
  return ds;
}

}  // namespace dlselect
