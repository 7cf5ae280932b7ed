#pragma once

#include <cstdint>

#include "dlselect/core_model.hpp"

namespace dlselect {

/// 5 x 5 covariance: four uncorrelated active variables plus one noise
/// variable correlated rho with each of them. PSD iff |rho| <= 1/2.
Matrix border_noise_covariance(double rho);

/// 7 x 7 covariance: the 5 x 5 family augmented with exact copies of the
/// first two active variables (duplicate pairs {0,1} and {2,3}), singles
/// {4,5}, and the noise variable last. The active block is singular with
/// rank 4.
Matrix duplicated_pairs_covariance(double rho);

/// n x p design with X'X / n equal to C exactly (up to roundoff): X =
/// sqrt(n) Q C^{1/2} with Q drawn column-orthonormal from the seed. C must
/// be PSD within 1e-8 (negative eigenvalues that small are clamped to 0);
/// requires n >= p. Columns of X are exactly centered only in expectation;
/// the Gram identity is what downstream dual/condition checks need.
Matrix realize_gram(const Matrix& C, Eigen::Index n, std::uint64_t seed);

/// Noiseless regression instance on a realized design: Y = X beta.
Dataset noiseless_instance(const Matrix& C, const Vector& beta, Eigen::Index n,
                           std::uint64_t seed);

}  // namespace dlselect
