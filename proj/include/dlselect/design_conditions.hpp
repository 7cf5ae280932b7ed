#pragma once

#include <string>
#include <vector>

#include "dlselect/core_model.hpp"

namespace dlselect {

/// Componentwise signs restricted to {-1, 0, +1}.
class SignVector {
 public:
  SignVector() = default;
  /// Throws InvalidArgument when any entry is outside {-1, 0, +1}.
  explicit SignVector(Eigen::VectorXi values);

  const Eigen::VectorXi& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  int operator[](Eigen::Index j) const { return values_[j]; }
  Vector as_double() const { return values_.cast<double>(); }

 private:
  Eigen::VectorXi values_;
};

/// Componentwise sign with exact zero mapped to 0.
SignVector sign_vector(const Vector& beta);

enum class ConditionKind { PSD, IC, PIC, BetaMin };

struct ConditionOptions {
  /// holds <=> margin > tol_cond (PSD uses margin >= -tol_cond).
  double tol_cond = 1e-8;
  /// Numerical rank cutoff: singular values >= tol_rank * sigma_max count.
  double tol_rank = 1e-8;
  /// IC declares C11 singular past this condition number.
  double cond_limit = 1e12;
  /// Candidate-enumeration budget for the pseudo check.
  std::size_t cap = 10000;
};

struct ConditionReport {
  ConditionKind kind = ConditionKind::PSD;
  bool holds = false;
  /// PSD: min eigenvalue. IC/PIC: 1 - achieved infinity norm (worst
  /// candidate for PIC). BetaMin: min active |beta_j|.
  double margin = 0.0;
  /// IC: the complement column index achieving the norm. PIC: the candidate
  /// index set (original column labels) achieving the worst margin.
  std::vector<int> witness;
  /// PSD: eigenvalues ascending. IC: per-complement-row |value|.
  /// PIC: per-candidate margins, in enumeration order.
  std::vector<double> details;

  std::string describe() const;
};

/// holds <=> min eigenvalue >= -tol_cond. Throws AsymmetricInput when C
/// deviates from symmetry by more than 1e-10.
ConditionReport check_psd(const Matrix& C, const ConditionOptions& opts = {});

/// Irrepresentable condition in the orientation ||C21 C11^{-1} sign1||_inf
/// with sign1 the active-block entries of `signs`. Throws SingularC11 when
/// cond(C11) exceeds opts.cond_limit, signalling check_pic instead.
ConditionReport check_ic(const Matrix& C, const ActiveSet& S, const SignVector& signs,
                         const ConditionOptions& opts = {});

/// All r-subsets R of {0..s-1} (r = numerical rank of C11) whose principal
/// submatrix C_RR has full numerical rank. The total number of r-subsets
/// must not exceed cap, else CombinatorialBlowup: producing "all" candidates
/// requires examining every one of them.
std::vector<std::vector<int>> enumerate_candidate_submatrices(const Matrix& C11,
                                                              double tol_rank = 1e-8,
                                                              std::size_t cap = 10000);

/// Pseudo irrepresentable condition: for every candidate R the generalized
/// inverse G embeds C_RR^{-1} at rows/columns R with zeros elsewhere, and
/// ||C21 G sign1||_inf must stay below 1 - tol. Reduces to check_ic when C11
/// is invertible (single candidate).
ConditionReport check_pic(const Matrix& C, const ActiveSet& S, const SignVector& signs,
                          const ConditionOptions& opts = {});

/// min over j in S of |beta_j|. Throws EmptySupport when S is empty.
double beta_min_margin(const Vector& beta, const ActiveSet& S);

}  // namespace dlselect
