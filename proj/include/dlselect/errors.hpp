#pragma once

#include <stdexcept>
#include <string>

namespace dlselect {

/// Base class for all library errors. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct ZeroVarianceColumn : Error {
  int column;
  explicit ZeroVarianceColumn(int j)
      : Error("column " + std::to_string(j) + " has zero sample variance"), column(j) {}
};

struct NonFiniteInput : Error {
  explicit NonFiniteInput(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

struct InfeasibleDual : Error {
  double max_correlation;
  double lambda;
  InfeasibleDual(double max_corr, double lam)
      : Error("dual vector infeasible: max |X_j' theta| = " + std::to_string(max_corr) +
              " exceeds lambda = " + std::to_string(lam)),
        max_correlation(max_corr), lambda(lam) {}
};

struct DegenerateLambda : Error {
  explicit DegenerateLambda(const std::string& msg) : Error(msg) {}
};

struct NonPositiveLambda : Error {
  explicit NonPositiveLambda(double lam)
      : Error("ridge penalty must be positive, got " + std::to_string(lam)) {}
};

struct AsymmetricInput : Error {
  explicit AsymmetricInput(const std::string& msg) : Error(msg) {}
};

struct SingularC11 : Error {
  double condition_number;
  explicit SingularC11(double cond)
      : Error("active-block covariance is numerically singular (condition number " +
              std::to_string(cond) + "); use the pseudo irrepresentable check"),
        condition_number(cond) {}
};

struct CombinatorialBlowup : Error {
  std::size_t cap;
  explicit CombinatorialBlowup(std::size_t c)
      : Error("candidate submatrix enumeration exceeds cap of " + std::to_string(c)), cap(c) {}
};

struct EmptySupport : Error {
  explicit EmptySupport(const std::string& msg) : Error(msg) {}
};

struct EmptySelection : Error {
  explicit EmptySelection(const std::string& msg) : Error(msg) {}
};

struct EmptyTruth : Error {
  explicit EmptyTruth(const std::string& msg) : Error(msg) {}
};

struct EmptySequence : Error {
  explicit EmptySequence(const std::string& msg) : Error(msg) {}
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

struct NotPSD : Error {
  explicit NotPSD(const std::string& msg) : Error(msg) {}
};

struct IOFailure : Error {
  explicit IOFailure(const std::string& msg) : Error(msg) {}
};

struct CsvParseError : Error {
  int row;
  int column;
  CsvParseError(const std::string& path, int r, int c, const std::string& what)
      : Error(path + ": row " + std::to_string(r) + ", column " + std::to_string(c) + ": " + what),
        row(r), column(c) {}
};

}  // namespace dlselect
