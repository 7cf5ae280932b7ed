#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlselect/core_model.hpp"

namespace dlselect {

/// Raw (unstandardized) regression table split into predictors and response.
struct RegressionTable {
  Matrix X;
  Vector Y;
  std::vector<std::string> predictor_names;
  std::string response_name;
};

/// Selects the response column either by header name or by 0-based position.
struct ResponseSelector {
  std::optional<std::string> name;
  std::optional<int> index;

  static ResponseSelector by_name(std::string n) { return {std::move(n), std::nullopt}; }
  static ResponseSelector by_index(int i) { return {std::nullopt, i}; }
};

/// Load a numeric CSV where each row is one observation. Non-numeric cells
/// are rejected with row/column diagnostics (CsvParseError). Selecting the
/// response by name requires has_header.
RegressionTable load_regression_csv(const std::string& path, const ResponseSelector& response,
                                    bool has_header);

/// Load a plain numeric matrix (no response column).
Matrix load_matrix_csv(const std::string& path, bool has_header = false);

/// Writers use maximum-precision "%.17g" cells so a reload is bit-exact.
void write_matrix_csv(const std::string& path, const Matrix& M,
                      const std::vector<std::string>& header = {});
void write_vector_csv(const std::string& path, const Vector& v, const std::string& header = "");

/// Write a dataset as one observation per row with the response last.
void write_regression_csv(const std::string& path, const Matrix& X, const Vector& Y);

std::string format_double(double x);

}  // namespace dlselect
