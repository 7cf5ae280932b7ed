#include "dlselect/csv_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dlselect {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& path, const std::string& raw, int row, int col) {
  const std::string cell = trim(raw);
  if (cell.empty()) throw CsvParseError(path, row, col, "empty cell");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || errno == ERANGE)
    throw CsvParseError(path, row, col, "non-numeric cell '" + cell + "'");
  return v;
}

struct CsvBody {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvBody read_csv(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw IOFailure("cannot open " + path);
  CsvBody body;
  std::string line;
  int row = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_row(line);
    if (has_header && body.header.empty() && body.rows.empty()) {
      for (const auto& c : cells) body.header.push_back(trim(c));
      width = cells.size();
      continue;
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width)
      throw CsvParseError(path, row, static_cast<int>(cells.size()),
                          "expected " + std::to_string(width) + " cells, got " +
                              std::to_string(cells.size()));
    std::vector<double> vals(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      vals[c] = parse_cell(path, cells[c], row, static_cast<int>(c) + 1);
    body.rows.push_back(std::move(vals));
  }
  if (body.rows.empty()) throw IOFailure(path + ": no data rows");
  return body;
}

}  // namespace

RegressionTable load_regression_csv(const std::string& path, const ResponseSelector& response,
                                    bool has_header) {
  const CsvBody body = read_csv(path, has_header);
  const int ncols = static_cast<int>(body.rows.front().size());

  int resp = -1;
  if (response.name) {
    if (!has_header) throw InvalidArgument("response by name requires a header row");
    for (int c = 0; c < static_cast<int>(body.header.size()); ++c)
      if (body.header[static_cast<std::size_t>(c)] == *response.name) resp = c;
    if (resp < 0) throw InvalidArgument("response column '" + *response.name + "' not in header");
  } else if (response.index) {
    resp = *response.index;
    if (resp < 0) resp = ncols + resp;  // negative counts from the end
    if (resp < 0 || resp >= ncols)
      throw IndexOutOfRange("response index out of range for " + std::to_string(ncols) +
                            " columns");
  } else {
    throw InvalidArgument("no response column specified");
  }
  if (ncols < 2) throw InvalidArgument(path + ": need at least one predictor and a response");

  const int n = static_cast<int>(body.rows.size());
  RegressionTable table;
  table.X.resize(n, ncols - 1);
  table.Y.resize(n);
  for (int i = 0; i < n; ++i) {
    int k = 0;
    for (int c = 0; c < ncols; ++c) {
      const double v = body.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (c == resp) {
        table.Y[i] = v;
      } else {
        table.X(i, k++) = v;
      }
    }
  }
  if (has_header) {
    for (int c = 0; c < ncols; ++c) {
      const std::string& h = body.header[static_cast<std::size_t>(c)];
      if (c == resp) {
        table.response_name = h;
      } else {
        table.predictor_names.push_back(h);
      }
    }
  }
  return table;
}

Matrix load_matrix_csv(const std::string& path, bool has_header) {
  const CsvBody body = read_csv(path, has_header);
  const int n = static_cast<int>(body.rows.size());
  const int p = static_cast<int>(body.rows.front().size());
  Matrix M(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j)
      M(i, j) = body.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return M;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IOFailure("cannot write " + path);
  return out;
}

}  // namespace

void write_matrix_csv(const std::string& path, const Matrix& M,
                      const std::vector<std::string>& header) {
  auto out = open_out(path);
  if (!header.empty()) {
    if (static_cast<Eigen::Index>(header.size()) != M.cols())
      throw DimensionMismatch("header width does not match matrix");
    for (std::size_t c = 0; c < header.size(); ++c)
      out << (c ? "," : "") << header[c];
    out << "\n";
  }
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      out << (j ? "," : "") << format_double(M(i, j));
    out << "\n";
  }
}

void write_vector_csv(const std::string& path, const Vector& v, const std::string& header) {
  auto out = open_out(path);
  if (!header.empty()) out << header << "\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << format_double(v[i]) << "\n";
}

void write_regression_csv(const std::string& path, const Matrix& X, const Vector& Y) {
  if (X.rows() != Y.size()) throw DimensionMismatch("X/Y row mismatch");
  auto out = open_out(path);
  for (Eigen::Index j = 0; j < X.cols(); ++j) out << "x" << (j + 1) << ",";
  out << "y\n";
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) out << format_double(X(i, j)) << ",";
    out << format_double(Y[i]) << "\n";
  }
}

}  // namespace dlselect
