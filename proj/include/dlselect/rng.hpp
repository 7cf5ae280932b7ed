#pragma once

#include <cstdint>
#include <random>

#include "dlselect/core_model.hpp"

namespace dlselect {

/// splitmix64 step; advances state and returns the next value. Used to
/// derive independent stream seeds from (base, index, tag) triples.
std::uint64_t splitmix64(std::uint64_t& state);

/// Stable seed for a substream, e.g. (design_seed, rep_index, split_tag).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Deterministic normal/uniform source: mt19937_64 (bit-specified engine)
/// with an explicit 53-bit uniform and Box-Muller normals, so streams do not
/// depend on the standard library's unspecified distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01();
  double normal();
  /// Filled row by row, left to right.
  Matrix normal_matrix(Eigen::Index rows, Eigen::Index cols);
  Vector normal_vector(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace dlselect
