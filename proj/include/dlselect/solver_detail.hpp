#pragma once

#include <vector>

#include "dlselect/core_model.hpp"
#include "dlselect/lasso_solver.hpp"

namespace dlselect::detail {

// Shared coordinate-descent plumbing for the l1 and l1+l2 solvers.

std::vector<int> resolve_order(const SolverOptions& opts, int p);
double resolve_tol_kkt(const Dataset& ds, const SolverOptions& opts);
double kkt_residual(const Vector& grad, const Vector& beta, double lambda);
Vector clamped_subgradient(const Vector& grad, double lambda);

void count_ridge_solve();
void count_enet_fit();

}  // namespace dlselect::detail
