#pragma once

#include <string>
#include <vector>

#include "dlselect/core_model.hpp"
#include "dlselect/sim_designs.hpp"

namespace dlselect {

enum class Method { Lasso, Ridge, Enet, DLSelectRidge };

/// Canonical table order: Lasso, Ridge, Enet, DLSelect+Ridge.
const std::vector<Method>& all_methods();
std::string method_name(Method m);
Method method_from_string(const std::string& name);

/// |selected and truth| / |truth|. Throws EmptyTruth.
double tpr(const ActiveSet& selected, const ActiveSet& truth);

/// |selected minus truth| / |selected|; 0 for an empty selection.
double fdr(const ActiveSet& selected, const ActiveSet& truth);

/// (1/n) ||Y - Yhat||^2.
double mse(const Vector& Y, const Vector& Yhat);

/// (median, sample standard deviation / sqrt(R)); spread 0 when R = 1.
/// Throws EmptySequence.
std::pair<double, double> aggregate(const std::vector<double>& values);

struct GridConfig {
  int lambda1_size = 50;
  double lambda1_ratio = 1e-3;
  int lambda2_size = 50;
  double lambda2_lo = 1e-4;
  double lambda2_hi = 1e4;
  /// Elastic-net l2 subgrid crossed with the l1 grid.
  std::vector<double> enet_lambda2 = {0.01, 0.1, 1.0, 10.0};
};

struct MethodResult {
  Method method = Method::Lasso;
  std::vector<double> mse_seq;
  /// Empty for Ridge, which selects nothing.
  std::vector<double> tpr_seq;
  std::vector<double> fdr_seq;
  double median_mse = 0.0;
  double se_mse = 0.0;
  double median_tpr = 0.0;
  double median_fdr = 0.0;
  bool reports_selection = true;
  int failed_reps = 0;
};

struct ReplicationFailure {
  int rep_index = 0;
  Method method = Method::Lasso;
  std::string message;
};

struct ExperimentResult {
  DesignSpec spec;
  std::vector<MethodResult> methods;
  std::vector<ReplicationFailure> failures;
  /// Replications where the lasso support escaped the dual active set
  /// (never expected; audited every run).
  int containment_violations = 0;
};

/// Runs spec.reps replications of every requested method: tune on
/// train/val, evaluate on test. jobs caps worker threads (0 = hardware
/// concurrency). Failed replications are recorded and excluded.
ExperimentResult run_experiment(const DesignSpec& spec, const std::vector<Method>& methods,
                                const GridConfig& grids = {}, int jobs = 1);

enum class ReportFormat { csv, markdown };

/// Aggregate table with columns n, Method, MSE(SE), TPR, FDR in canonical
/// method order. MSE(SE) cells are formatted "%.2f(%.2f)".
std::string write_report(const ExperimentResult& result, ReportFormat format);

/// Per-replication metrics in full precision: rep,method,mse,tpr,fdr with
/// empty tpr/fdr cells for Ridge.
std::string write_raw_metrics(const ExperimentResult& result);

/// Rebuild aggregates from write_raw_metrics output; spec fields other than
/// reps are left default.
ExperimentResult read_raw_metrics(const std::string& csv_text);

}  // namespace dlselect
