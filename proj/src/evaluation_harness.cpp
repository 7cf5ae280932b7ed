#include "dlselect/evaluation_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <thread>

#include "dlselect/baseline_estimators.hpp"
#include "dlselect/dlselect_pipeline.hpp"
#include "dlselect/errors.hpp"

namespace dlselect {

const std::vector<Method>& all_methods() {
  static const std::vector<Method> order = {Method::Lasso, Method::Ridge, Method::Enet,
                                            Method::DLSelectRidge};
  return order;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Lasso: return "Lasso";
    case Method::Ridge: return "Ridge";
    case Method::Enet: return "Enet";
    case Method::DLSelectRidge: return "DLSelect+Ridge";
  }
  throw InvalidArgument("unknown method");
}

Method method_from_string(const std::string& name) {
  for (Method m : all_methods()) {
    if (method_name(m) == name) return m;
  }
  // Accept the CLI-friendly spelling too.
  if (name == "dlselect" || name == "DLSelect") return Method::DLSelectRidge;
  if (name == "lasso") return Method::Lasso;
  if (name == "ridge") return Method::Ridge;
  if (name == "enet") return Method::Enet;
  throw InvalidArgument("unknown method: " + name);
}

double tpr(const ActiveSet& selected, const ActiveSet& truth) {
  if (truth.empty_set()) throw EmptyTruth("tpr: the true support is empty");
  int hits = 0;
  for (int j : selected.indices()) {
    if (truth.contains(j)) ++hits;
  }
  return static_cast<double>(hits) / truth.size();
}

double fdr(const ActiveSet& selected, const ActiveSet& truth) {
  if (selected.empty_set()) return 0.0;
  int false_hits = 0;
  for (int j : selected.indices()) {
    if (!truth.contains(j)) ++false_hits;
  }
  return static_cast<double>(false_hits) / selected.size();
}

double mse(const Vector& Y, const Vector& Yhat) {
  if (Y.size() != Yhat.size()) throw DimensionMismatch("mse: length mismatch");
  if (Y.size() == 0) throw EmptySequence("mse: empty vectors");
  return (Y - Yhat).squaredNorm() / static_cast<double>(Y.size());
}

std::pair<double, double> aggregate(const std::vector<double>& values) {
  if (values.empty()) throw EmptySequence("aggregate: empty sequence");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median =
      n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  if (n == 1) return {median, 0.0};
  double mean = 0.0;
  for (double v : sorted) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return {median, sd / std::sqrt(static_cast<double>(n))};
}

namespace {

struct RepOutcome {
  bool ok = false;
  double mse_value = 0.0;
  std::optional<double> tpr_value;
  std::optional<double> fdr_value;
  bool containment_ok = true;
  std::string error;
};

RepOutcome run_method_on_rep(Method m, const ReplicationData& data,
                             const std::vector<double>& grid1,
                             const std::vector<double>& grid2, const GridConfig& grids) {
  RepOutcome out;
  const SolverOptions opts;
  const bool have_truth = !data.support_true.empty_set();
  try {
    switch (m) {
      case Method::Lasso: {
        const Lambda1Choice c = tune_lambda1(data.train, data.val, grid1, opts);
        out.mse_value = mse(data.test.Y, data.test.X * c.fit.beta);
        if (have_truth) {
          const ActiveSet sel = c.fit.support();
          out.tpr_value = tpr(sel, data.support_true);
          out.fdr_value = fdr(sel, data.support_true);
        }
        break;
      }
      case Method::Ridge: {
        const Lambda2Choice c = tune_lambda2(data.train, data.val, grid2);
        out.mse_value = mse(data.test.Y, data.test.X * c.fit.beta);
        break;
      }
      case Method::Enet: {
        double best = std::numeric_limits<double>::infinity();
        EnetFit winner;
        for (double l2 : grids.enet_lambda2) {
          Vector warm = Vector::Zero(data.train.p());
          for (double l1 : grid1) {
            EnetFit fit = fit_enet_warm(data.train, l1, l2, warm, opts);
            warm = fit.beta;
            const double v =
                (data.val.Y - data.val.X * fit.beta).squaredNorm() /
                static_cast<double>(data.val.n());
            if (v < best - 1e-12) {
              best = v;
              winner = std::move(fit);
            }
          }
        }
        out.mse_value = mse(data.test.Y, data.test.X * winner.beta);
        if (have_truth) {
          const ActiveSet sel = winner.support();
          out.tpr_value = tpr(sel, data.support_true);
          out.fdr_value = fdr(sel, data.support_true);
        }
        break;
      }
      case Method::DLSelectRidge: {
        const PipelineResult r =
            dlselect_ridge_tuned(data.train, data.val, grid1, grid2, opts);
        out.mse_value = mse(data.test.Y, data.test.X * r.beta);
        out.containment_ok = r.diagnostics.containment_ok;
        if (have_truth) {
          out.tpr_value = tpr(r.selected, data.support_true);
          out.fdr_value = fdr(r.selected, data.support_true);
        }
        break;
      }
    }
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::string format_cell(double median, double se) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f(%.2f)", median, se);
  return buf;
}

std::string format_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

ExperimentResult run_experiment(const DesignSpec& spec, const std::vector<Method>& methods,
                                const GridConfig& grids, int jobs) {
  spec.validate();
  if (methods.empty()) throw InvalidArgument("run_experiment: no methods requested");
  if (jobs < 0) throw InvalidArgument("run_experiment: jobs must be nonnegative");

  const int reps = spec.reps;
  const std::size_t m_count = methods.size();
  std::vector<std::vector<RepOutcome>> outcomes(
      m_count, std::vector<RepOutcome>(static_cast<std::size_t>(reps)));

  std::atomic<int> next_rep{0};
  const auto worker = [&]() {
    while (true) {
      const int r = next_rep.fetch_add(1);
      if (r >= reps) return;
      const ReplicationData data = generate_replication(spec, r);
      const std::vector<double> grid1 =
          default_lambda1_grid(data.train, grids.lambda1_size, grids.lambda1_ratio);
      const std::vector<double> grid2 =
          default_lambda2_grid(grids.lambda2_size, grids.lambda2_lo, grids.lambda2_hi);
      for (std::size_t mi = 0; mi < m_count; ++mi) {
        outcomes[mi][static_cast<std::size_t>(r)] =
            run_method_on_rep(methods[mi], data, grid1, grid2, grids);
      }
    }
  };

  int n_threads = jobs == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : jobs;
  n_threads = std::clamp(n_threads, 1, reps);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ExperimentResult result;
  result.spec = spec;
  for (std::size_t mi = 0; mi < m_count; ++mi) {
    MethodResult mres;
    mres.method = methods[mi];
    mres.reports_selection = methods[mi] != Method::Ridge && spec.s > 0;
    for (int r = 0; r < reps; ++r) {
      const RepOutcome& out = outcomes[mi][static_cast<std::size_t>(r)];
      if (!out.ok) {
        ++mres.failed_reps;
        result.failures.push_back({r, methods[mi], out.error});
        continue;
      }
      if (!out.containment_ok) ++result.containment_violations;
      mres.mse_seq.push_back(out.mse_value);
      if (out.tpr_value) mres.tpr_seq.push_back(*out.tpr_value);
      if (out.fdr_value) mres.fdr_seq.push_back(*out.fdr_value);
    }
    if (!mres.mse_seq.empty()) {
      std::tie(mres.median_mse, mres.se_mse) = aggregate(mres.mse_seq);
    }
    if (!mres.tpr_seq.empty()) mres.median_tpr = aggregate(mres.tpr_seq).first;
    if (!mres.fdr_seq.empty()) mres.median_fdr = aggregate(mres.fdr_seq).first;
    result.methods.push_back(std::move(mres));
  }
  return result;
}

std::string write_report(const ExperimentResult& result, ReportFormat format) {
  std::ostringstream os;
  const std::string dash = format == ReportFormat::markdown ? "-" : "";
  if (format == ReportFormat::csv) {
    os << "n,Method,MSE(SE),TPR,FDR\n";
  } else {
    os << "| n | Method | MSE(SE) | TPR | FDR |\n";
    os << "|---|--------|---------|-----|-----|\n";
  }
  for (Method m : all_methods()) {
    const MethodResult* found = nullptr;
    for (const MethodResult& mr : result.methods) {
      if (mr.method == m) {
        found = &mr;
        break;
      }
    }
    if (!found || found->mse_seq.empty()) continue;
    const std::string cell = format_cell(found->median_mse, found->se_mse);
    const std::string t =
        found->tpr_seq.empty() ? dash : format_rate(found->median_tpr);
    const std::string f =
        found->fdr_seq.empty() ? dash : format_rate(found->median_fdr);
    if (format == ReportFormat::csv) {
      os << result.spec.n_train << ',' << method_name(m) << ',' << cell << ',' << t << ','
         << f << '\n';
    } else {
      os << "| " << result.spec.n_train << " | " << method_name(m) << " | " << cell
         << " | " << t << " | " << f << " |\n";
    }
  }
  return os.str();
}

std::string write_raw_metrics(const ExperimentResult& result) {
  std::ostringstream os;
  os << "rep,method,mse,tpr,fdr\n";
  char buf[64];
  const auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const MethodResult& mr : result.methods) {
    for (std::size_t i = 0; i < mr.mse_seq.size(); ++i) {
      os << i << ',' << method_name(mr.method) << ',' << num(mr.mse_seq[i]) << ',';
      if (i < mr.tpr_seq.size()) os << num(mr.tpr_seq[i]);
      os << ',';
      if (i < mr.fdr_seq.size()) os << num(mr.fdr_seq[i]);
      os << '\n';
    }
  }
  return os.str();
}

ExperimentResult read_raw_metrics(const std::string& csv_text) {
  std::istringstream is(csv_text);
  std::string line;
  if (!std::getline(is, line) || line != "rep,method,mse,tpr,fdr") {
    throw IOFailure("raw metrics: missing or wrong header");
  }
  ExperimentResult result;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 5) {
      throw IOFailure("raw metrics: line " + std::to_string(line_no) + " has " +
                      std::to_string(fields.size()) + " fields");
    }
    const Method m = method_from_string(fields[1]);
    MethodResult* mres = nullptr;
    for (MethodResult& mr : result.methods) {
      if (mr.method == m) {
        mres = &mr;
        break;
      }
    }
    if (!mres) {
      result.methods.push_back({});
      mres = &result.methods.back();
      mres->method = m;
      mres->reports_selection = false;
    }
    try {
      mres->mse_seq.push_back(std::stod(fields[2]));
      if (!fields[3].empty()) mres->tpr_seq.push_back(std::stod(fields[3]));
      if (!fields[4].empty()) mres->fdr_seq.push_back(std::stod(fields[4]));
    } catch (const std::exception&) {
      throw IOFailure("raw metrics: non-numeric value at line " + std::to_string(line_no));
    }
    mres->reports_selection = mres->reports_selection || !fields[3].empty();
  }
  for (MethodResult& mr : result.methods) {
    if (!mr.mse_seq.empty()) std::tie(mr.median_mse, mr.se_mse) = aggregate(mr.mse_seq);
    if (!mr.tpr_seq.empty()) mr.median_tpr = aggregate(mr.tpr_seq).first;
    if (!mr.fdr_seq.empty()) mr.median_fdr = aggregate(mr.fdr_seq).first;
    result.spec.reps = std::max(result.spec.reps, static_cast<int>(mr.mse_seq.size()));
  }
  return result;
}

}  // namespace dlselect
