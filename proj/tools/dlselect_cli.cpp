// Command-line front end: generate, fit, select, check, benchmark, report.
// Exit codes: 0 success, 1 usage/input error, 2 numerical failure.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dlselect/baseline_estimators.hpp"
#include "dlselect/csv_io.hpp"
#include "dlselect/design_conditions.hpp"
#include "dlselect/dlselect_pipeline.hpp"
#include "dlselect/dual_selector.hpp"
#include "dlselect/errors.hpp"
#include "dlselect/evaluation_harness.hpp"
#include "dlselect/lasso_solver.hpp"
#include "dlselect/reference_designs.hpp"
#include "dlselect/rng.hpp"
#include "dlselect/sim_designs.hpp"

namespace {

using namespace dlselect;

std::vector<int> parse_index_list(const std::string& text, int p) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("index list entry is not an integer: " + tok);
    }
    if (v < 1 || v > p) {
      throw InvalidArgument("index " + tok + " out of range 1.." + std::to_string(p));
    }
    out.push_back(v - 1);
  }
  if (out.empty()) throw InvalidArgument("index list is empty");
  return out;
}

std::string join_indices_one_based(const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw IOFailure("cannot open for writing: " + path);
  os << text;
  if (!os) throw IOFailure("write failed: " + path);
}

// Undo standardization so generated files hold the raw draws.
Matrix raw_design(const Dataset& ds) {
  Matrix X = ds.X * ds.std_record.col_scales.asDiagonal();
  X.rowwise() += ds.std_record.col_means.transpose();
  return X;
}

Vector raw_response(const Dataset& ds) {
  return ds.Y.array() + ds.std_record.y_mean;
}

struct GenerateArgs {
  DesignSpec spec;
  std::string design_name = "identity";
  int rep = 0;
  std::string out_dir;
};

void run_generate(GenerateArgs& a) {
  a.spec.kind = design_kind_from_string(a.design_name);
  a.spec.validate();
  const ReplicationData data = generate_replication(a.spec, a.rep);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw IOFailure("cannot create directory: " + a.out_dir);
  const auto path = [&](const char* name) { return (fs::path(a.out_dir) / name).string(); };

  write_regression_csv(path("train.csv"), raw_design(data.train), raw_response(data.train));
  write_regression_csv(path("val.csv"), raw_design(data.val), raw_response(data.val));
  write_regression_csv(path("test.csv"), raw_design(data.test), raw_response(data.test));
  write_vector_csv(path("truth.csv"), data.beta_true, "beta_true");

  std::ostringstream manifest;
  manifest << "design=" << to_string(a.spec.kind) << '\n'
           << "p=" << a.spec.p << '\n'
           << "rho=" << format_double(a.spec.rho) << '\n'
           << "block_size=" << a.spec.block_size << '\n'
           << "num_blocks=" << a.spec.num_blocks << '\n'
           << "n_train=" << a.spec.n_train << '\n'
           << "n_val=" << a.spec.n_val << '\n'
           << "n_test=" << a.spec.n_test << '\n'
           << "s=" << a.spec.s << '\n'
           << "sigma=" << format_double(a.spec.sigma) << '\n'
           << "design_seed=" << a.spec.design_seed << '\n'
           << "rep=" << a.rep << '\n'
           << "replication_seed=" << data.replication_seed << '\n'
           << "support=" << join_indices_one_based(data.support_true.indices()) << '\n'
           << "files=train.csv,val.csv,test.csv,truth.csv\n";
  write_text_file(path("manifest.txt"), manifest.str());
  std::cout << "wrote " << a.out_dir << " (train/val/test/truth + manifest)\n";
}

struct TableArgs {
  std::string input;
  bool has_header = true;
  std::string response_name;
  int response_index = -1;
};

RegressionTable load_table(const TableArgs& a) {
  const ResponseSelector sel = a.response_name.empty()
                                   ? ResponseSelector::by_index(a.response_index)
                                   : ResponseSelector::by_name(a.response_name);
  return load_regression_csv(a.input, sel, a.has_header);
}

struct FitArgs {
  TableArgs table;
  std::string method = "lasso";
  double lambda1 = -1.0;
  double lambda2 = -1.0;
  SolverOptions opts;
  double tol_kkt = 0.0;
  std::string out;
  bool original_scale = false;
};

void run_fit(FitArgs& a) {
  if (a.tol_kkt > 0.0) a.opts.tol_kkt = a.tol_kkt;
  const RegressionTable table = load_table(a.table);
  const Dataset ds = standardize(table.X, table.Y);

  Vector beta;
  std::ostringstream summary;
  if (a.method == "lasso") {
    if (a.lambda1 < 0.0) throw InvalidArgument("fit lasso needs --lambda1 >= 0");
    const LassoFit fit = fit_lasso(ds, a.lambda1, a.opts);
    beta = fit.beta;
    summary << "method=lasso lambda1=" << format_double(a.lambda1)
            << " objective=" << format_double(fit.objective)
            << " kkt_residual=" << format_double(fit.kkt_residual)
            << " sweeps=" << fit.iterations << " support_size=" << fit.support().size();
  } else if (a.method == "ridge") {
    if (a.lambda2 <= 0.0) throw InvalidArgument("fit ridge needs --lambda2 > 0");
    const RidgeFit fit = fit_ridge(ds, a.lambda2);
    beta = fit.beta;
    summary << "method=ridge lambda2=" << format_double(a.lambda2)
            << " normal_residual=" << format_double(fit.normal_residual)
            << " dual_form=" << (fit.used_dual_form ? 1 : 0);
  } else if (a.method == "enet") {
    if (a.lambda1 < 0.0 || a.lambda2 < 0.0)
      throw InvalidArgument("fit enet needs --lambda1 and --lambda2");
    const EnetFit fit = fit_enet(ds, a.lambda1, a.lambda2, a.opts);
    beta = fit.beta;
    summary << "method=enet lambda1=" << format_double(a.lambda1)
            << " lambda2=" << format_double(a.lambda2)
            << " objective=" << format_double(fit.objective)
            << " kkt_residual=" << format_double(fit.kkt_residual)
            << " sweeps=" << fit.iterations << " support_size=" << fit.support().size();
  } else {
    throw InvalidArgument("unknown --method: " + a.method);
  }
  std::cout << summary.str() << '\n';

  if (!a.out.empty()) {
    if (a.original_scale) {
      double intercept = 0.0;
      const Vector slopes = to_original_scale(beta, ds.std_record, intercept);
      Vector with_intercept(slopes.size() + 1);
      with_intercept[0] = intercept;
      with_intercept.tail(slopes.size()) = slopes;
      write_vector_csv(a.out, with_intercept, "coefficient_original_scale_intercept_first");
    } else {
      write_vector_csv(a.out, beta, "coefficient");
    }
    std::cout << "coefficients written to " << a.out << '\n';
  }
}

struct SelectArgs {
  TableArgs table;
  bool tune = false;
  double lambda1 = -1.0;
  double lambda2 = -1.0;
  int grid_size = 50;
  double val_fraction = 0.5;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tol_active = kDefaultTolActive;
  std::string out;
};

void run_select(SelectArgs& a) {
  const RegressionTable table = load_table(a.table);
  const SolverOptions opts;

  double lambda1 = a.lambda1;
  double lambda2 = a.lambda2;
  Dataset train;
  PipelineResult result;

  if (a.tune) {
    if (!a.seed_set) throw InvalidArgument("select --tune requires --seed");
    if (!(a.val_fraction > 0.0 && a.val_fraction < 1.0))
      throw InvalidArgument("--val-fraction must lie in (0, 1)");
    const Eigen::Index n = table.X.rows();
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(a.seed);
    for (Eigen::Index i = n - 1; i > 0; --i) {
      const auto j = static_cast<Eigen::Index>(rng.uniform01() * static_cast<double>(i + 1));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    const Eigen::Index n_val = std::max<Eigen::Index>(
        2, static_cast<Eigen::Index>(a.val_fraction * static_cast<double>(n)));
    if (n - n_val < 2) throw InvalidArgument("not enough rows for a train/val split");

    Matrix Xtr(n - n_val, table.X.cols()), Xva(n_val, table.X.cols());
    Vector Ytr(n - n_val), Yva(n_val);
    for (Eigen::Index i = 0; i < n - n_val; ++i) {
      Xtr.row(i) = table.X.row(perm[static_cast<std::size_t>(i)]);
      Ytr[i] = table.Y[perm[static_cast<std::size_t>(i)]];
    }
    for (Eigen::Index i = 0; i < n_val; ++i) {
      Xva.row(i) = table.X.row(perm[static_cast<std::size_t>(n - n_val + i)]);
      Yva[i] = table.Y[perm[static_cast<std::size_t>(n - n_val + i)]];
    }
    train = standardize(Xtr, Ytr);
    const Dataset val = standardize(Xva, Yva);
    const auto grid1 = default_lambda1_grid(train, a.grid_size);
    const auto grid2 = default_lambda2_grid(a.grid_size);
    result = dlselect_ridge_tuned(train, val, grid1, grid2, opts, a.tol_active);
    lambda1 = result.lambda1;
    lambda2 = result.lambda2;
  } else {
    if (lambda1 <= 0.0 || lambda2 <= 0.0)
      throw InvalidArgument("select needs --tune or both --lambda1 > 0 and --lambda2 > 0");
    train = standardize(table.X, table.Y);
    result = dlselect_ridge(train, lambda1, lambda2, opts, a.tol_active);
  }

  // One extra fit at the chosen penalty exposes the per-column dual
  // correlations for reporting.
  const SelectionArtifacts art = dlselect::dlselect(train, lambda1, opts, a.tol_active);

  std::cout << "lambda1=" << format_double(lambda1) << " lambda2=" << format_double(lambda2)
            << " selected=" << result.selected.size() << " of " << train.p() << '\n';
  std::cout << "selected indices (1-based): "
            << join_indices_one_based(result.selected.indices()) << '\n';
  std::cout << "duality_gap=" << format_double(result.diagnostics.gap)
            << " feasibility_margin="
            << format_double(result.diagnostics.dual_feasibility_margin)
            << " containment_ok=" << (result.diagnostics.containment_ok ? 1 : 0)
            << " fallback_used=" << (result.diagnostics.fallback_used ? 1 : 0) << '\n';

  if (!a.out.empty()) {
    std::ostringstream sel;
    sel << "index,coefficient,dual_correlation,tightness\n";
    for (int j : result.selected.indices()) {
      sel << (j + 1) << ',' << format_double(result.beta[j]) << ','
          << format_double(art.dual.correlations[j]) << ','
          << format_double(lambda1 - std::abs(art.dual.correlations[j])) << '\n';
    }
    write_text_file(a.out + "_selection.csv", sel.str());
    write_vector_csv(a.out + "_coefficients.csv", result.beta, "coefficient");
    std::cout << "wrote " << a.out << "_selection.csv and " << a.out
              << "_coefficients.csv\n";
  }
}

struct CheckArgs {
  std::string matrix_path;
  std::string data_path;
  bool has_header = false;
  std::string example;
  double rho = 0.0;
  bool rho_set = false;
  std::string support_text;
  std::string signs_text;
  ConditionOptions opts;
  std::string candidates_out;
};

void run_check(CheckArgs& a) {
  Matrix C;
  std::vector<int> support;
  const int sources = (!a.matrix_path.empty()) + (!a.data_path.empty()) + (!a.example.empty());
  if (sources != 1) {
    throw InvalidArgument("check needs exactly one of --matrix, --data, --example");
  }
  if (!a.example.empty()) {
    if (!a.rho_set) throw InvalidArgument("--example requires --rho");
    if (a.example == "5x5") {
      C = border_noise_covariance(a.rho);
      support = {0, 1, 2, 3};
    } else if (a.example == "7x7") {
      C = duplicated_pairs_covariance(a.rho);
      support = {0, 1, 2, 3, 4, 5};
    } else {
      throw InvalidArgument("--example must be 5x5 or 7x7");
    }
  } else if (!a.matrix_path.empty()) {
    C = load_matrix_csv(a.matrix_path, a.has_header);
  } else {
    const Matrix X = load_matrix_csv(a.data_path, a.has_header);
    const Vector dummy = Vector::Zero(X.rows());
    C = empirical_covariance(standardize(X, dummy));
  }
  const int p = static_cast<int>(C.rows());
  if (!a.support_text.empty()) support = parse_index_list(a.support_text, p);
  if (support.empty()) throw InvalidArgument("check needs --support (or --example)");
  const ActiveSet S(support, p);

  Eigen::VectorXi sign_values = Eigen::VectorXi::Zero(p);
  if (a.signs_text.empty()) {
    for (int j : S.indices()) sign_values[j] = 1;
  } else {
    std::stringstream ss(a.signs_text);
    std::string tok;
    std::vector<int> parsed;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      if (tok != "1" && tok != "+1" && tok != "-1")
        throw InvalidArgument("--signs entries must be +1 or -1");
      parsed.push_back(tok == "-1" ? -1 : 1);
    }
    if (static_cast<int>(parsed.size()) != S.size())
      throw InvalidArgument("--signs must list one sign per support index");
    for (int i = 0; i < S.size(); ++i)
      sign_values[S.indices()[static_cast<std::size_t>(i)]] = parsed[static_cast<std::size_t>(i)];
  }
  const SignVector signs(sign_values);

  std::cout << check_psd(C, a.opts).describe() << '\n';
  try {
    std::cout << check_ic(C, S, signs, a.opts).describe() << '\n';
  } catch (const SingularC11& e) {
    std::cout << "IC: SingularC11 (condition number " << format_double(e.condition_number)
              << "); falling back to the pseudo check\n";
  }
  const ConditionReport pic = check_pic(C, S, signs, a.opts);
  std::cout << pic.describe() << '\n';
  std::cout << "PIC candidates: " << pic.details.size() << '\n';

  const auto candidates =
      enumerate_candidate_submatrices(partition_covariance(C, S).c11, a.opts.tol_rank, a.opts.cap);
  std::ostringstream table;
  table << "candidate,margin\n";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::string label;
    for (std::size_t k = 0; k < candidates[i].size(); ++k) {
      if (k) label += ';';
      label += std::to_string(S.indices()[static_cast<std::size_t>(candidates[i][k])] + 1);
    }
    std::cout << "  {" << label << "} margin " << format_double(pic.details[i]) << '\n';
    table << label << ',' << format_double(pic.details[i]) << '\n';
  }
  if (!a.candidates_out.empty()) {
    write_text_file(a.candidates_out, table.str());
    std::cout << "wrote " << a.candidates_out << '\n';
  }
}

struct BenchmarkArgs {
  DesignSpec spec;
  std::string design_name = "identity";
  std::string methods_text = "lasso,ridge,enet,dlselect";
  GridConfig grids;
  int jobs = 1;
  std::string out;
};

void run_benchmark(BenchmarkArgs& a) {
  a.spec.kind = design_kind_from_string(a.design_name);
  a.spec.validate();

  std::vector<Method> methods;
  std::stringstream ss(a.methods_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) methods.push_back(method_from_string(tok));
  }

  const ExperimentResult result = run_experiment(a.spec, methods, a.grids, a.jobs);

  for (const ReplicationFailure& f : result.failures) {
    std::cerr << "warning: replication " << f.rep_index << " failed for "
              << method_name(f.method) << ": " << f.message << '\n';
  }
  if (result.containment_violations > 0) {
    std::cerr << "warning: " << result.containment_violations
              << " replications violated lasso-in-dual containment\n";
  }

  std::cout << write_report(result, ReportFormat::markdown);
  if (!a.out.empty()) {
    write_text_file(a.out + ".csv", write_report(result, ReportFormat::csv));
    write_text_file(a.out + ".md", write_report(result, ReportFormat::markdown));
    write_text_file(a.out + "_raw.csv", write_raw_metrics(result));
    std::cout << "wrote " << a.out << ".csv, " << a.out << ".md, " << a.out << "_raw.csv\n";
  }
}

struct ReportArgs {
  std::string input;
  std::string format = "markdown";
  int n = 0;
  std::string out;
};

void run_report(ReportArgs& a) {
  std::ifstream is(a.input);
  if (!is) throw IOFailure("cannot open: " + a.input);
  std::stringstream buffer;
  buffer << is.rdbuf();
  ExperimentResult result = read_raw_metrics(buffer.str());
  result.spec.n_train = a.n;
  const ReportFormat fmt =
      a.format == "csv" ? ReportFormat::csv : ReportFormat::markdown;
  const std::string doc = write_report(result, fmt);
  if (a.out.empty()) {
    std::cout << doc;
  } else {
    write_text_file(a.out, doc);
    std::cout << "wrote " << a.out << '\n';
  }
}

void add_table_options(CLI::App* cmd, TableArgs& t) {
  cmd->add_option("input", t.input, "input CSV, one observation per row")->required();
  cmd->add_flag("!--no-header", t.has_header, "input has no header row");
  cmd->add_option("--response-name", t.response_name, "response column by header name");
  cmd->add_option("--response-index", t.response_index,
                  "response column by 0-based index; negative counts from the end "
                  "(default -1, the last column)");
}

void add_design_options(CLI::App* cmd, DesignSpec& spec, std::string& design_name) {
  cmd->add_option("--design", design_name,
                  "block_diagonal | single_block_noise | single_block | toeplitz | identity")
      ->required();
  cmd->add_option("--p", spec.p, "number of predictors")->required();
  cmd->add_option("--rho", spec.rho, "correlation parameter in (-1, 1)");
  cmd->add_option("--block-size", spec.block_size, "block size where applicable");
  cmd->add_option("--num-blocks", spec.num_blocks, "number of blocks (block_diagonal)");
  cmd->add_option("--n-train", spec.n_train, "training rows")->required();
  cmd->add_option("--n-val", spec.n_val, "validation rows (default: n-train)");
  cmd->add_option("--n-test", spec.n_test, "test rows");
  cmd->add_option("--s", spec.s, "number of true nonzero coefficients")->required();
  cmd->add_option("--sigma", spec.sigma, "noise scale (default 1)");
  cmd->add_option("--seed", spec.design_seed, "design seed")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse regression toolkit: lasso, dual-active-set selection, ridge refits"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read defaults from an INI file (flags override)");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "write simulated train/val/test splits");
  add_design_options(gen_cmd, gen.spec, gen.design_name);
  gen_cmd->add_option("--rep", gen.rep, "replication index (default 0)");
  gen_cmd->add_option("--out-dir", gen.out_dir, "output directory")->required();

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "fit one estimator on a CSV");
  add_table_options(fit_cmd, fit.table);
  fit_cmd->add_option("--method", fit.method, "lasso | ridge | enet")->required();
  fit_cmd->add_option("--lambda1", fit.lambda1, "l1 penalty");
  fit_cmd->add_option("--lambda2", fit.lambda2, "l2 penalty");
  fit_cmd->add_option("--tol-obj", fit.opts.tol_obj, "relative objective tolerance");
  fit_cmd->add_option("--tol-kkt", fit.tol_kkt, "absolute KKT tolerance");
  fit_cmd->add_option("--max-sweeps", fit.opts.max_sweeps, "sweep cap");
  fit_cmd->add_option("--out", fit.out, "write coefficients CSV here");
  fit_cmd->add_flag("--original-scale", fit.original_scale,
                    "write coefficients on the input scale (intercept first)");

  SelectArgs sel;
  auto* sel_cmd = app.add_subcommand("select", "dual-active-set selection with ridge refit");
  add_table_options(sel_cmd, sel.table);
  sel_cmd->add_flag("--tune", sel.tune, "tune both penalties on a seeded train/val split");
  sel_cmd->add_option("--lambda1", sel.lambda1, "l1 penalty (with --lambda2, skips tuning)");
  sel_cmd->add_option("--lambda2", sel.lambda2, "ridge penalty");
  sel_cmd->add_option("--grid-size", sel.grid_size, "tuning grid size per penalty");
  sel_cmd->add_option("--val-fraction", sel.val_fraction, "validation share for --tune");
  sel_cmd->add_option("--seed", sel.seed, "split seed (required with --tune)");
  sel_cmd->add_option("--tol-active", sel.tol_active, "dual boundary tolerance");
  sel_cmd->add_option("--out", sel.out, "output file prefix");

  CheckArgs chk;
  auto* chk_cmd = app.add_subcommand("check", "verify design conditions on a covariance");
  chk_cmd->add_option("--matrix", chk.matrix_path, "covariance matrix CSV");
  chk_cmd->add_option("--data", chk.data_path, "raw design CSV (covariance computed)");
  chk_cmd->add_flag("--header", chk.has_header, "matrix/data CSV has a header row");
  chk_cmd->add_option("--example", chk.example, "built-in example: 5x5 | 7x7");
  chk_cmd->add_option("--rho", chk.rho, "correlation for --example");
  chk_cmd->add_option("--support", chk.support_text, "active set, 1-based comma list");
  chk_cmd->add_option("--signs", chk.signs_text, "signs (+1/-1) per support index");
  chk_cmd->add_option("--tol-cond", chk.opts.tol_cond, "margin tolerance");
  chk_cmd->add_option("--tol-rank", chk.opts.tol_rank, "numerical rank tolerance");
  chk_cmd->add_option("--cap", chk.opts.cap, "candidate enumeration cap");
  chk_cmd->add_option("--candidates-out", chk.candidates_out, "per-candidate margins CSV");

  BenchmarkArgs bench;
  auto* bench_cmd = app.add_subcommand("benchmark", "replication study across methods");
  add_design_options(bench_cmd, bench.spec, bench.design_name);
  bench_cmd->add_option("--reps", bench.spec.reps, "replication count")->required();
  bench_cmd->add_option("--methods", bench.methods_text,
                        "comma list: lasso,ridge,enet,dlselect");
  bench_cmd->add_option("--grid1-size", bench.grids.lambda1_size, "l1 grid size");
  bench_cmd->add_option("--grid2-size", bench.grids.lambda2_size, "ridge grid size");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads (0 = all cores)");
  bench_cmd->add_option("--out", bench.out, "output prefix (.csv/.md/_raw.csv)");

  ReportArgs rep;
  auto* rep_cmd = app.add_subcommand("report", "aggregate a raw per-replication metrics CSV");
  rep_cmd->add_option("input", rep.input, "raw metrics CSV from benchmark --out")->required();
  rep_cmd->add_option("--format", rep.format, "csv | markdown");
  rep_cmd->add_option("--n", rep.n, "training-size label for the n column");
  rep_cmd->add_option("--out", rep.out, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
    if (gen_cmd->parsed()) {
      if (gen.spec.n_val == 0) gen.spec.n_val = gen.spec.n_train;
      if (gen.spec.n_test == 0) gen.spec.n_test = 1000;
      run_generate(gen);
    }
    if (fit_cmd->parsed()) run_fit(fit);
    if (sel_cmd->parsed()) {
      sel.seed_set = sel_cmd->count("--seed") > 0;
      run_select(sel);
    }
    if (chk_cmd->parsed()) {
      chk.rho_set = chk_cmd->count("--rho") > 0;
      run_check(chk);
    }
    if (bench_cmd->parsed()) {
      if (bench.spec.n_val == 0) bench.spec.n_val = bench.spec.n_train;
      if (bench.spec.n_test == 0) bench.spec.n_test = 1000;
      run_benchmark(bench);
    }
    if (rep_cmd->parsed()) run_report(rep);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const CsvParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const IOFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
