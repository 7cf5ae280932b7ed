#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DLSELECT_CLI_PATH) + " " + args + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
    res.output.append(buf, got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("dlselect_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Small generated dataset shared by the fit/select cases.
const TempDir& data_dir() {
  static TempDir dir;
  static bool made = false;
  if (!made) {
    const RunResult gen = run_cli("generate --design identity --p 6 --n-train 60 --n-test 40 "
                                  "--s 2 --sigma 0.3 --seed 5 --out-dir " +
                                  dir.file("data"));
    REQUIRE(gen.exit_code == 0);
    made = true;
  }
  return dir;
}

}  // namespace

TEST_CASE("cli requires a subcommand") {
  const RunResult res = run_cli("");
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "subcommand"));
}

TEST_CASE("cli generate writes splits and a manifest") {
  const TempDir& dir = data_dir();
  for (const char* name : {"train.csv", "val.csv", "test.csv", "truth.csv", "manifest.txt"}) {
    CHECK(fs::exists(dir.path / "data" / name));
  }
  std::ifstream manifest(dir.file("data/manifest.txt"));
  std::string text((std::istreambuf_iterator<char>(manifest)),
                   std::istreambuf_iterator<char>());
  CHECK(contains(text, "design=identity"));
  CHECK(contains(text, "support=1,2"));
  CHECK(contains(text, "rep=0"));
}

TEST_CASE("cli fit") {
  const std::string train = data_dir().file("data/train.csv");

  SUBCASE("lasso prints a summary and writes coefficients") {
    TempDir out;
    const RunResult res =
        run_cli("fit " + train + " --method lasso --lambda1 5 --out " + out.file("beta.csv"));
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "method=lasso"));
    CHECK(contains(res.output, "support_size="));
    CHECK(fs::exists(out.file("beta.csv")));
  }
  SUBCASE("ridge rejects a nonpositive penalty") {
    const RunResult res = run_cli("fit " + train + " --method ridge --lambda2 0");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "lambda2"));
  }
  SUBCASE("an impossible sweep budget is a numerical failure") {
    const RunResult res =
        run_cli("fit " + train + " --method lasso --lambda1 0.01 --max-sweeps 1");
    CHECK(res.exit_code == 2);
    CHECK(contains(res.output, "numerical error"));
  }
  SUBCASE("missing input fails with the path in the message") {
    const RunResult res = run_cli("fit /nonexistent_dlselect.csv --method lasso --lambda1 1");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "/nonexistent_dlselect.csv"));
  }
}

TEST_CASE("cli select") {
  const std::string train = data_dir().file("data/train.csv");

  SUBCASE("tuned selection is reproducible byte for byte") {
    const RunResult a = run_cli("select " + train + " --tune --seed 1");
    const RunResult b = run_cli("select " + train + " --tune --seed 1");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "selected indices (1-based):"));
    CHECK(contains(a.output, "containment_ok=1"));
  }
  SUBCASE("tuning requires a seed") {
    const RunResult res = run_cli("select " + train + " --tune");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "--seed"));
  }
  SUBCASE("fixed penalties write selection tables") {
    TempDir out;
    const RunResult res = run_cli("select " + train + " --lambda1 5 --lambda2 1 --out " +
                                  out.file("sel"));
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(out.file("sel_selection.csv")));
    CHECK(fs::exists(out.file("sel_coefficients.csv")));
    std::ifstream is(out.file("sel_selection.csv"));
    std::string header;
    std::getline(is, header);
    CHECK(header == "index,coefficient,dual_correlation,tightness");
  }
}

TEST_CASE("cli check on the built-in examples") {
  SUBCASE("5x5 within the safe range") {
    const RunResult res = run_cli("check --example 5x5 --rho 0.2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "PSD: holds"));
    CHECK(contains(res.output, "IC: holds (margin 0.2)"));
    CHECK(contains(res.output, "PIC: holds (margin 0.2)"));
    CHECK(contains(res.output, "PIC candidates: 1"));
  }
  SUBCASE("5x5 outside the PSD range") {
    const RunResult res = run_cli("check --example 5x5 --rho 0.6");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "PSD: fails"));
    CHECK(contains(res.output, "IC: fails"));
  }
  SUBCASE("7x7 falls back to the pseudo check") {
    const RunResult res = run_cli("check --example 7x7 --rho 0.2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "IC: SingularC11"));
    CHECK(contains(res.output, "PIC: holds (margin 0.2)"));
    CHECK(contains(res.output, "PIC candidates: 4"));
  }
  SUBCASE("example requires rho") {
    const RunResult res = run_cli("check --example 5x5");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "--rho"));
  }
}

TEST_CASE("cli benchmark and report") {
  TempDir out;
  const std::string bench_args =
      "benchmark --design identity --p 6 --n-train 40 --n-test 40 --s 2 --seed 7 "
      "--reps 2 --grid1-size 10 --grid2-size 8";
  const RunResult bench = run_cli(bench_args + " --out " + out.file("tbl"));
  CHECK(bench.exit_code == 0);
  for (const char* m : {"| Lasso |", "| Ridge |", "| Enet |", "| DLSelect+Ridge |"}) {
    CHECK(contains(bench.output, m));
  }
  CHECK(fs::exists(out.file("tbl.csv")));
  CHECK(fs::exists(out.file("tbl.md")));
  CHECK(fs::exists(out.file("tbl_raw.csv")));

  SUBCASE("deterministic given the seed") {
    const RunResult again = run_cli(bench_args);
    CHECK(again.exit_code == 0);
    std::ifstream md(out.file("tbl.md"));
    std::string table((std::istreambuf_iterator<char>(md)), std::istreambuf_iterator<char>());
    CHECK(again.output == table);
  }
  SUBCASE("report rebuilds the table from raw metrics") {
    const RunResult rep = run_cli("report " + out.file("tbl_raw.csv") + " --n 40");
    CHECK(rep.exit_code == 0);
    std::ifstream md(out.file("tbl.md"));
    std::string table((std::istreambuf_iterator<char>(md)), std::istreambuf_iterator<char>());
    CHECK(rep.output == table);
  }
  SUBCASE("missing seed is a usage error") {
    const RunResult res = run_cli(
        "benchmark --design identity --p 6 --n-train 40 --s 2 --reps 2");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "--seed"));
  }
  SUBCASE("invalid rho is rejected") {
    const RunResult res = run_cli(
        "benchmark --design identity --p 6 --n-train 40 --s 2 --seed 7 --reps 2 --rho 1.5");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "rho"));
  }
}
