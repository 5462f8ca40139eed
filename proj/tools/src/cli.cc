// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divcom_tools/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "divcom/algorithms.h"
#include "divcom/datagen.h"
#include "divcom/objectives.h"
#include "divcom/polis.h"
#include "divcom/profile_io.h"
#include "divcom/random.h"
#include "divcom_tools/experiment.h"
#include "divcom_tools/ingest.h"

namespace divcom::tools {
namespace {

namespace fs = std::filesystem;

std::string Fixed(double value, int digits = 6) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Options shared by `run` and `experiment`.
struct ParamFlags {
  AlgorithmParams params;
  double beta = 0.0;
  CLI::Option* beta_option = nullptr;
  std::string matroid_config;

  void Register(CLI::App* app) {
    app->add_option("--t", params.t, "query set size")->capture_default_str();
    app->add_option("--gamma", params.gamma, "approximation slack in (0,1)")
        ->capture_default_str();
    app->add_option("--delta", params.delta, "failure probability")
        ->capture_default_str();
    app->add_option("--xi", params.xi, "local search margin factor (> 1)")
        ->capture_default_str();
    app->add_option("--c2", params.c2, "local search step constant")
        ->capture_default_str();
    beta_option = app->add_option(
        "--beta", beta, "local search step (default from gamma, k, c2)");
    app->add_option("--eps", params.eps,
                    "greedy_eps tolerance as a fraction of n")
        ->capture_default_str();
    app->add_option("--pav-threshold", params.pav_threshold,
                    "ls_pav swap threshold in units of n/k^2")
        ->capture_default_str();
    app->add_option("--matroid-config", matroid_config,
                    "quota file, lines 'name: indices : lower : upper'")
        ->check(CLI::ExistingFile);
  }

  AlgorithmParams Resolve(int m) const {
    AlgorithmParams resolved = params;
    if (beta_option->count() > 0) resolved.beta = beta;
    if (!matroid_config.empty()) {
      resolved.quotas = LoadQuotaSpec(matroid_config, m, params.k);
    }
    return resolved;
  }
};

struct RunCommand {
  std::string profile;
  std::string algorithm;
  ParamFlags flags;
  double budget = 0.0;
  CLI::Option* budget_option = nullptr;
  bool census = false;
  std::uint64_t seed = 0;
  std::string out;

  void Register(CLI::App* app) {
    app->add_option("--profile", profile, "canonical profile file")
        ->required()
        ->check(CLI::ExistingFile);
    app->add_option("--algo", algorithm, "algorithm id")->required();
    app->add_option("--k", flags.params.k, "committee size")->required();
    flags.Register(app);
    app->add_option("--p", flags.params.p, "answer flip probability")
        ->capture_default_str();
    budget_option = app->add_option(
        "--M", budget, "expected query sets per voter (incomplete algorithms)");
    app->add_flag("--census", census,
                  "incomplete algorithms ask every voter once per query set");
    app->add_option("--seed", seed, "seed")->capture_default_str();
    app->add_option("--out", out, "CSV file for the result row");
  }

  int Execute(std::ostream& stdout_stream) const {
    const ApprovalProfile loaded = LoadProfile(profile);
    AlgorithmParams params = flags.Resolve(loaded.num_candidates());
    if (budget_option->count() > 0) params.budget = budget;
    params.census = census;
    const RunSeeds seeds{.run = seed, .init = seed};
    const RunResult result = RunAlgorithm(loaded, algorithm, params, seeds);

    stdout_stream << "algorithm: " << algorithm << '\n' << "committee:";
    for (Candidate c : result.committee.SortedMembers()) {
      stdout_stream << ' ' << c;
    }
    stdout_stream << '\n'
                  << "cc: " << Fixed(result.score) << '\n'
                  << "covered: " << result.covered << '/'
                  << loaded.num_voters() << '\n'
                  << "queries: " << result.queries << '\n'
                  << "iterations: " << result.iterations << '\n'
                  << "sample_size: " << result.sample_size << '\n'
                  << "seed: " << seed << '\n';
    if (!out.empty()) {
      ExperimentRecord row;
      row.dataset = fs::path(profile).stem().string();
      row.algorithm = algorithm;
      row.k = params.k;
      row.budget = census         ? "census"
                   : params.budget ? FormatBudget(*params.budget)
                                   : "full";
      row.p = params.p;
      row.seed = seed;
      row.cc = result.score;
      row.queries = result.queries;
      AlgorithmParams base = params;
      base.p = 0.0;
      base.budget.reset();
      base.census = false;
      const RunResult reference =
          RunAlgorithm(loaded, Counterpart(algorithm), base, seeds);
      row.relative = reference.score > 0.0 ? result.score / reference.score
                                           : std::numeric_limits<double>::quiet_NaN();
      std::ofstream csv = OpenOutput(out);
      WriteCsv(csv, {row});
    }
    return 0;
  }
};

const std::uint64_t kSyntheticTag = StableHash("synthetic");

struct ExperimentCommand {
  std::vector<std::string> profiles;
  int synthetic = 0;
  double q = 0.0891;
  double phi = 0.693;
  int n = 1000;
  int m = 400;
  std::vector<std::string> algorithms = {kGreedy, kLocalSearch,
                                         kApprovalVoting, kLsPav};
  ParamFlags flags;
  std::vector<double> budgets = {1, 2, 3, 4, 5};
  std::vector<double> error_rates = {0.0};
  bool census = false;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string summary;
  std::string plot;
  bool timing = false;
  int threads = 1;

  void Register(CLI::App* app) {
    app->add_option("--profile", profiles, "canonical profile files")
        ->check(CLI::ExistingFile);
    app->add_option("--synthetic", synthetic,
                    "number of (q, phi)-resampled elections to add");
    app->add_option("--q", q, "resampling q")->capture_default_str();
    app->add_option("--phi", phi, "resampling phi")->capture_default_str();
    app->add_option("--n", n, "voters per synthetic election")
        ->capture_default_str();
    app->add_option("--m", m, "candidates per synthetic election")
        ->capture_default_str();
    app->add_option("--algo", algorithms, "algorithm ids")
        ->delimiter(',')
        ->capture_default_str();
    app->add_option("--k", flags.params.k, "committee size")
        ->default_val(8);
    flags.Register(app);
    app->add_option("--M", budgets, "M levels")->delimiter(',')
        ->capture_default_str();
    app->add_option("--p", error_rates, "p levels")->delimiter(',')
        ->capture_default_str();
    app->add_flag("--census", census,
                  "incomplete algorithms ask every voter once per query set");
    app->add_option("--trials", trials, "trials per cell")
        ->capture_default_str();
    app->add_option("--seed", seed, "base seed")->capture_default_str();
    app->add_option("--out", out, "CSV output (default stdout)");
    app->add_option("--summary", summary, "per-cell mean/sd CSV output");
    app->add_option("--plot", plot,
                    "SVG prefix: writes <prefix>_scores.svg and "
                    "<prefix>_relative.svg");
    app->add_flag("--timing", timing,
                  "record wall time (makes the CSV non-deterministic)");
    app->add_option("--threads", threads, "worker threads")
        ->capture_default_str();
  }

  int Execute(std::ostream& stdout_stream, std::ostream& log) const {
    ExperimentConfig config;
    for (const auto& path : profiles) {
      config.datasets.push_back(
          Dataset{fs::path(path).stem().string(), LoadProfile(path)});
    }
    for (int i = 0; i < synthetic; ++i) {
      char id[32];
      std::snprintf(id, sizeof(id), "synthetic-%03d", i);
      config.datasets.push_back(Dataset{
          id, ResampleElection(ResampleParams{.q = q,
                                              .phi = phi,
                                              .num_voters = n,
                                              .num_candidates = m,
                                              .seed = SyntheticSeed(seed, i)})});
    }
    if (config.datasets.empty()) {
      throw std::invalid_argument("give --profile files or --synthetic N");
    }
    config.algorithms = algorithms;
    const int dataset_m = config.datasets.front().profile.num_candidates();
    config.params = flags.Resolve(dataset_m);
    config.budgets = budgets;
    config.error_rates = error_rates;
    config.census = census;
    config.trials = trials;
    config.base_seed = seed;
    config.timing = timing;
    config.threads = threads;

    const auto rows = RunExperiment(config);
    for (const auto& row : rows) {
      if (!row.error.empty()) {
        log << "cell " << row.dataset << '/' << row.algorithm << "/M="
            << row.budget << "/p=" << FormatNumber(row.p) << "/trial "
            << row.trial << " failed: " << row.error << '\n';
      }
    }
    if (out.empty()) {
      WriteCsv(stdout_stream, rows);
    } else {
      std::ofstream csv = OpenOutput(out);
      WriteCsv(csv, rows);
    }
    const auto cells = Summarize(rows);
    if (!summary.empty()) {
      std::ofstream file = OpenOutput(summary);
      WriteSummaryCsv(file, cells);
    }
    if (!plot.empty()) {
      std::ofstream scores = OpenOutput(plot + "_scores.svg");
      WriteScorePlot(scores, cells);
      std::ofstream relative = OpenOutput(plot + "_relative.svg");
      WriteRelativePlot(relative, cells);
    }
    return 0;
  }
};

struct CalcCommand {
  int n = 0;
  int m = 0;
  int k = 0;
  int t = 0;
  double gamma = 0.85;
  double delta = 0.05;
  double xi = 2.0;
  double c2 = 1.0;
  double beta = 0.0;
  CLI::Option* beta_option = nullptr;
  double p = 0.1;

  void RegisterGreedy(CLI::App* app) {
    app->add_option("--m", m, "candidates")->required();
    app->add_option("--k", k, "committee size")->required();
    app->add_option("--t", t, "query set size")->required();
    app->add_option("--gamma", gamma)->capture_default_str();
    app->add_option("--delta", delta)->capture_default_str();
  }

  void RegisterLs(CLI::App* app) {
    RegisterGreedy(app);
    app->add_option("--xi", xi)->capture_default_str();
    app->add_option("--c2", c2)->capture_default_str();
    beta_option = app->add_option("--beta", beta, "overrides gamma and c2");
  }

  void RegisterRepeats(CLI::App* app) {
    app->add_option("--n", n, "voters")->required();
    app->add_option("--m", m, "candidates")->required();
    app->add_option("--p", p, "flip probability")->capture_default_str();
    app->add_option("--delta", delta)->capture_default_str();
  }

  int Greedy(std::ostream& out) const {
    const SampleSize sample = RequiredSampleSizeGreedy(gamma, delta, m, k);
    out << "epsilon: " << Fixed(sample.epsilon) << '\n'
        << "sample_size: " << sample.voters << '\n'
        << "query_sets_per_round: " << QueryFamilySize(m, k, t) << '\n'
        << "budget: " << QueryBudgetGreedy(gamma, delta, m, k, t) << '\n';
    return 0;
  }

  int Ls(std::ostream& out) const {
    const double step =
        beta_option->count() > 0 ? beta : LocalSearchStep(gamma, k, c2);
    const double alpha_k = AlphaSequence(k)[k];
    const SampleSize sample =
        RequiredSampleSizeLs(step, xi, delta, m, k, alpha_k);
    out << "beta: " << Fixed(step, 8) << '\n'
        << "epsilon: " << Fixed(sample.epsilon, 8) << '\n'
        << "sample_size: " << sample.voters << '\n'
        << "iteration_cap: " << LocalSearchIterationCap(step, xi, alpha_k)
        << '\n'
        << "query_sets_per_iteration: " << QueryFamilySize(m, k, t) << '\n'
        << "budget: " << QueryBudgetLs(step, xi, delta, m, k, t, alpha_k)
        << '\n';
    return 0;
  }

  int Repeats(std::ostream& out) const {
    out << "repeats: " << RequiredRepeatsInaccurate(p, delta, n, m) << '\n';
    return 0;
  }
};

struct GenerateCommand {
  double q = 0.0891;
  double phi = 0.693;
  int n = 1000;
  int m = 400;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out;

  void Register(CLI::App* app) {
    app->add_option("--q", q)->capture_default_str();
    app->add_option("--phi", phi)->capture_default_str();
    app->add_option("--n", n, "voters")->capture_default_str();
    app->add_option("--m", m, "candidates")->capture_default_str();
    app->add_option("--count", count, "number of elections")
        ->capture_default_str();
    app->add_option("--seed", seed, "base seed")->capture_default_str();
    app->add_option("--out", out, "output directory")->required();
  }

  int Execute(std::ostream& stdout_stream) const {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::error_code error;
    fs::create_directories(out, error);
    if (error || !fs::is_directory(out)) {
      throw std::runtime_error("cannot create output directory " + out);
    }
    for (int i = 0; i < count; ++i) {
      const ApprovalProfile profile = ResampleElection(
          ResampleParams{.q = q,
                         .phi = phi,
                         .num_voters = n,
                         .num_candidates = m,
                         .seed = SyntheticSeed(seed, i)});
      char name[32];
      std::snprintf(name, sizeof(name), "election_%03d.txt", i);
      SaveProfile(fs::path(out) / name, profile);
    }
    stdout_stream << "wrote " << count << " elections to " << out << '\n';
    return 0;
  }
};

struct IngestCommand {
  std::vector<std::string> inputs;
  std::string input_dir;
  std::string manifest;
  std::string codes;
  std::string out;
  bool until_stable = false;

  void Register(CLI::App* app) {
    app->add_option("--input", inputs, "vote matrix CSV files")
        ->check(CLI::ExistingFile);
    app->add_option("--input-dir", input_dir,
                    "directory of <dataset>/participants-votes.csv files")
        ->check(CLI::ExistingDirectory);
    app->add_option("--manifest", manifest, "dataset ids to keep")
        ->check(CLI::ExistingFile);
    app->add_option("--codes", codes,
                    "vote code map, e.g. '1=approve,-1=disapprove,0=neutral,"
                    "=missing'");
    app->add_option("--out", out,
                    "directory for <id>.txt profiles and reports.csv");
    app->add_flag("--until-stable", until_stable,
                  "repeat removals until nothing changes");
  }

  int Execute(std::ostream& stdout_stream, std::ostream& log) const {
    std::vector<fs::path> files(inputs.begin(), inputs.end());
    if (!input_dir.empty()) {
      for (auto& file : FindVoteFiles(input_dir)) files.push_back(file);
    }
    if (files.empty()) {
      throw std::invalid_argument("give --input files or --input-dir");
    }
    std::optional<std::set<std::string>> keep;
    if (!manifest.empty()) keep = ReadManifest(manifest);
    const VoteCodes code_map = codes.empty() ? VoteCodes{} : ParseCodeMap(codes);
    const IngestSummary summary = Ingest(
        files, keep, code_map, PreprocessOptions{.until_stable = until_stable},
        log);
    if (summary.datasets.empty()) {
      throw std::runtime_error("no dataset left to ingest");
    }

    std::ostringstream reports;
    reports << "dataset,original_n,original_m,removed_statements,"
               "removed_voters_no_votes,removed_voters_no_approvals,"
               "filled_entries,final_n,final_m,q,phi\n";
    for (const auto& dataset : summary.datasets) {
      const PreprocessReport& r = dataset.preprocessed.report;
      reports << dataset.id << ',' << r.original_voters << ','
              << r.original_statements << ',' << r.removed_statements << ','
              << r.removed_voters_no_votes << ','
              << r.removed_voters_no_approvals << ',' << r.filled_entries
              << ',' << r.final_voters << ',' << r.final_statements << ','
              << Fixed(dataset.q) << ',' << Fixed(dataset.phi, 2) << '\n';
    }
    stdout_stream << reports.str();
    stdout_stream << "aggregate q: " << Fixed(summary.q) << '\n'
                  << "aggregate phi: " << Fixed(summary.phi) << '\n';
    if (!out.empty()) {
      fs::create_directories(out);
      for (const auto& dataset : summary.datasets) {
        SaveProfile(fs::path(out) / (dataset.id + ".txt"),
                    dataset.preprocessed.profile);
      }
      std::ofstream file = OpenOutput(fs::path(out) / "reports.csv");
      file << reports.str();
    }
    return 0;
  }
};

}  // namespace

std::uint64_t SyntheticSeed(std::uint64_t base_seed, int index) {
  return MixSeed(base_seed + kSyntheticTag, static_cast<std::uint64_t>(index));
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Diverse committee selection from approval ballots"};
  app.name("divcom");
  app.require_subcommand(1);

  RunCommand run;
  CLI::App* run_app = app.add_subcommand("run", "run one algorithm");
  run.Register(run_app);

  ExperimentCommand experiment;
  CLI::App* experiment_app =
      app.add_subcommand("experiment", "batch experiment to CSV");
  experiment.Register(experiment_app);

  CalcCommand calc;
  CLI::App* calc_app =
      app.add_subcommand("calc", "sample sizes and query budgets");
  calc_app->require_subcommand(1);
  CLI::App* greedy_budget =
      calc_app->add_subcommand("greedy-budget", "sampled greedy budget");
  calc.RegisterGreedy(greedy_budget);
  CLI::App* ls_budget =
      calc_app->add_subcommand("ls-budget", "sampled local search budget");
  CalcCommand ls_calc;
  ls_calc.RegisterLs(ls_budget);
  CLI::App* repeats = calc_app->add_subcommand(
      "inaccurate-repeats", "repetitions for majority decoding");
  CalcCommand repeats_calc;
  repeats_calc.RegisterRepeats(repeats);

  GenerateCommand generate;
  CLI::App* generate_app =
      app.add_subcommand("generate", "(q, phi)-resampled elections");
  generate.Register(generate_app);

  IngestCommand ingest;
  CLI::App* ingest_app =
      app.add_subcommand("ingest", "preprocess Polis vote matrices");
  ingest.Register(ingest_app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    return app.exit(error, out, err);
  }

  try {
    if (run_app->parsed()) return run.Execute(out);
    if (experiment_app->parsed()) return experiment.Execute(out, err);
    if (greedy_budget->parsed()) return calc.Greedy(out);
    if (ls_budget->parsed()) return ls_calc.Ls(out);
    if (repeats->parsed()) return repeats_calc.Repeats(out);
    if (generate_app->parsed()) return generate.Execute(out);
    if (ingest_app->parsed()) return ingest.Execute(out, err);
  } catch (const std::exception& error) {
    err << "error: " << error.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace divcom::tools
