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

#include "divcom_tools/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "divcom/objectives.h"
#include "divcom/query_oracle.h"
#include "divcom/random.h"

namespace divcom::tools {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

RunResult Rescore(const ApprovalProfile& truth, RunResult result) {
  result.covered = CoveredVoters(truth, result.committee);
  result.score = static_cast<double>(result.covered) / truth.num_voters();
  return result;
}

std::unique_ptr<Matroid> MakeMatroid(const ApprovalProfile& profile,
                                     const AlgorithmParams& params) {
  if (!params.quotas) {
    return std::make_unique<UniformMatroid>(profile.num_candidates(),
                                            params.k);
  }
  if (params.quotas->num_candidates != profile.num_candidates() ||
      params.quotas->committee_size != params.k) {
    throw std::invalid_argument(
        "quota config must use the profile's m and the requested k");
  }
  return std::make_unique<QuotaMatroid>(*params.quotas);
}

RunResult RunComplete(const ApprovalProfile& view,
                      const std::string& algorithm,
                      const AlgorithmParams& params, const RunSeeds& seeds) {
  const int k = params.k;
  if (algorithm == kGreedy) return Greedy(view, k);
  if (algorithm == kGreedyEps) {
    return GreedyEps(view, k, params.eps, seeds.run);
  }
  if (algorithm == kApprovalVoting) return ApprovalVoting(view, k);
  if (algorithm == kLsPav) {
    return LsPav(view, k, params.pav_threshold, seeds.run);
  }
  if (algorithm == kLocalSearch) {
    const auto matroid = MakeMatroid(view, params);
    return LocalSearchBeta(view, *matroid, EffectiveBeta(params),
                           AlphaSequence(k), seeds.init);
  }
  if (algorithm == kExact) {
    Optimum opt = params.quotas
                      ? ExactOpt(view, *MakeMatroid(view, params))
                      : ExactOpt(view, k);
    RunResult result{.committee = std::move(opt.committee)};
    result.covered = opt.covered;
    result.score = opt.score;
    return result;
  }
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

std::string CellKey(const std::string& dataset, const std::string& algorithm,
                    const std::string& budget, double p, int trial) {
  return dataset + '\x1f' + algorithm + '\x1f' + budget + '\x1f' +
         FormatNumber(p) + '\x1f' + std::to_string(trial);
}

struct Cell {
  const Dataset* dataset;
  std::string algorithm;
  std::string budget;
  std::optional<double> budget_value;
  double p;
  int trial;
  bool listed;
};

ExperimentRecord RunCell(const ExperimentConfig& config, const Cell& cell) {
  ExperimentRecord record;
  record.dataset = cell.dataset->id;
  record.algorithm = cell.algorithm;
  record.k = config.params.k;
  record.budget = cell.budget;
  record.p = cell.p;
  record.trial = cell.trial;
  const RunSeeds seeds =
      CellSeeds(config.base_seed, cell.dataset->id, cell.algorithm,
                cell.budget, cell.p, cell.trial);
  record.seed = seeds.run;

  AlgorithmParams params = config.params;
  params.p = cell.p;
  params.budget = cell.budget_value;
  params.census = cell.budget == "census";
  const auto start = std::chrono::steady_clock::now();
  try {
    const RunResult result =
        RunAlgorithm(cell.dataset->profile, cell.algorithm, params, seeds);
    record.cc = result.score;
    record.queries = result.queries;
  } catch (const std::exception& error) {
    record.cc = kNaN;
    record.error = error.what();
  }
  if (config.timing) {
    record.ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  return record;
}

double Mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return values.empty() ? kNaN : sum / values.size();
}

double SampleSd(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double mean = Mean(values);
  double sum = 0.0;
  for (double v : values) sum += (v - mean) * (v - mean);
  return std::sqrt(sum / (values.size() - 1));
}

}  // namespace

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kAll = {
      kGreedy,           kGreedyEps,    kApprovalVoting,
      kLsPav,            kLocalSearch,  kGreedyIncomplete,
      kLsIncomplete,     kGreedyInaccurate, kExact};
  return kAll;
}

bool IsKnownAlgorithm(const std::string& id) {
  const auto& all = KnownAlgorithms();
  return std::find(all.begin(), all.end(), id) != all.end();
}

bool IsIncomplete(const std::string& id) {
  return id == kGreedyIncomplete || id == kLsIncomplete;
}

std::string Counterpart(const std::string& id) {
  if (id == kGreedyIncomplete || id == kGreedyInaccurate) return kGreedy;
  if (id == kLsIncomplete) return kLocalSearch;
  return id;
}

double EffectiveBeta(const AlgorithmParams& params) {
  if (params.beta) return *params.beta;
  return LocalSearchStep(params.gamma, params.k, params.c2);
}

RunResult RunAlgorithm(const ApprovalProfile& profile,
                       const std::string& algorithm,
                       const AlgorithmParams& params, const RunSeeds& seeds) {
  if (!IsKnownAlgorithm(algorithm)) {
    throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  }
  const int m = profile.num_candidates();
  if (params.k < 1 || params.k > m) {
    throw std::invalid_argument("committee size k=" +
                                std::to_string(params.k) +
                                " must satisfy 1 <= k <= m=" +
                                std::to_string(m));
  }
  if (!(params.p >= 0.0 && params.p < 0.5)) {
    throw std::invalid_argument("p must satisfy 0 <= p < 1/2");
  }
  if (params.quotas && algorithm != kLocalSearch &&
      algorithm != kLsIncomplete && algorithm != kExact) {
    throw std::invalid_argument(
        "quota constraints need local_search, ls_incomplete or exact");
  }

  if (algorithm == kGreedyInaccurate) {
    if (params.p <= 0.0) {
      throw std::invalid_argument("greedy_inaccurate needs p > 0");
    }
    QueryOracle oracle = QueryOracle::Inaccurate(profile, params.p, seeds.run);
    RunResult result = GreedyInaccurate(oracle, params.k, params.delta);
    result.seed = seeds.run;
    return result;
  }

  if (!IsIncomplete(algorithm)) {
    if (params.p == 0.0) {
      RunResult result = RunComplete(profile, algorithm, params, seeds);
      result.seed = seeds.run;
      return result;
    }
    // Single noisy answer per pair, no repetitions.
    QueryOracle oracle = QueryOracle::Inaccurate(profile, params.p, seeds.run);
    const ApprovalProfile seen = DecodeByMajority(oracle, 1);
    RunResult result =
        Rescore(profile, RunComplete(seen, algorithm, params, seeds));
    result.queries = oracle.queries();
    result.sample_size = 1;
    result.seed = seeds.run;
    return result;
  }

  QueryOracle oracle =
      params.p > 0.0 ? QueryOracle::Inaccurate(profile, params.p, seeds.run)
                     : QueryOracle::Exact(profile, seeds.run);
  oracle.set_census(params.census);
  std::optional<std::int64_t> sample;
  if (params.census) {
    sample = profile.num_voters();
  } else if (params.budget) {
    // One querying round per committee seat for both algorithms.
    sample = SampleSizeForBudget(*params.budget, profile.num_voters(), m,
                                 params.k, params.t, params.k);
  }
  auto run = [&]() -> RunResult {
    if (algorithm == kGreedyIncomplete) {
      return GreedyIncomplete(
          oracle, GreedyIncompleteOptions{.k = params.k,
                                          .query_size = params.t,
                                          .gamma = params.gamma,
                                          .delta = params.delta,
                                          .sample_override = sample});
    }
    const auto matroid = MakeMatroid(profile, params);
    return LsIncomplete(oracle, *matroid,
                        LsIncompleteOptions{.beta = EffectiveBeta(params),
                                            .query_size = params.t,
                                            .delta = params.delta,
                                            .xi = params.xi,
                                            .seed = seeds.init,
                                            .sample_override = sample},
                        AlphaSequence(params.k));
  };
  RunResult result = run();
  result.seed = seeds.run;
  return result;
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.datasets.empty()) {
    throw std::invalid_argument("experiment needs at least one dataset");
  }
  if (config.algorithms.empty()) {
    throw std::invalid_argument("experiment needs at least one algorithm");
  }
  for (const auto& id : config.algorithms) {
    if (!IsKnownAlgorithm(id)) {
      throw std::invalid_argument("unknown algorithm '" + id + "'");
    }
  }
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
  for (double budget : config.budgets) {
    if (!(budget > 0.0)) throw std::invalid_argument("M levels must be > 0");
  }
  if (config.error_rates.empty()) {
    throw std::invalid_argument("experiment needs at least one p level");
  }
  for (double p : config.error_rates) {
    if (!(p >= 0.0 && p < 0.5)) {
      throw std::invalid_argument("p levels must satisfy 0 <= p < 1/2");
    }
  }
  const bool incomplete = std::any_of(config.algorithms.begin(),
                                      config.algorithms.end(), IsIncomplete);
  if (incomplete && !config.census && config.budgets.empty()) {
    throw std::invalid_argument("incomplete algorithms need M levels");
  }
}

RunSeeds CellSeeds(std::uint64_t base_seed, const std::string& dataset,
                   const std::string& algorithm, const std::string& budget,
                   double p, int trial) {
  RunSeeds seeds;
  seeds.run = MixSeed(base_seed + StableHash(CellKey(dataset, algorithm,
                                                     budget, p, 0)),
                      static_cast<std::uint64_t>(trial));
  seeds.init = MixSeed(base_seed + StableHash(dataset + "\x1finit"),
                       static_cast<std::uint64_t>(trial));
  return seeds;
}

std::vector<ExperimentRecord> RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  std::vector<Cell> cells;
  std::map<std::string, std::size_t> index;
  auto add = [&](const Dataset& dataset, const std::string& algorithm,
                 const std::string& budget, std::optional<double> value,
                 double p, int trial, bool listed) {
    const std::string key = CellKey(dataset.id, algorithm, budget, p, trial);
    const auto [it, inserted] = index.emplace(key, cells.size());
    if (inserted) {
      cells.push_back(Cell{&dataset, algorithm, budget, value, p, trial,
                           listed});
    } else if (listed) {
      cells[it->second].listed = true;
    }
  };
  for (const auto& dataset : config.datasets) {
    for (const auto& algorithm : config.algorithms) {
      std::vector<std::pair<std::string, std::optional<double>>> budgets;
      if (!IsIncomplete(algorithm)) {
        budgets.emplace_back("full", std::nullopt);
      } else if (config.census) {
        budgets.emplace_back("census", std::nullopt);
      } else {
        for (double m : config.budgets) budgets.emplace_back(FormatBudget(m), m);
      }
      for (const auto& [budget, value] : budgets) {
        for (double p : config.error_rates) {
          for (int trial = 0; trial < config.trials; ++trial) {
            add(dataset, algorithm, budget, value, p, trial, true);
          }
        }
      }
    }
  }
  // Baselines: complete-information counterpart with accurate answers.
  const std::size_t listed_cells = cells.size();
  for (std::size_t i = 0; i < listed_cells; ++i) {
    const Cell cell = cells[i];
    add(*cell.dataset, Counterpart(cell.algorithm), "full", std::nullopt, 0.0,
        cell.trial, false);
  }

  std::vector<ExperimentRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      records[i] = RunCell(config, cells[i]);
    }
  };
  const int threads =
      std::min<int>(config.threads, static_cast<int>(cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  std::vector<ExperimentRecord> rows;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].listed) continue;
    ExperimentRecord row = records[i];
    const auto& base = records[index.at(
        CellKey(row.dataset, Counterpart(row.algorithm), "full", 0.0,
                row.trial))];
    if (!row.error.empty() || !base.error.empty() || !(base.cc > 0.0)) {
      row.relative = kNaN;
    } else {
      row.relative = row.cc / base.cc;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatBudget(double budget) { return FormatNumber(budget); }

std::string FormatNumber(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

namespace {

std::string Fixed(double value, int digits) {
  if (std::isnan(value)) return "nan";
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

void WriteCsv(std::ostream& out, const std::vector<ExperimentRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.dataset << ',' << row.algorithm << ',' << row.k << ','
        << row.budget << ',' << FormatNumber(row.p) << ',' << row.trial << ','
        << row.seed << ',' << Fixed(row.cc, 6) << ',' << Fixed(row.relative, 6)
        << ',' << row.queries << ',' << Fixed(row.ms, 3) << '\n';
  }
}

std::vector<CellSummary> Summarize(const std::vector<ExperimentRecord>& rows) {
  using Key = std::tuple<std::string, std::string, std::string, double>;
  std::map<Key, std::size_t> index;
  std::vector<CellSummary> summary;
  std::vector<std::vector<double>> cc;
  std::vector<std::vector<double>> relative;
  for (const auto& row : rows) {
    const Key key{row.dataset, row.algorithm, row.budget, row.p};
    auto [it, inserted] = index.emplace(key, summary.size());
    if (inserted) {
      summary.push_back(CellSummary{.dataset = row.dataset,
                                    .algorithm = row.algorithm,
                                    .budget = row.budget,
                                    .p = row.p});
      cc.emplace_back();
      relative.emplace_back();
    }
    if (!row.error.empty()) continue;
    cc[it->second].push_back(row.cc);
    if (!std::isnan(row.relative)) relative[it->second].push_back(row.relative);
  }
  for (std::size_t i = 0; i < summary.size(); ++i) {
    summary[i].runs = static_cast<int>(cc[i].size());
    summary[i].cc_mean = Mean(cc[i]);
    summary[i].cc_sd = SampleSd(cc[i]);
    summary[i].relative_mean = Mean(relative[i]);
    summary[i].relative_sd = SampleSd(relative[i]);
  }
  return summary;
}

void WriteSummaryCsv(std::ostream& out,
                     const std::vector<CellSummary>& summary) {
  out << "dataset,algorithm,M,p,runs,cc_mean,cc_sd,relative_mean,relative_sd\n";
  for (const auto& cell : summary) {
    out << cell.dataset << ',' << cell.algorithm << ',' << cell.budget << ','
        << FormatNumber(cell.p) << ',' << cell.runs << ','
        << Fixed(cell.cc_mean, 6) << ',' << Fixed(cell.cc_sd, 6) << ','
        << Fixed(cell.relative_mean, 6) << ',' << Fixed(cell.relative_sd, 6)
        << '\n';
  }
}

namespace {

// High-contrast, colour-blind safe palette.
constexpr const char* kColors[] = {"#004488", "#DDAA33", "#BB5566",
                                   "#000000", "#6699CC", "#997700"};

std::string Color(std::size_t i) { return kColors[i % std::size(kColors)]; }

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

template <typename T>
std::size_t IndexOf(std::vector<T>& values, const T& value) {
  const auto it = std::find(values.begin(), values.end(), value);
  if (it != values.end()) return it - values.begin();
  values.push_back(value);
  return values.size() - 1;
}

void Axis(std::ostream& out, double left, double top, double width,
          double height, double y_max, const std::string& y_label) {
  out << "<line x1='" << left << "' y1='" << top + height << "' x2='"
      << left + width << "' y2='" << top + height << "' stroke='black'/>\n";
  out << "<line x1='" << left << "' y1='" << top << "' x2='" << left
      << "' y2='" << top + height << "' stroke='black'/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double value = y_max * i / 5.0;
    const double y = top + height - height * i / 5.0;
    out << "<line x1='" << left - 4 << "' y1='" << y << "' x2='" << left
        << "' y2='" << y << "' stroke='black'/>\n";
    out << "<text x='" << left - 6 << "' y='" << y + 4
        << "' font-size='11' text-anchor='end'>" << Fixed(value, 2)
        << "</text>\n";
  }
  out << "<text x='14' y='" << top + height / 2
      << "' font-size='12' transform='rotate(-90 14 " << top + height / 2
      << ")' text-anchor='middle'>" << y_label << "</text>\n";
}

}  // namespace

void WriteScorePlot(std::ostream& out,
                    const std::vector<CellSummary>& summary) {
  std::vector<std::string> datasets;
  std::vector<std::string> algorithms;
  std::vector<const CellSummary*> bars;
  double y_max = 0.0;
  for (const auto& cell : summary) {
    if (cell.budget != "full" || cell.p != 0.0 || cell.runs == 0) continue;
    IndexOf(datasets, cell.dataset);
    IndexOf(algorithms, cell.algorithm);
    bars.push_back(&cell);
    y_max = std::max(y_max, cell.cc_mean + cell.cc_sd);
  }
  y_max = y_max > 0.0 ? std::min(1.0, y_max * 1.1) : 1.0;
  const double bar = 12.0;
  const double group = bar * std::max<std::size_t>(algorithms.size(), 1) + 16;
  const double left = 60, top = 20, height = 300;
  const double width = group * std::max<std::size_t>(datasets.size(), 1);
  const double total_width = left + width + 160;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << total_width
      << "' height='" << top + height + 120 << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  Axis(out, left, top, width, height, y_max, "CC score");
  for (const CellSummary* cell : bars) {
    const std::size_t d = IndexOf(datasets, cell->dataset);
    const std::size_t a = IndexOf(algorithms, cell->algorithm);
    const double x = left + d * group + 8 + a * bar;
    const double h = height * cell->cc_mean / y_max;
    out << "<rect x='" << x << "' y='" << top + height - h << "' width='"
        << bar - 2 << "' height='" << h << "' fill='" << Color(a) << "'/>\n";
    const double lo = height * std::max(0.0, cell->cc_mean - cell->cc_sd) / y_max;
    const double hi = height * std::min(y_max, cell->cc_mean + cell->cc_sd) / y_max;
    out << "<line x1='" << x + bar / 2 - 1 << "' y1='" << top + height - lo
        << "' x2='" << x + bar / 2 - 1 << "' y2='" << top + height - hi
        << "' stroke='black'/>\n";
  }
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    const double x = left + d * group + group / 2;
    out << "<text x='" << x << "' y='" << top + height + 12
        << "' font-size='10' text-anchor='end' transform='rotate(-60 " << x
        << ' ' << top + height + 12 << ")'>" << Escape(datasets[d])
        << "</text>\n";
  }
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    const double y = top + 10 + 18 * a;
    out << "<rect x='" << left + width + 16 << "' y='" << y - 9
        << "' width='10' height='10' fill='" << Color(a) << "'/>\n";
    out << "<text x='" << left + width + 32 << "' y='" << y
        << "' font-size='12'>" << Escape(algorithms[a]) << "</text>\n";
  }
  out << "</svg>\n";
}

void WriteRelativePlot(std::ostream& out,
                       const std::vector<CellSummary>& summary) {
  // Per (algorithm, p, M): dataset means and standard deviations averaged
  // over datasets.
  struct Point {
    double budget;
    double mean = 0.0;
    double sd = 0.0;
    int datasets = 0;
  };
  std::vector<std::pair<std::string, double>> series;
  std::map<std::pair<std::size_t, double>, Point> points;
  std::vector<std::pair<std::string, double>> flat;
  std::map<std::size_t, Point> flat_values;
  double max_budget = 1.0;
  for (const auto& cell : summary) {
    if (cell.runs == 0 || std::isnan(cell.relative_mean)) continue;
    if (cell.budget == "full") {
      if (cell.p == 0.0) continue;  // relative 1 by construction
      auto& point = flat_values[IndexOf(flat, {cell.algorithm, cell.p})];
      point.mean += cell.relative_mean;
      point.sd += cell.relative_sd;
      ++point.datasets;
      continue;
    }
    char* end = nullptr;
    const double budget = std::strtod(cell.budget.c_str(), &end);
    if (end == cell.budget.c_str()) continue;
    max_budget = std::max(max_budget, budget);
    const std::size_t s = IndexOf(series, {cell.algorithm, cell.p});
    auto& point = points[{s, budget}];
    point.budget = budget;
    point.mean += cell.relative_mean;
    point.sd += cell.relative_sd;
    ++point.datasets;
  }
  const double left = 60, top = 20, height = 300, width = 360;
  const double y_max = 1.1;
  auto x_of = [&](double budget) { return left + width * budget / (max_budget + 0.5); };
  auto y_of = [&](double value) {
    return top + height - height * std::clamp(value, 0.0, y_max) / y_max;
  };
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << left + width + 240
      << "' height='" << top + height + 60 << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  Axis(out, left, top, width, height, y_max, "relative CC score");
  for (int b = 1; b <= static_cast<int>(max_budget); ++b) {
    out << "<text x='" << x_of(b) << "' y='" << top + height + 16
        << "' font-size='11' text-anchor='middle'>" << b << "</text>\n";
  }
  out << "<text x='" << left + width / 2 << "' y='" << top + height + 36
      << "' font-size='12' text-anchor='middle'>M</text>\n";
  std::size_t legend = 0;
  for (std::size_t s = 0; s < series.size(); ++s) {
    std::string path;
    for (auto& [key, point] : points) {
      if (key.first != s) continue;
      const double mean = point.mean / point.datasets;
      const double sd = point.sd / point.datasets;
      const double x = x_of(point.budget);
      path += (path.empty() ? "M" : " L") + Fixed(x, 2) + ' ' +
              Fixed(y_of(mean), 2);
      out << "<line x1='" << x << "' y1='" << y_of(mean - sd) << "' x2='" << x
          << "' y2='" << y_of(mean + sd) << "' stroke='" << Color(s)
          << "'/>\n";
      out << "<circle cx='" << x << "' cy='" << y_of(mean) << "' r='3' fill='"
          << Color(s) << "'/>\n";
    }
    out << "<path d='" << path << "' fill='none' stroke='" << Color(s)
        << "'/>\n";
    const double y = top + 10 + 18 * legend++;
    out << "<text x='" << left + width + 16 << "' y='" << y
        << "' font-size='12' fill='" << Color(s) << "'>"
        << Escape(series[s].first) << " p=" << FormatNumber(series[s].second)
        << "</text>\n";
  }
  for (std::size_t f = 0; f < flat.size(); ++f) {
    const Point& point = flat_values[f];
    const double y = y_of(point.mean / point.datasets);
    const std::string color = Color(series.size() + f);
    out << "<line x1='" << left << "' y1='" << y << "' x2='" << left + width
        << "' y2='" << y << "' stroke='" << color
        << "' stroke-dasharray='6 4'/>\n";
    const double ly = top + 10 + 18 * legend++;
    out << "<text x='" << left + width + 16 << "' y='" << ly
        << "' font-size='12' fill='" << color << "'>" << Escape(flat[f].first)
        << " p=" << FormatNumber(flat[f].second) << " (all answers)</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace divcom::tools
