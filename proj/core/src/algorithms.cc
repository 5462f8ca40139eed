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

#include "divcom/algorithms.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace divcom {
namespace {

RunResult Finish(const ApprovalProfile& truth, Committee w,
                 std::int64_t queries, int iterations, std::uint64_t seed,
                 std::int64_t sample_size) {
  const int covered = CoveredVoters(truth, w);
  return RunResult{std::move(w),
                   static_cast<double>(covered) / truth.num_voters(),
                   covered,
                   queries,
                   iterations,
                   seed,
                   sample_size};
}

void RequireCommitteeSize(int k, int m) {
  if (k < 1 || k > m) {
    throw std::invalid_argument("committee size k=" + std::to_string(k) +
                                " must satisfy 1 <= k <= m=" +
                                std::to_string(m));
  }
}

void RequireQuerySize(int t, int k, int m) {
  if (t <= k || t > m) {
    throw std::invalid_argument("query size t=" + std::to_string(t) +
                                " must satisfy k=" + std::to_string(k) +
                                " < t <= m=" + std::to_string(m));
  }
}

// Lowest-index candidate outside `w` with the largest gain.
Candidate ArgmaxGain(const std::vector<std::int64_t>& gains,
                     const Committee& w) {
  Candidate best = -1;
  for (Candidate c = 0; c < static_cast<Candidate>(gains.size()); ++c) {
    if (w.Contains(c)) continue;
    if (best < 0 || gains[c] > gains[best]) best = c;
  }
  return best;
}

std::vector<std::int64_t> GainCounts(const ApprovalProfile& profile,
                                     const Committee& w) {
  const std::vector<int> counts = MarginalGainCounts(profile, w);
  return {counts.begin(), counts.end()};
}

// Best exchange by tally; first strict maximum in the (in, out) order of
// `exchanges`, which ValidExchanges returns lexicographically.
template <typename DeltaFn>
std::pair<Exchange, double> BestExchange(const std::vector<Exchange>& exchanges,
                                         DeltaFn delta) {
  Exchange best = exchanges.front();
  double best_delta = delta(best);
  for (std::size_t e = 1; e < exchanges.size(); ++e) {
    const double value = delta(exchanges[e]);
    if (value > best_delta) {
      best = exchanges[e];
      best_delta = value;
    }
  }
  return {best, best_delta};
}

std::vector<Candidate> NonMembers(const Committee& w) {
  std::vector<Candidate> others;
  for (Candidate c = 0; c < w.num_candidates(); ++c) {
    if (!w.Contains(c)) others.push_back(c);
  }
  return others;
}

void RequireAlphas(const AlphaSequence& alphas, int k) {
  if (alphas.max_index() < k) {
    throw std::invalid_argument("alpha sequence shorter than committee size");
  }
}

}  // namespace

RunResult Greedy(const ApprovalProfile& profile, int k) {
  RequireCommitteeSize(k, profile.num_candidates());
  Committee w(profile.num_candidates(), k);
  for (int round = 0; round < k; ++round) {
    w.Add(ArgmaxGain(GainCounts(profile, w), w));
  }
  return Finish(profile, std::move(w), 0, k, 0, 0);
}

RunResult GreedyEps(const ApprovalProfile& profile, int k, double epsilon,
                    std::uint64_t seed) {
  RequireCommitteeSize(k, profile.num_candidates());
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  Rng rng(seed);
  const double slack = epsilon * profile.num_voters();
  Committee w(profile.num_candidates(), k);
  std::vector<Candidate> eligible;
  for (int round = 0; round < k; ++round) {
    const std::vector<std::int64_t> gains = GainCounts(profile, w);
    const Candidate top = ArgmaxGain(gains, w);
    if (epsilon == 0.0) {
      w.Add(top);
      continue;
    }
    eligible.clear();
    for (Candidate c = 0; c < profile.num_candidates(); ++c) {
      if (!w.Contains(c) &&
          static_cast<double>(gains[top] - gains[c]) <= slack) {
        eligible.push_back(c);
      }
    }
    w.Add(eligible[rng.Index(eligible.size())]);
  }
  return Finish(profile, std::move(w), 0, k, seed, 0);
}

SampleSize RequiredSampleSizeGreedy(double gamma, double delta, int m, int k) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1)");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  RequireCommitteeSize(k, m);
  const double e = std::numbers::e;
  const double epsilon = (1.0 - gamma) * e / (gamma * (e - 1.0));
  const double voters =
      std::ceil(2.0 / (epsilon * epsilon) *
                std::log(2.0 * m * static_cast<double>(k) / delta));
  return {epsilon, std::max<std::int64_t>(1, static_cast<std::int64_t>(voters))};
}

std::int64_t QueryBudgetGreedy(double gamma, double delta, int m, int k,
                               int t) {
  RequireQuerySize(t, k, m);
  const SampleSize size = RequiredSampleSizeGreedy(gamma, delta, m, k);
  return static_cast<std::int64_t>(k) * t * QueryFamilySize(m, k, t) *
         size.voters;
}

RunResult GreedyIncomplete(QueryOracle& oracle,
                           const GreedyIncompleteOptions& options) {
  const int m = oracle.num_candidates();
  const int k = options.k;
  const int t = options.query_size;
  RequireCommitteeSize(k, m);
  RequireQuerySize(t, k, m);
  if (t > kMaxQuerySize) {
    throw std::invalid_argument("query size above 64 is not supported");
  }
  std::int64_t voters_per_set = 0;
  if (options.sample_override) {
    if (*options.sample_override < 1) {
      throw std::invalid_argument("sample override must be >= 1");
    }
    voters_per_set = *options.sample_override;
  } else {
    voters_per_set =
        RequiredSampleSizeGreedy(options.gamma, options.delta, m, k).voters;
  }

  const std::int64_t queries_before = oracle.queries();
  Committee w(m, k);
  std::vector<std::int64_t> gains(m);
  for (int round = 0; round < k; ++round) {
    const QueryFamily family = BuildQueryFamily(m, w, t);
    std::fill(gains.begin(), gains.end(), 0);
    const std::uint64_t member_mask =
        w.size() == 0 ? 0 : (~std::uint64_t{0} >> (64 - w.size()));
    for (std::size_t j = 0; j < family.sets.size(); ++j) {
      const auto& set = family.sets[j];
      for (Voter v : oracle.SampleVoters(static_cast<int>(voters_per_set))) {
        const std::uint64_t pattern = oracle.PresentPattern(v, set);
        if (pattern & member_mask) continue;
        for (std::uint64_t rest = pattern; rest != 0; rest &= rest - 1) {
          const Candidate c = set[std::countr_zero(rest)];
          if (family.owner[c] == static_cast<int>(j)) ++gains[c];
        }
      }
    }
    w.Add(ArgmaxGain(gains, w));
  }
  const std::int64_t used = oracle.census() ? oracle.num_voters()
                                            : voters_per_set;
  return Finish(oracle.ground_truth(), std::move(w),
                oracle.queries() - queries_before, k, oracle.seed(), used);
}

double LocalSearchStep(double gamma, int k, double c2) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1)");
  }
  if (k < 2) throw std::invalid_argument("beta needs k >= 2 (log k > 0)");
  if (!(c2 > 0.0)) throw std::invalid_argument("C2 must be > 0");
  return c2 * (1.0 - gamma) / (gamma * k * std::log(static_cast<double>(k)));
}

RunResult LocalSearchBeta(const ApprovalProfile& profile,
                          const Matroid& matroid, double beta,
                          const AlphaSequence& alphas, std::uint64_t seed) {
  if (matroid.universe_size() != profile.num_candidates()) {
    throw std::invalid_argument("matroid universe differs from m");
  }
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  RequireAlphas(alphas, matroid.rank());
  Committee w = RandomBasis(matroid, seed);
  int iterations = 0;
  while (true) {
    const std::vector<Exchange> exchanges = ValidExchanges(matroid, w);
    if (exchanges.empty()) break;
    const std::vector<Candidate> entering = NonMembers(w);
    SwapTally tally(w, entering);
    for (Voter i = 0; i < profile.num_voters(); ++i) {
      tally.AddVoter(profile.ballot(i));
    }
    const auto [best, delta] = BestExchange(exchanges, [&](const Exchange& x) {
      return tally.Delta(x.in, x.out, alphas.values());
    });
    if (delta <= beta) break;
    w.Swap(best.in, best.out);
    ++iterations;
  }
  return Finish(profile, std::move(w), 0, iterations, seed, 0);
}

std::int64_t LocalSearchIterationCap(double beta, double xi, double alpha_k) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(xi >= 1.0)) throw std::invalid_argument("xi must be >= 1");
  return static_cast<std::int64_t>(std::ceil(xi * alpha_k / beta));
}

SampleSize RequiredSampleSizeLs(double beta, double xi, double delta, int m,
                                int k, double alpha_k) {
  if (!(xi > 1.0)) {
    throw std::invalid_argument(
        "xi must be > 1: xi = 1 leaves a zero estimation margin");
  }
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  if (k < 1 || k >= m) throw std::invalid_argument("need 1 <= k < m");
  const double epsilon = (xi - 1.0) / (2.0 * xi) * beta;
  const double spread = 2.0 - 2.0 / std::numbers::e;
  const double voters = std::ceil(
      spread * spread / (2.0 * epsilon * epsilon) *
      std::log(2.0 * (m - k) * static_cast<double>(k) * xi * alpha_k /
               (delta * beta)));
  return {epsilon, std::max<std::int64_t>(1, static_cast<std::int64_t>(voters))};
}

std::int64_t QueryBudgetLs(double beta, double xi, double delta, int m, int k,
                           int t, double alpha_k) {
  RequireQuerySize(t, k, m);
  const SampleSize size = RequiredSampleSizeLs(beta, xi, delta, m, k, alpha_k);
  return LocalSearchIterationCap(beta, xi, alpha_k) * t *
         QueryFamilySize(m, k, t) * size.voters;
}

RunResult LsIncomplete(QueryOracle& oracle, const Matroid& matroid,
                       const LsIncompleteOptions& options,
                       const AlphaSequence& alphas) {
  const int m = oracle.num_candidates();
  const int k = matroid.rank();
  const int t = options.query_size;
  if (matroid.universe_size() != m) {
    throw std::invalid_argument("matroid universe differs from m");
  }
  if (k < 3) {
    throw std::invalid_argument("sampled local search needs k >= 3");
  }
  RequireQuerySize(t, k, m);
  if (t > kMaxQuerySize) {
    throw std::invalid_argument("query size above 64 is not supported");
  }
  RequireAlphas(alphas, k);
  if (!(options.beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(options.xi >= 1.0)) throw std::invalid_argument("xi must be >= 1");

  const double epsilon = (options.xi - 1.0) / (2.0 * options.xi) * options.beta;
  std::int64_t voters_per_set = 0;
  if (options.sample_override) {
    if (*options.sample_override < 1) {
      throw std::invalid_argument("sample override must be >= 1");
    }
    voters_per_set = *options.sample_override;
  } else {
    voters_per_set = RequiredSampleSizeLs(options.beta, options.xi,
                                          options.delta, m, k, alphas[k])
                         .voters;
  }
  const std::int64_t cap =
      LocalSearchIterationCap(options.beta, options.xi, alphas[k]);

  const std::int64_t queries_before = oracle.queries();
  Committee w = RandomBasis(matroid, options.seed);
  int iterations = 0;
  std::vector<Candidate> approved;
  while (iterations < cap) {
    const std::vector<Exchange> exchanges = ValidExchanges(matroid, w);
    if (exchanges.empty()) break;
    const QueryFamily family = BuildQueryFamily(m, w, t);
    std::vector<SwapTally> tallies;
    tallies.reserve(family.sets.size());
    for (std::size_t j = 0; j < family.sets.size(); ++j) {
      std::vector<Candidate> owned;
      for (Candidate c : family.sets[j]) {
        if (family.owner[c] == static_cast<int>(j)) owned.push_back(c);
      }
      tallies.emplace_back(w, owned);
      const auto& set = family.sets[j];
      for (Voter v : oracle.SampleVoters(static_cast<int>(voters_per_set))) {
        const std::uint64_t pattern = oracle.PresentPattern(v, set);
        approved.clear();
        for (std::uint64_t rest = pattern; rest != 0; rest &= rest - 1) {
          approved.push_back(set[std::countr_zero(rest)]);
        }
        tallies.back().AddVoter(approved);
      }
    }
    const auto [best, estimate] =
        BestExchange(exchanges, [&](const Exchange& x) {
          return tallies[family.owner[x.in]].Delta(x.in, x.out,
                                                   alphas.values());
        });
    if (estimate < options.beta - epsilon) break;
    w.Swap(best.in, best.out);
    ++iterations;
  }
  const std::int64_t used = oracle.census() ? oracle.num_voters()
                                            : voters_per_set;
  return Finish(oracle.ground_truth(), std::move(w),
                oracle.queries() - queries_before, iterations, options.seed,
                used);
}

std::int64_t RequiredRepeatsInaccurate(double p, double delta, int n, int m) {
  if (!(p > 0.0 && p < 0.5)) {
    throw std::invalid_argument("p must lie in (0, 1/2)");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  if (n < 1 || m < 1) throw std::invalid_argument("need n, m >= 1");
  const double repeats =
      std::ceil(2.0 * std::log(static_cast<double>(n) * m / delta) /
                std::log(1.0 / (4.0 * p * (1.0 - p))));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(repeats));
}

ApprovalProfile DecodeByMajority(QueryOracle& oracle, std::int64_t repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  const int m = oracle.num_candidates();
  std::vector<Candidate> everyone(m);
  std::iota(everyone.begin(), everyone.end(), 0);
  std::vector<std::vector<Candidate>> ballots(oracle.num_voters());
  std::vector<std::int64_t> yes(m);
  for (Voter v = 0; v < oracle.num_voters(); ++v) {
    std::fill(yes.begin(), yes.end(), 0);
    for (std::int64_t r = 0; r < repeats; ++r) {
      const std::vector<std::uint8_t> bits = oracle.Present(v, everyone);
      for (int c = 0; c < m; ++c) yes[c] += bits[c];
    }
    for (Candidate c = 0; c < m; ++c) {
      if (2 * yes[c] > repeats) ballots[v].push_back(c);
    }
  }
  return ApprovalProfile(m, std::move(ballots));
}

RunResult GreedyInaccurate(QueryOracle& oracle, int k, double delta) {
  if (oracle.mode() != OracleMode::kInaccurate) {
    throw std::invalid_argument("greedy-inaccurate needs an inaccurate oracle");
  }
  RequireCommitteeSize(k, oracle.num_candidates());
  const std::int64_t repeats = RequiredRepeatsInaccurate(
      oracle.error_rate(), delta, oracle.num_voters(), oracle.num_candidates());
  const std::int64_t queries_before = oracle.queries();
  const ApprovalProfile decoded = DecodeByMajority(oracle, repeats);
  RunResult run = Greedy(decoded, k);
  return Finish(oracle.ground_truth(), std::move(run.committee),
                oracle.queries() - queries_before, k, oracle.seed(), repeats);
}

RunResult ApprovalVoting(const ApprovalProfile& profile, int k) {
  RequireCommitteeSize(k, profile.num_candidates());
  const std::vector<int> counts = ApprovalCounts(profile);
  std::vector<Candidate> order(profile.num_candidates());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Candidate a, Candidate b) {
    return counts[a] > counts[b];
  });
  Committee w(profile.num_candidates(), k);
  for (int r = 0; r < k; ++r) w.Add(order[r]);
  return Finish(profile, std::move(w), 0, 0, 0, 0);
}

RunResult LsPav(const ApprovalProfile& profile, int k,
                double threshold_factor, std::uint64_t seed) {
  RequireCommitteeSize(k, profile.num_candidates());
  if (!(threshold_factor > 0.0)) {
    throw std::invalid_argument("PAV threshold factor must be > 0");
  }
  const int m = profile.num_candidates();
  const double threshold =
      threshold_factor * profile.num_voters() / (static_cast<double>(k) * k);
  const std::vector<double> harmonic = HarmonicWeights(k);

  Rng rng(seed);
  std::vector<Candidate> order(m);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(std::span<Candidate>(order));
  Committee w(m, k);
  for (int r = 0; r < k; ++r) w.Add(order[r]);

  int iterations = 0;
  while (true) {
    const std::vector<Candidate> entering = NonMembers(w);
    if (entering.empty()) break;
    SwapTally tally(w, entering);
    for (Voter i = 0; i < profile.num_voters(); ++i) {
      tally.AddVoter(profile.ballot(i));
    }
    const std::vector<Candidate> members = w.SortedMembers();
    bool swapped = false;
    for (Candidate in : entering) {
      for (Candidate out : members) {
        if (tally.Sum(in, out, harmonic) >= threshold) {
          w.Swap(in, out);
          swapped = true;
          break;
        }
      }
      if (swapped) break;
    }
    if (!swapped) break;
    ++iterations;
  }
  return Finish(profile, std::move(w), 0, iterations, seed, 0);
}

namespace {

std::int64_t BinomialCapped(int m, int k, std::int64_t cap) {
  std::int64_t value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (m - k + i) / i;
    if (value > cap) return cap + 1;
  }
  return value;
}

// Visits all size-k index combinations of 0..m-1 in lexicographic order.
template <typename Visit>
void ForEachCombination(int m, int k, Visit visit) {
  std::vector<Candidate> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

Optimum Enumerate(const ApprovalProfile& profile, int k,
                  const Matroid* matroid) {
  const int m = profile.num_candidates();
  RequireCommitteeSize(k, m);
  if (BinomialCapped(m, k, kMaxExactOptSubsets) > kMaxExactOptSubsets) {
    throw std::invalid_argument("exact optimum refused: C(" +
                                std::to_string(m) + ", " + std::to_string(k) +
                                ") exceeds " +
                                std::to_string(kMaxExactOptSubsets));
  }
  const int n = profile.num_voters();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> approvers(static_cast<std::size_t>(m) * words, 0);
  for (Voter i = 0; i < n; ++i) {
    for (Candidate c : profile.ballot(i)) {
      approvers[c * words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
  }
  std::vector<Candidate> best;
  int best_covered = -1;
  std::vector<std::uint64_t> cover(words);
  ForEachCombination(m, k, [&](const std::vector<Candidate>& pick) {
    if (matroid != nullptr && !matroid->IsIndependent(pick)) return;
    std::fill(cover.begin(), cover.end(), 0);
    for (Candidate c : pick) {
      for (std::size_t w = 0; w < words; ++w) cover[w] |= approvers[c * words + w];
    }
    int covered = 0;
    for (std::uint64_t word : cover) covered += std::popcount(word);
    if (covered > best_covered) {
      best_covered = covered;
      best = pick;
    }
  });
  if (best_covered < 0) {
    throw std::invalid_argument("no feasible committee of the requested size");
  }
  return Optimum{Committee::FromMembers(m, k, best), best_covered,
                 static_cast<double>(best_covered) / n};
}

}  // namespace

Optimum ExactOpt(const ApprovalProfile& profile, int k) {
  return Enumerate(profile, k, nullptr);
}

Optimum ExactOpt(const ApprovalProfile& profile, const Matroid& matroid) {
  if (matroid.universe_size() != profile.num_candidates()) {
    throw std::invalid_argument("matroid universe differs from m");
  }
  return Enumerate(profile, matroid.rank(), &matroid);
}

std::int64_t SampleSizeForBudget(double budget_m, int n, int m, int k, int t,
                                 int rounds) {
  if (!(budget_m > 0.0)) throw std::invalid_argument("M must be > 0");
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  RequireQuerySize(t, k, m);
  const double sets = static_cast<double>(rounds) * QueryFamilySize(m, k, t);
  return std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(budget_m * n / sets)));
}

}  // namespace divcom
