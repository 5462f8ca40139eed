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

#include "divcom/datagen.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "divcom/random.h"

namespace divcom {
namespace {

int CentralSize(double q, int m) {
  return static_cast<int>(std::floor(q * m));
}

}  // namespace

ApprovalProfile ResampleElection(const ResampleParams& params) {
  if (!(params.q >= 0.0 && params.q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  if (!(params.phi >= 0.0 && params.phi <= 1.0)) {
    throw std::invalid_argument("phi must lie in [0, 1]");
  }
  if (params.num_voters < 1 || params.num_candidates < 1) {
    throw std::invalid_argument("resampling needs n, m >= 1");
  }
  const int central = CentralSize(params.q, params.num_candidates);
  Rng rng(params.seed);
  std::vector<std::vector<Candidate>> ballots(params.num_voters);
  for (auto& ballot : ballots) {
    for (Candidate c = 0; c < params.num_candidates; ++c) {
      const bool resample = rng.Uniform() < params.phi;
      const bool approve = resample ? rng.Bernoulli(params.q) : c < central;
      if (approve) ballot.push_back(c);
    }
  }
  return ApprovalProfile(params.num_candidates, std::move(ballots));
}

ApprovalwiseVector ApprovalwiseVectorOf(const ApprovalProfile& profile) {
  const std::vector<int> counts = ApprovalCounts(profile);
  ApprovalwiseVector fractions(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c) {
    fractions[c] = static_cast<double>(counts[c]) / profile.num_voters();
  }
  std::sort(fractions.begin(), fractions.end(), std::greater<>());
  return fractions;
}

ApprovalwiseVector LimitVector(double q, double phi, int num_candidates) {
  if (!(q >= 0.0 && q <= 1.0) || !(phi >= 0.0 && phi <= 1.0)) {
    throw std::invalid_argument("q and phi must lie in [0, 1]");
  }
  const int central = CentralSize(q, num_candidates);
  ApprovalwiseVector limit(num_candidates, phi * q);
  std::fill(limit.begin(), limit.begin() + central, (1.0 - phi) + phi * q);
  return limit;
}

double ApprovalwiseDistance(std::span<const double> a,
                            std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("approvalwise vectors differ in length");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) total += std::abs(a[j] - b[j]);
  return total / static_cast<double>(a.size());
}

double FitQ(const ApprovalProfile& profile) {
  return static_cast<double>(profile.total_approvals()) /
         (static_cast<double>(profile.num_voters()) * profile.num_candidates());
}

std::vector<double> PhiGrid(int steps) {
  if (steps < 1) throw std::invalid_argument("grid needs >= 1 step");
  std::vector<double> grid(steps + 1);
  for (int s = 0; s <= steps; ++s) grid[s] = static_cast<double>(s) / steps;
  return grid;
}

double FitPhi(const ApprovalProfile& profile, double q,
              std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("empty phi grid");
  const ApprovalwiseVector observed = ApprovalwiseVectorOf(profile);
  double best_phi = grid.front();
  double best_distance = 0.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double distance = ApprovalwiseDistance(
        observed, LimitVector(q, grid[g], profile.num_candidates()));
    if (g == 0 || distance < best_distance ||
        (distance == best_distance && grid[g] < best_phi)) {
      best_phi = grid[g];
      best_distance = distance;
    }
  }
  return best_phi;
}

}  // namespace divcom
