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

#ifndef DIVCOM_DATAGEN_H_
#define DIVCOM_DATAGEN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "divcom/election.h"

namespace divcom {

// (q, φ)-resampling model. The central ballot approves candidates
// 0..⌊q·m⌋-1. Each (voter, candidate) vote independently copies the central
// vote with probability 1-φ, and is otherwise redrawn as approve with
// probability q.
struct ResampleParams {
  double q = 0.0;
  double phi = 0.0;
  int num_voters = 0;
  int num_candidates = 0;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument if q or φ lie outside [0, 1] or n, m < 1.
ApprovalProfile ResampleElection(const ResampleParams& params);

// Per-candidate approval fractions, sorted non-increasing.
using ApprovalwiseVector = std::vector<double>;

ApprovalwiseVector ApprovalwiseVectorOf(const ApprovalProfile& profile);

// Expected approvalwise vector of (q, φ)-resampling: ⌊q·m⌋ entries
// (1-φ) + φq followed by m - ⌊q·m⌋ entries φq.
ApprovalwiseVector LimitVector(double q, double phi, int num_candidates);

// (1/m) Σ_j |a_j - b_j|. Throws std::invalid_argument on length mismatch.
double ApprovalwiseDistance(std::span<const double> a,
                            std::span<const double> b);

// Mean approval fraction over all (voter, candidate) pairs.
double FitQ(const ApprovalProfile& profile);

// φ values 0, 1/steps, ..., 1.
std::vector<double> PhiGrid(int steps = 100);

// Grid value minimising the distance between the profile's approvalwise
// vector and LimitVector(q, φ, m); ties go to the smallest φ.
double FitPhi(const ApprovalProfile& profile, double q,
              std::span<const double> grid);

}  // namespace divcom

#endif  // DIVCOM_DATAGEN_H_
