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

#ifndef DIVCOM_OBJECTIVES_H_
#define DIVCOM_OBJECTIVES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "divcom/election.h"

namespace divcom {

// Weights α_0..α_K of the non-oblivious local-search objective:
//   α_0 = 0, α_1 = 1 - 1/e, α_{j+1} = (j+1)α_j - jα_{j-1} - 1/e.
//
// The forward recurrence multiplies rounding error by j! (the consecutive
// differences obey d_{j+1} = j·d_j - 1/e), so values are produced from the
// closed form d_{j+1} = j!·Σ_{i>j} 1/i! / e instead, which satisfies the
// recurrence to rounding for any K.
class AlphaSequence {
 public:
  // Throws std::invalid_argument for max_index < 1.
  explicit AlphaSequence(int max_index);

  // α_0 = 0 and α_j = 1 for j >= 1; the auxiliary objective then equals CC.
  static AlphaSequence Oblivious(int max_index);

  double operator[](int j) const { return values_[j]; }
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  std::span<const double> values() const { return values_; }

 private:
  AlphaSequence() = default;
  std::vector<double> values_;
};

// H(0..max_index) with H(h) = Σ_{j=1}^{h} 1/j.
std::vector<double> HarmonicWeights(int max_index);

// f(W) = (1/n) Σ_i α_{h_i(W)}. Throws std::invalid_argument if some voter
// is covered more than alphas.max_index() times.
double AuxScore(const ApprovalProfile& profile, const Committee& w,
                const AlphaSequence& alphas);

// f((W ∪ {in}) \ {out}) - f(W). Throws std::invalid_argument unless
// out ∈ W and in ∉ W.
double AuxSwapDelta(const ApprovalProfile& profile, const Committee& w,
                    Candidate in, Candidate out, const AlphaSequence& alphas);

// Σ_i H(h_i(W)).
double PavScore(const ApprovalProfile& profile, const Committee& w);

// Integer tallies of how single swaps (in, out) would move each observed
// voter's coverage level. Feeding the same voters yields bit-identical
// deltas whether they come from the full profile or from a census of
// oracle responses.
class SwapTally {
 public:
  // `entering` lists the non-members whose swaps will be queried.
  SwapTally(const Committee& w, std::span<const Candidate> entering);

  // `approved` holds the voter's approvals; candidates that are neither
  // members nor tracked entering candidates are ignored.
  void AddVoter(std::span<const Candidate> approved);

  std::int64_t observations() const { return observations_; }
  bool Tracks(Candidate candidate) const;

  // Σ over observed voters of value[h'] - value[h] for the swap.
  double Sum(Candidate in, Candidate out,
             std::span<const double> level_values) const;

  // Sum / observations (0 with no observations).
  double Delta(Candidate in, Candidate out,
               std::span<const double> level_values) const;

 private:
  std::size_t Level(std::size_t row, std::size_t slot, int h) const {
    return (row * slots_ + slot) * levels_ + h;
  }

  int levels_;
  std::size_t slots_;
  std::vector<int> member_slot_;  // candidate -> position in W or -1
  std::vector<int> entering_row_;  // candidate -> row or -1
  std::vector<std::int64_t> up_;    // [row][h]
  std::vector<std::int64_t> down_;  // [slot][h]
  std::vector<std::int64_t> both_;  // [row][slot][h]
  std::int64_t observations_ = 0;
  std::vector<int> scratch_slots_;
  std::vector<int> scratch_rows_;
};

}  // namespace divcom

#endif  // DIVCOM_OBJECTIVES_H_
