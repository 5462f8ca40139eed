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

#include "divcom/objectives.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace divcom {

AlphaSequence::AlphaSequence(int max_index) {
  if (max_index < 1) {
    throw std::invalid_argument("alpha sequence needs K >= 1");
  }
  const double inv_e = 1.0 / std::numbers::e;
  values_.assign(max_index + 1, 0.0);
  values_[1] = 1.0 - inv_e;
  for (int j = 1; j < max_index; ++j) {
    // j! Σ_{i>j} 1/i! = (1 + (1 + ...)/(j+2))/(j+1), truncated far out.
    double tail = 0.0;
    for (int i = j + 40; i > j; --i) tail = (1.0 + tail) / i;
    values_[j + 1] = values_[j] + tail * inv_e;
  }
}

AlphaSequence AlphaSequence::Oblivious(int max_index) {
  if (max_index < 1) {
    throw std::invalid_argument("alpha sequence needs K >= 1");
  }
  AlphaSequence alphas;
  alphas.values_.assign(max_index + 1, 1.0);
  alphas.values_[0] = 0.0;
  return alphas;
}

std::vector<double> HarmonicWeights(int max_index) {
  std::vector<double> weights(max_index + 1, 0.0);
  for (int j = 1; j <= max_index; ++j) weights[j] = weights[j - 1] + 1.0 / j;
  return weights;
}

double AuxScore(const ApprovalProfile& profile, const Committee& w,
                const AlphaSequence& alphas) {
  const CoverageVector h = Coverage(profile, w);
  double total = 0.0;
  for (int level : h) {
    if (level > alphas.max_index()) {
      throw std::invalid_argument("coverage " + std::to_string(level) +
                                  " exceeds alpha sequence length K=" +
                                  std::to_string(alphas.max_index()));
    }
    total += alphas[level];
  }
  return total / profile.num_voters();
}

double AuxSwapDelta(const ApprovalProfile& profile, const Committee& w,
                    Candidate in, Candidate out, const AlphaSequence& alphas) {
  ValidateCommittee(profile, w);
  if (in == out || !w.Contains(out) || w.Contains(in) || in < 0 ||
      in >= profile.num_candidates()) {
    throw std::invalid_argument("swap requires out in W and in not in W");
  }
  if (w.size() > alphas.max_index()) {
    throw std::invalid_argument("committee larger than alpha sequence");
  }
  const Candidate entering[] = {in};
  SwapTally tally(w, entering);
  for (Voter i = 0; i < profile.num_voters(); ++i) {
    tally.AddVoter(profile.ballot(i));
  }
  return tally.Sum(in, out, alphas.values()) / profile.num_voters();
}

double PavScore(const ApprovalProfile& profile, const Committee& w) {
  const CoverageVector h = Coverage(profile, w);
  const std::vector<double> harmonic = HarmonicWeights(w.size());
  double total = 0.0;
  for (int level : h) total += harmonic[level];
  return total;
}

SwapTally::SwapTally(const Committee& w, std::span<const Candidate> entering)
    : levels_(w.size() + 1),
      slots_(w.size()),
      member_slot_(w.num_candidates(), -1),
      entering_row_(w.num_candidates(), -1) {
  const auto members = w.members();
  for (std::size_t s = 0; s < members.size(); ++s) {
    member_slot_[members[s]] = static_cast<int>(s);
  }
  int rows = 0;
  for (Candidate c : entering) {
    if (c < 0 || c >= w.num_candidates() || w.Contains(c)) {
      throw std::invalid_argument("entering candidate must be a non-member");
    }
    if (entering_row_[c] < 0) entering_row_[c] = rows++;
  }
  up_.assign(static_cast<std::size_t>(rows) * levels_, 0);
  down_.assign(slots_ * levels_, 0);
  both_.assign(static_cast<std::size_t>(rows) * slots_ * levels_, 0);
}

bool SwapTally::Tracks(Candidate candidate) const {
  return candidate >= 0 &&
         candidate < static_cast<Candidate>(entering_row_.size()) &&
         entering_row_[candidate] >= 0;
}

void SwapTally::AddVoter(std::span<const Candidate> approved) {
  scratch_slots_.clear();
  scratch_rows_.clear();
  for (Candidate c : approved) {
    if (member_slot_[c] >= 0) {
      scratch_slots_.push_back(member_slot_[c]);
    } else if (entering_row_[c] >= 0) {
      scratch_rows_.push_back(entering_row_[c]);
    }
  }
  const int h = static_cast<int>(scratch_slots_.size());
  for (int slot : scratch_slots_) ++down_[slot * levels_ + h];
  for (int row : scratch_rows_) {
    ++up_[static_cast<std::size_t>(row) * levels_ + h];
    for (int slot : scratch_slots_) ++both_[Level(row, slot, h)];
  }
  ++observations_;
}

double SwapTally::Sum(Candidate in, Candidate out,
                      std::span<const double> level_values) const {
  if (!Tracks(in) || out < 0 ||
      out >= static_cast<Candidate>(member_slot_.size()) ||
      member_slot_[out] < 0) {
    throw std::invalid_argument("swap not covered by this tally");
  }
  if (static_cast<int>(level_values.size()) < levels_) {
    throw std::invalid_argument("level values shorter than committee size");
  }
  const std::size_t row = entering_row_[in];
  const std::size_t slot = member_slot_[out];
  double total = 0.0;
  for (int h = 0; h < levels_; ++h) {
    const std::int64_t stay = both_[Level(row, slot, h)];
    const std::int64_t rise = up_[row * levels_ + h] - stay;
    const std::int64_t fall = down_[slot * levels_ + h] - stay;
    if (rise != 0) {
      total += static_cast<double>(rise) * (level_values[h + 1] - level_values[h]);
    }
    if (fall != 0) {
      total += static_cast<double>(fall) * (level_values[h - 1] - level_values[h]);
    }
  }
  return total;
}

double SwapTally::Delta(Candidate in, Candidate out,
                        std::span<const double> level_values) const {
  if (observations_ == 0) return 0.0;
  return Sum(in, out, level_values) / static_cast<double>(observations_);
}

}  // namespace divcom
