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

#include "divcom/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace divcom {

bool Matroid::IsIndependent(std::span<const Candidate> set) const {
  std::vector<char> seen(universe_size(), 0);
  for (Candidate c : set) {
    if (c < 0 || c >= universe_size()) {
      throw std::invalid_argument("candidate " + std::to_string(c) +
                                  " outside matroid universe of size " +
                                  std::to_string(universe_size()));
    }
    if (seen[c]) {
      throw std::invalid_argument("candidate " + std::to_string(c) +
                                  " repeated in set");
    }
    seen[c] = 1;
  }
  return IsIndependentUnchecked(set);
}

UniformMatroid::UniformMatroid(int num_candidates, int k)
    : num_candidates_(num_candidates), k_(k) {
  if (k < 1 || k > num_candidates) {
    throw std::invalid_argument("uniform matroid needs 1 <= k <= m (k=" +
                                std::to_string(k) + ", m=" +
                                std::to_string(num_candidates) + ")");
  }
}

QuotaMatroid::QuotaMatroid(QuotaSpec spec) : spec_(std::move(spec)) {
  const int m = spec_.num_candidates;
  const int k = spec_.committee_size;
  if (k < 1 || k > m) {
    throw std::invalid_argument("quota spec needs 1 <= k <= m");
  }
  group_of_.assign(m, -1);
  const int num_groups = static_cast<int>(spec_.groups.size());
  for (int g = 0; g < num_groups; ++g) {
    const QuotaGroup& group = spec_.groups[g];
    for (Candidate c : group.members) {
      if (c < 0 || c >= m) {
        throw std::invalid_argument("group '" + group.name +
                                    "' lists out-of-range candidate " +
                                    std::to_string(c));
      }
      if (group_of_[c] != -1) {
        throw std::invalid_argument("groups not disjoint: candidate " +
                                    std::to_string(c) + " in '" +
                                    spec_.groups[group_of_[c]].name +
                                    "' and '" + group.name + "'");
      }
      group_of_[c] = g;
    }
    const int size = static_cast<int>(group.members.size());
    if (group.lower < 0 || group.lower > group.upper || group.upper > size) {
      throw std::invalid_argument(
          "group '" + group.name + "' needs 0 <= lower <= upper <= |group| (" +
          std::to_string(group.lower) + ", " + std::to_string(group.upper) +
          ", " + std::to_string(size) + ")");
    }
    lower_.push_back(group.lower);
    upper_.push_back(group.upper);
  }
  const int ungrouped =
      static_cast<int>(std::count(group_of_.begin(), group_of_.end(), -1));
  lower_.push_back(0);
  upper_.push_back(std::min(k, ungrouped));
  for (int& g : group_of_) {
    if (g == -1) g = num_groups;
  }

  const int lower_sum = std::accumulate(lower_.begin(), lower_.end(), 0);
  const int upper_sum = std::accumulate(upper_.begin(), upper_.end(), 0);
  if (lower_sum > k) {
    throw std::invalid_argument("infeasible quotas: sum of lower quotas " +
                                std::to_string(lower_sum) + " exceeds k=" +
                                std::to_string(k));
  }
  if (upper_sum < k) {
    throw std::invalid_argument("infeasible quotas: sum of upper quotas " +
                                std::to_string(upper_sum) +
                                " (including ungrouped candidates) below k=" +
                                std::to_string(k));
  }
}

std::vector<int> QuotaMatroid::GroupCounts(
    std::span<const Candidate> set) const {
  std::vector<int> counts(lower_.size(), 0);
  for (Candidate c : set) ++counts[group_of_[c]];
  return counts;
}

bool QuotaMatroid::IsIndependentUnchecked(
    std::span<const Candidate> set) const {
  const std::vector<int> counts = GroupCounts(set);
  int needed = 0;
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (counts[g] > upper_[g]) return false;
    needed += std::max(lower_[g], counts[g]);
  }
  return needed <= spec_.committee_size;
}

bool QuotaMatroid::SatisfiesQuotas(std::span<const Candidate> set) const {
  if (static_cast<int>(set.size()) != spec_.committee_size) return false;
  if (!IsIndependent(set)) return false;
  const std::vector<int> counts = GroupCounts(set);
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (counts[g] < lower_[g] || counts[g] > upper_[g]) return false;
  }
  return true;
}

std::vector<Exchange> ValidExchanges(const Matroid& matroid,
                                     const Committee& w) {
  if (w.num_candidates() != matroid.universe_size()) {
    throw std::invalid_argument("committee and matroid universes differ");
  }
  const std::vector<Candidate> members = w.SortedMembers();
  if (w.size() != matroid.rank() || !matroid.IsIndependent(members)) {
    throw std::invalid_argument("valid exchanges need a basis of the matroid");
  }
  std::vector<Exchange> exchanges;
  std::vector<Candidate> trial = members;
  for (Candidate in = 0; in < w.num_candidates(); ++in) {
    if (w.Contains(in)) continue;
    for (std::size_t s = 0; s < members.size(); ++s) {
      trial[s] = in;
      if (matroid.IsIndependent(trial)) {
        exchanges.push_back({in, members[s]});
      }
      trial[s] = members[s];
    }
  }
  return exchanges;
}

Committee RandomBasis(const Matroid& matroid, Rng& rng) {
  const int m = matroid.universe_size();
  std::vector<Candidate> order(m);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(std::span<Candidate>(order));
  Committee basis(m, matroid.rank());
  std::vector<Candidate> current;
  for (Candidate c : order) {
    if (basis.full()) break;
    current.push_back(c);
    if (matroid.IsIndependent(current)) {
      basis.Add(c);
    } else {
      current.pop_back();
    }
  }
  if (!basis.full()) {
    throw std::logic_error("random basis stopped below rank; not a matroid?");
  }
  return basis;
}

Committee RandomBasis(const Matroid& matroid, std::uint64_t seed) {
  Rng rng(seed);
  return RandomBasis(matroid, rng);
}

std::string AxiomReport::ToString() const {
  if (passed) return "matroid axioms hold";
  std::ostringstream out;
  auto print = [&out](const std::vector<Candidate>& set) {
    out << '{';
    for (std::size_t i = 0; i < set.size(); ++i) {
      out << (i ? "," : "") << set[i];
    }
    out << '}';
  };
  out << "violates " << failed_property << ": A=";
  print(witness_a);
  out << " B=";
  print(witness_b);
  return out.str();
}

namespace {

std::vector<Candidate> MaskMembers(std::uint32_t mask) {
  std::vector<Candidate> members;
  for (Candidate c = 0; mask != 0; ++c, mask >>= 1) {
    if (mask & 1U) members.push_back(c);
  }
  return members;
}

AxiomReport Failure(std::string property, std::uint32_t a, std::uint32_t b) {
  return AxiomReport{false, std::move(property), MaskMembers(a),
                     MaskMembers(b)};
}

}  // namespace

AxiomReport CheckMatroidAxioms(const Matroid& matroid) {
  const int m = matroid.universe_size();
  if (m > kMaxAxiomCheckUniverse) {
    throw std::invalid_argument("axiom check is exhaustive; universe size " +
                                std::to_string(m) + " exceeds " +
                                std::to_string(kMaxAxiomCheckUniverse));
  }
  const std::uint32_t subsets = std::uint32_t{1} << m;
  std::vector<char> independent(subsets);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    independent[mask] = matroid.IsIndependent(MaskMembers(mask)) ? 1 : 0;
  }

  if (!independent[0]) return Failure("empty set", 0, 0);

  for (std::uint32_t a = 0; a < subsets; ++a) {
    if (!independent[a]) continue;
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
      const std::uint32_t b = a & ~(rest & (~rest + 1));
      if (!independent[b]) return Failure("downward closure", a, b);
    }
  }

  // With downward closure, |A| = |B| + 1 covers the general exchange axiom.
  for (std::uint32_t a = 0; a < subsets; ++a) {
    if (!independent[a]) continue;
    const int size_a = std::popcount(a);
    for (std::uint32_t b = 0; b < subsets; ++b) {
      if (!independent[b] || std::popcount(b) + 1 != size_a) continue;
      bool extended = false;
      for (std::uint32_t rest = a & ~b; rest != 0 && !extended;
           rest &= rest - 1) {
        extended = independent[b | (rest & (~rest + 1))] != 0;
      }
      if (!extended) return Failure("exchange", a, b);
    }
  }

  for (std::uint32_t a = 0; a < subsets; ++a) {
    if (!independent[a]) continue;
    bool maximal = true;
    for (std::uint32_t x = 1; x < subsets && maximal; x <<= 1) {
      if (!(a & x) && independent[a | x]) maximal = false;
    }
    if (maximal && std::popcount(a) != matroid.rank()) {
      return Failure("rank", a, 0);
    }
  }
  return {};
}

}  // namespace divcom
