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

#ifndef DIVCOM_MATROID_H_
#define DIVCOM_MATROID_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "divcom/election.h"
#include "divcom/random.h"

namespace divcom {

// Swap `out` (a committee member) for `in` (a non-member).
struct Exchange {
  Candidate in;
  Candidate out;
  friend auto operator<=>(const Exchange&, const Exchange&) = default;
};

// Independence system over candidates 0..universe_size()-1 whose bases all
// have size rank().
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int universe_size() const = 0;
  virtual int rank() const = 0;

  // Throws std::invalid_argument for out-of-universe or repeated indices.
  bool IsIndependent(std::span<const Candidate> set) const;

 protected:
  // `set` is validated: in range and duplicate free.
  virtual bool IsIndependentUnchecked(std::span<const Candidate> set) const = 0;
};

// Every set of at most k candidates is independent.
class UniformMatroid : public Matroid {
 public:
  // Requires 1 <= k <= m.
  UniformMatroid(int num_candidates, int k);

  int universe_size() const override { return num_candidates_; }
  int rank() const override { return k_; }

 protected:
  bool IsIndependentUnchecked(std::span<const Candidate> set) const override {
    return static_cast<int>(set.size()) <= k_;
  }

 private:
  int num_candidates_;
  int k_;
};

struct QuotaGroup {
  std::string name;
  std::vector<Candidate> members;
  int lower = 0;
  int upper = 0;
};

// Disjoint candidate groups with per-group bounds lower <= |W ∩ C_i| <= upper
// on committees of size k.
struct QuotaSpec {
  int num_candidates = 0;
  int committee_size = 0;
  std::vector<QuotaGroup> groups;
};

// Bases are the size-k committees meeting every quota; independent sets are
// their subsets. Candidates outside all groups form an implicit group with
// bounds (0, min(k, size)).
class QuotaMatroid : public Matroid {
 public:
  // Throws std::invalid_argument naming the violated constraint when the
  // spec is infeasible or malformed.
  explicit QuotaMatroid(QuotaSpec spec);

  int universe_size() const override { return spec_.num_candidates; }
  int rank() const override { return spec_.committee_size; }
  const QuotaSpec& spec() const { return spec_; }

  // Index into spec().groups; spec().groups.size() for the implicit group.
  int GroupOf(Candidate candidate) const { return group_of_[candidate]; }

  // True iff `set` is a basis, i.e. has size k and meets every quota.
  bool SatisfiesQuotas(std::span<const Candidate> set) const;

 protected:
  bool IsIndependentUnchecked(std::span<const Candidate> set) const override;

 private:
  std::vector<int> GroupCounts(std::span<const Candidate> set) const;

  QuotaSpec spec_;
  std::vector<int> group_of_;
  std::vector<int> lower_;  // per group, implicit group last
  std::vector<int> upper_;
};

// Arbitrary predicate; used to probe the axiom checker and for ad-hoc
// constraints. The predicate need not define a matroid.
class PredicateMatroid : public Matroid {
 public:
  using Predicate = std::function<bool(std::span<const Candidate>)>;

  PredicateMatroid(int num_candidates, int rank, Predicate predicate)
      : num_candidates_(num_candidates),
        rank_(rank),
        predicate_(std::move(predicate)) {}

  int universe_size() const override { return num_candidates_; }
  int rank() const override { return rank_; }

 protected:
  bool IsIndependentUnchecked(std::span<const Candidate> set) const override {
    return predicate_(set);
  }

 private:
  int num_candidates_;
  int rank_;
  Predicate predicate_;
};

// All (in, out) with out ∈ W, in ∉ W and (W ∪ {in}) \ {out} independent, in
// lexicographic (in, out) order. Throws std::invalid_argument unless `w` is
// a basis.
std::vector<Exchange> ValidExchanges(const Matroid& matroid, const Committee& w);

// Scans the candidates in random order and keeps each one that preserves
// independence until the set reaches rank(). Returns a committee with
// capacity rank().
Committee RandomBasis(const Matroid& matroid, Rng& rng);
Committee RandomBasis(const Matroid& matroid, std::uint64_t seed);

struct AxiomReport {
  bool passed = true;
  // "empty set", "downward closure", "exchange" or "rank"; empty on success.
  std::string failed_property;
  std::vector<Candidate> witness_a;
  std::vector<Candidate> witness_b;

  std::string ToString() const;
};

inline constexpr int kMaxAxiomCheckUniverse = 16;

// Exhaustively verifies the matroid axioms plus equal-size bases of size
// rank(). Throws std::invalid_argument when the universe exceeds
// kMaxAxiomCheckUniverse.
AxiomReport CheckMatroidAxioms(const Matroid& matroid);

}  // namespace divcom

#endif  // DIVCOM_MATROID_H_
