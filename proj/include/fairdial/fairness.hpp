// Copyright 2026 The fairdial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Fairness of dispute outcomes over a population of agents.
#ifndef FAIRDIAL_FAIRNESS_HPP_
#define FAIRDIAL_FAIRNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "fairdial/culture.hpp"
#include "fairdial/dialogue.hpp"

namespace fairdial::fairness {

using Rational = boost::rational<std::int64_t>;
using culture::ExpandedCulture;
using culture::FeatureDescription;

// Winner under full information: pr iff its motion hypothesis is sceptically
// accepted in the ground-truth framework.
Role ObjectiveOutcome(const ExpandedCulture& xc, const FeatureDescription& pr,
                      const FeatureDescription& op);

// Entry (j, k) is the winning role when agent j is pr and agent k is op.
class OutcomeMatrix {
 public:
  explicit OutcomeMatrix(std::size_t n = 0) : n_(n), cells_(n * n, Role::kOp) {}

  std::size_t size() const { return n_; }
  Role at(std::size_t j, std::size_t k) const { return cells_[j * n_ + k]; }
  void set(std::size_t j, std::size_t k, Role r) { cells_[j * n_ + k] = r; }

  friend bool operator==(const OutcomeMatrix& a, const OutcomeMatrix& b);

 private:
  std::size_t n_;
  std::vector<Role> cells_;
};

OutcomeMatrix GroundTruthMatrix(std::span<const FeatureDescription> agents,
                                const ExpandedCulture& xc);

// Seed of the dialogue between agents j (pr) and k (op).
std::uint64_t PairSeed(std::uint64_t seed, std::size_t j, std::size_t k,
                       dialogue::Strategy strategy, std::int64_t g);

struct ResultSet {
  OutcomeMatrix matrix;
  // Row-major n x n; diagonal entries are empty dialogues.
  std::vector<dialogue::DialogueResult> dialogues;

  const dialogue::DialogueResult& at(std::size_t j, std::size_t k) const {
    return dialogues[j * matrix.size() + k];
  }
};

ResultSet ResultMatrix(std::span<const FeatureDescription> agents, const ExpandedCulture& xc,
                       dialogue::Strategy strategy, std::int64_t g, std::uint64_t seed);

inline int ObjectiveLocalLoss(Role gt, Role re) { return gt == re ? 0 : 1; }
inline int SubjectiveLocalLoss(const dialogue::DialogueResult& r) { return r.subjective_loss(); }

// Means over the ordered off-diagonal pairs.
double MeanObjectiveLoss(const OutcomeMatrix& gt, const OutcomeMatrix& re);
double MeanSubjectiveLoss(const ResultSet& rs);

class PrecedenceGraph {
 public:
  explicit PrecedenceGraph(std::size_t n = 0) : n_(n), arc_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool HasArc(std::size_t j, std::size_t k) const { return arc_[j * n_ + k] != 0; }
  // Throws Error(kInput) on a self loop or a reversed duplicate.
  void AddArc(std::size_t j, std::size_t k);
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> arc_;
};

// Arc (j, k) iff j wins as pr against k and wins as op against k.
PrecedenceGraph MakePrecedenceGraph(const OutcomeMatrix& m);

struct Dissimilarity {
  std::int64_t reversed = 0;     // c1
  std::int64_t one_sided = 0;    // c2
  std::int64_t both_absent = 0;  // c3
  std::int64_t agreeing = 0;     // same arc in both
  Rational k;

  double value() const { return boost::rational_cast<double>(k); }
};

inline const Rational kDefaultY1{2, 3};
inline const Rational kDefaultY2{1, 3};

// Throws Error(kInput) on mismatched vertex sets or weights outside
// 0 <= y2 < y1 <= 1.
Dissimilarity DagDissimilarity(const PrecedenceGraph& g1, const PrecedenceGraph& g2,
                               Rational y1 = kDefaultY1, Rational y2 = kDefaultY2);

struct GlobalLoss {
  Rational raw;
  double normalised = 0;  // raw / (n (n - 1) / 2)
};

GlobalLoss GlobalLosses(const PrecedenceGraph& gt, const PrecedenceGraph& re);

struct FullBudgetReport {
  std::size_t disputes = 0;
  std::size_t budget_forced = 0;
  std::int64_t subjective_loss_sum = 0;
  std::size_t gt_mismatches = 0;  // reported, not a violation
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Runs every ordered pair with g equal to the total culture cost.
FullBudgetReport FullBudgetCheck(std::span<const FeatureDescription> agents,
                             const ExpandedCulture& xc, dialogue::Strategy strategy,
                             std::uint64_t seed);

}  // namespace fairdial::fairness

#endif  // FAIRDIAL_FAIRNESS_HPP_
