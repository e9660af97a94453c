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
#include "fairdial/fairness.hpp"

#include <algorithm>

#include "fairdial/error.hpp"
#include "fairdial/rng.hpp"

namespace fairdial::fairness {

Role ObjectiveOutcome(const ExpandedCulture& xc, const FeatureDescription& pr,
                      const FeatureDescription& op) {
  const auto gt = culture::InstantiateGroundTruth(xc, pr, op);
  return af::IsScepticallyAccepted(gt.motion_pr, gt.framework) ? Role::kPr : Role::kOp;
}

bool operator==(const OutcomeMatrix& a, const OutcomeMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t j = 0; j < a.n_; ++j) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (j != k && a.at(j, k) != b.at(j, k)) return false;
    }
  }
  return true;
}

OutcomeMatrix GroundTruthMatrix(std::span<const FeatureDescription> agents,
                                const ExpandedCulture& xc) {
  OutcomeMatrix m(agents.size());
  for (std::size_t j = 0; j < agents.size(); ++j) {
    for (std::size_t k = 0; k < agents.size(); ++k) {
      if (j != k) m.set(j, k, ObjectiveOutcome(xc, agents[j], agents[k]));
    }
  }
  return m;
}

std::uint64_t PairSeed(std::uint64_t seed, std::size_t j, std::size_t k,
                       dialogue::Strategy strategy, std::int64_t g) {
  return DeriveSeed(seed, {j, k, static_cast<std::uint64_t>(strategy),
                           static_cast<std::uint64_t>(g)});
}

ResultSet ResultMatrix(std::span<const FeatureDescription> agents, const ExpandedCulture& xc,
                       dialogue::Strategy strategy, std::int64_t g, std::uint64_t seed) {
  const std::size_t n = agents.size();
  ResultSet rs{OutcomeMatrix(n), std::vector<dialogue::DialogueResult>(n * n)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      auto r = dialogue::RunDispute(xc, agents[j], agents[k], strategy, g,
                                    PairSeed(seed, j, k, strategy, g));
      rs.matrix.set(j, k, r.winner);
      rs.dialogues[j * n + k] = std::move(r);
    }
  }
  return rs;
}

double MeanObjectiveLoss(const OutcomeMatrix& gt, const OutcomeMatrix& re) {
  if (gt.size() != re.size()) Fail(ErrorCode::kInput, "outcome matrices differ in size");
  const std::size_t n = gt.size();
  if (n < 2) return 0;
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j != k) sum += ObjectiveLocalLoss(gt.at(j, k), re.at(j, k));
    }
  }
  return static_cast<double>(sum) / static_cast<double>(n * (n - 1));
}

double MeanSubjectiveLoss(const ResultSet& rs) {
  const std::size_t n = rs.matrix.size();
  if (n < 2) return 0;
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j != k) sum += SubjectiveLocalLoss(rs.at(j, k));
    }
  }
  return static_cast<double>(sum) / static_cast<double>(n * (n - 1));
}

void PrecedenceGraph::AddArc(std::size_t j, std::size_t k) {
  if (j >= n_ || k >= n_ || j == k) Fail(ErrorCode::kInput, "invalid precedence arc");
  if (HasArc(k, j)) Fail(ErrorCode::kInput, "precedence arcs must not be reciprocal");
  arc_[j * n_ + k] = 1;
}

std::vector<std::pair<std::size_t, std::size_t>> PrecedenceGraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (HasArc(j, k)) out.emplace_back(j, k);
    }
  }
  return out;
}

PrecedenceGraph MakePrecedenceGraph(const OutcomeMatrix& m) {
  PrecedenceGraph g(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (j != k && m.at(j, k) == Role::kPr && m.at(k, j) == Role::kOp) g.AddArc(j, k);
    }
  }
  return g;
}

Dissimilarity DagDissimilarity(const PrecedenceGraph& g1, const PrecedenceGraph& g2,
                               Rational y1, Rational y2) {
  if (g1.size() != g2.size()) Fail(ErrorCode::kInput, "graphs have different vertex sets");
  if (!(Rational(0) <= y2 && y2 < y1 && y1 <= Rational(1))) {
    Fail(ErrorCode::kInput, "weights must satisfy 0 <= y2 < y1 <= 1");
  }
  Dissimilarity d;
  const std::size_t n = g1.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const int a = g1.HasArc(j, k) ? 1 : g1.HasArc(k, j) ? -1 : 0;
      const int b = g2.HasArc(j, k) ? 1 : g2.HasArc(k, j) ? -1 : 0;
      if (a == 0 && b == 0) {
        ++d.both_absent;
      } else if (a == 0 || b == 0) {
        ++d.one_sided;
      } else if (a != b) {
        ++d.reversed;
      } else {
        ++d.agreeing;
      }
    }
  }
  d.k = Rational(d.reversed) + Rational(d.one_sided) * y1 + Rational(d.both_absent) * y2;
  return d;
}

GlobalLoss GlobalLosses(const PrecedenceGraph& gt, const PrecedenceGraph& re) {
  GlobalLoss out;
  out.raw = DagDissimilarity(gt, re).k;
  const auto n = static_cast<std::int64_t>(gt.size());
  if (n >= 2) out.normalised = boost::rational_cast<double>(out.raw / Rational(n * (n - 1) / 2));
  return out;
}

FullBudgetReport FullBudgetCheck(std::span<const FeatureDescription> agents,
                             const ExpandedCulture& xc, dialogue::Strategy strategy,
                             std::uint64_t seed) {
  FullBudgetReport rep;
  const std::int64_t g = xc.total_cost();
  const OutcomeMatrix gt = GroundTruthMatrix(agents, xc);
  const ResultSet rs = ResultMatrix(agents, xc, strategy, g, seed);
  for (std::size_t j = 0; j < agents.size(); ++j) {
    for (std::size_t k = 0; k < agents.size(); ++k) {
      if (j == k) continue;
      const auto& r = rs.at(j, k);
      ++rep.disputes;
      const std::string pair = "(" + std::to_string(j) + "," + std::to_string(k) + ")";
      if (r.termination == dialogue::Termination::kBudgetForced) {
        ++rep.budget_forced;
        rep.violations.push_back(pair + " ended budget-forced under an unbounded budget");
      }
      rep.subjective_loss_sum += SubjectiveLocalLoss(r);
      for (const std::string& issue : dialogue::AuditDialogue(r, xc, agents[j], agents[k], g)) {
        rep.violations.push_back(pair + " " + issue);
      }
      if (r.winner != gt.at(j, k)) ++rep.gt_mismatches;
    }
  }
  return rep;
}

}  // namespace fairdial::fairness
