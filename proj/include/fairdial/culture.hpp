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
// Cultures are shared rulesets: arguments, attacks between them, and at least
// one motion. Every non-motion argument compares one feature of the two
// disputing agents. The expansion splits each argument into per-player
// hypothesis and verified-fact nodes whose attacks always cross players.
#ifndef FAIRDIAL_CULTURE_HPP_
#define FAIRDIAL_CULTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdial/af.hpp"
#include "fairdial/rng.hpp"

namespace fairdial {

enum class Role : std::uint8_t { kPr = 0, kOp = 1 };

constexpr Role Adversary(Role r) { return r == Role::kPr ? Role::kOp : Role::kPr; }
constexpr std::size_t Index(Role r) { return static_cast<std::size_t>(r); }
std::string_view RoleName(Role r);

}  // namespace fairdial

namespace fairdial::culture {

using ArgIndex = std::uint32_t;
using XArgId = std::uint32_t;

enum class Kind : std::uint8_t { kHypothesis, kFact };

// Privacy cost of each expanded node generated from one argument. Motions
// only use the hypothesis entries.
struct NodeCosts {
  std::int64_t hypothesis_pr = 0;
  std::int64_t hypothesis_op = 0;
  std::int64_t fact_pr = 0;
  std::int64_t fact_op = 0;

  static NodeCosts Uniform(std::int64_t c) { return {c, c, c, c}; }
  std::int64_t get(Kind kind, Role owner) const;
  bool IsUniform(bool motion) const;

  friend bool operator==(const NodeCosts&, const NodeCosts&) = default;
};

struct Argument {
  std::string label;
  bool is_motion = false;
  NodeCosts costs;
  // Ordinal value names in ascending order of importance. Optional.
  std::vector<std::string> values;

  friend bool operator==(const Argument&, const Argument&) = default;
};

class Culture {
 public:
  Culture() = default;
  // Throws Error(kInput) on an invalid ruleset (no motion, bad ids, negative
  // costs, duplicate attacks).
  Culture(std::vector<Argument> arguments, std::vector<af::Attack> attacks);

  std::size_t size() const { return arguments_.size(); }
  const Argument& argument(ArgIndex i) const { return arguments_[i]; }
  const std::vector<Argument>& arguments() const { return arguments_; }
  const af::Framework& graph() const { return graph_; }

  // Non-motion arguments, numbered in argument order.
  std::size_t feature_count() const { return feature_args_.size(); }
  std::optional<std::size_t> feature_of(ArgIndex i) const;
  ArgIndex argument_of_feature(std::size_t feature) const { return feature_args_[feature]; }
  std::vector<ArgIndex> motions() const;

  // Every attack goes from a higher to a lower index.
  bool IsIndexOrdered() const;
  // The underlying undirected graph has one connected component.
  bool IsConnected() const;

  friend bool operator==(const Culture& a, const Culture& b) {
    return a.arguments_ == b.arguments_ && a.graph_ == b.graph_;
  }

 private:
  std::vector<Argument> arguments_;
  af::Framework graph_;
  std::vector<ArgIndex> feature_args_;
  std::vector<std::int64_t> feature_slot_;  // -1 for motions
};

struct XArg {
  XArgId id;
  ArgIndex origin;
  Kind kind;
  Role owner;
  std::int64_t cost;
};

class ExpandedCulture {
 public:
  explicit ExpandedCulture(Culture base);

  const Culture& base() const { return base_; }
  std::size_t size() const { return args_.size(); }
  const XArg& arg(XArgId x) const { return args_[x]; }
  std::span<const XArg> args() const { return args_; }
  const af::Framework& framework() const { return framework_; }

  XArgId Hypothesis(ArgIndex a, Role owner) const;
  std::optional<XArgId> Fact(ArgIndex a, Role owner) const;
  // Hypothesis node of the first motion.
  XArgId Motion(Role owner) const { return Hypothesis(motion_, owner); }

  std::size_t in_degree(XArgId x) const { return framework_.attackers_of(x).size(); }
  std::size_t out_degree(XArgId x) const { return framework_.targets_of(x).size(); }
  std::optional<std::size_t> feature_of(XArgId x) const {
    return base_.feature_of(args_[x].origin);
  }

  std::int64_t total_cost() const { return total_cost_; }
  // e.g. "VehicleAge[H,op]".
  std::string Label(XArgId x) const;

 private:
  Culture base_;
  std::vector<XArg> args_;
  std::vector<XArgId> first_node_;
  af::Framework framework_;
  ArgIndex motion_ = 0;
  std::int64_t total_cost_ = 0;
};

ExpandedCulture Expand(const Culture& c);

// One non-negative integer per feature (non-motion argument).
struct FeatureDescription {
  std::vector<std::int64_t> values;

  friend bool operator==(const FeatureDescription&, const FeatureDescription&) = default;
};

// Feature values each player has disclosed so far.
class RevealedLedger {
 public:
  explicit RevealedLedger(std::size_t n_features)
      : disclosed_{std::vector<std::optional<std::int64_t>>(n_features),
                   std::vector<std::optional<std::int64_t>>(n_features)} {}

  void Disclose(Role who, std::size_t feature, std::int64_t value);
  std::optional<std::int64_t> value(Role who, std::size_t feature) const;
  std::size_t disclosed_count(Role who) const;

 private:
  std::vector<std::optional<std::int64_t>> disclosed_[2];
};

enum class Verdict { kTrue, kFalse, kUnknown };

// Verifier of an expanded argument uttered by its owner. Hypotheses and
// motions always verify. A fact verifies iff the owner's value is strictly
// greater than the adversary's disclosed value; Unknown while undisclosed.
Verdict Verify(const ExpandedCulture& xc, XArgId x, const FeatureDescription& utterer,
               const RevealedLedger& ledger);

// Full-information verifier of a fact node.
bool FactHolds(const ExpandedCulture& xc, XArgId x, const FeatureDescription& pr,
               const FeatureDescription& op);

// Expanded framework with every false fact removed, under full information.
struct GroundTruthFramework {
  af::Framework framework;
  std::vector<XArgId> expanded_id;  // framework id -> expanded id
  af::ArgumentId motion_pr;         // framework id of the proponent's motion
};

GroundTruthFramework InstantiateGroundTruth(const ExpandedCulture& xc,
                                            const FeatureDescription& pr,
                                            const FeatureDescription& op);

struct CostRange {
  std::int64_t lo = 1;
  std::int64_t hi = 20;
};

// One motion at index 0, attacks only from higher to lower index, connected.
// Every expanded node gets an independent cost drawn from `costs`.
Culture GenerateRandomCulture(std::size_t n_args, std::size_t n_attacks, CostRange costs,
                              std::uint64_t seed);

FeatureDescription SampleRandomAgent(std::size_t n_features, std::int64_t max_value, Rng& rng);

// Throws Error(kInput) if the description does not fit the culture.
void CheckDescription(const Culture& c, const FeatureDescription& d);

// Accepts comma-separated integers, or value names for cultures that list them.
FeatureDescription ParseDescription(const Culture& c, std::string_view text);

std::string CultureToJson(const Culture& c);
Culture CultureFromJson(std::string_view text);

}  // namespace fairdial::culture

#endif  // FAIRDIAL_CULTURE_HPP_
