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
#include "fairdial/culture.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <utility>

#include "fairdial/error.hpp"

namespace fairdial {

std::string_view RoleName(Role r) { return r == Role::kPr ? "pr" : "op"; }

}  // namespace fairdial

namespace fairdial::culture {

std::int64_t NodeCosts::get(Kind kind, Role owner) const {
  if (kind == Kind::kHypothesis) return owner == Role::kPr ? hypothesis_pr : hypothesis_op;
  return owner == Role::kPr ? fact_pr : fact_op;
}

bool NodeCosts::IsUniform(bool motion) const {
  if (motion) return hypothesis_pr == hypothesis_op;
  return hypothesis_pr == hypothesis_op && hypothesis_op == fact_pr && fact_pr == fact_op;
}

Culture::Culture(std::vector<Argument> arguments, std::vector<af::Attack> attacks)
    : arguments_(std::move(arguments)) {
  graph_ = af::Framework(arguments_.size(), std::move(attacks));
  feature_slot_.assign(arguments_.size(), -1);
  for (ArgIndex i = 0; i < arguments_.size(); ++i) {
    const Argument& a = arguments_[i];
    const NodeCosts& c = a.costs;
    if (c.hypothesis_pr < 0 || c.hypothesis_op < 0 || c.fact_pr < 0 || c.fact_op < 0) {
      Fail(ErrorCode::kInput, "argument " + std::to_string(i) + " has a negative cost");
    }
    if (!a.is_motion) {
      feature_slot_[i] = static_cast<std::int64_t>(feature_args_.size());
      feature_args_.push_back(i);
    }
  }
  if (feature_args_.size() == arguments_.size()) {
    Fail(ErrorCode::kInput, "a culture needs at least one motion");
  }
}

std::optional<std::size_t> Culture::feature_of(ArgIndex i) const {
  if (feature_slot_[i] < 0) return std::nullopt;
  return static_cast<std::size_t>(feature_slot_[i]);
}

std::vector<ArgIndex> Culture::motions() const {
  std::vector<ArgIndex> out;
  for (ArgIndex i = 0; i < arguments_.size(); ++i) {
    if (arguments_[i].is_motion) out.push_back(i);
  }
  return out;
}

bool Culture::IsIndexOrdered() const {
  return std::all_of(graph_.attacks().begin(), graph_.attacks().end(),
                     [](const af::Attack& a) { return a.attacker > a.target; });
}

bool Culture::IsConnected() const {
  const std::size_t n = size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const af::Attack& a : graph_.attacks()) {
    const std::size_t ra = find(a.attacker), rb = find(a.target);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

ExpandedCulture::ExpandedCulture(Culture base) : base_(std::move(base)) {
  const std::size_t n = base_.size();
  first_node_.resize(n + 1);
  for (ArgIndex i = 0; i < n; ++i) {
    first_node_[i] = static_cast<XArgId>(args_.size());
    const Argument& a = base_.argument(i);
    auto add = [&](Kind kind, Role owner) {
      const auto id = static_cast<XArgId>(args_.size());
      args_.push_back({id, i, kind, owner, a.costs.get(kind, owner)});
      total_cost_ += args_.back().cost;
    };
    add(Kind::kHypothesis, Role::kPr);
    add(Kind::kHypothesis, Role::kOp);
    if (!a.is_motion) {
      add(Kind::kFact, Role::kPr);
      add(Kind::kFact, Role::kOp);
    }
  }
  first_node_[n] = static_cast<XArgId>(args_.size());
  motion_ = base_.motions().front();

  std::vector<af::Attack> rx;
  for (ArgIndex i = 0; i < n; ++i) {
    if (base_.argument(i).is_motion) continue;
    for (Role w : {Role::kPr, Role::kOp}) {
      const Role v = Adversary(w);
      rx.push_back({Hypothesis(i, w), Hypothesis(i, v)});  // hypotheses clash
      rx.push_back({*Fact(i, w), *Fact(i, v)});            // facts clash
      rx.push_back({*Fact(i, w), Hypothesis(i, v)});       // fact refutes hypothesis
    }
  }
  // Culture attacks carry over from hypotheses to the adversary's nodes.
  for (const af::Attack& at : base_.graph().attacks()) {
    for (Role w : {Role::kPr, Role::kOp}) {
      const Role v = Adversary(w);
      rx.push_back({Hypothesis(at.attacker, w), Hypothesis(at.target, v)});
      if (auto f = Fact(at.target, v)) rx.push_back({Hypothesis(at.attacker, w), *f});
    }
  }
  framework_ = af::Framework(args_.size(), std::move(rx));
}

XArgId ExpandedCulture::Hypothesis(ArgIndex a, Role owner) const {
  return first_node_[a] + (owner == Role::kPr ? 0 : 1);
}

std::optional<XArgId> ExpandedCulture::Fact(ArgIndex a, Role owner) const {
  if (base_.argument(a).is_motion) return std::nullopt;
  return first_node_[a] + (owner == Role::kPr ? 2 : 3);
}

std::string ExpandedCulture::Label(XArgId x) const {
  const XArg& a = args_[x];
  std::string out = base_.argument(a.origin).label;
  if (out.empty()) out = "arg" + std::to_string(a.origin);
  out += a.kind == Kind::kHypothesis ? "[H," : "[F,";
  out += RoleName(a.owner);
  out += ']';
  return out;
}

ExpandedCulture Expand(const Culture& c) { return ExpandedCulture(c); }

void RevealedLedger::Disclose(Role who, std::size_t feature, std::int64_t value) {
  disclosed_[Index(who)].at(feature) = value;
}

std::optional<std::int64_t> RevealedLedger::value(Role who, std::size_t feature) const {
  return disclosed_[Index(who)].at(feature);
}

std::size_t RevealedLedger::disclosed_count(Role who) const {
  const auto& d = disclosed_[Index(who)];
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](const auto& v) { return v.has_value(); }));
}

Verdict Verify(const ExpandedCulture& xc, XArgId x, const FeatureDescription& utterer,
               const RevealedLedger& ledger) {
  const XArg& a = xc.arg(x);
  if (a.kind == Kind::kHypothesis) return Verdict::kTrue;
  const std::size_t f = *xc.feature_of(x);
  if (f >= utterer.values.size()) {
    Fail(ErrorCode::kInput, "feature " + std::to_string(f) + " missing from description");
  }
  const auto theirs = ledger.value(Adversary(a.owner), f);
  if (!theirs) return Verdict::kUnknown;
  return utterer.values[f] > *theirs ? Verdict::kTrue : Verdict::kFalse;
}

bool FactHolds(const ExpandedCulture& xc, XArgId x, const FeatureDescription& pr,
               const FeatureDescription& op) {
  const XArg& a = xc.arg(x);
  if (a.kind == Kind::kHypothesis) return true;
  const std::size_t f = *xc.feature_of(x);
  const auto& mine = a.owner == Role::kPr ? pr : op;
  const auto& theirs = a.owner == Role::kPr ? op : pr;
  return mine.values[f] > theirs.values[f];
}

GroundTruthFramework InstantiateGroundTruth(const ExpandedCulture& xc,
                                            const FeatureDescription& pr,
                                            const FeatureDescription& op) {
  CheckDescription(xc.base(), pr);
  CheckDescription(xc.base(), op);
  constexpr af::ArgumentId kGone = UINT32_MAX;
  std::vector<af::ArgumentId> local(xc.size(), kGone);
  GroundTruthFramework gt;
  for (const XArg& a : xc.args()) {
    if (FactHolds(xc, a.id, pr, op)) {
      local[a.id] = static_cast<af::ArgumentId>(gt.expanded_id.size());
      gt.expanded_id.push_back(a.id);
    }
  }
  std::vector<af::Attack> attacks;
  for (const af::Attack& at : xc.framework().attacks()) {
    if (local[at.attacker] != kGone && local[at.target] != kGone) {
      attacks.push_back({local[at.attacker], local[at.target]});
    }
  }
  gt.framework = af::Framework(gt.expanded_id.size(), std::move(attacks));
  gt.motion_pr = local[xc.Motion(Role::kPr)];
  return gt;
}

Culture GenerateRandomCulture(std::size_t n_args, std::size_t n_attacks, CostRange costs,
                              std::uint64_t seed) {
  if (n_args < 2) Fail(ErrorCode::kInput, "a random culture needs at least 2 arguments");
  const std::size_t max_attacks = n_args * (n_args - 1) / 2;
  if (n_attacks < n_args - 1 || n_attacks > max_attacks) {
    Fail(ErrorCode::kInput, "attack count " + std::to_string(n_attacks) +
                                " infeasible for " + std::to_string(n_args) +
                                " arguments (need " + std::to_string(n_args - 1) +
                                ".." + std::to_string(max_attacks) + ")");
  }
  if (costs.lo < 0 || costs.hi < costs.lo) Fail(ErrorCode::kInput, "invalid cost range");

  Rng rng(seed);
  // Random recursive spanning tree: argument j attacks one earlier argument.
  std::vector<std::uint8_t> used(n_args * n_args, 0);
  std::vector<af::Attack> attacks;
  for (ArgIndex j = 1; j < n_args; ++j) {
    const auto i = static_cast<ArgIndex>(rng.Below(j));
    attacks.push_back({j, i});
    used[j * n_args + i] = 1;
  }
  std::vector<af::Attack> spare;
  for (ArgIndex j = 1; j < n_args; ++j) {
    for (ArgIndex i = 0; i < j; ++i) {
      if (!used[j * n_args + i]) spare.push_back({j, i});
    }
  }
  const std::size_t extra = n_attacks - attacks.size();
  for (std::size_t k = 0; k < extra; ++k) {
    const std::size_t pick = k + rng.Below(spare.size() - k);
    std::swap(spare[k], spare[pick]);
    attacks.push_back(spare[k]);
  }

  std::vector<Argument> args(n_args);
  for (ArgIndex i = 0; i < n_args; ++i) {
    Argument& a = args[i];
    a.is_motion = i == 0;
    a.label = i == 0 ? "motion" : "a" + std::to_string(i);
    a.costs.hypothesis_pr = rng.Uniform(costs.lo, costs.hi);
    a.costs.hypothesis_op = rng.Uniform(costs.lo, costs.hi);
    if (!a.is_motion) {
      a.costs.fact_pr = rng.Uniform(costs.lo, costs.hi);
      a.costs.fact_op = rng.Uniform(costs.lo, costs.hi);
    }
  }
  return Culture(std::move(args), std::move(attacks));
}

FeatureDescription SampleRandomAgent(std::size_t n_features, std::int64_t max_value, Rng& rng) {
  FeatureDescription d;
  d.values.resize(n_features);
  for (auto& v : d.values) v = rng.Uniform(0, max_value - 1);
  return d;
}

void CheckDescription(const Culture& c, const FeatureDescription& d) {
  if (d.values.size() != c.feature_count()) {
    Fail(ErrorCode::kInput, "description has " + std::to_string(d.values.size()) +
                                " features, culture expects " +
                                std::to_string(c.feature_count()));
  }
  for (std::size_t f = 0; f < d.values.size(); ++f) {
    const Argument& a = c.argument(c.argument_of_feature(f));
    if (d.values[f] < 0 ||
        (!a.values.empty() && d.values[f] >= static_cast<std::int64_t>(a.values.size()))) {
      Fail(ErrorCode::kInput, "value " + std::to_string(d.values[f]) +
                                  " out of range for feature " + std::to_string(f) +
                                  " (" + a.label + ")");
    }
  }
}

FeatureDescription ParseDescription(const Culture& c, std::string_view text) {
  FeatureDescription d;
  std::size_t f = 0;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      if (f >= c.feature_count()) Fail(ErrorCode::kInput, "too many description values");
      const auto& names = c.argument(c.argument_of_feature(f)).values;
      auto it = std::find(names.begin(), names.end(), tok);
      if (it == names.end()) {
        Fail(ErrorCode::kInput, "unknown value '" + std::string(tok) + "' for feature " +
                                    std::to_string(f));
      }
      v = it - names.begin();
    }
    d.values.push_back(v);
    ++f;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  CheckDescription(c, d);
  return d;
}

}  // namespace fairdial::culture
