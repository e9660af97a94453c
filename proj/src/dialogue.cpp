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
#include "fairdial/dialogue.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "fairdial/error.hpp"

namespace fairdial::dialogue {
namespace {

using culture::ExpandedCulture;
using culture::FeatureDescription;
using culture::Kind;

bool IsLegal(const DialogueState& s, XArgId y) {
  const ExpandedCulture& xc = s.culture();
  const culture::XArg& a = xc.arg(y);
  if (a.owner != s.to_move() || s.uttered(y) || s.attacked_by_uttered(y)) return false;
  if (a.kind == Kind::kFact) {
    return culture::Verify(xc, y, s.description(a.owner), s.ledger()) ==
           culture::Verdict::kTrue;
  }
  return true;
}

template <typename Score>
XArgId ArgBest(std::span<const XArgId> c, Score score) {
  XArgId best = c[0];
  auto best_score = score(best);
  for (XArgId x : c.subspan(1)) {
    const auto s = score(x);
    if (s < best_score || (s == best_score && x < best)) {
      best = x;
      best_score = s;
    }
  }
  return best;
}

std::string_view NextField(std::string_view& line, bool last) {
  const std::size_t comma = last ? std::string_view::npos : line.find(',');
  if (!last && comma == std::string_view::npos) {
    Fail(ErrorCode::kParse, "transcript line has too few fields");
  }
  std::string_view field = line.substr(0, comma);
  line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
  return field;
}

template <typename T>
T ParseNumber(std::string_view field, const char* name) {
  T v{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    Fail(ErrorCode::kParse, std::string("bad ") + name + " field '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kRandom: return "random";
    case Strategy::kMinCost: return "min_cost";
    case Strategy::kOffensive: return "offensive";
    case Strategy::kDefensive: return "defensive";
  }
  return "?";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view TerminationName(Termination t) {
  return t == Termination::kConvinced ? "convinced" : "budget_forced";
}

DialogueState::DialogueState(const ExpandedCulture& xc, const FeatureDescription& pr,
                             const FeatureDescription& op, std::int64_t budget)
    : xc_(&xc),
      desc_{&pr, &op},
      ledger_(xc.base().feature_count()),
      budget_(budget),
      uttered_(xc.size(), 0),
      attacked_(xc.size(), 0) {
  if (budget < 0) Fail(ErrorCode::kInput, "privacy budget must be non-negative");
  culture::CheckDescription(xc.base(), pr);
  culture::CheckDescription(xc.base(), op);
}

void DialogueState::Play(XArgId x) {
  if (x >= xc_->size()) Fail(ErrorCode::kInvariant, "move id out of range");
  const Role who = to_move();
  const culture::XArg& a = xc_->arg(x);
  if (transcript_.empty()) {
    if (x != xc_->Motion(Role::kPr)) {
      Fail(ErrorCode::kInvariant, "the dialogue must open with the proponent's motion");
    }
  } else if (!xc_->framework().Attacks(x, transcript_.back().arg) || !IsLegal(*this, x)) {
    Fail(ErrorCode::kInvariant, "illegal move " + xc_->Label(x));
  }
  if (a.cost > remaining(who)) {
    Fail(ErrorCode::kInvariant, "move " + xc_->Label(x) + " exceeds the privacy budget");
  }
  spent_[Index(who)] += a.cost;
  transcript_.push_back({who, x, a.cost});
  uttered_[x] = 1;
  for (af::ArgumentId t : xc_->framework().targets_of(x)) attacked_[t] = 1;
  if (auto f = xc_->feature_of(x)) ledger_.Disclose(who, *f, desc_[Index(who)]->values[*f]);
}

std::vector<XArgId> LegalRebuttals(const DialogueState& state) {
  const ExpandedCulture& xc = state.culture();
  if (state.transcript().empty()) return {xc.Motion(Role::kPr)};
  std::vector<XArgId> out;
  for (af::ArgumentId y : xc.framework().attackers_of(state.transcript().back().arg)) {
    if (IsLegal(state, y)) out.push_back(y);
  }
  return out;
}

std::vector<XArgId> Affordable(std::span<const XArgId> candidates, const ExpandedCulture& xc,
                               std::int64_t remaining) {
  std::vector<XArgId> out;
  for (XArgId x : candidates) {
    if (xc.arg(x).cost <= remaining) out.push_back(x);
  }
  return out;
}

XArgId Choose(Strategy strategy, std::span<const XArgId> candidates, const ExpandedCulture& xc,
              Rng& rng) {
  if (candidates.empty()) Fail(ErrorCode::kInvariant, "no candidate to choose from");
  switch (strategy) {
    case Strategy::kRandom:
      return candidates[rng.Below(candidates.size())];
    case Strategy::kMinCost:
      return ArgBest(candidates, [&](XArgId x) { return xc.arg(x).cost; });
    case Strategy::kOffensive:
      return ArgBest(candidates,
                     [&](XArgId x) { return -static_cast<std::int64_t>(xc.out_degree(x)); });
    case Strategy::kDefensive:
      return ArgBest(candidates, [&](XArgId x) { return xc.in_degree(x); });
  }
  Fail(ErrorCode::kInput, "unknown strategy");
}

DialogueResult RunDispute(const ExpandedCulture& xc, const FeatureDescription& pr,
                          const FeatureDescription& op, Strategy strategy, std::int64_t g,
                          std::uint64_t seed) {
  DialogueState state(xc, pr, op, g);
  Rng rng(seed);
  DialogueResult r;
  while (true) {
    const Role mover = state.to_move();
    const auto legal = LegalRebuttals(state);
    const auto affordable = Affordable(legal, xc, state.remaining(mover));
    if (affordable.empty()) {
      r.winner = Adversary(mover);
      r.termination = legal.empty() ? Termination::kConvinced : Termination::kBudgetForced;
      break;
    }
    state.Play(affordable.size() == 1 ? affordable[0] : Choose(strategy, affordable, xc, rng));
  }
  r.transcript = state.transcript();
  r.spent = {state.spent(Role::kPr), state.spent(Role::kOp)};
  return r;
}

std::vector<std::string> AuditDialogue(const DialogueResult& result, const ExpandedCulture& xc,
                                       const FeatureDescription& pr,
                                       const FeatureDescription& op, std::int64_t g) {
  std::vector<std::string> issues;
  DialogueState replay(xc, pr, op, g);
  std::array<std::int64_t, 2> charged{0, 0};
  for (std::size_t i = 0; i < result.transcript.size(); ++i) {
    const Move& m = result.transcript[i];
    const std::string where = "move " + std::to_string(i) + ": ";
    if (m.player != replay.to_move()) issues.push_back(where + "players do not alternate");
    if (m.arg >= xc.size()) {
      issues.push_back(where + "unknown argument");
      return issues;
    }
    if (m.cost != xc.arg(m.arg).cost) issues.push_back(where + "wrong cost charged");
    if (xc.arg(m.arg).kind == Kind::kFact && !culture::FactHolds(xc, m.arg, pr, op)) {
      issues.push_back(where + "fact does not hold under full information");
    }
    charged[Index(m.player)] += m.cost;
    try {
      replay.Play(m.arg);
    } catch (const Error& e) {
      issues.push_back(where + e.what());
      return issues;
    }
  }
  for (Role r : {Role::kPr, Role::kOp}) {
    if (charged[Index(r)] > g) issues.push_back(std::string(RoleName(r)) + " overspent");
    if (charged[Index(r)] != result.spent[Index(r)]) {
      issues.push_back(std::string(RoleName(r)) + " spend does not match its moves");
    }
  }
  const Role stuck = replay.to_move();
  const auto legal = LegalRebuttals(replay);
  if (!Affordable(legal, xc, replay.remaining(stuck)).empty()) {
    issues.push_back("dialogue ended while the mover could still play");
  }
  if (result.winner != Adversary(stuck)) issues.push_back("winner mislabelled");
  const Termination expected =
      legal.empty() ? Termination::kConvinced : Termination::kBudgetForced;
  if (result.termination != expected) issues.push_back("termination mislabelled");
  return issues;
}

TranscriptRecord MakeRecord(std::uint64_t trial, std::uint64_t pr_id, std::uint64_t op_id,
                            Strategy strategy, std::int64_t g, const DialogueResult& r) {
  TranscriptRecord rec{trial,         pr_id,       op_id,     strategy, g, r.winner,
                       r.termination, r.spent[0], r.spent[1], {}};
  for (const Move& m : r.transcript) rec.moves.push_back(m.arg);
  return rec;
}

std::string FormatTranscriptLine(const TranscriptRecord& rec) {
  std::string out;
  out += std::to_string(rec.trial) + ',' + std::to_string(rec.pr_id) + ',' +
         std::to_string(rec.op_id) + ',';
  out += StrategyName(rec.strategy);
  out += ',' + std::to_string(rec.g) + ',';
  out += RoleName(rec.winner);
  out += ',';
  out += TerminationName(rec.termination);
  out += ',' + std::to_string(rec.spent_pr) + ',' + std::to_string(rec.spent_op) + ',';
  for (std::size_t i = 0; i < rec.moves.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(rec.moves[i]);
  }
  return out;
}

TranscriptRecord ParseTranscriptLine(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  TranscriptRecord rec;
  rec.trial = ParseNumber<std::uint64_t>(NextField(line, false), "trial");
  rec.pr_id = ParseNumber<std::uint64_t>(NextField(line, false), "pr_id");
  rec.op_id = ParseNumber<std::uint64_t>(NextField(line, false), "op_id");
  const auto strategy = NextField(line, false);
  const auto s = ParseStrategy(strategy);
  if (!s) Fail(ErrorCode::kParse, "unknown strategy '" + std::string(strategy) + "'");
  rec.strategy = *s;
  rec.g = ParseNumber<std::int64_t>(NextField(line, false), "g");
  const auto winner = NextField(line, false);
  if (winner == "pr") {
    rec.winner = Role::kPr;
  } else if (winner == "op") {
    rec.winner = Role::kOp;
  } else {
    Fail(ErrorCode::kParse, "bad winner '" + std::string(winner) + "'");
  }
  const auto term = NextField(line, false);
  if (term == "convinced") {
    rec.termination = Termination::kConvinced;
  } else if (term == "budget_forced") {
    rec.termination = Termination::kBudgetForced;
  } else {
    Fail(ErrorCode::kParse, "bad termination '" + std::string(term) + "'");
  }
  rec.spent_pr = ParseNumber<std::int64_t>(NextField(line, false), "spent_pr");
  rec.spent_op = ParseNumber<std::int64_t>(NextField(line, false), "spent_op");
  std::string_view moves = NextField(line, true);
  if (moves.find(',') != std::string_view::npos) {
    Fail(ErrorCode::kParse, "transcript line has too many fields");
  }
  while (!moves.empty()) {
    const std::size_t semi = moves.find(';');
    rec.moves.push_back(ParseNumber<XArgId>(moves.substr(0, semi), "move"));
    moves = semi == std::string_view::npos ? std::string_view{} : moves.substr(semi + 1);
  }
  return rec;
}

}  // namespace fairdial::dialogue
