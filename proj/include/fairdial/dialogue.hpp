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
// Two-player dialogue game over an expanded culture with privacy budgets.
//
// The proponent opens with its motion. Players then alternate, each move
// attacking the previous one. A player who cannot move loses. When the loser
// still had legal rebuttals it could not afford the loss is budget-forced:
// the loser concedes without being convinced.
#ifndef FAIRDIAL_DIALOGUE_HPP_
#define FAIRDIAL_DIALOGUE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdial/culture.hpp"
#include "fairdial/rng.hpp"

namespace fairdial::dialogue {

using culture::XArgId;

enum class Strategy : std::uint8_t { kRandom, kMinCost, kOffensive, kDefensive };

inline constexpr std::array<Strategy, 4> kAllStrategies = {
    Strategy::kRandom, Strategy::kMinCost, Strategy::kOffensive, Strategy::kDefensive};

std::string_view StrategyName(Strategy s);
std::optional<Strategy> ParseStrategy(std::string_view name);

enum class Termination : std::uint8_t { kConvinced, kBudgetForced };

std::string_view TerminationName(Termination t);

struct Move {
  Role player;
  XArgId arg;
  std::int64_t cost;

  friend bool operator==(const Move&, const Move&) = default;
};

class DialogueState {
 public:
  DialogueState(const culture::ExpandedCulture& xc, const culture::FeatureDescription& pr,
                const culture::FeatureDescription& op, std::int64_t budget);

  const culture::ExpandedCulture& culture() const { return *xc_; }
  const culture::FeatureDescription& description(Role r) const { return *desc_[Index(r)]; }
  const culture::RevealedLedger& ledger() const { return ledger_; }
  const std::vector<Move>& transcript() const { return transcript_; }

  // Pr before the opening move, then alternating.
  Role to_move() const { return transcript_.size() % 2 == 0 ? Role::kPr : Role::kOp; }
  std::int64_t budget() const { return budget_; }
  std::int64_t spent(Role r) const { return spent_[Index(r)]; }
  std::int64_t remaining(Role r) const { return budget_ - spent_[Index(r)]; }

  bool uttered(XArgId x) const { return uttered_[x] != 0; }
  // Attacked by some argument uttered so far.
  bool attacked_by_uttered(XArgId x) const { return attacked_[x] != 0; }

  // Appends a move for the player to move. Throws Error(kInvariant) if the
  // move is not a legal, affordable rebuttal (or the opening motion).
  void Play(XArgId x);

 private:
  const culture::ExpandedCulture* xc_;
  std::array<const culture::FeatureDescription*, 2> desc_;
  culture::RevealedLedger ledger_;
  std::int64_t budget_;
  std::array<std::int64_t, 2> spent_{0, 0};
  std::vector<Move> transcript_;
  std::vector<std::uint8_t> uttered_;
  std::vector<std::uint8_t> attacked_;
};

// Arguments the player to move may legally utter, ignoring budgets, in
// ascending id order. Before the opening move this is the proponent's motion.
std::vector<XArgId> LegalRebuttals(const DialogueState& state);

// Candidates whose cost fits within `remaining` (non-strict).
std::vector<XArgId> Affordable(std::span<const XArgId> candidates,
                               const culture::ExpandedCulture& xc, std::int64_t remaining);

// Picks one candidate; ties go to the lowest id. Throws Error(kInvariant) on
// an empty candidate set.
XArgId Choose(Strategy strategy, std::span<const XArgId> candidates,
              const culture::ExpandedCulture& xc, Rng& rng);

struct DialogueResult {
  Role winner = Role::kOp;
  std::vector<Move> transcript;
  std::array<std::int64_t, 2> spent{0, 0};
  Termination termination = Termination::kConvinced;

  int subjective_loss() const { return termination == Termination::kBudgetForced ? 1 : 0; }
  Role loser() const { return Adversary(winner); }

  friend bool operator==(const DialogueResult&, const DialogueResult&) = default;
};

// Both players get budget `g`. `seed` only feeds the random strategy.
DialogueResult RunDispute(const culture::ExpandedCulture& xc,
                          const culture::FeatureDescription& pr,
                          const culture::FeatureDescription& op, Strategy strategy,
                          std::int64_t g, std::uint64_t seed);

// Post-hoc audit of a finished dialogue: opening, alternation, attack chain,
// no repeats, legality, fact soundness, budget safety, and the winner and
// termination labels. Returns the violations found.
std::vector<std::string> AuditDialogue(const DialogueResult& result,
                                       const culture::ExpandedCulture& xc,
                                       const culture::FeatureDescription& pr,
                                       const culture::FeatureDescription& op,
                                       std::int64_t g);

// One line of a transcript log:
//   trial,pr_id,op_id,strategy,g,winner,termination,spent_pr,spent_op,move_list
// with the moves as semicolon-separated expanded ids.
struct TranscriptRecord {
  std::uint64_t trial = 0;
  std::uint64_t pr_id = 0;
  std::uint64_t op_id = 0;
  Strategy strategy = Strategy::kRandom;
  std::int64_t g = 0;
  Role winner = Role::kOp;
  Termination termination = Termination::kConvinced;
  std::int64_t spent_pr = 0;
  std::int64_t spent_op = 0;
  std::vector<XArgId> moves;

  friend bool operator==(const TranscriptRecord&, const TranscriptRecord&) = default;
};

inline constexpr std::string_view kTranscriptHeader =
    "trial,pr_id,op_id,strategy,g,winner,termination,spent_pr,spent_op,move_list";

TranscriptRecord MakeRecord(std::uint64_t trial, std::uint64_t pr_id, std::uint64_t op_id,
                            Strategy strategy, std::int64_t g, const DialogueResult& r);
std::string FormatTranscriptLine(const TranscriptRecord& rec);
// Throws Error(kParse).
TranscriptRecord ParseTranscriptLine(std::string_view line);

}  // namespace fairdial::dialogue

#endif  // FAIRDIAL_DIALOGUE_HPP_
