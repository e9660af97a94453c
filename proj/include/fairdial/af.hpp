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
// Abstract argumentation frameworks under preferred semantics.
//
// Two solver paths are provided. The exhaustive path checks every subset and
// is only meant as an oracle on small frameworks. The labelling path is a
// backtracking search over IN/OUT/MUST_OUT/UNDEC labels seeded with the
// grounded extension, and is what the rest of the library uses.
#ifndef FAIRDIAL_AF_HPP_
#define FAIRDIAL_AF_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fairdial::af {

using ArgumentId = std::uint32_t;

struct Attack {
  ArgumentId attacker;
  ArgumentId target;

  auto operator<=>(const Attack&) const = default;
};

// Sorted ascending, no duplicates.
using Extension = std::vector<ArgumentId>;

class Framework {
 public:
  Framework() = default;

  // Throws Error(kInput) on out-of-range ids or duplicate attacks.
  Framework(std::size_t n_args, std::vector<Attack> attacks);

  std::size_t size() const { return n_args_; }
  const std::vector<Attack>& attacks() const { return attacks_; }

  std::span<const ArgumentId> attackers_of(ArgumentId a) const {
    return {attackers_.data() + attacker_offsets_[a],
            attackers_.data() + attacker_offsets_[a + 1]};
  }
  std::span<const ArgumentId> targets_of(ArgumentId a) const {
    return {targets_.data() + target_offsets_[a],
            targets_.data() + target_offsets_[a + 1]};
  }

  bool Attacks(ArgumentId attacker, ArgumentId target) const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.n_args_ == b.n_args_ && a.attacks_ == b.attacks_;
  }

 private:
  std::size_t n_args_ = 0;
  std::vector<Attack> attacks_;
  std::vector<std::size_t> attacker_offsets_{0};
  std::vector<ArgumentId> attackers_;
  std::vector<std::size_t> target_offsets_{0};
  std::vector<ArgumentId> targets_;
};

enum class SolverPath { kLabelling, kExhaustive };

// Largest framework the exhaustive path accepts.
inline constexpr std::size_t kExhaustiveLimit = 20;

bool IsConflictFree(std::span<const ArgumentId> set, const Framework& af);
bool IsAdmissible(std::span<const ArgumentId> set, const Framework& af);

Extension GroundedExtension(const Framework& af);

// The subset-maximal admissible sets, sorted by size descending and then
// lexicographically. Throws Error(kCapacity) for the exhaustive path above
// kExhaustiveLimit arguments.
std::vector<Extension> PreferredExtensions(
    const Framework& af, SolverPath path = SolverPath::kLabelling);

bool IsScepticallyAccepted(ArgumentId x, const Framework& af);

// Line-oriented text: the first significant line holds the argument count,
// each further line one "<attacker> <target>" pair. '#' starts a comment.
Framework ParseFramework(std::string_view text);
std::string EmitFramework(const Framework& af);

}  // namespace fairdial::af

#endif  // FAIRDIAL_AF_HPP_
