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
#include "fairdial/af.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fairdial/error.hpp"

namespace fairdial::af {
namespace {

void CheckId(ArgumentId a, const Framework& af) {
  if (a >= af.size()) {
    Fail(ErrorCode::kInput, "argument " + std::to_string(a) +
                                " out of range for framework of size " +
                                std::to_string(af.size()));
  }
}

// Fixed-width bitset sized at runtime.
class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  bool SubsetOf(const Bits& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }
  Extension Members() const {
    Extension out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        out.push_back(static_cast<ArgumentId>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

enum class Label : std::uint8_t { kBlank, kIn, kOut, kMustOut, kUndec };

// Backtracking enumeration of preferred extensions over argument labellings.
//
// Invariants of a partial labelling: IN is conflict-free; every target of an
// IN argument is OUT; every attacker of an IN argument is OUT or MUST_OUT.
// UNDEC means "excluded by a branching decision". A leaf with no BLANK and no
// MUST_OUT arguments yields an admissible set. Every preferred extension is
// reached at some leaf; non-maximal leaves are filtered on insertion.
class PreferredSearch {
 public:
  explicit PreferredSearch(const Framework& af) : af_(af), order_(af.size()) {
    std::iota(order_.begin(), order_.end(), ArgumentId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](ArgumentId a, ArgumentId b) {
                       return af.targets_of(a).size() + af.attackers_of(a).size() >
                              af.targets_of(b).size() + af.attackers_of(b).size();
                     });
  }

  std::vector<Bits> Run() {
    std::vector<Label> labels(af_.size(), Label::kBlank);
    for (ArgumentId a = 0; a < af_.size(); ++a) {
      if (af_.Attacks(a, a)) labels[a] = Label::kUndec;
    }
    Search(std::move(labels));
    return std::move(found_);
  }

 private:
  void LabelIn(std::vector<Label>& labels, ArgumentId x) const {
    labels[x] = Label::kIn;
    for (ArgumentId t : af_.targets_of(x)) labels[t] = Label::kOut;
    for (ArgumentId a : af_.attackers_of(x)) {
      if (labels[a] != Label::kOut) labels[a] = Label::kMustOut;
    }
  }

  bool AllAttackersOut(const std::vector<Label>& labels, ArgumentId x) const {
    for (ArgumentId a : af_.attackers_of(x)) {
      if (labels[a] != Label::kOut) return false;
    }
    return true;
  }

  // Returns false when the branch cannot contain a preferred extension.
  bool Propagate(std::vector<Label>& labels) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (ArgumentId x = 0; x < af_.size(); ++x) {
        switch (labels[x]) {
          case Label::kBlank:
            // Defended by IN: in every complete superset.
            if (AllAttackersOut(labels, x)) {
              LabelIn(labels, x);
              changed = true;
            }
            break;
          case Label::kUndec:
            // Excluded yet defended: the branch's sets are not maximal.
            if (AllAttackersOut(labels, x)) return false;
            break;
          case Label::kMustOut: {
            bool can_be_attacked = false;
            for (ArgumentId a : af_.attackers_of(x)) {
              if (labels[a] == Label::kBlank) {
                can_be_attacked = true;
                break;
              }
            }
            if (!can_be_attacked) return false;
            break;
          }
          default:
            break;
        }
      }
    }
    return true;
  }

  void Search(std::vector<Label> labels) {
    if (!Propagate(labels)) return;
    auto pick = std::find_if(order_.begin(), order_.end(), [&](ArgumentId a) {
      return labels[a] == Label::kBlank;
    });
    if (pick == order_.end()) {
      if (std::find(labels.begin(), labels.end(), Label::kMustOut) !=
          labels.end()) {
        return;
      }
      Bits in(af_.size());
      for (ArgumentId a = 0; a < af_.size(); ++a) {
        if (labels[a] == Label::kIn) in.set(a);
      }
      Offer(std::move(in));
      return;
    }
    const ArgumentId x = *pick;
    std::vector<Label> with_x = labels;
    LabelIn(with_x, x);
    Search(std::move(with_x));
    labels[x] = Label::kUndec;
    Search(std::move(labels));
  }

  void Offer(Bits candidate) {
    for (const Bits& f : found_) {
      if (candidate.SubsetOf(f)) return;
    }
    std::erase_if(found_, [&](const Bits& f) { return f.SubsetOf(candidate); });
    found_.push_back(std::move(candidate));
  }

  const Framework& af_;
  std::vector<ArgumentId> order_;
  std::vector<Bits> found_;
};

std::vector<Extension> Exhaustive(const Framework& af) {
  const std::size_t n = af.size();
  if (n > kExhaustiveLimit) {
    Fail(ErrorCode::kCapacity,
         "exhaustive enumeration supports at most " +
             std::to_string(kExhaustiveLimit) + " arguments, got " +
             std::to_string(n));
  }
  std::vector<std::uint32_t> targets(n, 0), attackers(n, 0);
  for (const Attack& at : af.attacks()) {
    targets[at.attacker] |= std::uint32_t{1} << at.target;
    attackers[at.target] |= std::uint32_t{1} << at.attacker;
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::uint8_t> admissible(count, 0);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::uint32_t attacked = 0, attacking_members = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      const int a = std::countr_zero(m);
      attacked |= targets[a];
      attacking_members |= attackers[a];
    }
    admissible[mask] =
        (attacked & mask) == 0 && (attacking_members & ~attacked) == 0;
  }
  // has_superset[m]: some admissible set contains m (sum over supersets).
  std::vector<std::uint8_t> has_superset = admissible;
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (!(mask & b)) has_superset[mask] |= has_superset[mask | b];
    }
  }
  std::vector<Extension> out;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!admissible[mask]) continue;
    bool maximal = true;
    for (std::size_t bit = 0; bit < n && maximal; ++bit) {
      const std::uint32_t b = std::uint32_t{1} << bit;
      if (!(mask & b) && has_superset[mask | b]) maximal = false;
    }
    if (!maximal) continue;
    Extension e;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      e.push_back(static_cast<ArgumentId>(std::countr_zero(m)));
    }
    out.push_back(std::move(e));
  }
  return out;
}

void SortCanonical(std::vector<Extension>& exts) {
  std::sort(exts.begin(), exts.end(), [](const Extension& a, const Extension& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
}

}  // namespace

Framework::Framework(std::size_t n_args, std::vector<Attack> attacks)
    : n_args_(n_args), attacks_(std::move(attacks)) {
  for (const Attack& at : attacks_) {
    if (at.attacker >= n_args_ || at.target >= n_args_) {
      Fail(ErrorCode::kInput, "attack (" + std::to_string(at.attacker) + "," +
                                  std::to_string(at.target) +
                                  ") references an argument outside [0," +
                                  std::to_string(n_args_) + ")");
    }
  }
  std::sort(attacks_.begin(), attacks_.end());
  auto dup = std::adjacent_find(attacks_.begin(), attacks_.end());
  if (dup != attacks_.end()) {
    Fail(ErrorCode::kInput, "duplicate attack (" + std::to_string(dup->attacker) +
                                "," + std::to_string(dup->target) + ")");
  }

  attacker_offsets_.assign(n_args_ + 1, 0);
  target_offsets_.assign(n_args_ + 1, 0);
  for (const Attack& at : attacks_) {
    ++attacker_offsets_[at.target + 1];
    ++target_offsets_[at.attacker + 1];
  }
  std::partial_sum(attacker_offsets_.begin(), attacker_offsets_.end(),
                   attacker_offsets_.begin());
  std::partial_sum(target_offsets_.begin(), target_offsets_.end(),
                   target_offsets_.begin());
  attackers_.resize(attacks_.size());
  targets_.resize(attacks_.size());
  std::vector<std::size_t> a_fill(attacker_offsets_.begin(), attacker_offsets_.end() - 1);
  std::vector<std::size_t> t_fill(target_offsets_.begin(), target_offsets_.end() - 1);
  // attacks_ is sorted by (attacker, target), so both lists end up sorted.
  for (const Attack& at : attacks_) {
    attackers_[a_fill[at.target]++] = at.attacker;
    targets_[t_fill[at.attacker]++] = at.target;
  }
}

bool Framework::Attacks(ArgumentId attacker, ArgumentId target) const {
  auto ts = targets_of(attacker);
  return std::binary_search(ts.begin(), ts.end(), target);
}

bool IsConflictFree(std::span<const ArgumentId> set, const Framework& af) {
  for (ArgumentId a : set) CheckId(a, af);
  for (ArgumentId a : set) {
    for (ArgumentId b : set) {
      if (af.Attacks(a, b)) return false;
    }
  }
  return true;
}

bool IsAdmissible(std::span<const ArgumentId> set, const Framework& af) {
  if (!IsConflictFree(set, af)) return false;
  for (ArgumentId a : set) {
    for (ArgumentId attacker : af.attackers_of(a)) {
      bool defended = false;
      for (ArgumentId c : set) {
        if (af.Attacks(c, attacker)) {
          defended = true;
          break;
        }
      }
      if (!defended) return false;
    }
  }
  return true;
}

Extension GroundedExtension(const Framework& af) {
  const std::size_t n = af.size();
  std::vector<std::uint8_t> in(n, 0), out(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (ArgumentId x = 0; x < n; ++x) {
      if (in[x] || out[x]) continue;
      bool defended = true;
      for (ArgumentId a : af.attackers_of(x)) {
        if (!out[a]) {
          defended = false;
          break;
        }
      }
      if (!defended) continue;
      in[x] = 1;
      changed = true;
      for (ArgumentId t : af.targets_of(x)) out[t] = 1;
    }
  }
  Extension g;
  for (ArgumentId x = 0; x < n; ++x) {
    if (in[x]) g.push_back(x);
  }
  return g;
}

std::vector<Extension> PreferredExtensions(const Framework& af, SolverPath path) {
  std::vector<Extension> out;
  if (path == SolverPath::kExhaustive) {
    out = Exhaustive(af);
  } else {
    for (const Bits& b : PreferredSearch(af).Run()) out.push_back(b.Members());
  }
  SortCanonical(out);
  return out;
}

bool IsScepticallyAccepted(ArgumentId x, const Framework& af) {
  CheckId(x, af);
  // The grounded extension is contained in every preferred extension.
  const Extension grounded = GroundedExtension(af);
  if (std::binary_search(grounded.begin(), grounded.end(), x)) return true;
  for (ArgumentId a : af.attackers_of(x)) {
    if (std::binary_search(grounded.begin(), grounded.end(), a)) return false;
  }
  for (const Extension& e : PreferredExtensions(af)) {
    if (!std::binary_search(e.begin(), e.end(), x)) return false;
  }
  return true;
}

}  // namespace fairdial::af
