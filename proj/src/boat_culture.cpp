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
#include "fairdial/boat_culture.hpp"

#include <string>
#include <vector>

namespace fairdial::boat {
namespace {

struct Row {
  const char* label;
  std::int64_t cost;
  std::vector<std::string> values;
  std::vector<culture::ArgIndex> attacks;
};

std::vector<culture::ArgIndex> Below(culture::ArgIndex n) {
  std::vector<culture::ArgIndex> out;
  for (culture::ArgIndex i = 0; i < n; ++i) out.push_back(i);
  return out;
}

std::vector<Row> Rows() {
  return {
      {"motion", 0, {}, {}},
      {"VehicleAge", 4, {"new", "used", "worn", "old", "vintage"}, {0}},
      {"VehicleCost", 10, {"cheap", "ok", "expensive", "very_expensive", "millions"}, {0, 1}},
      {"HigherCategory", 0, {"civilian", "corporate", "police", "coast_guard", "military"},
       {0, 1, 2}},
      {"TaskedStatus", 3, {"at_ease", "returning", "tasked"}, {0, 1, 2, 3}},
      {"PayloadType", 5, {"empty", "food", "medical_supplies"}, {0, 1, 2}},
      {"TaskNature", 7,
       {"leisure", "sport", "trade", "training", "patrol", "pursuit", "combat"}, {4, 5}},
      {"VIPOnBoard", 13, {"ordinary_person", "business_person", "celebrity", "politician"},
       {0, 1, 2, 4}},
      {"MilitaryRank", 8,
       {"no_rank", "officer", "lieutenant", "commander", "captain", "major", "colonel",
        "general", "admiral"},
       {3, 5, 6, 7}},
      {"DiplomaticCredentials", 12, {"no_credentials", "diplomat", "united_nations"}, Below(9)},
      {"SensitivePayload", 15, {"no_sensitive_payload", "weapons", "wanted_prisoner"},
       Below(10)},
      {"UndercoverOps", 20, {"no_spy", "spy"}, {3, 4, 6, 7, 8, 10}},
      {"EmergencyNature", 10, {"no_emergency", "mechanical", "sick_passenger", "fire"},
       Below(12)},
      {"SuperVIPOnBoard", 16, {"no_super_vip", "prime_minister", "head_of_state"}, Below(13)},
  };
}

const culture::Culture& Cached() {
  static const culture::Culture c = [] {
    std::vector<culture::Argument> args;
    std::vector<af::Attack> attacks;
    const auto rows = Rows();
    for (culture::ArgIndex i = 0; i < rows.size(); ++i) {
      culture::Argument a;
      a.label = rows[i].label;
      a.is_motion = i == kMotion;
      a.costs = culture::NodeCosts::Uniform(rows[i].cost);
      if (a.is_motion) a.costs.fact_pr = a.costs.fact_op = 0;
      a.values = rows[i].values;
      args.push_back(std::move(a));
      for (culture::ArgIndex t : rows[i].attacks) attacks.push_back({i, t});
    }
    return culture::Culture(std::move(args), std::move(attacks));
  }();
  return c;
}

}  // namespace

culture::Culture BuiltinBoatCulture() { return Cached(); }

bool IsConsistentBoatAgent(const culture::FeatureDescription& d) {
  if (d.values.size() != kPropertyCount - 1) return false;
  const auto at = [&](Property p) { return d.values[FeatureOf(p)]; };
  const std::int64_t category = at(kHigherCategory);
  const bool armed_service = category >= 2;
  if (category == kCivilian && at(kMilitaryRank) != 0) return false;
  if (at(kMilitaryRank) > kOfficer && !armed_service) return false;
  if (at(kUndercoverOps) == kSpy && armed_service) return false;
  if (at(kTaskNature) >= kPatrol && category == kCivilian) return false;
  return true;
}

culture::FeatureDescription SampleBoatAgent(Rng& rng) {
  const culture::Culture& c = Cached();
  culture::FeatureDescription d;
  d.values.resize(c.feature_count());
  do {
    for (std::size_t f = 0; f < d.values.size(); ++f) {
      const auto n = c.argument(c.argument_of_feature(f)).values.size();
      d.values[f] = static_cast<std::int64_t>(rng.Below(n));
    }
  } while (!IsConsistentBoatAgent(d));
  return d;
}

culture::FeatureDescription SampleBoatAgent(std::uint64_t seed) {
  Rng rng(seed);
  return SampleBoatAgent(rng);
}

}  // namespace fairdial::boat
