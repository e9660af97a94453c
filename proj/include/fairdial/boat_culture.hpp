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
// The right-of-way culture used by the speedboat simulation.
#ifndef FAIRDIAL_BOAT_CULTURE_HPP_
#define FAIRDIAL_BOAT_CULTURE_HPP_

#include <cstdint>

#include "fairdial/culture.hpp"

namespace fairdial::boat {

enum Property : culture::ArgIndex {
  kMotion = 0,
  kVehicleAge,
  kVehicleCost,
  kHigherCategory,
  kTaskedStatus,
  kPayloadType,
  kTaskNature,
  kVipOnBoard,
  kMilitaryRank,
  kDiplomaticCredentials,
  kSensitivePayload,
  kUndercoverOps,
  kEmergencyNature,
  kSuperVipOnBoard,
};

inline constexpr culture::ArgIndex kPropertyCount = 14;

// Feature slot of a non-motion property.
constexpr std::size_t FeatureOf(Property p) { return static_cast<std::size_t>(p) - 1; }

// Ordinals of the values referenced by the consistency rules.
inline constexpr std::int64_t kCivilian = 0;
inline constexpr std::int64_t kCorporate = 1;
inline constexpr std::int64_t kOfficer = 1;
inline constexpr std::int64_t kPatrol = 4;
inline constexpr std::int64_t kSpy = 1;

culture::Culture BuiltinBoatCulture();

// Rules enforced on sampled agents:
//   civilians hold no military rank;
//   ranks above officer need police, coast guard or military;
//   spies are civilian or corporate;
//   patrol, pursuit and combat tasks need a non-civilian.
bool IsConsistentBoatAgent(const culture::FeatureDescription& d);

// Uniform over consistent descriptions (rejection sampling).
culture::FeatureDescription SampleBoatAgent(Rng& rng);
culture::FeatureDescription SampleBoatAgent(std::uint64_t seed);

}  // namespace fairdial::boat

#endif  // FAIRDIAL_BOAT_CULTURE_HPP_
