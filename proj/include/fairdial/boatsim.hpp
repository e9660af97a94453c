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
// Speedboat parade with dialogue-gated potential-field collision avoidance.
//
// Boats cross a long channel in both directions. When two boats first come
// within r_max they settle right of way with a dialogue over the boat
// culture. The loser gets a repulsive field around the winner, switched on
// once they are closer than an activation radius that shrinks with the
// privacy spent in the dialogue.
#ifndef FAIRDIAL_BOATSIM_HPP_
#define FAIRDIAL_BOATSIM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdial/culture.hpp"
#include "fairdial/dialogue.hpp"

namespace fairdial::boat {

struct BoatParams {
  double mass = 5000;          // kg
  double max_thrust = 20000;   // N
  double max_speed = 30;       // m/s
  double lateral_grip = 2.0;   // 1/s, damping of sideways slip
  double max_yaw_rate = 0.3;   // rad/s
  double yaw_lag = 0.3;        // s, first-order yaw response
  double heading_gain = 1.0;   // commanded yaw rate per radian of error

  // Quadratic drag coefficient giving terminal speed max_speed at full thrust.
  double drag() const { return max_thrust / (max_speed * max_speed); }
};

struct FieldParams {
  double attraction = 1.0;
  double repulsion = 300.0;     // gain on (1/d - 1/r_max)
  double starboard_bias = 1.0;  // tangential share of repulsion, to the right
  double wall_margin = 150.0;   // m
  double wall_gain = 2.0;
};

struct WorldConfig {
  double length = 20000;  // m, west-east
  double width = 2000;    // m
  std::size_t n_agents = 16;
  double dt = 0.05;       // s
  double r_max = 1000;
  double r_crit = 100;
  double start_margin = 100;    // start/goal distance from the ends
  double min_separation = 1000; // between start positions on one side
  double lane_spread = 200;     // start/goal y within mid +- spread
  double arrive_radius = 30;
  double max_time = 2000;       // s
  BoatParams boat;
  FieldParams field;
};

// Loads a JSON object; keys override the defaults ("boat" and "field" nest).
// Throws Error(kParse).
WorldConfig WorldConfigFromJson(std::string_view text);
std::string WorldConfigToJson(const WorldConfig& cfg);
void Validate(const WorldConfig& cfg);

struct BoatState {
  double x = 0, y = 0;
  double heading = 0;    // rad, counter-clockwise from east
  double surge = 0;      // body-frame forward speed
  double sway = 0;       // body-frame sideways speed
  double yaw_rate = 0;
  double lat_acc = 0;    // body-frame lateral acceleration
  double t = 0;

  double speed() const;
};

struct Controls {
  double throttle = 0;      // [-1, 1] of max thrust
  double yaw_rate_cmd = 0;  // rad/s
};

// Forward Euler. Throws Error(kFault) on a non-finite state.
BoatState StepPhysics(const BoatState& s, const Controls& c, const BoatParams& p, double dt);

// r_max - z / (2 g) (r_max - r_crit). z = g = 0 gives r_max. Throws
// Error(kInput) unless 0 <= z <= 2g.
double ActivationRadius(double z, double g, double r_max, double r_crit);

struct Agent {
  double start_x = 0, start_y = 0;
  double goal_x = 0, goal_y = 0;
  culture::FeatureDescription description;
};

struct World {
  WorldConfig config;
  std::vector<Agent> agents;
};

// Half of the boats start in the west heading east and half the other way.
World InitParade(const WorldConfig& cfg, std::uint64_t seed);

enum class Mode : std::uint8_t { kNominal, kSubjective, kObjective };
std::string_view ModeName(Mode m);
std::optional<Mode> ParseMode(std::string_view s);

struct Encounter {
  std::size_t pr = 0, op = 0;
  std::size_t winner = 0, loser = 0;
  double t = 0;
  double r_act = 0;
  std::int64_t spent = 0;  // combined
  dialogue::Termination termination = dialogue::Termination::kConvinced;
  bool loser_ignores = false;
  double min_distance = 0;
  std::size_t moves = 0;
};

struct Trajectory {
  std::vector<BoatState> states;  // one per tick until arrival
  bool arrived = false;
};

struct WorldRun {
  std::vector<Trajectory> trajectories;
  std::vector<Encounter> encounters;
  std::vector<std::string> violations;
};

struct DisputeSettings {
  dialogue::Strategy strategy = dialogue::Strategy::kDefensive;
  std::int64_t g = 30;  // per agent
  std::uint64_t seed = 0;
};

// Runs one world. Objective mode takes right of way from the full-information
// outcome and ignores the dialogue settings.
WorldRun RunWorld(const World& world, Mode mode, const DisputeSettings& d);

struct Point {
  double x = 0, y = 0;
};

// Throws Error(kInput) on an empty curve.
double DiscreteFrechet(std::span<const Point> a, std::span<const Point> b);

// Every `stride`-th position, always keeping the last one.
std::vector<Point> Positions(const Trajectory& t, std::size_t stride = 1);

struct Telemetry {
  std::vector<double> t, lat_acc, yaw_rate, lat_jerk;
};

Telemetry MakeTelemetry(const Trajectory& tr, double dt);

struct Comfort {
  double lat_acc = 0;
  double yaw_rate = 0;
  double lat_jerk = 0;
};

// Trapezoid integrals of |series| between the first and the last tick at
// or above `cruise_fraction` of top speed.
Comfort ComfortMetrics(const Telemetry& tel, const Trajectory& tr, double max_speed,
                       double cruise_fraction = 0.95);

struct TrajectoryLosses {
  double omega = 0;             // Frechet(nominal, objective)
  double omega_p = 0;           // Frechet(nominal, subjective)
  double subjectivity_gap = 0;  // Frechet(subjective, objective), or the
                                // literal variant Frechet(nominal, subjective)
};

TrajectoryLosses GlobalTrajectoryLosses(const Trajectory& nominal, const Trajectory& subjective,
                                        const Trajectory& objective, std::size_t stride,
                                        bool literal_gap = false);

struct BoatTrialConfig {
  WorldConfig world;
  std::vector<dialogue::Strategy> strategies = {dialogue::kAllStrategies.begin(),
                                                dialogue::kAllStrategies.end()};
  std::int64_t g = 30;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t frechet_stride = 10;
  bool literal_gap = false;
  bool record_trajectories = false;
  std::size_t trajectory_stride = 20;
  std::vector<Mode> modes = {Mode::kNominal, Mode::kSubjective, Mode::kObjective};
};

struct BoatSummaryRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string strategy;  // "-" for objective runs
  Mode mode = Mode::kNominal;
  std::size_t encounters = 0;
  std::size_t budget_forced = 0;
  std::int64_t spent = 0;
  std::size_t arrived = 0;
  double min_separation = 0;
  Comfort comfort;  // mean over agents
  // Nominal rows only; NaN elsewhere.
  TrajectoryLosses losses;
};

struct BoatTrialsOutput {
  std::vector<BoatSummaryRow> rows;
  std::vector<std::string> trajectory_lines;
  std::vector<std::string> violations;
};

BoatTrialsOutput RunBoatTrials(const BoatTrialConfig& cfg);

inline constexpr std::string_view kTrajectoryHeader =
    "trial,mode,strategy,agent,t,x,y,heading,speed,lat_acc,yaw_rate,lat_jerk";

std::string BoatSummaryCsv(const std::vector<BoatSummaryRow>& rows);
std::string BoatPlotScript();

}  // namespace fairdial::boat

#endif  // FAIRDIAL_BOATSIM_HPP_
