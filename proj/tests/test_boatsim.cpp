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
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "fairdial/boat_culture.hpp"
#include "fairdial/boatsim.hpp"
#include "fairdial/error.hpp"
#include "fairdial/rng.hpp"
#include "test_util.hpp"

namespace fairdial {
namespace {

using namespace boat;  // NOLINT
using culture::FeatureDescription;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

TEST_CASE("activation radius") {
  CHECK(ActivationRadius(0, 30, 1000, 100) == 1000);
  CHECK(ActivationRadius(60, 30, 1000, 100) == 100);
  CHECK(ActivationRadius(30, 30, 1000, 100) == 550);
  CHECK(ActivationRadius(0, 0, 1000, 100) == 1000);
  double prev = 1e9;
  for (int z = 0; z <= 60; ++z) {
    const double r = ActivationRadius(z, 30, 1000, 100);
    CHECK(r < prev);
    CHECK(r >= 100);
    prev = r;
  }
  CHECK(CodeOf([] { ActivationRadius(61, 30, 1000, 100); }) == ErrorCode::kInput);
  CHECK(CodeOf([] { ActivationRadius(-1, 30, 1000, 100); }) == ErrorCode::kInput);
  CHECK(CodeOf([] { ActivationRadius(1, 0, 1000, 100); }) == ErrorCode::kInput);
}

TEST_CASE("discrete Frechet fixed cases") {
  const std::vector<Point> a = {{0, 0}, {1, 0}, {2, 0}};
  CHECK(DiscreteFrechet(a, a) == 0);
  const std::vector<Point> p = {{0, 0}}, q = {{3, 4}};
  CHECK(DiscreteFrechet(p, q) == 5);
  const std::vector<Point> shifted = {{0, 1}, {1, 1}, {2, 1}};
  CHECK(DiscreteFrechet(a, shifted) == 1);
  // Reversal forces the endpoints to cross.
  const std::vector<Point> rev = {{2, 0}, {1, 0}, {0, 0}};
  CHECK(DiscreteFrechet(a, rev) == 2);
  const std::vector<Point> empty;
  CHECK(CodeOf([&] { DiscreteFrechet(a, empty); }) == ErrorCode::kInput);
}

TEST_CASE("discrete Frechet against the coupling enumerator") {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    std::vector<Point> a(1 + rng.Below(7)), b(1 + rng.Below(7));
    for (auto& pt : a) pt = {rng.Uniform(-10.0, 10.0), rng.Uniform(-10.0, 10.0)};
    for (auto& pt : b) pt = {rng.Uniform(-10.0, 10.0), rng.Uniform(-10.0, 10.0)};
    const double f = DiscreteFrechet(a, b);
    CHECK(f == doctest::Approx(testing::BruteFrechet(a, b)).epsilon(1e-12));
    CHECK(f == doctest::Approx(DiscreteFrechet(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("positions keep the last point") {
  Trajectory tr;
  for (int i = 0; i < 7; ++i) {
    BoatState s;
    s.x = i;
    tr.states.push_back(s);
  }
  const auto p = Positions(tr, 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0].x == 0);
  CHECK(p[1].x == 3);
  CHECK(p[2].x == 6);
  CHECK(Positions(tr, 1).size() == 7);
  CHECK(Positions(tr, 6).size() == 2);
}

TEST_CASE("comfort integral of a sinusoid") {
  // |a sin(2 pi t / T)| over one period integrates to 2 a T / pi.
  const double a = 1.7, T = 40, dt = 0.01;
  Trajectory tr;
  for (int i = 0; i <= static_cast<int>(T / dt); ++i) {
    BoatState s;
    s.t = i * dt;
    s.surge = 30;
    s.lat_acc = a * std::sin(2 * M_PI * s.t / T);
    s.yaw_rate = 0.5 * s.lat_acc;
    tr.states.push_back(s);
  }
  const auto tel = MakeTelemetry(tr, dt);
  const auto c = ComfortMetrics(tel, tr, 30);
  CHECK(c.lat_acc == doctest::Approx(2 * a * T / M_PI).epsilon(1e-4));
  CHECK(c.yaw_rate == doctest::Approx(a * T / M_PI).epsilon(1e-4));
  // Jerk: |d/dt a sin| integrates to 4a over one period.
  CHECK(c.lat_jerk == doctest::Approx(4 * a).epsilon(1e-3));
}

TEST_CASE("comfort window trims the slow start and end") {
  Trajectory tr;
  for (int i = 0; i < 100; ++i) {
    BoatState s;
    s.t = i;
    s.surge = (i < 10 || i > 89) ? 5 : 30;
    s.lat_acc = 1;
    tr.states.push_back(s);
  }
  const auto c = ComfortMetrics(MakeTelemetry(tr, 1), tr, 30);
  CHECK(c.lat_acc == doctest::Approx(79));
  Trajectory slow;
  slow.states.resize(5);
  CHECK(ComfortMetrics(MakeTelemetry(slow, 1), slow, 30).lat_acc == 0);
}

TEST_CASE("physics: straight run, turning and braking") {
  const BoatParams p;
  BoatState s;
  Controls full{1, 0};
  for (int i = 0; i < 20 * 200; ++i) s = StepPhysics(s, full, p, 0.05);
  CHECK(s.surge == doctest::Approx(p.max_speed).epsilon(0.01));
  CHECK(s.surge <= p.max_speed);
  CHECK(std::fabs(s.y) < 1e-9);

  // Yaw rate saturates and the hull slips sideways with bounded grip.
  BoatState t = s;
  for (int i = 0; i < 200; ++i) t = StepPhysics(t, {1, 5}, p, 0.05);
  CHECK(t.yaw_rate == doctest::Approx(p.max_yaw_rate).epsilon(1e-6));
  CHECK(t.speed() <= p.max_speed + 1e-9);
  CHECK(t.lat_acc != 0);

  BoatState b = s;
  for (int i = 0; i < 40; ++i) b = StepPhysics(b, {-1, 0}, p, 0.05);
  CHECK(b.surge < s.surge - 5);

  BoatState bad;
  bad.surge = std::nan("");
  CHECK(CodeOf([&] { StepPhysics(bad, full, p, 0.05); }) == ErrorCode::kFault);
}

TEST_CASE("world config JSON") {
  WorldConfig cfg;
  cfg.length = 12345.5;
  cfg.n_agents = 6;
  cfg.field.repulsion = 42;
  cfg.boat.mass = 1234;
  const WorldConfig back = WorldConfigFromJson(WorldConfigToJson(cfg));
  CHECK(back.length == cfg.length);
  CHECK(back.n_agents == 6);
  CHECK(back.field.repulsion == 42);
  CHECK(back.boat.mass == 1234);
  CHECK(WorldConfigToJson(back) == WorldConfigToJson(cfg));
  CHECK(WorldConfigFromJson(R"({"r_max": 800})").r_max == 800);
  CHECK(CodeOf([] { WorldConfigFromJson(R"({"rmax": 800})"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { WorldConfigFromJson(R"({"boat": {"mass": "x"}})"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { WorldConfigFromJson("[1]"); }) == ErrorCode::kParse);
  WorldConfig bad;
  bad.r_crit = 2000;
  CHECK(CodeOf([&] { Validate(bad); }) == ErrorCode::kInput);
  bad = WorldConfig{};
  bad.n_agents = 40;  // starts no longer fit
  CHECK(CodeOf([&] { Validate(bad); }) == ErrorCode::kInput);
}

TEST_CASE("parade layout") {
  const WorldConfig cfg;
  const World w = InitParade(cfg, 5);
  REQUIRE(w.agents.size() == 16);
  std::size_t east = 0;
  std::vector<double> xs;
  for (const Agent& a : w.agents) {
    if (a.goal_x > a.start_x) ++east;
    xs.push_back(a.start_x);
    CHECK(a.start_x >= cfg.start_margin);
    CHECK(a.start_x <= cfg.length - cfg.start_margin);
    CHECK(std::fabs(a.start_y - cfg.width / 2) <= cfg.lane_spread);
    CHECK(IsConsistentBoatAgent(a.description));
  }
  CHECK(east == 8);
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] - xs[i - 1] >= cfg.min_separation);
  // Eastbound boats all start west of the westbound ones.
  for (const Agent& a : w.agents) {
    for (const Agent& b : w.agents) {
      if (a.goal_x > a.start_x && b.goal_x < b.start_x) CHECK(a.start_x < b.start_x);
    }
  }
  CHECK(InitParade(cfg, 5).agents[3].start_x == w.agents[3].start_x);
  CHECK(InitParade(cfg, 6).agents[3].start_x != w.agents[3].start_x);
}

World HeadOn(const FeatureDescription& west, const FeatureDescription& east) {
  WorldConfig cfg;
  cfg.length = 6000;
  cfg.n_agents = 2;
  World w{cfg, std::vector<Agent>(2)};
  w.agents[0] = {100, 1000, 5900, 1000, west};
  w.agents[1] = {5900, 1000, 100, 1000, east};
  return w;
}

TEST_CASE("two boats head-on") {
  // The eastbound boat outranks the other on every property.
  FeatureDescription strong = SampleBoatAgent(1), weak = strong;
  for (auto& v : weak.values) v = 0;
  const auto& c = BuiltinBoatCulture();
  for (std::size_t f = 0; f < 13; ++f) {
    strong.values[f] =
        static_cast<std::int64_t>(c.argument(c.argument_of_feature(f)).values.size()) - 1;
  }
  // A corporate spy at officer rank keeps every value above the civilian's.
  strong.values[FeatureOf(kHigherCategory)] = kCorporate;
  strong.values[FeatureOf(kMilitaryRank)] = kOfficer;
  REQUIRE(IsConsistentBoatAgent(strong));

  const World w = HeadOn(strong, weak);
  const WorldRun obj = RunWorld(w, Mode::kObjective, {});
  REQUIRE(obj.encounters.size() == 1);
  const Encounter& e = obj.encounters[0];
  CHECK(e.pr == 0);
  CHECK(e.winner == 0);
  CHECK(e.spent == 0);
  CHECK(e.r_act == w.config.r_max);
  CHECK(e.min_distance >= w.config.r_crit);
  CHECK(obj.trajectories[0].arrived);
  CHECK(obj.trajectories[1].arrived);
  CHECK(obj.violations.empty());
  // Heading west, the give-way boat's starboard side is +y.
  double max_dev = 0;
  for (const auto& s : obj.trajectories[1].states) max_dev = std::max(max_dev, s.y - 1000);
  CHECK(max_dev > 50);

  for (auto s : {dialogue::Strategy::kMinCost, dialogue::Strategy::kDefensive}) {
    const WorldRun nom = RunWorld(w, Mode::kNominal, {s, 30, 3});
    REQUIRE(nom.encounters.size() == 1);
    CHECK(nom.encounters[0].spent <= 60);
    CHECK(nom.violations.empty());
    const WorldRun again = RunWorld(w, Mode::kNominal, {s, 30, 3});
    CHECK(again.trajectories[1].states.back().x == nom.trajectories[1].states.back().x);
  }
  // No budget: the weak opponent tries nothing and the pr motion stands.
  const WorldRun broke = RunWorld(w, Mode::kSubjective, {dialogue::Strategy::kDefensive, 0, 3});
  REQUIRE(broke.encounters.size() == 1);
  CHECK(broke.encounters[0].r_act == w.config.r_max);
}

TEST_CASE("boat trials are deterministic and thread-count independent") {
  BoatTrialConfig cfg;
  cfg.world.length = 8000;
  cfg.world.n_agents = 4;
  cfg.world.min_separation = 800;
  cfg.trials = 2;
  cfg.strategies = {dialogue::Strategy::kMinCost, dialogue::Strategy::kDefensive};
  cfg.record_trajectories = true;
  const auto a = RunBoatTrials(cfg);
  cfg.jobs = 2;
  const auto b = RunBoatTrials(cfg);
  CHECK(BoatSummaryCsv(a.rows) == BoatSummaryCsv(b.rows));
  CHECK(a.trajectory_lines == b.trajectory_lines);
  // Per trial: one objective row plus nominal and subjective per strategy.
  CHECK(a.rows.size() == 2 * (1 + 2 * 2));
  for (const auto& r : a.rows) {
    if (r.mode == Mode::kObjective) {
      CHECK(r.spent == 0);
      CHECK(r.budget_forced == 0);
      CHECK(r.strategy == "-");
    }
    if (r.mode == Mode::kNominal) {
      CHECK(r.losses.omega >= 0);
      CHECK(r.losses.omega_p >= 0);
    }
  }
  const std::string csv = BoatSummaryCsv(a.rows);
  CHECK(csv.rfind("trial,seed,strategy,mode,encounters,", 0) == 0);
  CHECK(a.trajectory_lines.front().find(',') != std::string::npos);
}

}  // namespace
}  // namespace fairdial
