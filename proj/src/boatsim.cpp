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
#include "fairdial/boatsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fairdial/boat_culture.hpp"
#include "fairdial/error.hpp"
#include "fairdial/fairness.hpp"
#include "fairdial/rng.hpp"

namespace fairdial::boat {
namespace {

const culture::ExpandedCulture& BoatExpansion() {
  static const culture::ExpandedCulture xc(BuiltinBoatCulture());
  return xc;
}

struct PairState {
  bool triggered = false;
  bool field_on = false;
  double prev = std::numeric_limits<double>::infinity();
  std::size_t encounter = 0;
};

struct Vec {
  double x = 0, y = 0;
};

}  // namespace

std::string_view ModeName(Mode m) {
  switch (m) {
    case Mode::kNominal: return "nominal";
    case Mode::kSubjective: return "subjective";
    case Mode::kObjective: return "objective";
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view s) {
  for (Mode m : {Mode::kNominal, Mode::kSubjective, Mode::kObjective}) {
    if (ModeName(m) == s) return m;
  }
  return std::nullopt;
}

World InitParade(const WorldConfig& cfg, std::uint64_t seed) {
  Validate(cfg);
  const std::size_t n = cfg.n_agents;
  Rng rng(DeriveSeed(seed, {0x70617261ULL}));
  // Uniform spacings: sorted uniform offsets plus the mandatory gaps.
  const double slack =
      cfg.length - 2 * cfg.start_margin - cfg.min_separation * static_cast<double>(n - 1);
  std::vector<double> u(n);
  for (double& v : u) v = rng.Uniform(0.0, slack);
  std::sort(u.begin(), u.end());
  std::vector<double> xs(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = cfg.start_margin + u[k] + cfg.min_separation * static_cast<double>(k);
  }
  // Shuffle which agent id gets which slot so ids carry no geometry.
  std::vector<std::size_t> slot(n);
  std::iota(slot.begin(), slot.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(slot[i], slot[rng.Below(i + 1)]);

  World w{cfg, std::vector<Agent>(n)};
  const double mid = cfg.width / 2;
  for (std::size_t i = 0; i < n; ++i) {
    Agent& a = w.agents[i];
    const std::size_t k = slot[i];
    a.start_x = xs[k];
    a.goal_x = k < n / 2 ? cfg.length - cfg.start_margin : cfg.start_margin;
    a.start_y = mid + rng.Uniform(-cfg.lane_spread, cfg.lane_spread);
    a.goal_y = mid + rng.Uniform(-cfg.lane_spread, cfg.lane_spread);
    a.description = SampleBoatAgent(DeriveSeed(seed, {0x64657363ULL, i}));
  }
  return w;
}

WorldRun RunWorld(const World& world, Mode mode, const DisputeSettings& d) {
  const WorldConfig& cfg = world.config;
  const BoatParams& bp = cfg.boat;
  const FieldParams& fp = cfg.field;
  const std::size_t n = world.agents.size();
  const auto& xc = BoatExpansion();
  if (mode != Mode::kObjective && d.g < 0) Fail(ErrorCode::kInput, "negative budget");

  WorldRun run;
  run.trajectories.resize(n);
  std::vector<BoatState> state(n);
  std::vector<bool> active(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    const Agent& a = world.agents[i];
    state[i].x = a.start_x;
    state[i].y = a.start_y;
    state[i].heading = std::atan2(a.goal_y - a.start_y, a.goal_x - a.start_x);
    run.trajectories[i].states.push_back(state[i]);
  }
  std::vector<PairState> pairs(n * n);
  auto pair = [&](std::size_t i, std::size_t j) -> PairState& {
    return pairs[std::min(i, j) * n + std::max(i, j)];
  };
  const double brake_acc = bp.max_thrust / bp.mass;
  const auto steps = static_cast<std::size_t>(std::ceil(cfg.max_time / cfg.dt));

  for (std::size_t step = 0; step < steps; ++step) {
    // Encounters and field activation.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[i] || !active[j]) continue;
        PairState& p = pair(i, j);
        const double dist = std::hypot(state[i].x - state[j].x, state[i].y - state[j].y);
        if (!p.triggered && p.prev > cfg.r_max && dist <= cfg.r_max) {
          p.triggered = true;
          p.encounter = run.encounters.size();
          Encounter e;
          const Agent& ai = world.agents[i];
          const Agent& aj = world.agents[j];
          const bool i_west = ai.start_x <= aj.start_x;
          e.pr = i_west ? i : j;
          e.op = i_west ? j : i;
          e.t = state[i].t;
          const auto& dpr = world.agents[e.pr].description;
          const auto& dop = world.agents[e.op].description;
          Role winner;
          if (mode == Mode::kObjective) {
            winner = fairness::ObjectiveOutcome(xc, dpr, dop);
            e.r_act = cfg.r_max;
          } else {
            const auto r = dialogue::RunDispute(xc, dpr, dop, d.strategy, d.g,
                                                DeriveSeed(d.seed, {e.pr, e.op}));
            for (const auto& issue : dialogue::AuditDialogue(r, xc, dpr, dop, d.g)) {
              run.violations.push_back("dialogue (" + std::to_string(e.pr) + "," +
                                       std::to_string(e.op) + "): " + issue);
            }
            winner = r.winner;
            e.spent = r.spent[0] + r.spent[1];
            e.termination = r.termination;
            e.moves = r.transcript.size();
            e.r_act = ActivationRadius(static_cast<double>(e.spent), static_cast<double>(d.g),
                                       cfg.r_max, cfg.r_crit);
            e.loser_ignores =
                mode == Mode::kSubjective && r.termination == dialogue::Termination::kBudgetForced;
          }
          e.winner = winner == Role::kPr ? e.pr : e.op;
          e.loser = winner == Role::kPr ? e.op : e.pr;
          e.min_distance = dist;
          run.encounters.push_back(e);
        }
        if (p.triggered) {
          Encounter& e = run.encounters[p.encounter];
          e.min_distance = std::min(e.min_distance, dist);
          if (dist <= e.r_act) p.field_on = true;
        }
        p.prev = dist;
      }
    }
    // Guidance and physics.
    bool any = false;
    std::vector<BoatState> next = state;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      any = true;
      const Agent& a = world.agents[i];
      const BoatState& s = state[i];
      const Vec to_goal{a.goal_x - s.x, a.goal_y - s.y};
      const double goal_dist = std::hypot(to_goal.x, to_goal.y);
      Vec f{fp.attraction * to_goal.x / goal_dist, fp.attraction * to_goal.y / goal_dist};
      auto repel = [&](std::size_t o, double radius) {
        const double dx = s.x - state[o].x, dy = s.y - state[o].y;
        const double dist = std::max(std::hypot(dx, dy), 1.0);
        if (dist >= radius) return;
        const double mag = fp.repulsion * (1 / dist - 1 / radius);
        // The tangential term circles the obstacle anticlockwise, which keeps
        // it on the avoiding boat's port side when passing: a turn to starboard.
        const Vec away{dx / dist, dy / dist};
        f.x += mag * (away.x - fp.starboard_bias * away.y);
        f.y += mag * (away.y + fp.starboard_bias * away.x);
      };
      for (std::size_t o = 0; o < n; ++o) {
        if (o == i || !active[o]) continue;
        const PairState& p = pair(i, o);
        if (!p.triggered) continue;
        const Encounter& e = run.encounters[p.encounter];
        if (e.loser == i && p.field_on && !e.loser_ignores) repel(o, cfg.r_max);
        if (e.winner == i) repel(o, cfg.r_crit);
      }
      if (s.y < fp.wall_margin) f.y += fp.wall_gain * (fp.wall_margin - s.y) / fp.wall_margin;
      const double top = cfg.width - fp.wall_margin;
      if (s.y > top) f.y -= fp.wall_gain * (s.y - top) / fp.wall_margin;

      Controls c;
      const double err = std::remainder(std::atan2(f.y, f.x) - s.heading, 2 * M_PI);
      c.yaw_rate_cmd = bp.heading_gain * err;
      const double stop = s.surge * s.surge / (2 * brake_acc) + cfg.arrive_radius;
      c.throttle = goal_dist > stop ? 1.0 : (s.surge > 2 ? -1.0 : 0.2);
      next[i] = StepPhysics(s, c, bp, cfg.dt);

      const double ahead = (next[i].x - a.goal_x) * (a.goal_x > a.start_x ? 1 : -1);
      Trajectory& tr = run.trajectories[i];
      tr.states.push_back(next[i]);
      if (std::hypot(a.goal_x - next[i].x, a.goal_y - next[i].y) <= cfg.arrive_radius ||
          ahead >= 0) {
        active[i] = false;
        tr.arrived = true;
      }
    }
    state = std::move(next);
    if (!any) break;
  }
  return run;
}

}  // namespace fairdial::boat
