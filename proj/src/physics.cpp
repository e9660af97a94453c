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

#include <json.hpp>

#include "fairdial/boatsim.hpp"
#include "fairdial/error.hpp"

namespace fairdial::boat {
namespace {

using nlohmann::json;

template <typename T>
void Read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("world config key '") + key + "': " + e.what());
  }
}

void CheckKeys(const json& j, std::initializer_list<const char*> known, const char* where) {
  for (const auto& [k, v] : j.items()) {
    if (std::find_if(known.begin(), known.end(), [&](const char* s) { return k == s; }) ==
        known.end()) {
      Fail(ErrorCode::kParse, std::string("unknown ") + where + " key '" + k + "'");
    }
  }
}

}  // namespace

double BoatState::speed() const { return std::hypot(surge, sway); }

BoatState StepPhysics(const BoatState& s, const Controls& c, const BoatParams& p, double dt) {
  const double thrust = std::clamp(c.throttle, -1.0, 1.0) * p.max_thrust;
  const double r = s.yaw_rate;
  const double du = (thrust - p.drag() * s.surge * std::fabs(s.surge)) / p.mass + r * s.sway;
  const double slip = -p.lateral_grip * s.sway;
  const double dw = -r * s.surge + slip;
  const double cmd = std::clamp(c.yaw_rate_cmd, -p.max_yaw_rate, p.max_yaw_rate);

  BoatState n = s;
  const double vx = s.surge * std::cos(s.heading) - s.sway * std::sin(s.heading);
  const double vy = s.surge * std::sin(s.heading) + s.sway * std::cos(s.heading);
  n.x += vx * dt;
  n.y += vy * dt;
  n.heading = std::remainder(s.heading + r * dt, 2 * M_PI);
  n.surge = s.surge + du * dt;
  n.sway = s.sway + dw * dt;
  n.yaw_rate = r + (cmd - r) * std::min(1.0, dt / p.yaw_lag);
  n.lat_acc = slip;
  n.t = s.t + dt;
  const double v = n.speed();
  if (v > p.max_speed) {
    n.surge *= p.max_speed / v;
    n.sway *= p.max_speed / v;
  }
  if (!std::isfinite(n.x) || !std::isfinite(n.y) || !std::isfinite(n.heading) ||
      !std::isfinite(n.surge) || !std::isfinite(n.sway) || !std::isfinite(n.yaw_rate)) {
    Fail(ErrorCode::kFault, "non-finite boat state at t=" + std::to_string(n.t));
  }
  return n;
}

double ActivationRadius(double z, double g, double r_max, double r_crit) {
  if (z < 0 || g < 0 || z > 2 * g) {
    Fail(ErrorCode::kInput, "activation radius needs 0 <= z <= 2g");
  }
  if (g == 0) return r_max;
  return r_max - z / (2 * g) * (r_max - r_crit);
}

void Validate(const WorldConfig& c) {
  auto need = [](bool ok, const char* what) {
    if (!ok) Fail(ErrorCode::kInput, std::string("world config: ") + what);
  };
  need(c.dt > 0, "dt must be positive");
  need(c.r_crit > 0 && c.r_crit < c.r_max, "need 0 < r_crit < r_max");
  need(c.n_agents >= 2 && c.n_agents % 2 == 0, "need an even number of at least 2 agents");
  need(c.length > 2 * c.start_margin && c.width > 2 * c.lane_spread, "arena too small");
  const double room = c.length - 2 * c.start_margin;
  need(c.min_separation * static_cast<double>(c.n_agents - 1) < room,
       "agents do not fit with the required separation");
  need(c.boat.mass > 0 && c.boat.max_thrust > 0 && c.boat.max_speed > 0, "bad boat mass/thrust");
  need(c.boat.lateral_grip > 0 && c.boat.max_yaw_rate > 0 && c.boat.yaw_lag > 0,
       "bad boat steering parameters");
  need(c.max_time > 0 && c.arrive_radius > 0, "bad time or arrival limits");
}

WorldConfig WorldConfigFromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kParse, std::string("world config: ") + e.what());
  }
  if (!j.is_object()) Fail(ErrorCode::kParse, "world config must be an object");
  CheckKeys(j,
            {"length", "width", "n_agents", "dt", "r_max", "r_crit", "start_margin",
             "min_separation", "lane_spread", "arrive_radius", "max_time", "boat", "field"},
            "world");
  WorldConfig c;
  Read(j, "length", c.length);
  Read(j, "width", c.width);
  Read(j, "n_agents", c.n_agents);
  Read(j, "dt", c.dt);
  Read(j, "r_max", c.r_max);
  Read(j, "r_crit", c.r_crit);
  Read(j, "start_margin", c.start_margin);
  Read(j, "min_separation", c.min_separation);
  Read(j, "lane_spread", c.lane_spread);
  Read(j, "arrive_radius", c.arrive_radius);
  Read(j, "max_time", c.max_time);
  if (j.contains("boat")) {
    const json& b = j.at("boat");
    CheckKeys(b,
              {"mass", "max_thrust", "max_speed", "lateral_grip", "max_yaw_rate", "yaw_lag",
               "heading_gain"},
              "boat");
    Read(b, "mass", c.boat.mass);
    Read(b, "max_thrust", c.boat.max_thrust);
    Read(b, "max_speed", c.boat.max_speed);
    Read(b, "lateral_grip", c.boat.lateral_grip);
    Read(b, "max_yaw_rate", c.boat.max_yaw_rate);
    Read(b, "yaw_lag", c.boat.yaw_lag);
    Read(b, "heading_gain", c.boat.heading_gain);
  }
  if (j.contains("field")) {
    const json& f = j.at("field");
    CheckKeys(f, {"attraction", "repulsion", "starboard_bias", "wall_margin", "wall_gain"},
              "field");
    Read(f, "attraction", c.field.attraction);
    Read(f, "repulsion", c.field.repulsion);
    Read(f, "starboard_bias", c.field.starboard_bias);
    Read(f, "wall_margin", c.field.wall_margin);
    Read(f, "wall_gain", c.field.wall_gain);
  }
  Validate(c);
  return c;
}

std::string WorldConfigToJson(const WorldConfig& c) {
  json j = {{"length", c.length},
            {"width", c.width},
            {"n_agents", c.n_agents},
            {"dt", c.dt},
            {"r_max", c.r_max},
            {"r_crit", c.r_crit},
            {"start_margin", c.start_margin},
            {"min_separation", c.min_separation},
            {"lane_spread", c.lane_spread},
            {"arrive_radius", c.arrive_radius},
            {"max_time", c.max_time}};
  j["boat"] = {{"mass", c.boat.mass},
               {"max_thrust", c.boat.max_thrust},
               {"max_speed", c.boat.max_speed},
               {"lateral_grip", c.boat.lateral_grip},
               {"max_yaw_rate", c.boat.max_yaw_rate},
               {"yaw_lag", c.boat.yaw_lag},
               {"heading_gain", c.boat.heading_gain}};
  j["field"] = {{"attraction", c.field.attraction},
                {"repulsion", c.field.repulsion},
                {"starboard_bias", c.field.starboard_bias},
                {"wall_margin", c.field.wall_margin},
                {"wall_gain", c.field.wall_gain}};
  return j.dump(2) + "\n";
}

}  // namespace fairdial::boat
