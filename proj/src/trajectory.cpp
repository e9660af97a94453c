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
#include <limits>

#include "fairdial/boatsim.hpp"
#include "fairdial/error.hpp"
#include "fairdial/rng.hpp"
#include "util.hpp"

namespace fairdial::boat {
namespace {

using internal::Num;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double Trapezoid(const std::vector<double>& t, const std::vector<double>& v, std::size_t lo,
                 std::size_t hi) {
  double area = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    area += 0.5 * (std::fabs(v[i]) + std::fabs(v[i + 1])) * (t[i + 1] - t[i]);
  }
  return area;
}

Comfort MeanComfort(const WorldRun& run, const WorldConfig& cfg) {
  Comfort sum;
  for (const Trajectory& tr : run.trajectories) {
    const Comfort c = ComfortMetrics(MakeTelemetry(tr, cfg.dt), tr, cfg.boat.max_speed);
    sum.lat_acc += c.lat_acc;
    sum.yaw_rate += c.yaw_rate;
    sum.lat_jerk += c.lat_jerk;
  }
  const double n = static_cast<double>(run.trajectories.size());
  return {sum.lat_acc / n, sum.yaw_rate / n, sum.lat_jerk / n};
}

BoatSummaryRow Summarise(std::size_t trial, std::uint64_t seed, std::string strategy, Mode mode,
                         const WorldRun& run, const WorldConfig& cfg) {
  BoatSummaryRow row;
  row.trial = trial;
  row.seed = seed;
  row.strategy = std::move(strategy);
  row.mode = mode;
  row.encounters = run.encounters.size();
  row.min_separation = std::numeric_limits<double>::infinity();
  for (const Encounter& e : run.encounters) {
    if (e.termination == dialogue::Termination::kBudgetForced) ++row.budget_forced;
    row.spent += e.spent;
    row.min_separation = std::min(row.min_separation, e.min_distance);
  }
  for (const Trajectory& tr : run.trajectories) row.arrived += tr.arrived ? 1 : 0;
  row.comfort = MeanComfort(run, cfg);
  row.losses = {kNaN, kNaN, kNaN};
  return row;
}

void AppendTrajectories(std::vector<std::string>& out, std::size_t trial, Mode mode,
                        std::string_view strategy, const WorldRun& run, const WorldConfig& cfg,
                        std::size_t stride) {
  for (std::size_t a = 0; a < run.trajectories.size(); ++a) {
    const Trajectory& tr = run.trajectories[a];
    const Telemetry tel = MakeTelemetry(tr, cfg.dt);
    for (std::size_t i = 0; i < tr.states.size(); i += stride) {
      const BoatState& s = tr.states[i];
      out.push_back(std::to_string(trial) + ',' + std::string(ModeName(mode)) + ',' +
                    std::string(strategy) + ',' + std::to_string(a) + ',' + Num(s.t) + ',' +
                    Num(s.x) + ',' + Num(s.y) + ',' + Num(s.heading) + ',' + Num(s.speed()) +
                    ',' + Num(tel.lat_acc[i]) + ',' + Num(tel.yaw_rate[i]) + ',' +
                    Num(tel.lat_jerk[i]));
    }
  }
}

}  // namespace

double DiscreteFrechet(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) Fail(ErrorCode::kInput, "Frechet distance of an empty curve");
  const std::size_t m = b.size();
  std::vector<double> prev(m), cur(m);
  auto dist = [&](std::size_t i, std::size_t j) {
    return std::hypot(a[i].x - b[j].x, a[i].y - b[j].y);
  };
  prev[0] = dist(0, 0);
  for (std::size_t j = 1; j < m; ++j) prev[j] = std::max(prev[j - 1], dist(0, j));
  for (std::size_t i = 1; i < a.size(); ++i) {
    cur[0] = std::max(prev[0], dist(i, 0));
    for (std::size_t j = 1; j < m; ++j) {
      cur[j] = std::max(std::min({prev[j], prev[j - 1], cur[j - 1]}), dist(i, j));
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

std::vector<Point> Positions(const Trajectory& t, std::size_t stride) {
  if (stride == 0) stride = 1;
  std::vector<Point> out;
  for (std::size_t i = 0; i < t.states.size(); i += stride) {
    out.push_back({t.states[i].x, t.states[i].y});
  }
  if (!t.states.empty() && (t.states.size() - 1) % stride != 0) {
    out.push_back({t.states.back().x, t.states.back().y});
  }
  return out;
}

Telemetry MakeTelemetry(const Trajectory& tr, double dt) {
  Telemetry tel;
  const std::size_t n = tr.states.size();
  tel.t.reserve(n);
  for (const BoatState& s : tr.states) {
    tel.t.push_back(s.t);
    tel.lat_acc.push_back(s.lat_acc);
    tel.yaw_rate.push_back(s.yaw_rate);
  }
  tel.lat_jerk.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) tel.lat_jerk[i] = (tel.lat_acc[i] - tel.lat_acc[i - 1]) / dt;
  return tel;
}

Comfort ComfortMetrics(const Telemetry& tel, const Trajectory& tr, double max_speed,
                       double cruise_fraction) {
  const double cruise = cruise_fraction * max_speed;
  std::size_t lo = tr.states.size(), hi = 0;
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    if (tr.states[i].speed() >= cruise) {
      lo = std::min(lo, i);
      hi = i;
    }
  }
  if (lo >= hi) return {};
  return {Trapezoid(tel.t, tel.lat_acc, lo, hi), Trapezoid(tel.t, tel.yaw_rate, lo, hi),
          Trapezoid(tel.t, tel.lat_jerk, lo, hi)};
}

TrajectoryLosses GlobalTrajectoryLosses(const Trajectory& nominal, const Trajectory& subjective,
                                        const Trajectory& objective, std::size_t stride,
                                        bool literal_gap) {
  const auto n = Positions(nominal, stride);
  const auto s = Positions(subjective, stride);
  const auto o = Positions(objective, stride);
  TrajectoryLosses l;
  l.omega = DiscreteFrechet(n, o);
  l.omega_p = DiscreteFrechet(n, s);
  l.subjectivity_gap = literal_gap ? l.omega_p : DiscreteFrechet(s, o);
  return l;
}

BoatTrialsOutput RunBoatTrials(const BoatTrialConfig& cfg) {
  Validate(cfg.world);
  if (cfg.trials == 0) Fail(ErrorCode::kInput, "need at least one boat trial");
  if (cfg.g < 0) Fail(ErrorCode::kInput, "privacy budget must be non-negative");
  if (cfg.strategies.empty() || cfg.modes.empty()) {
    Fail(ErrorCode::kInput, "need at least one strategy and one mode");
  }
  auto wants = [&](Mode m) {
    return std::find(cfg.modes.begin(), cfg.modes.end(), m) != cfg.modes.end();
  };
  const bool all_modes = wants(Mode::kNominal) && wants(Mode::kSubjective) &&
                         wants(Mode::kObjective);

  std::vector<BoatTrialsOutput> per_trial(cfg.trials);
  internal::ParallelFor(cfg.trials, cfg.jobs, [&](std::size_t t) {
    BoatTrialsOutput& out = per_trial[t];
    const std::uint64_t seed = DeriveSeed(cfg.seed, {0x626f6174ULL, t});
    const World world = InitParade(cfg.world, seed);
    const std::size_t stride = std::max<std::size_t>(cfg.trajectory_stride, 1);
    WorldRun objective;
    if (wants(Mode::kObjective)) {
      objective = RunWorld(world, Mode::kObjective, {});
      out.rows.push_back(Summarise(t, seed, "-", Mode::kObjective, objective, cfg.world));
      if (cfg.record_trajectories) {
        AppendTrajectories(out.trajectory_lines, t, Mode::kObjective, "-", objective, cfg.world,
                           stride);
      }
    }
    for (dialogue::Strategy s : cfg.strategies) {
      const std::string name(dialogue::StrategyName(s));
      const DisputeSettings ds{s, cfg.g, DeriveSeed(seed, {static_cast<std::uint64_t>(s)})};
      WorldRun nominal, subjective;
      std::size_t nominal_row = 0;
      if (wants(Mode::kNominal)) {
        nominal = RunWorld(world, Mode::kNominal, ds);
        nominal_row = out.rows.size();
        out.rows.push_back(Summarise(t, seed, name, Mode::kNominal, nominal, cfg.world));
      }
      if (wants(Mode::kSubjective)) {
        subjective = RunWorld(world, Mode::kSubjective, ds);
        out.rows.push_back(Summarise(t, seed, name, Mode::kSubjective, subjective, cfg.world));
      }
      if (all_modes) {
        TrajectoryLosses mean;
        const std::size_t n = world.agents.size();
        for (std::size_t a = 0; a < n; ++a) {
          const auto l = GlobalTrajectoryLosses(nominal.trajectories[a],
                                                subjective.trajectories[a],
                                                objective.trajectories[a], cfg.frechet_stride,
                                                cfg.literal_gap);
          mean.omega += l.omega / static_cast<double>(n);
          mean.omega_p += l.omega_p / static_cast<double>(n);
          mean.subjectivity_gap += l.subjectivity_gap / static_cast<double>(n);
        }
        out.rows[nominal_row].losses = mean;
      }
      for (const WorldRun* r : {&nominal, &subjective}) {
        for (const auto& v : r->violations) {
          out.violations.push_back("trial " + std::to_string(t) + " " + name + ": " + v);
        }
      }
      if (cfg.record_trajectories) {
        if (wants(Mode::kNominal)) {
          AppendTrajectories(out.trajectory_lines, t, Mode::kNominal, name, nominal, cfg.world,
                             stride);
        }
        if (wants(Mode::kSubjective)) {
          AppendTrajectories(out.trajectory_lines, t, Mode::kSubjective, name, subjective,
                             cfg.world, stride);
        }
      }
    }
  });
  BoatTrialsOutput out;
  for (auto& t : per_trial) {
    out.rows.insert(out.rows.end(), t.rows.begin(), t.rows.end());
    out.trajectory_lines.insert(out.trajectory_lines.end(),
                                std::make_move_iterator(t.trajectory_lines.begin()),
                                std::make_move_iterator(t.trajectory_lines.end()));
    out.violations.insert(out.violations.end(), t.violations.begin(), t.violations.end());
  }
  return out;
}

std::string BoatSummaryCsv(const std::vector<BoatSummaryRow>& rows) {
  std::string out =
      "trial,seed,strategy,mode,encounters,budget_forced,spent,arrived,min_separation,"
      "lat_acc_auc,yaw_rate_auc,lat_jerk_auc,omega,omega_p,subjectivity_gap\n";
  auto opt = [](double v) { return std::isnan(v) ? std::string() : Num(v); };
  for (const auto& r : rows) {
    out += std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' + r.strategy + ',' +
           std::string(ModeName(r.mode)) + ',' + std::to_string(r.encounters) + ',' +
           std::to_string(r.budget_forced) + ',' + std::to_string(r.spent) + ',' +
           std::to_string(r.arrived) + ',' +
           (std::isfinite(r.min_separation) ? Num(r.min_separation) : std::string()) + ',' +
           Num(r.comfort.lat_acc) + ',' + Num(r.comfort.yaw_rate) + ',' +
           Num(r.comfort.lat_jerk) + ',' + opt(r.losses.omega) + ',' + opt(r.losses.omega_p) +
           ',' + opt(r.losses.subjectivity_gap) + '\n';
  }
  return out;
}

std::string BoatPlotScript() {
  return R"(# gnuplot -e "dir='out'" plots.gp
if (!exists("dir")) dir = "."
set datafile separator ","
set datafile missing ""
set terminal pngcairo size 900,420
set style data boxplot
set style boxplot nooutliers
set xtics ("random" 0, "min_cost" 1, "offensive" 2, "defensive" 3)
idx(s) = s eq "random" ? 0 : s eq "min_cost" ? 1 : s eq "offensive" ? 2 : s eq "defensive" ? 3 : NaN
nominal(col) = sprintf("< awk -F, 'NR==1 || $4==\"nominal\"' %s/boats_summary.csv", dir)

set output dir."/boats_omega_p.png"
set ylabel "Frechet(nominal, subjective) [m]"
plot nominal(0) using (idx(strcol(3))):14 notitle

set output dir."/boats_lat_acc.png"
set ylabel "lateral acceleration AUC"
plot nominal(0) using (idx(strcol(3))):10 notitle

set output dir."/boats_jerk.png"
set ylabel "lateral jerk AUC"
plot nominal(0) using (idx(strcol(3))):12 notitle
)";
}

}  // namespace fairdial::boat
