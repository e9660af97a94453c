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
#include "fairdial/randexp.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "fairdial/error.hpp"
#include "fairdial/rng.hpp"
#include "fairdial/stats.hpp"
#include "util.hpp"

namespace fairdial::randexp {
namespace {

using internal::Num;

SweepRow Evaluate(const TrialWorld& w, const fairness::OutcomeMatrix& gt,
                  const fairness::PrecedenceGraph& gt_graph, std::uint64_t trial_seed,
                  std::size_t trial, Strategy s, std::int64_t g, TrialOutput& out,
                  bool record) {
  const auto rs = fairness::ResultMatrix(w.agents, w.culture, s, g, trial_seed);
  const std::size_t n = w.agents.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const auto& r = rs.at(j, k);
      for (const auto& issue :
           dialogue::AuditDialogue(r, w.culture, w.agents[j], w.agents[k], g)) {
        out.violations.push_back("trial " + std::to_string(trial) + " " +
                                 std::string(dialogue::StrategyName(s)) + " g=" +
                                 std::to_string(g) + " (" + std::to_string(j) + "," +
                                 std::to_string(k) + "): " + issue);
      }
      if (record) {
        out.transcripts.push_back(
            dialogue::FormatTranscriptLine(dialogue::MakeRecord(trial, j, k, s, g, r)));
      }
    }
  }
  const auto loss = fairness::GlobalLosses(gt_graph, fairness::MakePrecedenceGraph(rs.matrix));
  SweepRow row;
  row.seed = trial_seed;
  row.strategy = s;
  row.g = g;
  row.mean_l_sl = fairness::MeanSubjectiveLoss(rs);
  row.mean_l_ol = fairness::MeanObjectiveLoss(gt, rs.matrix);
  row.k_raw = loss.raw;
  row.k_norm = loss.normalised;
  return row;
}

std::string Row(const SweepRow& r) {
  return std::to_string(r.seed) + ',' + std::string(dialogue::StrategyName(r.strategy)) + ',' +
         std::to_string(r.g) + ',' + Num(r.mean_l_sl) + ',' + Num(r.mean_l_ol) + ',' +
         Num(boost::rational_cast<double>(r.k_raw)) + ',' + Num(r.k_norm);
}

}  // namespace

void Validate(const TrialConfig& cfg) {
  if (cfg.n_agents < 2) Fail(ErrorCode::kInput, "need at least 2 agents");
  if (cfg.n_args < 2) Fail(ErrorCode::kInput, "need at least 2 arguments");
  if (cfg.n_attacks < cfg.n_args - 1 || cfg.n_attacks > cfg.n_args * (cfg.n_args - 1) / 2) {
    Fail(ErrorCode::kInput, "attack count infeasible for the argument count");
  }
  if (cfg.costs.lo < 0 || cfg.costs.hi < cfg.costs.lo) {
    Fail(ErrorCode::kInput, "invalid cost range");
  }
  if (cfg.feature_max < 1) Fail(ErrorCode::kInput, "feature_max must be positive");
  if (!std::is_sorted(cfg.budget_grid.begin(), cfg.budget_grid.end())) {
    Fail(ErrorCode::kInput, "budget grid must be sorted ascending");
  }
  if (std::any_of(cfg.budget_grid.begin(), cfg.budget_grid.end(),
                  [](std::int64_t g) { return g < 0; })) {
    Fail(ErrorCode::kInput, "budgets must be non-negative");
  }
  if (cfg.strategies.empty()) Fail(ErrorCode::kInput, "no strategies selected");
  if (cfg.trials == 0) Fail(ErrorCode::kInput, "need at least one trial");
}

std::uint64_t TrialSeed(std::uint64_t seed, std::size_t trial) {
  return DeriveSeed(seed, {0x7472ULL, trial});
}

TrialWorld MakeTrialWorld(const TrialConfig& cfg, std::uint64_t trial_seed) {
  auto c = culture::GenerateRandomCulture(cfg.n_args, cfg.n_attacks, cfg.costs,
                                          DeriveSeed(trial_seed, {1}));
  TrialWorld w{culture::Expand(c), {}};
  Rng rng(DeriveSeed(trial_seed, {2}));
  for (std::size_t i = 0; i < cfg.n_agents; ++i) {
    w.agents.push_back(culture::SampleRandomAgent(c.feature_count(), cfg.feature_max, rng));
  }
  return w;
}

TrialOutput RunTrial(const TrialConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = TrialSeed(cfg.seed, trial);
  const TrialWorld w = MakeTrialWorld(cfg, seed);
  const auto gt = fairness::GroundTruthMatrix(w.agents, w.culture);
  const auto gt_graph = fairness::MakePrecedenceGraph(gt);
  TrialOutput out;
  for (Strategy s : cfg.strategies) {
    for (std::int64_t g : cfg.budget_grid) {
      out.rows.push_back(
          Evaluate(w, gt, gt_graph, seed, trial, s, g, out, cfg.record_transcripts));
    }
    if (cfg.unrestricted) {
      out.unrestricted.push_back(Evaluate(w, gt, gt_graph, seed, trial, s,
                                          w.culture.total_cost(), out,
                                          cfg.record_transcripts));
    }
  }
  return out;
}

SweepOutput RunSweep(const TrialConfig& cfg) {
  Validate(cfg);
  std::vector<TrialOutput> per_trial(cfg.trials);
  internal::ParallelFor(cfg.trials, cfg.jobs,
                        [&](std::size_t t) { per_trial[t] = RunTrial(cfg, t); });
  SweepOutput out;
  for (auto& t : per_trial) {
    auto move_into = [](auto& dst, auto& src) {
      dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                 std::make_move_iterator(src.end()));
    };
    move_into(out.rows, t.rows);
    move_into(out.unrestricted, t.unrestricted);
    move_into(out.transcripts, t.transcripts);
    move_into(out.violations, t.violations);
  }
  return out;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const auto& r : rows) out += Row(r) + "\n";
  return out;
}

std::string SweepSummaryCsv(const std::vector<SweepRow>& rows, double level) {
  struct Acc {
    std::vector<double> sl, ol, k;
  };
  std::map<std::pair<int, std::int64_t>, Acc> groups;
  for (const auto& r : rows) {
    auto& a = groups[{static_cast<int>(r.strategy), r.g}];
    a.sl.push_back(r.mean_l_sl);
    a.ol.push_back(r.mean_l_ol);
    a.k.push_back(r.k_norm);
  }
  std::string out =
      "strategy,g,trials,l_SL,l_SL_lo,l_SL_hi,l_OL,l_OL_lo,l_OL_hi,K_norm,K_norm_lo,K_norm_hi\n";
  for (const auto& [key, a] : groups) {
    out += std::string(dialogue::StrategyName(static_cast<Strategy>(key.first))) + ',' +
           std::to_string(key.second) + ',' + std::to_string(a.sl.size());
    for (const auto* v : {&a.sl, &a.ol, &a.k}) {
      const auto ci = stats::NormalInterval(*v, level);
      out += ',' + Num(stats::Mean(*v)) + ',' + Num(ci.lo) + ',' + Num(ci.hi);
    }
    out += '\n';
  }
  return out;
}

std::string SweepPlotScript() {
  return R"(# gnuplot -e "dir='out'" plots.gp
if (!exists("dir")) dir = "."
set datafile separator ","
set terminal pngcairo size 1000,420
set key top right
set xlabel "privacy budget g"
strategies = "random min_cost offensive defensive"
sel(s) = sprintf("< awk -F, '$1==\"%s\"' %s/sweep_summary.csv", s, dir)

set output dir."/sweep_l_sl.png"
set ylabel "mean subjective local loss"
plot for [s in strategies] sel(s) using 2:4:5:6 with yerrorlines title s

set output dir."/sweep_k_norm.png"
set ylabel "normalised DAG dissimilarity"
plot for [s in strategies] sel(s) using 2:10:11:12 with yerrorlines title s
)";
}

EcdfOutput RunEcdf(const TrialConfig& cfg) {
  Validate(cfg);
  const std::size_t ns = cfg.strategies.size();
  std::vector<std::vector<std::vector<std::int64_t>>> per_trial(
      cfg.trials, std::vector<std::vector<std::int64_t>>(ns));
  internal::ParallelFor(cfg.trials, cfg.jobs, [&](std::size_t t) {
    const std::uint64_t seed = TrialSeed(cfg.seed, t);
    const TrialWorld w = MakeTrialWorld(cfg, seed);
    const std::int64_t g = w.culture.total_cost();
    for (std::size_t si = 0; si < ns; ++si) {
      const auto rs = fairness::ResultMatrix(w.agents, w.culture, cfg.strategies[si], g, seed);
      for (std::size_t j = 0; j < w.agents.size(); ++j) {
        for (std::size_t k = 0; k < w.agents.size(); ++k) {
          if (j == k) continue;
          const auto& r = rs.at(j, k);
          if (r.termination != dialogue::Termination::kConvinced) {
            Fail(ErrorCode::kInvariant, "unrestricted dialogue ended budget-forced");
          }
          per_trial[t][si].push_back(std::max(r.spent[0], r.spent[1]));
        }
      }
    }
  });
  EcdfOutput e;
  e.strategies = cfg.strategies;
  e.required.resize(ns);
  std::int64_t top = 0;
  for (auto& trial : per_trial) {
    for (std::size_t si = 0; si < ns; ++si) {
      for (std::int64_t z : trial[si]) top = std::max(top, z);
      e.required[si].insert(e.required[si].end(), trial[si].begin(), trial[si].end());
    }
  }
  for (std::int64_t z = 0; z <= top; ++z) e.thresholds.push_back(z);
  for (std::size_t si = 0; si < ns; ++si) {
    e.exceeding.push_back(stats::ExceedanceCurve(e.required[si], e.thresholds));
  }
  return e;
}

std::string EcdfCsv(const EcdfOutput& e) {
  std::string out = "z";
  for (Strategy s : e.strategies) out += "," + std::string(dialogue::StrategyName(s));
  out += '\n';
  for (std::size_t i = 0; i < e.thresholds.size(); ++i) {
    out += std::to_string(e.thresholds[i]);
    for (const auto& curve : e.exceeding) out += ',' + Num(curve[i]);
    out += '\n';
  }
  return out;
}

std::string EcdfPlotScript() {
  return R"(# gnuplot -e "dir='out'" plots.gp
if (!exists("dir")) dir = "."
set datafile separator ","
set terminal pngcairo size 800,420
set output dir."/ecdf.png"
set key autotitle columnhead top right
set xlabel "privacy budget z"
set ylabel "fraction of dialogues needing more than z"
plot for [c=2:5] dir."/ecdf.csv" using 1:c with lines
)";
}

}  // namespace fairdial::randexp
