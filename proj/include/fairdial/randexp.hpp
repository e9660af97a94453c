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
// Randomised-culture experiments: budget sweeps and required-budget ECDFs.
// Each trial draws a fresh culture and population from its own seed, so
// trials can run on any number of workers and merge by trial index.
#ifndef FAIRDIAL_RANDEXP_HPP_
#define FAIRDIAL_RANDEXP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fairdial/culture.hpp"
#include "fairdial/dialogue.hpp"
#include "fairdial/fairness.hpp"

namespace fairdial::randexp {

using dialogue::Strategy;

struct TrialConfig {
  std::size_t n_agents = 16;
  std::size_t n_args = 16;
  std::size_t n_attacks = 48;
  culture::CostRange costs{1, 20};
  // Feature values are drawn from [0, feature_max).
  std::int64_t feature_max = 100;
  std::vector<std::int64_t> budget_grid = {0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
  std::vector<Strategy> strategies = {dialogue::kAllStrategies.begin(),
                                      dialogue::kAllStrategies.end()};
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  // Also run every strategy with g equal to the total culture cost.
  bool unrestricted = true;
  bool record_transcripts = false;
};

// Throws Error(kInput).
void Validate(const TrialConfig& cfg);

std::uint64_t TrialSeed(std::uint64_t seed, std::size_t trial);

struct TrialWorld {
  culture::ExpandedCulture culture;
  std::vector<culture::FeatureDescription> agents;
};

TrialWorld MakeTrialWorld(const TrialConfig& cfg, std::uint64_t trial_seed);

struct SweepRow {
  std::uint64_t seed = 0;  // trial seed
  Strategy strategy = Strategy::kRandom;
  std::int64_t g = 0;
  double mean_l_sl = 0;
  double mean_l_ol = 0;
  fairness::Rational k_raw;
  double k_norm = 0;
};

struct TrialOutput {
  std::vector<SweepRow> rows;           // grid order: strategy-major, then g
  std::vector<SweepRow> unrestricted;   // one per strategy
  std::vector<std::string> transcripts; // only when requested
  std::vector<std::string> violations;  // audit failures
};

TrialOutput RunTrial(const TrialConfig& cfg, std::size_t trial);

struct SweepOutput {
  std::vector<SweepRow> rows;
  std::vector<SweepRow> unrestricted;
  std::vector<std::string> transcripts;
  std::vector<std::string> violations;
};

SweepOutput RunSweep(const TrialConfig& cfg);

inline constexpr const char* kSweepHeader = "seed,strategy,g,mean_l_SL,mean_l_OL,K_raw,K_norm";

std::string SweepCsv(const std::vector<SweepRow>& rows);
// Per (strategy, g): means with 99% normal intervals over trials.
std::string SweepSummaryCsv(const std::vector<SweepRow>& rows, double level = 0.99);
std::string SweepPlotScript();

// Per-dialogue budget needed to finish unrestricted play: the larger of the
// two players' spends.
struct EcdfOutput {
  std::vector<std::int64_t> thresholds;  // 0 .. largest observed requirement
  std::vector<Strategy> strategies;
  std::vector<std::vector<std::int64_t>> required;  // per strategy, per dialogue
  std::vector<std::vector<double>> exceeding;       // per strategy, per threshold
};

EcdfOutput RunEcdf(const TrialConfig& cfg);

std::string EcdfCsv(const EcdfOutput& e);
std::string EcdfPlotScript();

}  // namespace fairdial::randexp

#endif  // FAIRDIAL_RANDEXP_HPP_
