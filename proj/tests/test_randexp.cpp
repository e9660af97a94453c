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
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fairdial/error.hpp"
#include "fairdial/randexp.hpp"

namespace fairdial {
namespace {

using randexp::TrialConfig;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

TrialConfig Small() {
  TrialConfig c;
  c.n_agents = 6;
  c.n_args = 8;
  c.n_attacks = 14;
  c.budget_grid = {0, 10, 20, 40};
  c.trials = 4;
  c.seed = 12;
  return c;
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST_CASE("trial config validation") {
  auto bad = [](auto edit) {
    TrialConfig c = Small();
    edit(c);
    return CodeOf([&] { randexp::Validate(c); });
  };
  CHECK(bad([](TrialConfig&) {}) == static_cast<ErrorCode>(0));
  CHECK(bad([](TrialConfig& c) { c.n_agents = 1; }) == ErrorCode::kInput);
  CHECK(bad([](TrialConfig& c) { c.n_attacks = 3; }) == ErrorCode::kInput);
  CHECK(bad([](TrialConfig& c) { c.n_attacks = 29; }) == ErrorCode::kInput);
  CHECK(bad([](TrialConfig& c) { c.budget_grid = {10, 5}; }) == ErrorCode::kInput);
  CHECK(bad([](TrialConfig& c) { c.budget_grid = {-5, 5}; }) == ErrorCode::kInput);
  CHECK(bad([](TrialConfig& c) { c.strategies.clear(); }) == ErrorCode::kInput);
  CHECK(bad([](TrialConfig& c) { c.trials = 0; }) == ErrorCode::kInput);
  CHECK(bad([](TrialConfig& c) { c.costs = {3, 1}; }) == ErrorCode::kInput);
}

TEST_CASE("trial worlds") {
  const TrialConfig c = Small();
  const auto w = randexp::MakeTrialWorld(c, randexp::TrialSeed(c.seed, 0));
  CHECK(w.culture.base().size() == 8);
  CHECK(w.culture.base().graph().attacks().size() == 14);
  REQUIRE(w.agents.size() == 6);
  for (const auto& a : w.agents) {
    CHECK(a.values.size() == 7);
    for (auto v : a.values) {
      CHECK(v >= 0);
      CHECK(v < c.feature_max);
    }
  }
  CHECK(randexp::TrialSeed(1, 0) != randexp::TrialSeed(1, 1));
  CHECK(randexp::TrialSeed(1, 0) != randexp::TrialSeed(2, 0));
}

TEST_CASE("sweep shape, bounds and determinism") {
  TrialConfig c = Small();
  c.record_transcripts = true;
  const auto a = randexp::RunSweep(c);
  CHECK(a.violations.empty());
  CHECK(a.rows.size() == c.trials * 4 * c.budget_grid.size());
  CHECK(a.unrestricted.size() == c.trials * 4);
  // Grid runs plus the unrestricted run.
  CHECK(a.transcripts.size() == c.trials * 4 * (c.budget_grid.size() + 1) * 6 * 5);
  for (const auto& r : a.rows) {
    CHECK(r.mean_l_sl >= 0);
    CHECK(r.mean_l_sl <= 1);
    CHECK(r.mean_l_ol >= 0);
    CHECK(r.mean_l_ol <= 1);
    CHECK(r.k_norm >= 0);
    CHECK(r.k_norm <= 1);
    // Every motion costs at least 1.
    if (r.g == 0) CHECK(r.mean_l_sl == 1.0);
  }
  for (const auto& r : a.unrestricted) CHECK(r.mean_l_sl == 0.0);

  c.jobs = 3;
  const auto b = randexp::RunSweep(c);
  CHECK(randexp::SweepCsv(a.rows) == randexp::SweepCsv(b.rows));
  CHECK(a.transcripts == b.transcripts);

  const auto lines = Lines(randexp::SweepCsv(a.rows));
  CHECK(lines.front() == randexp::kSweepHeader);
  CHECK(lines.size() == a.rows.size() + 1);
  const auto summary = Lines(randexp::SweepSummaryCsv(a.rows));
  CHECK(summary.front() ==
        "strategy,g,trials,l_SL,l_SL_lo,l_SL_hi,l_OL,l_OL_lo,l_OL_hi,K_norm,K_norm_lo,K_norm_hi");
  CHECK(summary.size() == 1 + 4 * c.budget_grid.size());
  CHECK(randexp::SweepPlotScript().find("sweep_summary.csv") != std::string::npos);
}

TEST_CASE("changing one strategy does not perturb another") {
  TrialConfig c = Small();
  c.strategies = {dialogue::Strategy::kRandom};
  const auto only = randexp::RunSweep(c);
  const auto all = randexp::RunSweep(Small());
  std::vector<randexp::SweepRow> random_rows;
  for (const auto& r : all.rows) {
    if (r.strategy == dialogue::Strategy::kRandom) random_rows.push_back(r);
  }
  CHECK(randexp::SweepCsv(only.rows) == randexp::SweepCsv(random_rows));
}

TEST_CASE("ECDF of required budgets") {
  TrialConfig c = Small();
  const auto e = randexp::RunEcdf(c);
  REQUIRE(e.strategies.size() == 4);
  REQUIRE(e.required.size() == 4);
  for (std::size_t s = 0; s < 4; ++s) {
    CHECK(e.required[s].size() == c.trials * 6 * 5);
    const auto& curve = e.exceeding[s];
    REQUIRE(curve.size() == e.thresholds.size());
    CHECK(curve.back() == 0.0);
    for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i] <= curve[i - 1]);
    CHECK(curve.front() <= 1.0);
  }
  const std::int64_t top = *std::max_element(e.required[0].begin(), e.required[0].end());
  CHECK(e.thresholds.back() >= top);
  const auto lines = Lines(randexp::EcdfCsv(e));
  CHECK(lines.front() == "z,random,min_cost,offensive,defensive");
  CHECK(lines.size() == e.thresholds.size() + 1);
  CHECK(Lines(randexp::EcdfCsv(randexp::RunEcdf(c))) == lines);
}

}  // namespace
}  // namespace fairdial
