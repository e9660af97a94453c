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
#include "fairdial/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fairdial/boat_culture.hpp"
#include "fairdial/error.hpp"

namespace fairdial::experiments {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json ParseObject(std::string_view text, const char* what) {
  if (text.empty()) return json::object();
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) Fail(ErrorCode::kParse, std::string(what) + " must be a JSON object");
  return j;
}

void CheckKeys(const json& j, std::initializer_list<const char*> known, const char* what) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* s : known) ok = ok || k == s;
    if (!ok) Fail(ErrorCode::kInput, std::string("unknown ") + what + " key '" + k + "'");
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    Fail(ErrorCode::kInput, std::string("config key '") + key + "': " + e.what());
  }
}

std::vector<dialogue::Strategy> ReadStrategies(const json& j) {
  std::vector<dialogue::Strategy> out;
  if (!j.is_array()) Fail(ErrorCode::kInput, "'strategies' must be a list");
  for (const json& s : j) {
    const auto st = s.is_string() ? dialogue::ParseStrategy(s.get<std::string>()) : std::nullopt;
    if (!st) Fail(ErrorCode::kInput, "unknown strategy " + s.dump());
    out.push_back(*st);
  }
  return out;
}

json StrategyList(const std::vector<dialogue::Strategy>& v) {
  json out = json::array();
  for (auto s : v) out.push_back(std::string(dialogue::StrategyName(s)));
  return out;
}

struct Writer {
  fs::path dir;
  CommandResult* result;

  void Put(const std::string& name, const std::string& content) {
    std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
    if (!f) Fail(ErrorCode::kIo, "cannot write " + (dir / name).string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) Fail(ErrorCode::kIo, "write failed for " + (dir / name).string());
    result->outputs.push_back(name);
  }
};

std::string JoinLines(std::string_view header, const std::vector<std::string>& lines) {
  std::string out(header);
  out += '\n';
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

json CultureRandomConfig(const json& in) {
  CheckKeys(in, {"args", "attacks", "cost_min", "cost_max", "seed"}, "culture");
  json c = {{"args", 16}, {"attacks", 48}, {"cost_min", 1}, {"cost_max", 20}, {"seed", 1}};
  for (const auto& [k, v] : in.items()) c[k] = v;
  for (const char* k : {"args", "attacks", "cost_min", "cost_max", "seed"}) {
    if (!c[k].is_number_integer()) Fail(ErrorCode::kInput, std::string("'") + k + "' must be an integer");
  }
  return c;
}

}  // namespace

randexp::TrialConfig SweepConfigFromJson(std::string_view text) {
  const json j = ParseObject(text, "sweep config");
  CheckKeys(j,
            {"agents", "args", "attacks", "cost_min", "cost_max", "feature_max", "budgets",
             "strategies", "trials", "seed", "jobs", "unrestricted", "transcripts"},
            "sweep");
  randexp::TrialConfig c;
  Read(j, "agents", c.n_agents);
  Read(j, "args", c.n_args);
  Read(j, "attacks", c.n_attacks);
  Read(j, "cost_min", c.costs.lo);
  Read(j, "cost_max", c.costs.hi);
  Read(j, "feature_max", c.feature_max);
  Read(j, "budgets", c.budget_grid);
  if (j.contains("strategies")) c.strategies = ReadStrategies(j.at("strategies"));
  Read(j, "trials", c.trials);
  Read(j, "seed", c.seed);
  Read(j, "jobs", c.jobs);
  Read(j, "unrestricted", c.unrestricted);
  Read(j, "transcripts", c.record_transcripts);
  randexp::Validate(c);
  return c;
}

std::string SweepConfigToJson(const randexp::TrialConfig& c) {
  json j = {{"agents", c.n_agents},        {"args", c.n_args},
            {"attacks", c.n_attacks},      {"cost_min", c.costs.lo},
            {"cost_max", c.costs.hi},      {"feature_max", c.feature_max},
            {"budgets", c.budget_grid},    {"strategies", StrategyList(c.strategies)},
            {"trials", c.trials},          {"seed", c.seed},
            {"jobs", c.jobs},              {"unrestricted", c.unrestricted},
            {"transcripts", c.record_transcripts}};
  return j.dump();
}

boat::BoatTrialConfig BoatConfigFromJson(std::string_view text) {
  const json j = ParseObject(text, "boat config");
  CheckKeys(j,
            {"world", "strategies", "g", "trials", "seed", "jobs", "frechet_stride",
             "literal_gap", "trajectories", "trajectory_stride", "modes"},
            "boats");
  boat::BoatTrialConfig c;
  if (j.contains("world")) c.world = boat::WorldConfigFromJson(j.at("world").dump());
  if (j.contains("strategies")) c.strategies = ReadStrategies(j.at("strategies"));
  Read(j, "g", c.g);
  Read(j, "trials", c.trials);
  Read(j, "seed", c.seed);
  Read(j, "jobs", c.jobs);
  Read(j, "frechet_stride", c.frechet_stride);
  Read(j, "literal_gap", c.literal_gap);
  Read(j, "trajectories", c.record_trajectories);
  Read(j, "trajectory_stride", c.trajectory_stride);
  if (j.contains("modes")) {
    c.modes.clear();
    if (!j.at("modes").is_array()) Fail(ErrorCode::kInput, "'modes' must be a list");
    for (const json& m : j.at("modes")) {
      const auto mode = m.is_string() ? boat::ParseMode(m.get<std::string>()) : std::nullopt;
      if (!mode) Fail(ErrorCode::kInput, "unknown mode " + m.dump());
      if (std::find(c.modes.begin(), c.modes.end(), *mode) == c.modes.end()) {
        c.modes.push_back(*mode);
      }
    }
  }
  boat::Validate(c.world);
  if (c.trials == 0) Fail(ErrorCode::kInput, "need at least one boat trial");
  if (c.g < 0) Fail(ErrorCode::kInput, "privacy budget must be non-negative");
  if (c.frechet_stride == 0 || c.trajectory_stride == 0) {
    Fail(ErrorCode::kInput, "strides must be positive");
  }
  if (c.strategies.empty() || c.modes.empty()) {
    Fail(ErrorCode::kInput, "need at least one strategy and one mode");
  }
  return c;
}

std::string BoatConfigToJson(const boat::BoatTrialConfig& c) {
  json modes = json::array();
  for (auto m : c.modes) modes.push_back(std::string(boat::ModeName(m)));
  json j = {{"world", json::parse(boat::WorldConfigToJson(c.world))},
            {"strategies", StrategyList(c.strategies)},
            {"g", c.g},
            {"trials", c.trials},
            {"seed", c.seed},
            {"jobs", c.jobs},
            {"frechet_stride", c.frechet_stride},
            {"literal_gap", c.literal_gap},
            {"trajectories", c.record_trajectories},
            {"trajectory_stride", c.trajectory_stride},
            {"modes", modes}};
  return j.dump();
}

CommandResult RunCommand(std::string_view command, std::string_view config_json,
                         const std::string& out_dir) {
  const auto started = std::chrono::steady_clock::now();
  const json input = ParseObject(config_json, "config");
  CommandResult result;
  json config;
  std::uint64_t seed = 0;
  std::error_code ec;
  fs::create_directories(out_dir.empty() ? "." : out_dir, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot create " + out_dir + ": " + ec.message());
  Writer out{out_dir.empty() ? fs::path(".") : fs::path(out_dir), &result};

  if (command == "culture-random") {
    config = CultureRandomConfig(input);
    seed = config["seed"].get<std::uint64_t>();
    const auto lo = config["cost_min"].get<std::int64_t>();
    const auto hi = config["cost_max"].get<std::int64_t>();
    const auto args = config["args"].get<std::int64_t>();
    const auto attacks = config["attacks"].get<std::int64_t>();
    if (args < 0 || attacks < 0) Fail(ErrorCode::kInput, "counts must be non-negative");
    const auto c = culture::GenerateRandomCulture(static_cast<std::size_t>(args),
                                                  static_cast<std::size_t>(attacks), {lo, hi},
                                                  seed);
    out.Put("culture.json", culture::CultureToJson(c));
    result.summary = "random culture with " + std::to_string(args) + " arguments and " +
                     std::to_string(attacks) + " attacks";
  } else if (command == "culture-boat") {
    CheckKeys(input, {}, "culture");
    config = json::object();
    out.Put("culture.json", culture::CultureToJson(boat::BuiltinBoatCulture()));
    result.summary = "boat culture with 14 properties";
  } else if (command == "sweep" || command == "ecdf") {
    const auto cfg = SweepConfigFromJson(input.dump());
    config = json::parse(SweepConfigToJson(cfg));
    seed = cfg.seed;
    if (command == "sweep") {
      const auto r = randexp::RunSweep(cfg);
      out.Put("sweep.csv", randexp::SweepCsv(r.rows));
      if (cfg.unrestricted) out.Put("sweep_unrestricted.csv", randexp::SweepCsv(r.unrestricted));
      out.Put("sweep_summary.csv", randexp::SweepSummaryCsv(r.rows));
      if (cfg.record_transcripts) {
        out.Put("transcripts.csv", JoinLines(dialogue::kTranscriptHeader, r.transcripts));
      }
      out.Put("plots.gp", randexp::SweepPlotScript());
      result.violations = r.violations;
      result.summary = std::to_string(cfg.trials) + " trials, " + std::to_string(r.rows.size()) +
                       " sweep rows";
    } else {
      const auto e = randexp::RunEcdf(cfg);
      out.Put("ecdf.csv", randexp::EcdfCsv(e));
      std::string req = "strategy,required\n";
      for (std::size_t s = 0; s < e.strategies.size(); ++s) {
        const std::string name(dialogue::StrategyName(e.strategies[s]));
        for (std::int64_t z : e.required[s]) req += name + ',' + std::to_string(z) + '\n';
      }
      out.Put("ecdf_required.csv", req);
      out.Put("plots.gp", randexp::EcdfPlotScript());
      result.summary = std::to_string(cfg.trials) + " trials, thresholds 0.." +
                       std::to_string(e.thresholds.back());
    }
  } else if (command == "boats") {
    const auto cfg = BoatConfigFromJson(input.dump());
    config = json::parse(BoatConfigToJson(cfg));
    seed = cfg.seed;
    const auto r = boat::RunBoatTrials(cfg);
    out.Put("boats_summary.csv", boat::BoatSummaryCsv(r.rows));
    if (cfg.record_trajectories) {
      out.Put("trajectories.csv", JoinLines(boat::kTrajectoryHeader, r.trajectory_lines));
    }
    out.Put("world.json", boat::WorldConfigToJson(cfg.world));
    out.Put("plots.gp", boat::BoatPlotScript());
    result.violations = r.violations;
    result.summary = std::to_string(cfg.trials) + " boat trials, " +
                     std::to_string(r.rows.size()) + " summary rows";
  } else {
    Fail(ErrorCode::kInput, "unknown command '" + std::string(command) + "'");
  }

  json files = json::array();
  for (const auto& name : result.outputs) {
    files.push_back({{"file", name}, {"bytes", fs::file_size(out.dir / name)}});
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  json manifest = {{"tool", "fairdial"},
                   {"version", kVersion},
                   {"command", std::string(command)},
                   {"config", config},
                   {"seed", seed},
                   {"outputs", files},
                   {"violations", result.violations.size()},
                   {"wall_clock_seconds", secs}};
  std::ofstream mf(out.dir / "manifest.json", std::ios::binary | std::ios::trunc);
  if (!mf) Fail(ErrorCode::kIo, "cannot write manifest in " + out.dir.string());
  mf << manifest.dump(2) << '\n';
  return result;
}

CommandResult Rerun(const std::string& manifest_path, const std::string& out_dir) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot read manifest " + manifest_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const json m = ParseObject(buf.str(), "manifest");
  if (!m.contains("command") || !m.at("command").is_string() || !m.contains("config")) {
    Fail(ErrorCode::kParse, "manifest lacks command or config");
  }
  const std::string dir =
      out_dir.empty() ? fs::path(manifest_path).parent_path().string() : out_dir;
  return RunCommand(m.at("command").get<std::string>(), m.at("config").dump(), dir);
}

}  // namespace fairdial::experiments
