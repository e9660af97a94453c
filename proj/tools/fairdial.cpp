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
// fairdial command-line tool. Talks to the library only through fairdial.h.
//
// Exit codes: 0 success, 1 runtime fault, 2 usage error, 3 invariant violation.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairdial/fairdial.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFault = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

int ExitFor(fd_status s) {
  switch (s) {
    case FD_OK: return kExitOk;
    case FD_ERR_INPUT:
    case FD_ERR_NULL: return kExitUsage;
    case FD_ERR_INVARIANT: return kExitInvariant;
    default: return kExitFault;
  }
}

int Report(fd_status s) {
  if (s != FD_OK) {
    std::cerr << "fairdial: " << fd_status_name(s) << " error: " << fd_last_error() << "\n";
  }
  return ExitFor(s);
}

struct StringDeleter {
  void operator()(char* s) const { fd_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

bool ReadFile(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// --seed, else FAIRDIAL_SEED, else 1.
std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FAIRDIAL_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("FAIRDIAL_SEED", "not an unsigned integer: " + std::string(env));
  }
  return 1;
}

// Loads --config JSON (if any) as the base object that flags then override.
json BaseConfig(const std::string& config_path) {
  if (config_path.empty()) return json::object();
  std::string text;
  if (!ReadFile(config_path, text)) {
    throw CLI::ValidationError("--config", "cannot read " + config_path);
  }
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw CLI::ValidationError("--config", "not a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw CLI::ValidationError("--config", e.what());
  }
}

int RunFileCommand(const std::string& command, const json& config, const std::string& out) {
  char* raw = nullptr;
  const fd_status s = fd_run_command(command.c_str(), config.dump().c_str(), out.c_str(), &raw);
  CString summary(raw);
  if (summary) std::cout << summary.get() << "\n";
  return Report(s);
}

struct Options {
  // Shared.
  std::string out = ".";
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::optional<unsigned> trials;
  std::vector<std::string> strategies;
  // culture / sweep / ecdf.
  std::optional<unsigned> agents, args, attacks;
  std::optional<std::int64_t> cost_min, cost_max;
  std::optional<std::int64_t> budget_max;
  std::int64_t budget_step = 5;
  bool transcripts = false;
  bool no_unrestricted = false;
  // af.
  std::string af_file;
  std::optional<unsigned> sceptical;
  bool oracle = false;
  // dispute.
  std::string culture_file;
  std::string pr, op;
  std::string strategy = "defensive";
  std::int64_t budget = 30;
  bool as_json = false;
  // boats.
  std::string mode = "all";
  std::optional<std::int64_t> g;
  std::string world;
  bool trajectories = false;
  bool literal_gap = false;
  // rerun.
  std::string manifest;
};

void SetIf(json& j, const char* key, const auto& v) {
  if (v) j[key] = *v;
}

int CmdCultureRandom(const Options& o) {
  json c = BaseConfig(o.config);
  SetIf(c, "args", o.args);
  SetIf(c, "attacks", o.attacks);
  SetIf(c, "cost_min", o.cost_min);
  SetIf(c, "cost_max", o.cost_max);
  c["seed"] = ResolveSeed(o.seed);
  return RunFileCommand("culture-random", c, o.out);
}

int CmdCultureBoat(const Options& o) {
  return RunFileCommand("culture-boat", json::object(), o.out);
}

int CmdAfSolve(const Options& o) {
  std::string text;
  if (!ReadFile(o.af_file, text)) {
    std::cerr << "fairdial: cannot read " << o.af_file << "\n";
    return kExitFault;
  }
  fd_framework* raw = nullptr;
  if (fd_status s = fd_framework_parse(text.c_str(), &raw); s != FD_OK) return Report(s);
  std::unique_ptr<fd_framework, void (*)(fd_framework*)> af(raw, fd_framework_free);
  fd_extensions* ext_raw = nullptr;
  if (fd_status s = fd_framework_preferred(af.get(), o.oracle ? 1 : 0, &ext_raw); s != FD_OK) {
    return Report(s);
  }
  std::unique_ptr<fd_extensions, void (*)(fd_extensions*)> ext(ext_raw, fd_extensions_free);
  std::cout << "arguments " << fd_framework_size(af.get()) << ", attacks "
            << fd_framework_attack_count(af.get()) << "\n";
  const std::size_t n = fd_extensions_count(ext.get());
  std::cout << "preferred extensions: " << n << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t* m = nullptr;
    std::size_t k = 0;
    fd_extensions_get(ext.get(), i, &m, &k);
    std::cout << "  {";
    for (std::size_t t = 0; t < k; ++t) std::cout << (t ? " " : "") << m[t];
    std::cout << "}\n";
  }
  if (o.sceptical) {
    int accepted = 0;
    if (fd_status s = fd_framework_sceptical(af.get(), *o.sceptical, &accepted); s != FD_OK) {
      return Report(s);
    }
    std::cout << "argument " << *o.sceptical << ": "
              << (accepted ? "sceptically accepted" : "not sceptically accepted") << "\n";
  }
  return kExitOk;
}

int CmdDispute(const Options& o) {
  fd_culture* raw = nullptr;
  fd_status s;
  if (o.culture_file == "boat") {
    s = fd_culture_boat(&raw);
  } else {
    std::string text;
    if (!ReadFile(o.culture_file, text)) {
      std::cerr << "fairdial: cannot read " << o.culture_file << "\n";
      return kExitFault;
    }
    s = fd_culture_from_json(text.c_str(), &raw);
  }
  if (s != FD_OK) return Report(s);
  std::unique_ptr<fd_culture, void (*)(fd_culture*)> c(raw, fd_culture_free);
  fd_dialogue* d_raw = nullptr;
  s = fd_dispute_run(c.get(), o.pr.c_str(), o.op.c_str(), o.strategy.c_str(), o.budget,
                     ResolveSeed(o.seed), &d_raw);
  if (s != FD_OK) return Report(s);
  std::unique_ptr<fd_dialogue, void (*)(fd_dialogue*)> d(d_raw, fd_dialogue_free);
  char* text = nullptr;
  s = fd_dialogue_render(d.get(), o.as_json ? 1 : 0, &text);
  CString owned(text);
  if (s != FD_OK) return Report(s);
  std::cout << owned.get();
  return kExitOk;
}

json SweepConfig(const Options& o) {
  json c = BaseConfig(o.config);
  SetIf(c, "agents", o.agents);
  SetIf(c, "args", o.args);
  SetIf(c, "attacks", o.attacks);
  SetIf(c, "cost_min", o.cost_min);
  SetIf(c, "cost_max", o.cost_max);
  SetIf(c, "trials", o.trials);
  SetIf(c, "jobs", o.jobs);
  if (!o.strategies.empty()) c["strategies"] = o.strategies;
  c["seed"] = o.seed || !c.contains("seed") ? json(ResolveSeed(o.seed)) : c["seed"];
  return c;
}

int CmdSweep(const Options& o) {
  json c = SweepConfig(o);
  if (o.budget_max) {
    if (o.budget_step <= 0 || *o.budget_max < 0) {
      throw CLI::ValidationError("--budget-step", "needs a positive step and non-negative max");
    }
    std::vector<std::int64_t> grid;
    for (std::int64_t g = 0; g <= *o.budget_max; g += o.budget_step) grid.push_back(g);
    c["budgets"] = grid;
  }
  if (o.transcripts) c["transcripts"] = true;
  if (o.no_unrestricted) c["unrestricted"] = false;
  return RunFileCommand("sweep", c, o.out);
}

int CmdEcdf(const Options& o) { return RunFileCommand("ecdf", SweepConfig(o), o.out); }

int CmdBoats(const Options& o) {
  json c = BaseConfig(o.config);
  if (!o.world.empty()) {
    std::string text;
    if (!ReadFile(o.world, text)) throw CLI::ValidationError("--world", "cannot read " + o.world);
    try {
      c["world"] = json::parse(text);
    } catch (const json::parse_error& e) {
      throw CLI::ValidationError("--world", e.what());
    }
  }
  if (!o.strategies.empty()) c["strategies"] = o.strategies;
  SetIf(c, "g", o.g);
  SetIf(c, "trials", o.trials);
  SetIf(c, "jobs", o.jobs);
  if (o.mode == "all") {
    if (!c.contains("modes")) c["modes"] = {"nominal", "subjective", "objective"};
  } else {
    c["modes"] = {o.mode};
  }
  if (o.trajectories) c["trajectories"] = true;
  if (o.literal_gap) c["literal_gap"] = true;
  c["seed"] = o.seed || !c.contains("seed") ? json(ResolveSeed(o.seed)) : c["seed"];
  return RunFileCommand("boats", c, o.out);
}

int CmdRerun(const Options& o) {
  char* raw = nullptr;
  const fd_status s =
      fd_manifest_rerun(o.manifest.c_str(), o.out.empty() ? nullptr : o.out.c_str(), &raw);
  CString summary(raw);
  if (summary) std::cout << summary.get() << "\n";
  return Report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairdial: privacy-budgeted argumentation dialogues"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fd_version()));
  Options o;
  int code = kExitOk;
  auto strategy_check = CLI::IsMember({"random", "min_cost", "offensive", "defensive"});

  auto* culture = app.add_subcommand("culture", "Generate or export cultures");
  culture->require_subcommand(1);
  auto* crand = culture->add_subcommand("random", "Random index-ordered culture");
  crand->add_option("--args", o.args, "Arguments (default 16)");
  crand->add_option("--attacks", o.attacks, "Attacks (default 48)");
  crand->add_option("--cost-min", o.cost_min, "Smallest node cost (default 1)");
  crand->add_option("--cost-max", o.cost_max, "Largest node cost (default 20)");
  crand->add_option("--seed", o.seed, "Seed (falls back to FAIRDIAL_SEED)");
  crand->add_option("--config", o.config, "JSON config file");
  crand->add_option("--out", o.out, "Output directory");
  crand->callback([&] { code = CmdCultureRandom(o); });
  auto* cboat = culture->add_subcommand("export-boat", "Write the builtin boat culture");
  cboat->add_option("--out", o.out, "Output directory");
  cboat->callback([&] { code = CmdCultureBoat(o); });

  auto* af = app.add_subcommand("af", "Argumentation framework tools");
  af->require_subcommand(1);
  auto* solve = af->add_subcommand("solve", "Preferred extensions of a trivial-graph file");
  solve->add_option("file", o.af_file, "Framework file")->required()->check(CLI::ExistingFile);
  solve->add_option("--sceptical", o.sceptical, "Report sceptical acceptance of this argument");
  solve->add_flag("--oracle", o.oracle, "Use exhaustive enumeration (<= 20 arguments)");
  solve->callback([&] { code = CmdAfSolve(o); });

  auto* dispute = app.add_subcommand("dispute", "Trace one dialogue");
  dispute->add_option("--culture", o.culture_file, "Culture JSON file, or 'boat'")->required();
  dispute->add_option("--pr", o.pr, "Proponent features, comma-separated")->required();
  dispute->add_option("--op", o.op, "Opponent features, comma-separated")->required();
  dispute->add_option("--strategy", o.strategy, "Strategy")->check(strategy_check);
  dispute->add_option("--budget", o.budget, "Privacy budget per player")
      ->check(CLI::NonNegativeNumber);
  dispute->add_option("--seed", o.seed, "Seed for the random strategy");
  dispute->add_flag("--json", o.as_json, "Machine-readable output");
  dispute->callback([&] { code = CmdDispute(o); });

  auto add_population = [&](CLI::App* sub) {
    sub->add_option("--agents", o.agents, "Agents per trial (default 16)");
    sub->add_option("--args", o.args, "Culture arguments (default 16)");
    sub->add_option("--attacks", o.attacks, "Culture attacks (default 48)");
    sub->add_option("--cost-min", o.cost_min, "Smallest node cost");
    sub->add_option("--cost-max", o.cost_max, "Largest node cost");
    sub->add_option("--trials", o.trials, "Trials");
    sub->add_option("--strategies", o.strategies, "Strategies to run")->check(strategy_check);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed (falls back to FAIRDIAL_SEED)");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--config", o.config, "JSON config file; flags override it");
    sub->add_option("--out", o.out, "Output directory");
  };

  auto* sweep = app.add_subcommand("sweep", "Budget sweep over random cultures");
  add_population(sweep);
  add_common(sweep);
  sweep->add_option("--budget-max", o.budget_max, "Largest budget in the grid (default 60)");
  sweep->add_option("--budget-step", o.budget_step, "Grid step (default 5)");
  sweep->add_flag("--transcripts", o.transcripts, "Also write transcripts.csv");
  sweep->add_flag("--no-unrestricted", o.no_unrestricted, "Skip the unlimited-budget run");
  sweep->callback([&] { code = CmdSweep(o); });

  auto* ecdf = app.add_subcommand("ecdf", "Budgets required to avoid forced concessions");
  add_population(ecdf);
  add_common(ecdf);
  ecdf->callback([&] { code = CmdEcdf(o); });

  auto* boats = app.add_subcommand("boats", "Boat-traffic trials");
  boats->add_option("--strategy,--strategies", o.strategies, "Strategies to run")
      ->check(strategy_check);
  boats->add_option("--budget", o.g, "Privacy budget per agent (default 30)")
      ->check(CLI::NonNegativeNumber);
  boats->add_option("--trials", o.trials, "Trials");
  boats->add_option("--mode", o.mode, "Mode")
      ->check(CLI::IsMember({"nominal", "subjective", "objective", "all"}));
  boats->add_option("--world", o.world, "World config JSON file");
  boats->add_flag("--trajectories", o.trajectories, "Also write trajectories.csv");
  boats->add_flag("--literal-gap", o.literal_gap,
                  "Subjectivity gap as Frechet(nominal, subjective)");
  add_common(boats);
  boats->callback([&] { code = CmdBoats(o); });

  auto* rerun = app.add_subcommand("rerun", "Replay a manifest.json");
  rerun->add_option("manifest", o.manifest, "Manifest path")
      ->required()
      ->check(CLI::ExistingFile);
  rerun->add_option("--out", o.out, "Output directory (default: next to the manifest)");
  rerun->callback([&] { code = CmdRerun(o); });
  // rerun defaults to the manifest's own directory.
  rerun->preparse_callback([&](std::size_t) { o.out.clear(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  return code;
}
