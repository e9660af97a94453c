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
// File-producing commands. Each takes a JSON config, writes its outputs into
// a directory together with manifest.json, and can be replayed from that
// manifest.
#ifndef FAIRDIAL_EXPERIMENTS_HPP_
#define FAIRDIAL_EXPERIMENTS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "fairdial/boatsim.hpp"
#include "fairdial/randexp.hpp"

namespace fairdial::experiments {

inline constexpr const char* kVersion = "0.1.0";

struct CommandResult {
  std::vector<std::string> outputs;     // file names inside the directory
  std::vector<std::string> violations;  // invariant failures seen during the run
  std::string summary;                  // one human-readable paragraph
};

// Commands: "culture-random", "culture-boat", "sweep", "ecdf", "boats".
// `config_json` may omit any key; the manifest records the filled-in config.
// Throws Error on bad input or I/O failure.
CommandResult RunCommand(std::string_view command, std::string_view config_json,
                         const std::string& out_dir);

// Replays a manifest. An empty `out_dir` writes next to the manifest.
CommandResult Rerun(const std::string& manifest_path, const std::string& out_dir);

randexp::TrialConfig SweepConfigFromJson(std::string_view text);
std::string SweepConfigToJson(const randexp::TrialConfig& cfg);
boat::BoatTrialConfig BoatConfigFromJson(std::string_view text);
std::string BoatConfigToJson(const boat::BoatTrialConfig& cfg);

}  // namespace fairdial::experiments

#endif  // FAIRDIAL_EXPERIMENTS_HPP_
