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
// Culture files:
//   {"format": "fairdial-culture/1",
//    "arguments": [{"id": 0, "label": "...", "motion": true, "cost": 3,
//                   "values": ["low", "high"], "attacks": [ ... ]}, ...]}
// "cost" applies to every expanded node of the argument. Cultures with
// per-node costs write "x_costs": {"H_pr":..,"H_op":..,"F_pr":..,"F_op":..}
// instead.
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fairdial/culture.hpp"
#include "fairdial/error.hpp"

namespace fairdial::culture {
namespace {

using nlohmann::json;

constexpr const char* kFormat = "fairdial-culture/1";

[[noreturn]] void Bad(const std::string& what) { Fail(ErrorCode::kParse, "culture: " + what); }

std::int64_t Cost(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) Bad(where + " lacks " + key);
  const json& v = j.at(key);
  if (!v.is_number_integer()) Bad(where + "." + key + " must be an integer");
  const auto c = v.get<std::int64_t>();
  if (c < 0) Bad(where + "." + key + " must be non-negative");
  return c;
}

}  // namespace

std::string CultureToJson(const Culture& c) {
  json args = json::array();
  for (ArgIndex i = 0; i < c.size(); ++i) {
    const Argument& a = c.argument(i);
    json ja;
    ja["id"] = i;
    ja["label"] = a.label;
    ja["motion"] = a.is_motion;
    if (a.costs.IsUniform(a.is_motion)) {
      ja["cost"] = a.costs.hypothesis_pr;
    } else {
      json x;
      x["H_pr"] = a.costs.hypothesis_pr;
      x["H_op"] = a.costs.hypothesis_op;
      if (!a.is_motion) {
        x["F_pr"] = a.costs.fact_pr;
        x["F_op"] = a.costs.fact_op;
      }
      ja["x_costs"] = std::move(x);
    }
    if (!a.values.empty()) ja["values"] = a.values;
    json targets = json::array();
    for (af::ArgumentId t : c.graph().targets_of(i)) targets.push_back(t);
    ja["attacks"] = std::move(targets);
    args.push_back(std::move(ja));
  }
  json doc;
  doc["format"] = kFormat;
  doc["arguments"] = std::move(args);
  return doc.dump(2) + "\n";
}

Culture CultureFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Bad(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) Bad("top level must be an object");
  if (doc.contains("format") && doc.at("format") != kFormat) {
    Bad("unsupported format " + doc.at("format").dump());
  }
  if (!doc.contains("arguments") || !doc.at("arguments").is_array()) {
    Bad("missing 'arguments' list");
  }
  const json& list = doc.at("arguments");
  std::vector<Argument> args(list.size());
  std::vector<af::Attack> attacks;
  std::vector<bool> seen(list.size(), false);
  for (const json& ja : list) {
    if (!ja.is_object() || !ja.contains("id") || !ja.at("id").is_number_unsigned()) {
      Bad("every argument needs a non-negative integer 'id'");
    }
    const auto id = ja.at("id").get<std::uint64_t>();
    const std::string where = "argument " + std::to_string(id);
    if (id >= list.size()) Bad(where + ": ids must be dense in [0, n)");
    if (seen[id]) Bad(where + ": duplicate id");
    seen[id] = true;
    Argument& a = args[id];
    if (ja.contains("label")) {
      if (!ja.at("label").is_string()) Bad(where + ".label must be a string");
      a.label = ja.at("label").get<std::string>();
    }
    if (ja.contains("motion")) {
      if (!ja.at("motion").is_boolean()) Bad(where + ".motion must be a boolean");
      a.is_motion = ja.at("motion").get<bool>();
    }
    if (ja.contains("cost") == ja.contains("x_costs")) {
      Bad(where + ": give exactly one of 'cost' or 'x_costs'");
    }
    if (ja.contains("cost")) {
      a.costs = NodeCosts::Uniform(Cost(ja, "cost", where));
      if (a.is_motion) a.costs.fact_pr = a.costs.fact_op = 0;
    } else {
      const json& x = ja.at("x_costs");
      if (!x.is_object()) Bad(where + ".x_costs must be an object");
      a.costs.hypothesis_pr = Cost(x, "H_pr", where);
      a.costs.hypothesis_op = Cost(x, "H_op", where);
      if (!a.is_motion) {
        a.costs.fact_pr = Cost(x, "F_pr", where);
        a.costs.fact_op = Cost(x, "F_op", where);
      }
    }
    if (ja.contains("values")) {
      const json& v = ja.at("values");
      if (!v.is_array()) Bad(where + ".values must be a list");
      for (const json& name : v) {
        if (!name.is_string()) Bad(where + ".values entries must be strings");
        a.values.push_back(name.get<std::string>());
      }
    }
    if (ja.contains("attacks")) {
      const json& t = ja.at("attacks");
      if (!t.is_array()) Bad(where + ".attacks must be a list");
      for (const json& target : t) {
        if (!target.is_number_unsigned() || target.get<std::uint64_t>() >= list.size()) {
          Bad(where + ": attack target out of range");
        }
        attacks.push_back({static_cast<af::ArgumentId>(id), target.get<af::ArgumentId>()});
      }
    }
  }
  try {
    return Culture(std::move(args), std::move(attacks));
  } catch (const Error& e) {
    Bad(e.what());
  }
}

}  // namespace fairdial::culture
