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
#include "fairdial/fairdial.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fairdial/af.hpp"
#include "fairdial/boat_culture.hpp"
#include "fairdial/boatsim.hpp"
#include "fairdial/culture.hpp"
#include "fairdial/dialogue.hpp"
#include "fairdial/error.hpp"
#include "fairdial/experiments.hpp"
#include "fairdial/fairness.hpp"
#include "fairdial/stats.hpp"

using namespace fairdial;  // NOLINT

struct fd_framework {
  af::Framework af;
};

struct fd_extensions {
  std::vector<af::Extension> sets;
};

struct fd_culture {
  explicit fd_culture(culture::Culture c) : xc(std::move(c)) {}
  culture::ExpandedCulture xc;
};

struct fd_dialogue {
  std::shared_ptr<const culture::ExpandedCulture> xc;
  dialogue::DialogueResult result;
  std::int64_t g = 0;
  culture::FeatureDescription desc[2];
};

namespace {

thread_local std::string g_last_error;

fd_status SetError(fd_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs `fn` and maps exceptions onto status codes.
template <typename Fn>
fd_status Guard(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return FD_OK;
  } catch (const Error& e) {
    return SetError(static_cast<fd_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return SetError(FD_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return SetError(FD_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return SetError(FD_ERR_FAULT, e.what());
  } catch (...) {
    return SetError(FD_ERR_FAULT, "unknown exception");
  }
}

char* Dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

#define FD_REQUIRE(ptr)                                          \
  do {                                                           \
    if ((ptr) == nullptr) {                                      \
      g_last_error = "null argument: " #ptr;                     \
      return FD_ERR_NULL;                                        \
    }                                                            \
  } while (0)

std::vector<boat::Point> Curve(const double* xy, std::size_t n) {
  std::vector<boat::Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {xy[2 * i], xy[2 * i + 1]};
  return pts;
}

// "label=value" for the feature a move discloses, or empty for motions.
std::string Revealed(const fd_dialogue& d, const dialogue::Move& m) {
  const auto& xc = *d.xc;
  const auto f = xc.feature_of(m.arg);
  if (!f) return "";
  const auto& a = xc.base().argument(xc.arg(m.arg).origin);
  const std::int64_t v = d.desc[Index(m.player)].values[*f];
  const bool named = v >= 0 && static_cast<std::size_t>(v) < a.values.size();
  return a.label + "=" + (named ? a.values[v] : std::to_string(v));
}

std::string RenderText(const fd_dialogue& d) {
  const auto& xc = *d.xc;
  const auto& r = d.result;
  std::string out;
  std::int64_t spent[2] = {0, 0};
  for (std::size_t i = 0; i < r.transcript.size(); ++i) {
    const auto& m = r.transcript[i];
    spent[Index(m.player)] += m.cost;
    out += std::to_string(i + 1) + ". " + std::string(RoleName(m.player)) + " " +
           (i == 0 ? "opens with " : "rebuts with ") + xc.Label(m.arg) + "  cost " +
           std::to_string(m.cost) + ", spent " + std::to_string(spent[Index(m.player)]) + "/" +
           std::to_string(d.g);
    const std::string rev = Revealed(d, m);
    if (!rev.empty()) out += ", reveals " + rev;
    out += "\n";
  }
  const Role loser = r.loser();
  out += std::string(RoleName(loser)) + " has no ";
  out += r.termination == dialogue::Termination::kBudgetForced ? "affordable" : "legal";
  out += " rebuttal; " + std::string(RoleName(r.winner)) + " wins (" +
         std::string(dialogue::TerminationName(r.termination)) + ")\n";
  return out;
}

std::string RenderJson(const fd_dialogue& d) {
  const auto& xc = *d.xc;
  const auto& r = d.result;
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : r.transcript) {
    moves.push_back({{"player", RoleName(m.player)},
                     {"arg", m.arg},
                     {"label", xc.Label(m.arg)},
                     {"cost", m.cost},
                     {"reveals", Revealed(d, m)}});
  }
  nlohmann::json j = {{"winner", RoleName(r.winner)},
                      {"termination", dialogue::TerminationName(r.termination)},
                      {"budget", d.g},
                      {"spent", {{"pr", r.spent[0]}, {"op", r.spent[1]}}},
                      {"moves", moves}};
  return j.dump(2) + "\n";
}

const char* StatusName(fd_status s) {
  switch (s) {
    case FD_OK: return "ok";
    case FD_ERR_INPUT: return "input";
    case FD_ERR_PARSE: return "parse";
    case FD_ERR_CAPACITY: return "capacity";
    case FD_ERR_IO: return "io";
    case FD_ERR_INVARIANT: return "invariant";
    case FD_ERR_DEGENERATE: return "degenerate";
    case FD_ERR_FAULT: return "fault";
    case FD_ERR_NULL: return "null";
  }
  return "unknown";
}

}  // namespace

extern "C" {

const char* fd_version(void) { return experiments::kVersion; }

const char* fd_status_name(fd_status status) { return StatusName(status); }

const char* fd_last_error(void) { return g_last_error.c_str(); }

void fd_string_free(char* s) { std::free(s); }

fd_status fd_framework_create(size_t n_args, const uint32_t* attackers, const uint32_t* targets,
                              size_t n_attacks, fd_framework** out) {
  FD_REQUIRE(out);
  if (n_attacks > 0) {
    FD_REQUIRE(attackers);
    FD_REQUIRE(targets);
  }
  return Guard([&] {
    std::vector<af::Attack> att(n_attacks);
    for (std::size_t i = 0; i < n_attacks; ++i) att[i] = {attackers[i], targets[i]};
    *out = new fd_framework{af::Framework(n_args, std::move(att))};
  });
}

fd_status fd_framework_parse(const char* text, fd_framework** out) {
  FD_REQUIRE(text);
  FD_REQUIRE(out);
  return Guard([&] { *out = new fd_framework{af::ParseFramework(text)}; });
}

fd_status fd_framework_emit(const fd_framework* af, char** out) {
  FD_REQUIRE(af);
  FD_REQUIRE(out);
  return Guard([&] { *out = Dup(af::EmitFramework(af->af)); });
}

size_t fd_framework_size(const fd_framework* af) { return af ? af->af.size() : 0; }

size_t fd_framework_attack_count(const fd_framework* af) {
  return af ? af->af.attacks().size() : 0;
}

void fd_framework_free(fd_framework* af) { delete af; }

fd_status fd_framework_is_admissible(const fd_framework* af, const uint32_t* members, size_t n,
                                     int* admissible) {
  FD_REQUIRE(af);
  FD_REQUIRE(admissible);
  if (n > 0) FD_REQUIRE(members);
  return Guard([&] {
    std::vector<af::ArgumentId> set(members, members + n);
    for (auto x : set) {
      if (x >= af->af.size()) Fail(ErrorCode::kInput, "argument id out of range");
    }
    *admissible = af::IsAdmissible(set, af->af) ? 1 : 0;
  });
}

fd_status fd_framework_preferred(const fd_framework* af, int oracle, fd_extensions** out) {
  FD_REQUIRE(af);
  FD_REQUIRE(out);
  return Guard([&] {
    const auto path = oracle ? af::SolverPath::kExhaustive : af::SolverPath::kLabelling;
    *out = new fd_extensions{af::PreferredExtensions(af->af, path)};
  });
}

fd_status fd_framework_sceptical(const fd_framework* af, uint32_t x, int* accepted) {
  FD_REQUIRE(af);
  FD_REQUIRE(accepted);
  return Guard([&] {
    if (x >= af->af.size()) Fail(ErrorCode::kInput, "argument id out of range");
    *accepted = af::IsScepticallyAccepted(x, af->af) ? 1 : 0;
  });
}

size_t fd_extensions_count(const fd_extensions* e) { return e ? e->sets.size() : 0; }

fd_status fd_extensions_get(const fd_extensions* e, size_t i, const uint32_t** members,
                            size_t* n) {
  FD_REQUIRE(e);
  FD_REQUIRE(members);
  FD_REQUIRE(n);
  if (i >= e->sets.size()) return SetError(FD_ERR_INPUT, "extension index out of range");
  *members = e->sets[i].data();
  *n = e->sets[i].size();
  return FD_OK;
}

void fd_extensions_free(fd_extensions* e) { delete e; }

fd_status fd_culture_from_json(const char* text, fd_culture** out) {
  FD_REQUIRE(text);
  FD_REQUIRE(out);
  return Guard([&] { *out = new fd_culture(culture::CultureFromJson(text)); });
}

fd_status fd_culture_random(size_t n_args, size_t n_attacks, int64_t cost_min, int64_t cost_max,
                            uint64_t seed, fd_culture** out) {
  FD_REQUIRE(out);
  return Guard([&] {
    *out = new fd_culture(
        culture::GenerateRandomCulture(n_args, n_attacks, {cost_min, cost_max}, seed));
  });
}

fd_status fd_culture_boat(fd_culture** out) {
  FD_REQUIRE(out);
  return Guard([&] { *out = new fd_culture(boat::BuiltinBoatCulture()); });
}

fd_status fd_culture_to_json(const fd_culture* c, char** out) {
  FD_REQUIRE(c);
  FD_REQUIRE(out);
  return Guard([&] { *out = Dup(culture::CultureToJson(c->xc.base())); });
}

size_t fd_culture_size(const fd_culture* c) { return c ? c->xc.base().size() : 0; }

size_t fd_culture_feature_count(const fd_culture* c) {
  return c ? c->xc.base().feature_count() : 0;
}

size_t fd_culture_expanded_size(const fd_culture* c) { return c ? c->xc.size() : 0; }

size_t fd_culture_expanded_attack_count(const fd_culture* c) {
  return c ? c->xc.framework().attacks().size() : 0;
}

int64_t fd_culture_total_cost(const fd_culture* c) { return c ? c->xc.total_cost() : 0; }

fd_status fd_culture_ground_truth(const fd_culture* c, const char* pr_desc, const char* op_desc,
                                  fd_framework** out, int* pr_wins) {
  FD_REQUIRE(c);
  FD_REQUIRE(pr_desc);
  FD_REQUIRE(op_desc);
  return Guard([&] {
    const auto& base = c->xc.base();
    const auto pr = culture::ParseDescription(base, pr_desc);
    const auto op = culture::ParseDescription(base, op_desc);
    auto gt = culture::InstantiateGroundTruth(c->xc, pr, op);
    if (pr_wins) *pr_wins = af::IsScepticallyAccepted(gt.motion_pr, gt.framework) ? 1 : 0;
    if (out) *out = new fd_framework{std::move(gt.framework)};
  });
}

void fd_culture_free(fd_culture* c) { delete c; }

fd_status fd_dispute_run(const fd_culture* c, const char* pr_desc, const char* op_desc,
                         const char* strategy, int64_t g, uint64_t seed, fd_dialogue** out) {
  FD_REQUIRE(c);
  FD_REQUIRE(pr_desc);
  FD_REQUIRE(op_desc);
  FD_REQUIRE(strategy);
  FD_REQUIRE(out);
  return Guard([&] {
    const auto s = dialogue::ParseStrategy(strategy);
    if (!s) Fail(ErrorCode::kInput, std::string("unknown strategy: ") + strategy);
    if (g < 0) Fail(ErrorCode::kInput, "negative budget");
    auto xc = std::make_shared<const culture::ExpandedCulture>(c->xc);
    const auto pr = culture::ParseDescription(xc->base(), pr_desc);
    const auto op = culture::ParseDescription(xc->base(), op_desc);
    auto d = std::make_unique<fd_dialogue>();
    d->result = dialogue::RunDispute(*xc, pr, op, *s, g, seed);
    const auto issues = dialogue::AuditDialogue(d->result, *xc, pr, op, g);
    if (!issues.empty()) Fail(ErrorCode::kInvariant, "dialogue audit: " + issues.front());
    d->xc = std::move(xc);
    d->g = g;
    d->desc[0] = pr;
    d->desc[1] = op;
    *out = d.release();
  });
}

fd_role fd_dialogue_winner(const fd_dialogue* d) {
  return d && d->result.winner == Role::kPr ? FD_PR : FD_OP;
}

int fd_dialogue_budget_forced(const fd_dialogue* d) {
  return d ? d->result.subjective_loss() : 0;
}

int64_t fd_dialogue_spent(const fd_dialogue* d, fd_role who) {
  if (d == nullptr || (who != FD_PR && who != FD_OP)) return 0;
  return d->result.spent[static_cast<std::size_t>(who)];
}

size_t fd_dialogue_move_count(const fd_dialogue* d) {
  return d ? d->result.transcript.size() : 0;
}

fd_status fd_dialogue_move(const fd_dialogue* d, size_t i, fd_role* player, uint32_t* arg,
                           int64_t* cost) {
  FD_REQUIRE(d);
  if (i >= d->result.transcript.size()) return SetError(FD_ERR_INPUT, "move index out of range");
  const auto& m = d->result.transcript[i];
  if (player) *player = m.player == Role::kPr ? FD_PR : FD_OP;
  if (arg) *arg = m.arg;
  if (cost) *cost = m.cost;
  return FD_OK;
}

fd_status fd_dialogue_render(const fd_dialogue* d, int json, char** out) {
  FD_REQUIRE(d);
  FD_REQUIRE(out);
  return Guard([&] { *out = Dup(json ? RenderJson(*d) : RenderText(*d)); });
}

void fd_dialogue_free(fd_dialogue* d) { delete d; }

fd_status fd_activation_radius(double z, double g, double r_max, double r_crit, double* out) {
  FD_REQUIRE(out);
  return Guard([&] { *out = boat::ActivationRadius(z, g, r_max, r_crit); });
}

fd_status fd_frechet(const double* a, size_t na, const double* b, size_t nb, double* out) {
  FD_REQUIRE(a);
  FD_REQUIRE(b);
  FD_REQUIRE(out);
  return Guard([&] { *out = boat::DiscreteFrechet(Curve(a, na), Curve(b, nb)); });
}

fd_status fd_t_test(const double* a, size_t na, const double* b, size_t nb, fd_tail tail,
                    double* t, double* p) {
  FD_REQUIRE(a);
  FD_REQUIRE(b);
  return Guard([&] {
    stats::Tail tl;
    switch (tail) {
      case FD_TWO_SIDED: tl = stats::Tail::kTwoSided; break;
      case FD_LESS: tl = stats::Tail::kLess; break;
      case FD_GREATER: tl = stats::Tail::kGreater; break;
      default: Fail(ErrorCode::kInput, "unknown tail");
    }
    const auto r = stats::StudentTTest({a, na}, {b, nb}, tl);
    if (t) *t = r.t;
    if (p) *p = r.p;
  });
}

fd_status fd_run_command(const char* command, const char* config_json, const char* out_dir,
                         char** summary) {
  FD_REQUIRE(command);
  FD_REQUIRE(out_dir);
  experiments::CommandResult res;
  const fd_status s = Guard([&] {
    res = experiments::RunCommand(command, config_json ? config_json : "{}", out_dir);
  });
  if (s != FD_OK) return s;
  if (summary) *summary = Dup(res.summary);
  if (!res.violations.empty()) {
    return SetError(FD_ERR_INVARIANT, std::to_string(res.violations.size()) +
                                          " violation(s); first: " + res.violations.front());
  }
  return FD_OK;
}

fd_status fd_manifest_rerun(const char* manifest_path, const char* out_dir, char** summary) {
  FD_REQUIRE(manifest_path);
  experiments::CommandResult res;
  const fd_status s =
      Guard([&] { res = experiments::Rerun(manifest_path, out_dir ? out_dir : ""); });
  if (s != FD_OK) return s;
  if (summary) *summary = Dup(res.summary);
  if (!res.violations.empty()) {
    return SetError(FD_ERR_INVARIANT, std::to_string(res.violations.size()) +
                                          " violation(s); first: " + res.violations.front());
  }
  return FD_OK;
}

}  // extern "C"
