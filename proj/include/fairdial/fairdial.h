/* Copyright 2026 The fairdial Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * C interface to libfairdial.
 *
 * Every fallible call returns an fd_status. On failure a description is
 * available from fd_last_error() on the calling thread until the next call
 * into the library. Objects are opaque handles released with their _free
 * function; strings returned through char** are released with
 * fd_string_free. Passing NULL to a _free function is a no-op.
 */
#ifndef FAIRDIAL_FAIRDIAL_H_
#define FAIRDIAL_FAIRDIAL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FAIRDIAL_BUILDING_LIBRARY)
#define FD_API __attribute__((visibility("default")))
#else
#define FD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
  FD_OK = 0,
  FD_ERR_INPUT = 1,      /* invalid argument value */
  FD_ERR_PARSE = 2,      /* malformed text or file */
  FD_ERR_CAPACITY = 3,   /* problem too large for the requested path */
  FD_ERR_IO = 4,         /* file system failure */
  FD_ERR_INVARIANT = 5,  /* a checked property was violated */
  FD_ERR_DEGENERATE = 6, /* statistic undefined for the data */
  FD_ERR_FAULT = 7,      /* internal failure */
  FD_ERR_NULL = 8        /* required pointer argument was NULL */
} fd_status;

typedef enum fd_role { FD_PR = 0, FD_OP = 1 } fd_role;

typedef enum fd_tail { FD_TWO_SIDED = 0, FD_LESS = 1, FD_GREATER = 2 } fd_tail;

FD_API const char* fd_version(void);
FD_API const char* fd_status_name(fd_status status);
FD_API const char* fd_last_error(void);
FD_API void fd_string_free(char* s);

/* Argumentation frameworks. */
typedef struct fd_framework fd_framework;
typedef struct fd_extensions fd_extensions;

FD_API fd_status fd_framework_create(size_t n_args, const uint32_t* attackers,
                                     const uint32_t* targets, size_t n_attacks,
                                     fd_framework** out);
FD_API fd_status fd_framework_parse(const char* text, fd_framework** out);
FD_API fd_status fd_framework_emit(const fd_framework* af, char** out);
FD_API size_t fd_framework_size(const fd_framework* af);
FD_API size_t fd_framework_attack_count(const fd_framework* af);
FD_API void fd_framework_free(fd_framework* af);

/* Admissibility of the set members[0..n). */
FD_API fd_status fd_framework_is_admissible(const fd_framework* af, const uint32_t* members,
                                            size_t n, int* admissible);
/* oracle != 0 selects exhaustive enumeration (at most 20 arguments). */
FD_API fd_status fd_framework_preferred(const fd_framework* af, int oracle,
                                        fd_extensions** out);
FD_API fd_status fd_framework_sceptical(const fd_framework* af, uint32_t x, int* accepted);

FD_API size_t fd_extensions_count(const fd_extensions* e);
FD_API fd_status fd_extensions_get(const fd_extensions* e, size_t i, const uint32_t** members,
                                   size_t* n);
FD_API void fd_extensions_free(fd_extensions* e);

/* Cultures. */
typedef struct fd_culture fd_culture;

FD_API fd_status fd_culture_from_json(const char* text, fd_culture** out);
FD_API fd_status fd_culture_random(size_t n_args, size_t n_attacks, int64_t cost_min,
                                   int64_t cost_max, uint64_t seed, fd_culture** out);
FD_API fd_status fd_culture_boat(fd_culture** out);
FD_API fd_status fd_culture_to_json(const fd_culture* c, char** out);
FD_API size_t fd_culture_size(const fd_culture* c);
FD_API size_t fd_culture_feature_count(const fd_culture* c);
FD_API size_t fd_culture_expanded_size(const fd_culture* c);
FD_API size_t fd_culture_expanded_attack_count(const fd_culture* c);
FD_API int64_t fd_culture_total_cost(const fd_culture* c);
/* Verified-fact-pruned expansion for two comma-separated descriptions. */
FD_API fd_status fd_culture_ground_truth(const fd_culture* c, const char* pr_desc,
                                         const char* op_desc, fd_framework** out,
                                         int* pr_wins);
FD_API void fd_culture_free(fd_culture* c);

/* Disputes. Strategies: "random", "min_cost", "offensive", "defensive". */
typedef struct fd_dialogue fd_dialogue;

FD_API fd_status fd_dispute_run(const fd_culture* c, const char* pr_desc, const char* op_desc,
                                const char* strategy, int64_t g, uint64_t seed,
                                fd_dialogue** out);
FD_API fd_role fd_dialogue_winner(const fd_dialogue* d);
FD_API int fd_dialogue_budget_forced(const fd_dialogue* d);
FD_API int64_t fd_dialogue_spent(const fd_dialogue* d, fd_role who);
FD_API size_t fd_dialogue_move_count(const fd_dialogue* d);
FD_API fd_status fd_dialogue_move(const fd_dialogue* d, size_t i, fd_role* player,
                                  uint32_t* arg, int64_t* cost);
/* Move-by-move explanation; json != 0 gives a JSON object instead. */
FD_API fd_status fd_dialogue_render(const fd_dialogue* d, int json, char** out);
FD_API void fd_dialogue_free(fd_dialogue* d);

/* Numerics. */
FD_API fd_status fd_activation_radius(double z, double g, double r_max, double r_crit,
                                      double* out);
/* Curves are interleaved x,y arrays of na and nb points. */
FD_API fd_status fd_frechet(const double* a, size_t na, const double* b, size_t nb,
                            double* out);
FD_API fd_status fd_t_test(const double* a, size_t na, const double* b, size_t nb,
                           fd_tail tail, double* t, double* p);

/* File-producing commands: "culture-random", "culture-boat", "sweep", "ecdf",
 * "boats". config_json may be NULL or "{}" for defaults. Outputs and
 * manifest.json go to out_dir. summary (optional) receives a one-line
 * report. Returns FD_ERR_INVARIANT, after writing outputs, if the run
 * detected violated properties. */
FD_API fd_status fd_run_command(const char* command, const char* config_json,
                                const char* out_dir, char** summary);
/* Replays manifest.json; out_dir NULL writes next to the manifest. */
FD_API fd_status fd_manifest_rerun(const char* manifest_path, const char* out_dir,
                                   char** summary);

#ifdef __cplusplus
}
#endif

#endif /* FAIRDIAL_FAIRDIAL_H_ */
