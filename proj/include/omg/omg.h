/* Copyright 2026 The OMG Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the online monotone games library.
 *
 * Every function returns an omg_status. On failure, omg_last_error() gives a
 * message for the calling thread. Strings returned through char** out
 * parameters are heap-allocated and must be released with omg_string_free.
 */

#ifndef OMG_OMG_H_
#define OMG_OMG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(OMG_BUILDING_LIBRARY)
#define OMG_API __attribute__((visibility("default")))
#else
#define OMG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum omg_status {
  OMG_OK = 0,
  OMG_ERR_INVALID_ARGUMENT = 1,
  OMG_ERR_DOMAIN = 2, /* point outside a region, parameters outside their range */
  OMG_ERR_NUMERIC = 3,
  OMG_ERR_IO = 4,
  OMG_ERR_INTERNAL = 5
} omg_status;

typedef enum omg_verdict {
  OMG_VERDICT_MONOTONE = 0,
  OMG_VERDICT_NOT_MONOTONE = 1,
  OMG_VERDICT_INCONCLUSIVE = 2
} omg_verdict;

typedef enum omg_learner { OMG_LEARNER_OGD = 0, OMG_LEARNER_OMOD = 1, OMG_LEARNER_OMOMD = 2 } omg_learner;

typedef struct omg_game omg_game;

OMG_API const char* omg_version(void);

/* Message for the last failed call on this thread; "" when none. */
OMG_API const char* omg_last_error(void);

OMG_API void omg_string_free(char* s);

/* Builtin ids: counterexample, cournot, resource_alloc, taildrop, gtd, wgan,
 * mln, venn_a ... venn_i. params_json may be NULL or a JSON object that
 * overrides default parameters. */
OMG_API omg_status omg_game_create_builtin(const char* id, const char* params_json, omg_game** out);

/* A GameSpec document: {"id": ..., "params": {...}}. */
OMG_API omg_status omg_game_create_json(const char* spec_json, omg_game** out);

OMG_API void omg_game_free(omg_game* game);

OMG_API omg_status omg_game_dimension(const omg_game* game, size_t* out);

/* The game's GameSpec with every parameter filled in. */
OMG_API omg_status omg_game_spec_json(const omg_game* game, char** out);

OMG_API omg_status omg_game_evaluate(const omg_game* game, const double* x, size_t n, double* out_f);

/* Sampled monotonicity certificate. verdict and report_json may be NULL. */
OMG_API omg_status omg_certify(const omg_game* game, size_t samples, uint64_t seed, omg_verdict* verdict,
                               char** report_json);

/* Smooth / convex / monotone / socially convex checks. Builtin Venn examples
 * use their bundled parameters and witnesses. */
OMG_API omg_status omg_classify(const omg_game* game, size_t samples, uint64_t seed, char** report_json);

/* Path-integral loss from o to x. nodes <= 0 selects the default. value and
 * report_json may be NULL. */
OMG_API omg_status omg_path_loss(const omg_game* game, const double* o, const double* x, size_t n, int nodes,
                                 double* value, const char** method, char** report_json);

/* Projected extragradient. x_out (length n) and report_json may be NULL. */
OMG_API omg_status omg_equilibrium(const omg_game* game, double tol, size_t max_iterations, double* x_out,
                                   size_t n, char** report_json);

/* T rounds of a learner on the fixed game, scored against its equilibrium.
 * eta <= 0 selects the automatic step size. Returns the trace CSV and a JSON
 * summary; either pointer may be NULL. */
OMG_API omg_status omg_run_online(const omg_game* game, omg_learner learner, double eta, size_t T, int nodes,
                                  char** csv, char** summary_json);

/* An ExperimentConfig document. Artifacts go under out_dir (NULL: default
 * output root). *passed is 1 when every check of the experiment passes. */
OMG_API omg_status omg_run_config(const char* config_json, const char* out_dir, int* passed,
                                  char** summary_json);

/* which: fig4, table1, regret-bound, counterexample. Artifacts go under
 * out_dir (NULL: $MG_OUT_DIR or ./out). *passed is 1 when every acceptance
 * check of the suite passes; failed lists the failing check names. */
OMG_API omg_status omg_reproduce(const char* which, uint64_t seed, size_t jobs, const char* out_dir, int* passed,
                                 char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* OMG_OMG_H_ */
