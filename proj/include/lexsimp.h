// Copyright 2026 The lexsimp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * lexsimp C API.
 *
 * Every function returns a lexsimp_status. On failure a description of the
 * error is available from lexsimp_last_error() on the calling thread until
 * the next failing call on that thread. Handles are opaque; each *_new or
 * *_load has a matching *_free that accepts NULL. Strings returned through
 * `char **` out-parameters are owned by the caller and released with
 * lexsimp_string_free(). Borrowed `const char *` fields in result structs
 * stay valid until the handle they came from is freed.
 */
#ifndef LEXSIMP_H_
#define LEXSIMP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LEXSIMP_BUILDING_LIBRARY)
#define LEXSIMP_API __declspec(dllexport)
#else
#define LEXSIMP_API __declspec(dllimport)
#endif
#else
#define LEXSIMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lexsimp_status {
  LEXSIMP_OK = 0,
  LEXSIMP_ERR_USAGE = 1,          /* invalid argument or configuration value */
  LEXSIMP_ERR_DATA = 2,           /* malformed or inconsistent input data */
  LEXSIMP_ERR_IO = 3,             /* a file could not be read or written */
  LEXSIMP_ERR_MISSING_INPUT = 4,  /* an upstream artifact does not exist */
  LEXSIMP_ERR_INTERNAL = 5,
  LEXSIMP_NOT_FOUND = 6           /* lookup without a result; not an error */
} lexsimp_status;

typedef enum lexsimp_corpus {
  LEXSIMP_CORPUS_COMPLEX = 0,
  LEXSIMP_CORPUS_SIMPLE = 1
} lexsimp_corpus;

typedef enum lexsimp_method {
  LEXSIMP_METHOD_EDIT_MODEL = 0,
  LEXSIMP_METHOD_SIMPL = 1,
  LEXSIMP_METHOD_FREQUENT = 2,
  LEXSIMP_METHOD_RANDOM = 3
} lexsimp_method;

LEXSIMP_API const char *lexsimp_version(void);
LEXSIMP_API const char *lexsimp_last_error(void);
LEXSIMP_API const char *lexsimp_status_name(lexsimp_status status);
LEXSIMP_API void lexsimp_string_free(char *s);

LEXSIMP_API lexsimp_status lexsimp_parse_method(const char *name, lexsimp_method *out);
LEXSIMP_API lexsimp_status lexsimp_parse_corpus(const char *name, lexsimp_corpus *out);

/* ---- Configuration ------------------------------------------------------
 *
 * A bag of key=value settings shared by all stages. Keys and defaults:
 *
 *   workdir=.                 directory holding the stage artifacts
 *   workers=1                 threads for extract, count and synth
 *   alpha=1                   fix-rate damping in (0, 1] for synth, [0, 1] otherwise
 *   min_pair_freq=2           edit model: freq(A -> *) threshold in both corpora
 *   min_phrase_freq=101       edit model: freq(A) threshold in both corpora
 *   phrase_freq=topics        topics | occurrences
 *   top_k=100                 rows kept by rank (0 keeps all) and K for eval
 *   seed_pattern=*simpl*      trusted comment globs; comma-separated list
 *   rng_seed=0                seed for random baseline, eval batch and synth
 *   sampling=distinct         distinct | weighted, for the random baseline
 *   tau_align=0.5             minimum alignment similarity
 *   tau_identical=1           similarity at which a pair carries no edit
 *   max_phrase_tokens=5
 *   format=auto               auto | xml | jsonl, for ingest
 *   strip_markup=true
 *   filter_textual=true       drop revisions without a textual change
 *   dictionary=               dictionary TSV for eval
 *   dictionary_sample=0       dictionary pairs added to an eval batch
 *   judges=                   judge_id<TAB>group file for eval report
 *   verdict_group=native      group whose majority decides verdicts
 *   denominator=discard       discard | k
 *   complex_topics=1000, simple_topics=1000, topics= (sets both)
 *   distractors=false, allocation=quota (quota | bernoulli)
 *   trusted_comment_rate=0.5, noop_revisions=1, filler_sentences=2
 *   planted=                  ground-truth TSV with planted phrases for synth
 */
typedef struct lexsimp_config lexsimp_config;

LEXSIMP_API lexsimp_status lexsimp_config_new(lexsimp_config **out);
LEXSIMP_API void lexsimp_config_free(lexsimp_config *config);
/* Validates the value; unknown keys and bad values are LEXSIMP_ERR_USAGE. */
LEXSIMP_API lexsimp_status lexsimp_config_set(lexsimp_config *config, const char *key,
                                              const char *value);
LEXSIMP_API lexsimp_status lexsimp_config_get(const lexsimp_config *config,
                                              const char *key, char **value);

/* ---- Pipeline stages ----------------------------------------------------
 *
 * Path arguments may be NULL, in which case the artifact inside `workdir`
 * is used: <corpus>.jsonl, <corpus>.instances.jsonl, store.tsv,
 * ranked.<method>.tsv and truth.tsv.
 */
typedef struct lexsimp_ingest_stats {
  uint64_t pages_seen;
  uint64_t pages_emitted;
  uint64_t pages_skipped;
  uint64_t revisions_read;
  uint64_t revisions_kept;
} lexsimp_ingest_stats;

LEXSIMP_API lexsimp_status lexsimp_ingest(const lexsimp_config *config, lexsimp_corpus corpus,
                                          const char *input, const char *output,
                                          lexsimp_ingest_stats *stats);

typedef struct lexsimp_extract_stats {
  uint64_t articles;
  uint64_t revisions;
  uint64_t revisions_with_edits;
  uint64_t instances;
} lexsimp_extract_stats;

LEXSIMP_API lexsimp_status lexsimp_extract(const lexsimp_config *config, lexsimp_corpus corpus,
                                           const char *sequences, const char *output,
                                           lexsimp_extract_stats *stats);

typedef struct lexsimp_count_stats {
  uint64_t articles;
  uint64_t vocabulary;
  uint64_t instances;
} lexsimp_count_stats;

/* Counts both corpora from the workdir artifacts. */
LEXSIMP_API lexsimp_status lexsimp_count(const lexsimp_config *config, const char *output,
                                         lexsimp_count_stats *stats);

typedef struct lexsimp_rank_stats {
  uint64_t candidates;
  uint64_t pool;
} lexsimp_rank_stats;

/* `input` is the store for the edit model and the simple-corpus instance
 * file for the other methods. */
LEXSIMP_API lexsimp_status lexsimp_rank(const lexsimp_config *config, lexsimp_method method,
                                        const char *input, const char *output,
                                        lexsimp_rank_stats *stats);

typedef struct lexsimp_synth_stats {
  uint64_t complex_articles;
  uint64_t simple_articles;
  uint64_t revisions;
} lexsimp_synth_stats;

/* Writes complex.jsonl, simple.jsonl and truth.tsv into workdir. */
LEXSIMP_API lexsimp_status lexsimp_synth(const lexsimp_config *config,
                                         lexsimp_synth_stats *stats);

LEXSIMP_API lexsimp_status lexsimp_eval_batch(const lexsimp_config *config,
                                              const char *const *ranked, size_t n_ranked,
                                              const char *output, uint64_t *pairs);

/* Writes the optional text and TSV reports; `text` (nullable) receives the
 * human-readable report. */
LEXSIMP_API lexsimp_status lexsimp_eval_report(const lexsimp_config *config,
                                               const char *const *ranked, size_t n_ranked,
                                               const char *manifest, const char *judgments,
                                               const char *text_output,
                                               const char *tsv_output, char **text);

/* ---- Text utilities ----------------------------------------------------- */

LEXSIMP_API lexsimp_status lexsimp_strip_markup(const char *wikitext, char **plain);

/* Longest differing segment of two sentences. LEXSIMP_NOT_FOUND when either
 * side is empty or longer than max_tokens. */
LEXSIMP_API lexsimp_status lexsimp_extract_pair(const char *old_sentence,
                                                const char *new_sentence, size_t max_tokens,
                                                char **source, char **target);

/* ---- Count store -------------------------------------------------------- */

typedef struct lexsimp_store lexsimp_store;

LEXSIMP_API lexsimp_status lexsimp_store_new(lexsimp_store **out);
LEXSIMP_API lexsimp_status lexsimp_store_load(const char *path, lexsimp_store **out);
LEXSIMP_API void lexsimp_store_free(lexsimp_store *store);
LEXSIMP_API lexsimp_status lexsimp_store_merge(lexsimp_store *into, const lexsimp_store *from);
LEXSIMP_API lexsimp_status lexsimp_store_save(const lexsimp_store *store, const char *path);
/* kind: articles (key ignored), containing, modifying, occurrences,
 * source_total, or pair with key "A ||| a". Absent keys count 0. */
LEXSIMP_API lexsimp_status lexsimp_store_count(const lexsimp_store *store,
                                               lexsimp_corpus corpus, const char *kind,
                                               const char *key, uint64_t *count);
LEXSIMP_API int lexsimp_store_equal(const lexsimp_store *a, const lexsimp_store *b);

/* ---- Edit model estimates ----------------------------------------------- */

typedef struct lexsimp_estimate lexsimp_estimate;

typedef struct lexsimp_phrase_summary {
  double f_complex;
  double f_simple;
  double p_fix;
  double p_simplify;
  int has_fix_evidence;
  int simplify_defined;
  size_t n_targets;
} lexsimp_phrase_summary;

typedef struct lexsimp_target_estimate {
  const char *target; /* borrowed */
  double p_any;
  double p_fix_pair;
  double p_simplify_raw;
  double p_simplify;
} lexsimp_target_estimate;

/* LEXSIMP_NOT_FOUND unless the phrase occurs in both corpora. */
LEXSIMP_API lexsimp_status lexsimp_estimate_phrase(const lexsimp_store *store, double alpha,
                                                   const char *phrase,
                                                   lexsimp_estimate **out);
LEXSIMP_API void lexsimp_estimate_free(lexsimp_estimate *estimate);
LEXSIMP_API lexsimp_status lexsimp_estimate_summary(const lexsimp_estimate *estimate,
                                                    lexsimp_phrase_summary *out);
LEXSIMP_API lexsimp_status lexsimp_estimate_target(const lexsimp_estimate *estimate,
                                                   size_t index,
                                                   lexsimp_target_estimate *out);

/* ---- Ranked candidates -------------------------------------------------- */

typedef struct lexsimp_candidates lexsimp_candidates;

typedef struct lexsimp_candidate {
  const char *source; /* borrowed */
  const char *target; /* borrowed */
  double score;
  double detail;
  lexsimp_method method;
} lexsimp_candidate;

LEXSIMP_API lexsimp_status lexsimp_candidates_rank(const lexsimp_config *config,
                                                   lexsimp_method method, const char *input,
                                                   lexsimp_candidates **out);
LEXSIMP_API lexsimp_status lexsimp_candidates_load(const char *path,
                                                   lexsimp_candidates **out);
LEXSIMP_API void lexsimp_candidates_free(lexsimp_candidates *candidates);
LEXSIMP_API size_t lexsimp_candidates_size(const lexsimp_candidates *candidates);
LEXSIMP_API lexsimp_status lexsimp_candidates_get(const lexsimp_candidates *candidates,
                                                  size_t index, lexsimp_candidate *out);

#ifdef __cplusplus
}
#endif

#endif /* LEXSIMP_H_ */
