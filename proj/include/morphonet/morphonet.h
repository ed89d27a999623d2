/* Copyright 2026 The Morphonet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the morphonet library.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_free function. Functions return MN_OK on success and
 * an error status otherwise; mn_last_error() then describes the failure for
 * the calling thread. Strings are UTF-8. Strings returned through `const
 * char**` out-parameters belong to the handle they came from and stay valid
 * until that handle is freed.
 */
#ifndef MORPHONET_MORPHONET_H_
#define MORPHONET_MORPHONET_H_

#include <stddef.h>

#if defined(_WIN32)
#define MN_API __declspec(dllexport)
#else
#define MN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mn_status {
  MN_OK = 0,
  MN_ERR_INVALID_ARGUMENT = 1, /* null pointer or out-of-range parameter */
  MN_ERR_INVALID_INPUT = 2,
  MN_ERR_LOOKUP = 3,           /* unknown lexeme */
  MN_ERR_INGEST = 4,           /* malformed or duplicate lexicon record */
  MN_ERR_IO = 5,
  MN_ERR_VERSION = 6,          /* snapshot version mismatch or corruption */
  MN_ERR_SIZE = 7,
  MN_ERR_INTERNAL = 8
} mn_status;

typedef enum mn_mode {
  MN_MODE_FORMAL = 0,   /* "form" */
  MN_MODE_SEMANTIC = 1, /* "sem" */
  MN_MODE_BOTH = 2      /* "form+sem" */
} mn_mode;

typedef struct mn_config {
  int min_n;           /* minimum formal n-gram length, >= 1 (default 3) */
  double formal_share; /* in [0, 1] (default 0.5) */
  int steps;           /* propagation steps, even and >= 2 (default 2) */
  int k;               /* neighbors per lexeme, >= 1 (default 100) */
  mn_mode mode;        /* default MN_MODE_BOTH */
  int prune;           /* drop hapax features (default 1) */
  unsigned threads;    /* worker threads for harvesting, 0 = all cores (default 1) */
} mn_config;

typedef struct mn_stats {
  size_t lexemes;
  size_t isolated_lexemes;
  size_t formal_features;
  size_t semantic_features;
  size_t formal_edges;
  size_t semantic_edges;
  size_t formal_complete;   /* formal features before pruning */
  size_t semantic_complete; /* semantic features before pruning */
  double formal_hapax;      /* share of formal features removed by pruning */
  double semantic_hapax;
  double total_hapax;
} mn_stats;

typedef struct mn_lexicon mn_lexicon;
typedef struct mn_graph mn_graph;
typedef struct mn_neighbors mn_neighbors;
typedef struct mn_harvest mn_harvest;

MN_API const char* mn_version(void);
MN_API const char* mn_status_string(mn_status status);
/* Message for the last failing call on this thread, or "" if none. */
MN_API const char* mn_last_error(void);

MN_API void mn_config_init(mn_config* config);
/* Checks bounds: min_n >= 1, formal_share in [0,1], steps even and >= 2,
 * k >= 1, valid mode. */
MN_API mn_status mn_config_validate(const mn_config* config);
/* Parses "form", "sem" or "form+sem". */
MN_API mn_status mn_mode_parse(const char* name, mn_mode* out);
MN_API const char* mn_mode_name(mn_mode mode);

/* Lexicon files. */
MN_API mn_status mn_lexicon_load(const char* path, mn_lexicon** out);
MN_API size_t mn_lexicon_size(const mn_lexicon* lexicon);
/* "pos.lemma" of the i-th entry; NULL if out of range. */
MN_API const char* mn_lexicon_entry(const mn_lexicon* lexicon, size_t i);
MN_API void mn_lexicon_free(mn_lexicon* lexicon);

/* Graphs. min_n, prune and formal_share are taken from `config`. */
MN_API mn_status mn_graph_build(const mn_lexicon* lexicon, const mn_config* config,
                                mn_graph** out);
MN_API mn_status mn_graph_save(const mn_graph* graph, const char* path);
MN_API mn_status mn_graph_load(const char* path, mn_graph** out);
MN_API mn_status mn_graph_stats(const mn_graph* graph, mn_stats* out);
/* Fills min_n, prune and formal_share from the graph's build parameters. */
MN_API mn_status mn_graph_params(const mn_graph* graph, mn_config* config);
MN_API size_t mn_graph_lexeme_count(const mn_graph* graph);
MN_API const char* mn_graph_lexeme(const mn_graph* graph, size_t i);
/* Table-style report: complete / reduced / hapax per feature kind. */
MN_API const char* mn_graph_report(const mn_graph* graph);
MN_API void mn_graph_free(mn_graph* graph);

/* Neighbors of `word` ("pos.lemma") using mode, formal_share, steps, k. */
MN_API mn_status mn_neighbors_compute(const mn_graph* graph, const char* word,
                                      const mn_config* config, mn_neighbors** out);
MN_API size_t mn_neighbors_count(const mn_neighbors* neighbors);
MN_API mn_status mn_neighbors_get(const mn_neighbors* neighbors, size_t i, const char** word,
                                  double* activation);
/* Rank, word and activation per line, tab-separated. */
MN_API const char* mn_neighbors_text(const mn_neighbors* neighbors);
MN_API mn_status mn_neighbors_write(const mn_neighbors* neighbors, const char* path);
MN_API void mn_neighbors_free(mn_neighbors* neighbors);

/* Formal analogy on bare strings. *signature receives a malloc'd string
 * freed with mn_string_free. */
MN_API mn_status mn_signature(const char* a, const char* b, char** signature);
MN_API mn_status mn_is_analogy(const char* a, const char* b, const char* c, const char* d,
                               int* result);
MN_API mn_status mn_is_analogy_oracle(const char* a, const char* b, const char* c,
                                      const char* d, size_t max_len, int* result);
MN_API void mn_string_free(char* s);

/* Harvests analogies for `seeds` ("pos.lemma" each). With seed_count == 0
 * every headword is a seed. Unknown seeds do not fail the call; they are
 * reported through mn_harvest_seed. */
MN_API mn_status mn_harvest_run(const mn_graph* graph, const char* const* seeds,
                                size_t seed_count, const mn_config* config, mn_harvest** out);
MN_API size_t mn_harvest_count(const mn_harvest* harvest);
/* words[0..3] receive "pos.lemma" of a, b, c, d. */
MN_API mn_status mn_harvest_get(const mn_harvest* harvest, size_t i, const char* words[4]);
MN_API size_t mn_harvest_seed_count(const mn_harvest* harvest);
/* error is NULL for seeds that resolved. */
MN_API mn_status mn_harvest_seed(const mn_harvest* harvest, size_t i, const char** seed,
                                 size_t* analogies, const char** error);
MN_API size_t mn_harvest_error_count(const mn_harvest* harvest);
/* Quadruplet records, tab-separated with an empty review column. */
MN_API const char* mn_harvest_text(const mn_harvest* harvest);
MN_API mn_status mn_harvest_write(const mn_harvest* harvest, const char* path);
/* Per-seed counts; with by_length != 0, counts grouped by seed length. */
MN_API const char* mn_harvest_summary(const mn_harvest* harvest, int by_length);
MN_API void mn_harvest_free(mn_harvest* harvest);

#ifdef __cplusplus
}
#endif

#endif /* MORPHONET_MORPHONET_H_ */
