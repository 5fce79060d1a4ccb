#ifndef BORGIA_BORGIA_H
#define BORGIA_BORGIA_H

/*
 * C interface to the borgia community-detection library.
 *
 * Every object is an opaque handle released with its matching *_free function.
 * Functions returning borgia_status leave their out-parameters untouched on
 * failure; borgia_last_error() then describes the failure on the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * borgia_string_free. Strings returned as const char* stay valid for the life
 * of the handle they came from.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BORGIA_BUILDING_LIBRARY)
#define BORGIA_API __attribute__((visibility("default")))
#else
#define BORGIA_API
#endif

typedef enum borgia_status {
  BORGIA_OK = 0,
  BORGIA_ERR_INVALID_ARGUMENT = 1,
  BORGIA_ERR_PARSE = 2,
  BORGIA_ERR_IO = 3,
  BORGIA_ERR_DIMENSION = 4,
  BORGIA_ERR_OUT_OF_RANGE = 5,
  BORGIA_ERR_STALL = 6,
  BORGIA_ERR_NOT_FOUND = 7,
  BORGIA_ERR_INTERNAL = 8
} borgia_status;

typedef struct borgia_graph borgia_graph;
typedef struct borgia_temporal borgia_temporal;
typedef struct borgia_affinity borgia_affinity;
typedef struct borgia_dendrogram borgia_dendrogram;
typedef struct borgia_partition borgia_partition;

BORGIA_API const char* borgia_version(void);
/* Stable lowercase identifier such as "parse_error". */
BORGIA_API const char* borgia_status_name(borgia_status status);
/* Message of the most recent failure on this thread ("" if none). */
BORGIA_API const char* borgia_last_error(void);
BORGIA_API void borgia_string_free(char* s);

/* ---- graphs ---- */

typedef enum borgia_degree_mode { BORGIA_DEGREE_IN = 0, BORGIA_DEGREE_OUT = 1, BORGIA_DEGREE_TOTAL = 2 } borgia_degree_mode;

/* format: "edge-list", "matrix-csv" or "gml". */
BORGIA_API borgia_status borgia_graph_load(const char* text, size_t length, const char* format, int directed,
                                           borgia_graph** out);
/* format may be NULL to infer it from the file extension. */
BORGIA_API borgia_status borgia_graph_load_file(const char* path, const char* format, int directed, borgia_graph** out);
/* weights is row-major n x n. */
BORGIA_API borgia_status borgia_graph_from_matrix(const char* const* labels, const double* weights, size_t n,
                                                  int directed, borgia_graph** out);
BORGIA_API void borgia_graph_free(borgia_graph* g);
BORGIA_API size_t borgia_graph_size(const borgia_graph* g);
BORGIA_API int borgia_graph_directed(const borgia_graph* g);
BORGIA_API size_t borgia_graph_edge_count(const borgia_graph* g);
BORGIA_API const char* borgia_graph_label(const borgia_graph* g, size_t i);
BORGIA_API borgia_status borgia_graph_index_of(const borgia_graph* g, const char* label, size_t* out);
BORGIA_API borgia_status borgia_graph_weight(const borgia_graph* g, size_t i, size_t j, double* out);
BORGIA_API borgia_status borgia_graph_degree(const borgia_graph* g, size_t i, borgia_degree_mode mode, int weighted,
                                             double* out);
BORGIA_API borgia_status borgia_graph_density(const borgia_graph* g, double* out);
BORGIA_API borgia_status borgia_graph_write(const borgia_graph* g, const char* format, char** out);
/* Keeps round(fraction * edges) uniformly sampled edges and every actor. */
BORGIA_API borgia_status borgia_graph_sample_edges(const borgia_graph* g, double fraction, uint64_t seed,
                                                   borgia_graph** out);

BORGIA_API borgia_status borgia_temporal_create(const borgia_graph* const* slices, size_t count, borgia_temporal** out);
BORGIA_API void borgia_temporal_free(borgia_temporal* tg);
BORGIA_API size_t borgia_temporal_slice_count(const borgia_temporal* tg);
/* Borrowed view of slice t, valid while tg lives. */
BORGIA_API const borgia_graph* borgia_temporal_slice(const borgia_temporal* tg, size_t t);

/* ---- affinities ---- */

typedef enum borgia_affinity_kind {
  BORGIA_AFFINITY_BEST_FRIEND = 0,
  BORGIA_AFFINITY_BEST_COMMON_FRIEND = 1,
  BORGIA_AFFINITY_FRIENDS_FOREVER = 2,
  BORGIA_AFFINITY_SOCIAL_NETWORKING = 3,
  BORGIA_AFFINITY_MACHIAVELLI = 4,
  BORGIA_AFFINITY_COMBINED = 5
} borgia_affinity_kind;

typedef struct borgia_affinity_spec {
  borgia_affinity_kind kind;
  double alpha; /* combined only */
  int has_base; /* social networking and best common friend */
  borgia_affinity_kind base_kind;
  double base_alpha;
} borgia_affinity_spec;

BORGIA_API void borgia_affinity_spec_init(borgia_affinity_spec* spec, borgia_affinity_kind kind);
/* Accepts bf, bcf, ff, sn, ma, combined and the long names. */
BORGIA_API borgia_status borgia_affinity_parse_kind(const char* name, borgia_affinity_kind* out);
BORGIA_API const char* borgia_affinity_kind_name(borgia_affinity_kind kind);
BORGIA_API borgia_status borgia_affinity_compute(const borgia_graph* g, const borgia_affinity_spec* spec,
                                                 borgia_affinity** out);
/* Friends forever uses the slices; other kinds use the slice sum. */
BORGIA_API borgia_status borgia_affinity_compute_temporal(const borgia_temporal* tg, const borgia_affinity_spec* spec,
                                                          borgia_affinity** out);
BORGIA_API void borgia_affinity_free(borgia_affinity* a);
BORGIA_API size_t borgia_affinity_size(const borgia_affinity* a);
BORGIA_API borgia_status borgia_affinity_value(const borgia_affinity* a, size_t x, size_t y, double* out);
/* Fraction of nonzero off-diagonal entries. */
BORGIA_API borgia_status borgia_affinity_density(const borgia_affinity* a, double* out);
/* long_form = 0: square matrix-csv with a label header; 1: `row,col,value` rows. */
BORGIA_API borgia_status borgia_affinity_to_csv(const borgia_affinity* a, const borgia_graph* labels, int long_form,
                                                char** out);

/* ---- clustering ---- */

typedef enum borgia_tnorm { BORGIA_TNORM_PRODUCT = 0, BORGIA_TNORM_MINIMUM = 1 } borgia_tnorm;
typedef enum borgia_delta_mode { BORGIA_DELTA_STATIC = 0, BORGIA_DELTA_DYNAMIC_FIRST = 1 } borgia_delta_mode;
typedef enum borgia_policy { BORGIA_POLICY_NAIVE = 0, BORGIA_POLICY_EARLY_ROMAN = 1 } borgia_policy;

typedef struct borgia_engine_config {
  double alpha;
  double p;
  double c;
  borgia_tnorm tnorm;
  double delta;
  borgia_delta_mode delta_mode;
  borgia_policy policy;
  size_t target_k; /* 0 selects by score */
  uint64_t max_stall_iterations;
  int weighted_mass; /* 0: mass = number of connections */
} borgia_engine_config;

BORGIA_API void borgia_engine_config_init(borgia_engine_config* cfg);

typedef struct borgia_iteration {
  size_t iteration;
  double t;
  double dt;
  double delta;
  size_t live;
  size_t visited_pairs;
  size_t nonzero_pairs;
  double fastest_displacement;
} borgia_iteration;

typedef void (*borgia_trace_fn)(const borgia_iteration* it, void* user);

typedef struct borgia_run_info {
  size_t iterations;
  size_t forced_fusions;
} borgia_run_info;

/* trace and info may be NULL. */
BORGIA_API borgia_status borgia_cluster(const borgia_graph* g, const borgia_engine_config* cfg, borgia_trace_fn trace,
                                        void* user, borgia_dendrogram** out, borgia_run_info* info);

typedef struct borgia_classic_config {
  double G;
  double epsilon; /* 0: 1e-3 of the widest initial distance */
  double delta;   /* 0: half of epsilon */
  uint64_t max_iterations;
  int affinity_rows; /* 0: adjacency rows as coordinates */
  double alpha;      /* combined affinity used when affinity_rows is set */
} borgia_classic_config;

BORGIA_API void borgia_classic_config_init(borgia_classic_config* cfg);
BORGIA_API borgia_status borgia_classic_cluster(const borgia_graph* g, const borgia_classic_config* cfg,
                                                borgia_dendrogram** out, borgia_run_info* info);

/* ---- dendrograms ---- */

typedef struct borgia_fusion {
  double t;
  size_t left;
  size_t right;
  size_t id;
  double mass;
  int forced;
} borgia_fusion;

BORGIA_API void borgia_dendrogram_free(borgia_dendrogram* d);
BORGIA_API size_t borgia_dendrogram_actor_count(const borgia_dendrogram* d);
BORGIA_API size_t borgia_dendrogram_fusion_count(const borgia_dendrogram* d);
BORGIA_API double borgia_dendrogram_total_time(const borgia_dendrogram* d);
BORGIA_API borgia_status borgia_dendrogram_fusion(const borgia_dendrogram* d, size_t f, borgia_fusion* out);
BORGIA_API size_t borgia_dendrogram_warning_count(const borgia_dendrogram* d);
BORGIA_API const char* borgia_dendrogram_warning(const borgia_dendrogram* d, size_t i);
BORGIA_API borgia_status borgia_dendrogram_to_json(const borgia_dendrogram* d, char** out);
BORGIA_API borgia_status borgia_dendrogram_from_json(const char* text, size_t length, borgia_dendrogram** out);

/* Maximizes lifespan * ln(k) over the intermediate configurations. */
BORGIA_API borgia_status borgia_select_score(const borgia_dendrogram* d, borgia_partition** out);
/* The longest-lived intermediate configuration. */
BORGIA_API borgia_status borgia_select_lifespan(const borgia_dendrogram* d, borgia_partition** out);
BORGIA_API borgia_status borgia_select_fixed_k(const borgia_dendrogram* d, size_t k, borgia_partition** out);

/* ---- partitions ---- */

BORGIA_API borgia_status borgia_partition_from_labels(const int64_t* labels, size_t n, borgia_partition** out);
/* Reads `actor_label,community_id` rows, ordered by the graph's labels. */
BORGIA_API borgia_status borgia_partition_load_csv(const char* text, size_t length, const borgia_graph* g,
                                                   borgia_partition** out);
BORGIA_API borgia_status borgia_partition_to_csv(const borgia_partition* p, const borgia_graph* g, char** out);
BORGIA_API void borgia_partition_free(borgia_partition* p);
BORGIA_API size_t borgia_partition_size(const borgia_partition* p);
BORGIA_API size_t borgia_partition_community_count(const borgia_partition* p);
BORGIA_API borgia_status borgia_partition_community_of(const borgia_partition* p, size_t actor, size_t* out);

/* ---- metrics ---- */

BORGIA_API borgia_status borgia_modularity(const borgia_graph* g, const borgia_partition* p, double* out);
BORGIA_API borgia_status borgia_modularity_density(const borgia_graph* g, const borgia_partition* p, double* out);
BORGIA_API borgia_status borgia_nmi(const borgia_partition* a, const borgia_partition* b, double* out);
BORGIA_API borgia_status borgia_ari(const borgia_partition* a, const borgia_partition* b, double* out);

typedef struct borgia_metric_report {
  size_t k;
  double modularity;
  double modularity_density;
  int has_truth; /* nmi and ari are set only when a truth partition was given */
  double nmi;
  double ari;
} borgia_metric_report;

/* truth may be NULL. */
BORGIA_API borgia_status borgia_evaluate(const borgia_graph* g, const borgia_partition* p,
                                         const borgia_partition* truth, borgia_metric_report* out);

/* ---- datasets ---- */

BORGIA_API size_t borgia_dataset_count(void);
BORGIA_API const char* borgia_dataset_name(size_t i);
BORGIA_API const char* borgia_dataset_provenance(const char* name);
/* Directory searched when none is given. */
BORGIA_API borgia_status borgia_data_directory(char** out);
/* 1 when the dataset's files are present. directory may be NULL. */
BORGIA_API int borgia_dataset_available(const char* name, const char* directory);
/* truth is set to NULL when the dataset ships without labels; it may itself be NULL. */
BORGIA_API borgia_status borgia_dataset_load(const char* name, const char* directory, borgia_graph** graph,
                                             borgia_partition** truth);

typedef struct borgia_corpus_options {
  size_t top_n;
  int default_stopwords;
  const char* extra_stopwords; /* whitespace-separated, may be NULL */
  const size_t* chapter_offsets;
  size_t chapter_count; /* 0: no temporal slicing */
} borgia_corpus_options;

BORGIA_API void borgia_corpus_options_init(borgia_corpus_options* opts);
/* slices may be NULL; it receives NULL when no chapter offsets were given. */
BORGIA_API borgia_status borgia_corpus_build(const char* text, size_t length, const borgia_corpus_options* opts,
                                             borgia_graph** graph, borgia_temporal** slices);
BORGIA_API borgia_status borgia_parse_chapter_offsets(const char* text, size_t length, size_t** offsets,
                                                      size_t* count);
BORGIA_API void borgia_offsets_free(size_t* offsets);

/* CSV with header `year,from,to,points`, summed over [first_year, last_year]. */
BORGIA_API borgia_status borgia_votes_load(const char* text, size_t length, int first_year, int last_year,
                                           borgia_graph** out);
BORGIA_API borgia_status borgia_synthetic_votes(size_t countries, size_t edges, size_t years, uint64_t seed,
                                                borgia_graph** out);

#ifdef __cplusplus
}
#endif

#endif
