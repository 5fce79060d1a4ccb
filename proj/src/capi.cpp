#include "borgia/borgia.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "borgia/affinity.hpp"
#include "borgia/classic.hpp"
#include "borgia/datasets.hpp"
#include "borgia/dendrogram.hpp"
#include "borgia/engine.hpp"
#include "borgia/error.hpp"
#include "borgia/graph.hpp"
#include "borgia/graph_io.hpp"
#include "borgia/metrics.hpp"
#include "borgia/partition.hpp"

struct borgia_graph {
  borgia::Graph g;
};

struct borgia_temporal {
  borgia::TemporalGraph tg;
  std::vector<borgia_graph> views;
};

struct borgia_affinity {
  borgia::AffinityMatrix a;
};

struct borgia_dendrogram {
  borgia::Dendrogram d;
  std::vector<std::string> warnings;
};

struct borgia_partition {
  borgia::Partition p;
};

namespace {

thread_local std::string last_error;

void set_error(std::string message) { last_error = std::move(message); }

template <typename F>
borgia_status guard(F&& body) {
  try {
    body();
    return BORGIA_OK;
  } catch (const borgia::Error& e) {
    set_error(e.what());
    return static_cast<borgia_status>(e.code());
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return BORGIA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return BORGIA_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return BORGIA_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw borgia::Error(borgia::ErrorCode::invalid_argument, std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string_view view(const char* text, std::size_t length) {
  return text ? std::string_view(text, length) : std::string_view();
}

borgia::AffinityKind to_kind(borgia_affinity_kind k) {
  switch (k) {
    case BORGIA_AFFINITY_BEST_FRIEND: return borgia::AffinityKind::best_friend;
    case BORGIA_AFFINITY_BEST_COMMON_FRIEND: return borgia::AffinityKind::best_common_friend;
    case BORGIA_AFFINITY_FRIENDS_FOREVER: return borgia::AffinityKind::friends_forever;
    case BORGIA_AFFINITY_SOCIAL_NETWORKING: return borgia::AffinityKind::social_networking;
    case BORGIA_AFFINITY_MACHIAVELLI: return borgia::AffinityKind::machiavelli;
    case BORGIA_AFFINITY_COMBINED: return borgia::AffinityKind::combined;
  }
  throw borgia::Error(borgia::ErrorCode::invalid_argument, "unknown affinity kind " + std::to_string(static_cast<int>(k)));
}

borgia::AffinitySpec to_spec(const borgia_affinity_spec* spec) {
  require(spec, "affinity spec");
  borgia::AffinitySpec out;
  out.kind = to_kind(spec->kind);
  out.alpha = spec->alpha;
  if (spec->has_base) out.base = borgia::BaseAffinity{to_kind(spec->base_kind), spec->base_alpha};
  return out;
}

borgia::EngineConfig to_engine(const borgia_engine_config* cfg) {
  require(cfg, "engine config");
  borgia::EngineConfig out;
  out.alpha = cfg->alpha;
  out.p = cfg->p;
  out.c = cfg->c;
  switch (cfg->tnorm) {
    case BORGIA_TNORM_PRODUCT: out.tnorm = borgia::TNorm::product; break;
    case BORGIA_TNORM_MINIMUM: out.tnorm = borgia::TNorm::minimum; break;
    default: throw borgia::Error(borgia::ErrorCode::invalid_argument, "unknown t-norm");
  }
  out.delta = cfg->delta;
  switch (cfg->delta_mode) {
    case BORGIA_DELTA_STATIC: out.delta_mode = borgia::DeltaMode::fixed; break;
    case BORGIA_DELTA_DYNAMIC_FIRST: out.delta_mode = borgia::DeltaMode::dynamic_first; break;
    default: throw borgia::Error(borgia::ErrorCode::invalid_argument, "unknown delta mode");
  }
  switch (cfg->policy) {
    case BORGIA_POLICY_NAIVE: out.policy = borgia::Policy::naive; break;
    case BORGIA_POLICY_EARLY_ROMAN: out.policy = borgia::Policy::early_roman; break;
    default: throw borgia::Error(borgia::ErrorCode::invalid_argument, "unknown policy");
  }
  if (cfg->target_k) out.target_k = cfg->target_k;
  out.max_stall_iterations = static_cast<std::size_t>(cfg->max_stall_iterations);
  out.mass_weighting = cfg->weighted_mass ? borgia::Weighting::weighted : borgia::Weighting::unweighted;
  return out;
}

borgia::GraphFormat format_or_default(const char* format, borgia::GraphFormat fallback) {
  return format ? borgia::parse_graph_format(format) : fallback;
}

}  // namespace

extern "C" {

const char* borgia_version(void) { return "1.0.0"; }

const char* borgia_status_name(borgia_status status) {
  switch (status) {
    case BORGIA_OK: return "ok";
    case BORGIA_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BORGIA_ERR_PARSE: return "parse_error";
    case BORGIA_ERR_IO: return "io_error";
    case BORGIA_ERR_DIMENSION: return "dimension_mismatch";
    case BORGIA_ERR_OUT_OF_RANGE: return "out_of_range";
    case BORGIA_ERR_STALL: return "stall";
    case BORGIA_ERR_NOT_FOUND: return "not_found";
    case BORGIA_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* borgia_last_error(void) { return last_error.c_str(); }

void borgia_string_free(char* s) { std::free(s); }

borgia_status borgia_graph_load(const char* text, size_t length, const char* format, int directed, borgia_graph** out) {
  return guard([&] {
    require(out, "out");
    require(text, "text");
    auto g = std::make_unique<borgia_graph>();
    g->g = borgia::load_graph(view(text, length), format_or_default(format, borgia::GraphFormat::edge_list), directed != 0);
    *out = g.release();
  });
}

borgia_status borgia_graph_load_file(const char* path, const char* format, int directed, borgia_graph** out) {
  return guard([&] {
    require(out, "out");
    require(path, "path");
    auto g = std::make_unique<borgia_graph>();
    g->g = borgia::load_graph_file(path, format_or_default(format, borgia::format_from_path(path)), directed != 0);
    *out = g.release();
  });
}

borgia_status borgia_graph_from_matrix(const char* const* labels, const double* weights, size_t n, int directed,
                                       borgia_graph** out) {
  return guard([&] {
    require(out, "out");
    require(labels, "labels");
    require(weights, "weights");
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) {
      require(labels[i], "label");
      names.emplace_back(labels[i]);
    }
    borgia::Matrix m = borgia::Matrix::square(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) m(i, j) = weights[i * n + j];
    }
    auto g = std::make_unique<borgia_graph>();
    g->g = borgia::Graph(std::move(names), std::move(m), directed != 0);
    *out = g.release();
  });
}

void borgia_graph_free(borgia_graph* g) { delete g; }
size_t borgia_graph_size(const borgia_graph* g) { return g ? g->g.size() : 0; }
int borgia_graph_directed(const borgia_graph* g) { return g && g->g.directed() ? 1 : 0; }
size_t borgia_graph_edge_count(const borgia_graph* g) { return g ? g->g.edge_count() : 0; }

const char* borgia_graph_label(const borgia_graph* g, size_t i) {
  if (!g || i >= g->g.size()) return nullptr;
  return g->g.label(i).c_str();
}

borgia_status borgia_graph_index_of(const borgia_graph* g, const char* label, size_t* out) {
  return guard([&] {
    require(g, "graph");
    require(label, "label");
    require(out, "out");
    const auto idx = g->g.index_of(label);
    if (!idx) throw borgia::Error(borgia::ErrorCode::not_found, "no actor labelled '" + std::string(label) + "'");
    *out = *idx;
  });
}

borgia_status borgia_graph_weight(const borgia_graph* g, size_t i, size_t j, double* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    if (i >= g->g.size() || j >= g->g.size()) throw borgia::Error(borgia::ErrorCode::out_of_range, "actor index out of range");
    *out = g->g.weight(i, j);
  });
}

borgia_status borgia_graph_degree(const borgia_graph* g, size_t i, borgia_degree_mode mode, int weighted, double* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    borgia::DegreeMode m;
    switch (mode) {
      case BORGIA_DEGREE_IN: m = borgia::DegreeMode::in; break;
      case BORGIA_DEGREE_OUT: m = borgia::DegreeMode::out; break;
      case BORGIA_DEGREE_TOTAL: m = borgia::DegreeMode::total; break;
      default: throw borgia::Error(borgia::ErrorCode::invalid_argument, "unknown degree mode");
    }
    *out = borgia::degree(g->g, i, m, weighted ? borgia::Weighting::weighted : borgia::Weighting::unweighted);
  });
}

borgia_status borgia_graph_density(const borgia_graph* g, double* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = borgia::density(g->g);
  });
}

borgia_status borgia_graph_write(const borgia_graph* g, const char* format, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(borgia::write_graph(g->g, format_or_default(format, borgia::GraphFormat::edge_list)));
  });
}

borgia_status borgia_graph_sample_edges(const borgia_graph* g, double fraction, uint64_t seed, borgia_graph** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto s = std::make_unique<borgia_graph>();
    s->g = borgia::sample_edges(g->g, fraction, seed);
    *out = s.release();
  });
}

borgia_status borgia_temporal_create(const borgia_graph* const* slices, size_t count, borgia_temporal** out) {
  return guard([&] {
    require(out, "out");
    require(slices, "slices");
    std::vector<borgia::Graph> graphs;
    for (size_t t = 0; t < count; ++t) {
      require(slices[t], "slice");
      graphs.push_back(slices[t]->g);
    }
    auto tg = std::unique_ptr<borgia_temporal>(new borgia_temporal{borgia::TemporalGraph(std::move(graphs)), {}});
    for (const auto& s : tg->tg.slices()) tg->views.push_back({s});
    *out = tg.release();
  });
}

void borgia_temporal_free(borgia_temporal* tg) { delete tg; }
size_t borgia_temporal_slice_count(const borgia_temporal* tg) { return tg ? tg->tg.slice_count() : 0; }

const borgia_graph* borgia_temporal_slice(const borgia_temporal* tg, size_t t) {
  if (!tg || t >= tg->views.size()) return nullptr;
  return &tg->views[t];
}

void borgia_affinity_spec_init(borgia_affinity_spec* spec, borgia_affinity_kind kind) {
  if (!spec) return;
  spec->kind = kind;
  spec->alpha = kind == BORGIA_AFFINITY_COMBINED ? 0.7 : 1.0;
  spec->has_base = 0;
  spec->base_kind = BORGIA_AFFINITY_BEST_FRIEND;
  spec->base_alpha = 1.0;
}

borgia_status borgia_affinity_parse_kind(const char* name, borgia_affinity_kind* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<borgia_affinity_kind>(borgia::parse_affinity_kind(name));
  });
}

const char* borgia_affinity_kind_name(borgia_affinity_kind kind) {
  try {
    return borgia::affinity_kind_name(to_kind(kind));
  } catch (...) {
    return "unknown";
  }
}

borgia_status borgia_affinity_compute(const borgia_graph* g, const borgia_affinity_spec* spec, borgia_affinity** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto a = std::make_unique<borgia_affinity>();
    a->a = borgia::compute_affinity(g->g, to_spec(spec));
    *out = a.release();
  });
}

borgia_status borgia_affinity_compute_temporal(const borgia_temporal* tg, const borgia_affinity_spec* spec,
                                               borgia_affinity** out) {
  return guard([&] {
    require(tg, "temporal graph");
    require(out, "out");
    auto a = std::make_unique<borgia_affinity>();
    a->a = borgia::compute_affinity(tg->tg, to_spec(spec));
    *out = a.release();
  });
}

void borgia_affinity_free(borgia_affinity* a) { delete a; }
size_t borgia_affinity_size(const borgia_affinity* a) { return a ? a->a.size() : 0; }

borgia_status borgia_affinity_value(const borgia_affinity* a, size_t x, size_t y, double* out) {
  return guard([&] {
    require(a, "affinity");
    require(out, "out");
    if (x >= a->a.size() || y >= a->a.size()) throw borgia::Error(borgia::ErrorCode::out_of_range, "actor index out of range");
    *out = a->a(x, y);
  });
}

borgia_status borgia_affinity_density(const borgia_affinity* a, double* out) {
  return guard([&] {
    require(a, "affinity");
    require(out, "out");
    *out = borgia::matrix_density(a->a.values);
  });
}

borgia_status borgia_affinity_to_csv(const borgia_affinity* a, const borgia_graph* labels, int long_form, char** out) {
  return guard([&] {
    require(a, "affinity");
    require(labels, "graph");
    require(out, "out");
    const auto& names = labels->g.labels();
    *out = duplicate(long_form ? borgia::affinity_to_long_csv(a->a, names) : borgia::affinity_to_matrix_csv(a->a, names));
  });
}

void borgia_engine_config_init(borgia_engine_config* cfg) {
  if (!cfg) return;
  const borgia::EngineConfig d;
  cfg->alpha = d.alpha;
  cfg->p = d.p;
  cfg->c = d.c;
  cfg->tnorm = BORGIA_TNORM_PRODUCT;
  cfg->delta = d.delta;
  cfg->delta_mode = BORGIA_DELTA_DYNAMIC_FIRST;
  cfg->policy = BORGIA_POLICY_EARLY_ROMAN;
  cfg->target_k = 0;
  cfg->max_stall_iterations = d.max_stall_iterations;
  cfg->weighted_mass = 0;
}

borgia_status borgia_cluster(const borgia_graph* g, const borgia_engine_config* cfg, borgia_trace_fn trace, void* user,
                             borgia_dendrogram** out, borgia_run_info* info) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    const borgia::EngineConfig engine = to_engine(cfg);
    borgia::TraceCallback callback;
    if (trace) {
      callback = [trace, user](const borgia::IterationTrace& it) {
        const borgia_iteration c{it.iteration, it.t,    it.dt,           it.delta,
                                 it.live,      it.visited_pairs, it.nonzero_pairs, it.fastest_displacement};
        trace(&c, user);
      };
    }
    auto result = borgia::run(g->g, engine, callback);
    auto d = std::make_unique<borgia_dendrogram>();
    d->d = std::move(result.dendrogram);
    d->warnings = std::move(result.warnings);
    if (info) *info = {result.iterations, result.forced_fusions};
    *out = d.release();
  });
}

void borgia_classic_config_init(borgia_classic_config* cfg) {
  if (!cfg) return;
  const borgia::ClassicConfig d;
  cfg->G = d.G;
  cfg->epsilon = 0.0;
  cfg->delta = 0.0;
  cfg->max_iterations = d.max_iterations;
  cfg->affinity_rows = 0;
  cfg->alpha = d.affinity.alpha;
}

borgia_status borgia_classic_cluster(const borgia_graph* g, const borgia_classic_config* cfg, borgia_dendrogram** out,
                                     borgia_run_info* info) {
  return guard([&] {
    require(g, "graph");
    require(cfg, "classic config");
    require(out, "out");
    borgia::ClassicConfig c;
    c.G = cfg->G;
    if (cfg->epsilon != 0.0) c.epsilon = cfg->epsilon;
    if (cfg->delta != 0.0) c.delta = cfg->delta;
    c.max_iterations = static_cast<std::size_t>(cfg->max_iterations);
    c.features = cfg->affinity_rows ? borgia::FeatureSource::affinity_rows : borgia::FeatureSource::adjacency_rows;
    c.affinity = {borgia::AffinityKind::combined, cfg->alpha, std::nullopt};
    auto result = borgia::classic_run(g->g, c);
    auto d = std::make_unique<borgia_dendrogram>();
    d->d = std::move(result.dendrogram);
    if (info) *info = {result.iterations, 0};
    *out = d.release();
  });
}

void borgia_dendrogram_free(borgia_dendrogram* d) { delete d; }
size_t borgia_dendrogram_actor_count(const borgia_dendrogram* d) { return d ? d->d.n : 0; }
size_t borgia_dendrogram_fusion_count(const borgia_dendrogram* d) { return d ? d->d.fusions.size() : 0; }
double borgia_dendrogram_total_time(const borgia_dendrogram* d) { return d ? d->d.total_time : 0.0; }

borgia_status borgia_dendrogram_fusion(const borgia_dendrogram* d, size_t f, borgia_fusion* out) {
  return guard([&] {
    require(d, "dendrogram");
    require(out, "out");
    if (f >= d->d.fusions.size()) throw borgia::Error(borgia::ErrorCode::out_of_range, "fusion index out of range");
    const auto& fu = d->d.fusions[f];
    *out = {fu.t, fu.left, fu.right, fu.id, fu.mass, fu.forced ? 1 : 0};
  });
}

size_t borgia_dendrogram_warning_count(const borgia_dendrogram* d) { return d ? d->warnings.size() : 0; }

const char* borgia_dendrogram_warning(const borgia_dendrogram* d, size_t i) {
  if (!d || i >= d->warnings.size()) return nullptr;
  return d->warnings[i].c_str();
}

borgia_status borgia_dendrogram_to_json(const borgia_dendrogram* d, char** out) {
  return guard([&] {
    require(d, "dendrogram");
    require(out, "out");
    *out = duplicate(borgia::dendrogram_to_json(d->d));
  });
}

borgia_status borgia_dendrogram_from_json(const char* text, size_t length, borgia_dendrogram** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    auto d = std::make_unique<borgia_dendrogram>();
    d->d = borgia::dendrogram_from_json(view(text, length));
    *out = d.release();
  });
}

borgia_status borgia_select_score(const borgia_dendrogram* d, borgia_partition** out) {
  return guard([&] {
    require(d, "dendrogram");
    require(out, "out");
    *out = new borgia_partition{borgia::select_by_score(d->d)};
  });
}

borgia_status borgia_select_lifespan(const borgia_dendrogram* d, borgia_partition** out) {
  return guard([&] {
    require(d, "dendrogram");
    require(out, "out");
    *out = new borgia_partition{borgia::select_by_lifespan(d->d)};
  });
}

borgia_status borgia_select_fixed_k(const borgia_dendrogram* d, size_t k, borgia_partition** out) {
  return guard([&] {
    require(d, "dendrogram");
    require(out, "out");
    *out = new borgia_partition{borgia::select_fixed_k(d->d, k)};
  });
}

borgia_status borgia_partition_from_labels(const int64_t* labels, size_t n, borgia_partition** out) {
  return guard([&] {
    require(out, "out");
    if (n) require(labels, "labels");
    std::vector<long long> v(labels, labels + n);
    *out = new borgia_partition{borgia::Partition(v)};
  });
}

borgia_status borgia_partition_load_csv(const char* text, size_t length, const borgia_graph* g, borgia_partition** out) {
  return guard([&] {
    require(text, "text");
    require(g, "graph");
    require(out, "out");
    *out = new borgia_partition{borgia::partition_from_csv(view(text, length), g->g.labels())};
  });
}

borgia_status borgia_partition_to_csv(const borgia_partition* p, const borgia_graph* g, char** out) {
  return guard([&] {
    require(p, "partition");
    require(g, "graph");
    require(out, "out");
    *out = duplicate(borgia::partition_to_csv(p->p, g->g.labels()));
  });
}

void borgia_partition_free(borgia_partition* p) { delete p; }
size_t borgia_partition_size(const borgia_partition* p) { return p ? p->p.size() : 0; }
size_t borgia_partition_community_count(const borgia_partition* p) { return p ? p->p.community_count() : 0; }

borgia_status borgia_partition_community_of(const borgia_partition* p, size_t actor, size_t* out) {
  return guard([&] {
    require(p, "partition");
    require(out, "out");
    if (actor >= p->p.size()) throw borgia::Error(borgia::ErrorCode::out_of_range, "actor index out of range");
    *out = p->p.community_of(actor);
  });
}

borgia_status borgia_modularity(const borgia_graph* g, const borgia_partition* p, double* out) {
  return guard([&] {
    require(g, "graph");
    require(p, "partition");
    require(out, "out");
    *out = borgia::modularity(g->g, p->p);
  });
}

borgia_status borgia_modularity_density(const borgia_graph* g, const borgia_partition* p, double* out) {
  return guard([&] {
    require(g, "graph");
    require(p, "partition");
    require(out, "out");
    *out = borgia::modularity_density(g->g, p->p);
  });
}

borgia_status borgia_nmi(const borgia_partition* a, const borgia_partition* b, double* out) {
  return guard([&] {
    require(a, "partition");
    require(b, "partition");
    require(out, "out");
    *out = borgia::nmi(a->p, b->p);
  });
}

borgia_status borgia_ari(const borgia_partition* a, const borgia_partition* b, double* out) {
  return guard([&] {
    require(a, "partition");
    require(b, "partition");
    require(out, "out");
    *out = borgia::ari(a->p, b->p);
  });
}

borgia_status borgia_evaluate(const borgia_graph* g, const borgia_partition* p, const borgia_partition* truth,
                              borgia_metric_report* out) {
  return guard([&] {
    require(g, "graph");
    require(p, "partition");
    require(out, "out");
    const auto r = borgia::evaluate(g->g, p->p, truth ? &truth->p : nullptr);
    *out = {r.k, r.modularity, r.modularity_density, r.nmi ? 1 : 0, r.nmi.value_or(0.0), r.ari.value_or(0.0)};
  });
}

size_t borgia_dataset_count(void) { return borgia::benchmark_names().size(); }

const char* borgia_dataset_name(size_t i) {
  const auto& names = borgia::benchmark_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

const char* borgia_dataset_provenance(const char* name) {
  if (!name) return nullptr;
  try {
    return borgia::benchmark_provenance(name).c_str();
  } catch (...) {
    return nullptr;
  }
}

borgia_status borgia_data_directory(char** out) {
  return guard([&] {
    require(out, "out");
    *out = duplicate(borgia::data_directory());
  });
}

int borgia_dataset_available(const char* name, const char* directory) {
  if (!name) return 0;
  for (const auto& n : borgia::available_benchmarks(directory ? directory : "")) {
    if (n == name) return 1;
  }
  return 0;
}

borgia_status borgia_dataset_load(const char* name, const char* directory, borgia_graph** graph,
                                  borgia_partition** truth) {
  return guard([&] {
    require(name, "name");
    require(graph, "graph");
    auto ds = borgia::load_benchmark(name, directory ? directory : "");
    auto g = std::make_unique<borgia_graph>();
    g->g = std::move(ds.graph);
    std::unique_ptr<borgia_partition> p;
    if (ds.ground_truth) p.reset(new borgia_partition{std::move(*ds.ground_truth)});
    *graph = g.release();
    if (truth) *truth = p.release();
  });
}

void borgia_corpus_options_init(borgia_corpus_options* opts) {
  if (!opts) return;
  opts->top_n = 130;
  opts->default_stopwords = 1;
  opts->extra_stopwords = nullptr;
  opts->chapter_offsets = nullptr;
  opts->chapter_count = 0;
}

borgia_status borgia_corpus_build(const char* text, size_t length, const borgia_corpus_options* opts,
                                  borgia_graph** graph, borgia_temporal** slices) {
  return guard([&] {
    require(text, "text");
    require(opts, "options");
    require(graph, "graph");
    borgia::CorpusSpec spec;
    spec.text.assign(text, length);
    spec.top_n = opts->top_n;
    if (opts->default_stopwords) spec.stopwords = borgia::default_stopwords();
    if (opts->extra_stopwords) {
      for (auto& w : borgia::tokenize(opts->extra_stopwords)) spec.stopwords.insert(std::move(w));
    }
    if (opts->chapter_count) {
      require(opts->chapter_offsets, "chapter offsets");
      spec.chapter_offsets.assign(opts->chapter_offsets, opts->chapter_offsets + opts->chapter_count);
    }
    auto built = borgia::build_cooccurrence(spec);
    auto g = std::make_unique<borgia_graph>();
    g->g = std::move(built.graph);
    std::unique_ptr<borgia_temporal> tg;
    if (built.slices) {
      tg.reset(new borgia_temporal{std::move(*built.slices), {}});
      for (const auto& s : tg->tg.slices()) tg->views.push_back({s});
    }
    *graph = g.release();
    if (slices) *slices = tg.release();
  });
}

borgia_status borgia_parse_chapter_offsets(const char* text, size_t length, size_t** offsets, size_t* count) {
  return guard([&] {
    require(text, "text");
    require(offsets, "offsets");
    require(count, "count");
    const auto parsed = borgia::parse_chapter_offsets(view(text, length));
    auto* buffer = static_cast<size_t*>(std::malloc(parsed.size() * sizeof(size_t)));
    if (!buffer) throw std::bad_alloc();
    std::copy(parsed.begin(), parsed.end(), buffer);
    *offsets = buffer;
    *count = parsed.size();
  });
}

void borgia_offsets_free(size_t* offsets) { std::free(offsets); }

borgia_status borgia_votes_load(const char* text, size_t length, int first_year, int last_year, borgia_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    auto g = std::make_unique<borgia_graph>();
    g->g = borgia::load_votes(view(text, length), first_year, last_year);
    *out = g.release();
  });
}

borgia_status borgia_synthetic_votes(size_t countries, size_t edges, size_t years, uint64_t seed, borgia_graph** out) {
  return guard([&] {
    require(out, "out");
    auto g = std::make_unique<borgia_graph>();
    g->g = borgia::synthetic_vote_network(countries, edges, years, seed);
    *out = g.release();
  });
}

}  // extern "C"
