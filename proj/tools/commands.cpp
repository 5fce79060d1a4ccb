#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "handles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cli {
namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("io_error", "cannot open '" + path + "' for reading", BORGIA_ERR_IO);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path output_path(const GlobalOptions& g, const std::string& name) {
  fs::path dir(g.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Failure("io_error", "cannot create output directory '" + g.out + "': " + ec.message(), BORGIA_ERR_IO);
  return dir / name;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure("io_error", "cannot open '" + path.string() + "' for writing", BORGIA_ERR_IO);
  out << text;
  if (!out) throw Failure("io_error", "failed writing '" + path.string() + "'", BORGIA_ERR_IO);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Failure("internal_error", "sha256 digest failed", BORGIA_ERR_INTERNAL);
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string short_fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

bool structured(const GlobalOptions& g) {
  if (g.format == "csv") return false;
  if (g.format == "structured-text") return true;
  usage_error("--format must be csv or structured-text");
}

std::string data_dir() {
  char* dir = nullptr;
  check(borgia_data_directory(&dir));
  return take(dir);
}

struct LoadedInput {
  GraphPtr graph;
  PartitionPtr truth;
  json descriptor;
};

LoadedInput load_input(const InputOptions& in) {
  LoadedInput out;
  if (in.input.empty()) usage_error("an input graph or dataset name is required");
  if (fs::exists(in.input)) {
    const std::string bytes = read_text(in.input);
    borgia_graph* g = nullptr;
    std::string format = in.format;
    if (format.empty()) {
      const std::string ext = fs::path(in.input).extension().string();
      format = ext == ".csv" ? "matrix-csv" : ext == ".gml" ? "gml" : "edge-list";
    }
    check(borgia_graph_load(bytes.data(), bytes.size(), format.c_str(), in.directed ? 1 : 0, &g));
    out.graph.reset(g);
    out.descriptor = {{"source", "file"},
                      {"path", fs::absolute(in.input).lexically_normal().string()},
                      {"format", format},
                      {"directed", in.directed},
                      {"sha256", sha256_hex(bytes)}};
    return out;
  }
  bool known = false;
  for (std::size_t i = 0; i < borgia_dataset_count(); ++i) known = known || in.input == borgia_dataset_name(i);
  if (!known) {
    throw Failure("not_found", "input '" + in.input + "' is neither a readable file nor a dataset name",
                  BORGIA_ERR_NOT_FOUND);
  }
  borgia_graph* g = nullptr;
  borgia_partition* truth = nullptr;
  check(borgia_dataset_load(in.input.c_str(), nullptr, &g, &truth));
  out.graph.reset(g);
  out.truth.reset(truth);
  const fs::path edges = fs::path(data_dir()) / (in.input + ".edges");
  out.descriptor = {{"source", "dataset"}, {"name", in.input}, {"sha256", sha256_hex(read_text(edges.string()))}};
  const fs::path labels = fs::path(data_dir()) / (in.input + ".labels.csv");
  if (fs::exists(labels)) out.descriptor["labels_sha256"] = sha256_hex(read_text(labels.string()));
  return out;
}

PartitionPtr load_partition(const std::string& path, const borgia_graph* g) {
  const std::string text = read_text(path);
  borgia_partition* p = nullptr;
  check(borgia_partition_load_csv(text.data(), text.size(), g, &p));
  return PartitionPtr(p);
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_error(std::string("invalid number '") + item + "' in " + flag);
    }
  }
  if (out.empty()) usage_error(std::string("empty grid for ") + flag);
  return out;
}

json engine_to_json(const borgia_engine_config& c) {
  return {{"alpha", c.alpha},
          {"p", c.p},
          {"c", c.c},
          {"tnorm", c.tnorm == BORGIA_TNORM_PRODUCT ? "product" : "minimum"},
          {"delta", c.delta},
          {"delta_mode", c.delta_mode == BORGIA_DELTA_STATIC ? "static" : "dynamic-first"},
          {"policy", c.policy == BORGIA_POLICY_NAIVE ? "naive" : "early-roman"},
          {"target_k", c.target_k},
          {"max_stall_iterations", c.max_stall_iterations},
          {"weighted_mass", c.weighted_mass != 0}};
}

borgia_engine_config engine_from_json(const json& j) {
  borgia_engine_config c;
  borgia_engine_config_init(&c);
  c.alpha = j.at("alpha").get<double>();
  c.p = j.at("p").get<double>();
  c.c = j.at("c").get<double>();
  c.tnorm = j.at("tnorm").get<std::string>() == "minimum" ? BORGIA_TNORM_MINIMUM : BORGIA_TNORM_PRODUCT;
  c.delta = j.at("delta").get<double>();
  c.delta_mode = j.at("delta_mode").get<std::string>() == "static" ? BORGIA_DELTA_STATIC : BORGIA_DELTA_DYNAMIC_FIRST;
  c.policy = j.at("policy").get<std::string>() == "naive" ? BORGIA_POLICY_NAIVE : BORGIA_POLICY_EARLY_ROMAN;
  c.target_k = j.at("target_k").get<std::size_t>();
  c.max_stall_iterations = j.at("max_stall_iterations").get<std::uint64_t>();
  c.weighted_mass = j.at("weighted_mass").get<bool>() ? 1 : 0;
  return c;
}

json classic_to_json(const borgia_classic_config& c) {
  return {{"G", c.G},
          {"epsilon", c.epsilon},
          {"delta", c.delta},
          {"max_iterations", c.max_iterations},
          {"features", c.affinity_rows ? "affinity-rows" : "adjacency-rows"},
          {"alpha", c.alpha}};
}

borgia_classic_config classic_from_json(const json& j) {
  borgia_classic_config c;
  borgia_classic_config_init(&c);
  c.G = j.at("G").get<double>();
  c.epsilon = j.at("epsilon").get<double>();
  c.delta = j.at("delta").get<double>();
  c.max_iterations = j.at("max_iterations").get<std::uint64_t>();
  c.affinity_rows = j.at("features").get<std::string>() == "affinity-rows" ? 1 : 0;
  c.alpha = j.at("alpha").get<double>();
  return c;
}

json report_to_json(const borgia_metric_report& r) {
  json j = {{"k", r.k}, {"modularity", r.modularity}, {"modularity_density", r.modularity_density}};
  if (r.has_truth) {
    j["nmi"] = r.nmi;
    j["ari"] = r.ari;
  }
  return j;
}

std::string report_to_csv(const borgia_metric_report& r) {
  std::ostringstream out;
  out << "k,modularity,modularity_density,nmi,ari\n"
      << r.k << ',' << fmt(r.modularity) << ',' << fmt(r.modularity_density) << ','
      << (r.has_truth ? fmt(r.nmi) : "") << ',' << (r.has_truth ? fmt(r.ari) : "") << '\n';
  return out.str();
}

PartitionPtr select_partition(const borgia_dendrogram* d, const std::string& mode, std::size_t k) {
  borgia_partition* p = nullptr;
  if (k) {
    check(borgia_select_fixed_k(d, k, &p));
  } else if (mode == "score") {
    check(borgia_select_score(d, &p));
  } else if (mode == "lifespan") {
    check(borgia_select_lifespan(d, &p));
  } else {
    usage_error("--select must be score or lifespan");
  }
  return PartitionPtr(p);
}

std::string kind_slug(borgia_affinity_kind k) {
  switch (k) {
    case BORGIA_AFFINITY_BEST_FRIEND: return "bf";
    case BORGIA_AFFINITY_BEST_COMMON_FRIEND: return "bcf";
    case BORGIA_AFFINITY_FRIENDS_FOREVER: return "ff";
    case BORGIA_AFFINITY_SOCIAL_NETWORKING: return "sn";
    case BORGIA_AFFINITY_MACHIAVELLI: return "ma";
    case BORGIA_AFFINITY_COMBINED: return "combined";
  }
  return "affinity";
}

double median(std::vector<double> v) {
  if (v.empty()) return NAN;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace

int cmd_affinity(const GlobalOptions& g, const AffinityOptions& o) {
  borgia_affinity_kind kind;
  check(borgia_affinity_parse_kind(o.kind.c_str(), &kind));
  borgia_affinity_spec spec;
  borgia_affinity_spec_init(&spec, kind);
  spec.alpha = o.alpha;
  if (!o.base.empty()) {
    check(borgia_affinity_parse_kind(o.base.c_str(), &spec.base_kind));
    spec.has_base = 1;
    spec.base_alpha = o.base_alpha;
  }

  GraphPtr graph;
  TemporalPtr temporal;
  borgia_affinity* raw = nullptr;
  const borgia_graph* labels = nullptr;
  if (!o.slices.empty()) {
    std::vector<GraphPtr> owned;
    std::vector<const borgia_graph*> views;
    for (const auto& path : o.slices) {
      InputOptions in = o.in;
      in.input = path;
      owned.push_back(load_input(in).graph);
      views.push_back(owned.back().get());
    }
    borgia_temporal* tg = nullptr;
    check(borgia_temporal_create(views.data(), views.size(), &tg));
    temporal.reset(tg);
    check(borgia_affinity_compute_temporal(tg, &spec, &raw));
    labels = borgia_temporal_slice(tg, 0);
  } else {
    graph = load_input(o.in).graph;
    check(borgia_affinity_compute(graph.get(), &spec, &raw));
    labels = graph.get();
  }
  AffinityPtr affinity(raw);

  char* text = nullptr;
  const std::string slug = kind_slug(kind);
  check(borgia_affinity_to_csv(raw, labels, 0, &text));
  const auto matrix_path = output_path(g, "affinity_" + slug + ".csv");
  write_text(matrix_path, take(text));
  check(borgia_affinity_to_csv(raw, labels, 1, &text));
  const auto long_path = output_path(g, "affinity_" + slug + "_long.csv");
  write_text(long_path, take(text));
  double dens = 0.0;
  check(borgia_affinity_density(raw, &dens));
  std::cout << "kind: " << borgia_affinity_kind_name(kind) << "\nactors: " << borgia_affinity_size(raw)
            << "\ndensity: " << short_fmt(dens) << "\nmatrix: " << matrix_path.string() << "\nlong: " << long_path.string()
            << "\n";

  if (o.top) {
    if (o.actor.empty()) usage_error("--top needs --actor");
    std::size_t x = 0;
    check(borgia_graph_index_of(labels, o.actor.c_str(), &x));
    const std::size_t n = borgia_affinity_size(raw);
    std::vector<std::pair<double, std::size_t>> outgoing, incoming;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      double v = 0.0;
      check(borgia_affinity_value(raw, x, y, &v));
      if (v > 0.0) outgoing.emplace_back(v, y);
      check(borgia_affinity_value(raw, y, x, &v));
      if (v > 0.0) incoming.emplace_back(v, y);
    }
    auto order = [&](auto& list) {
      std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    };
    order(outgoing);
    order(incoming);
    std::ostringstream table;
    table << "rank,outgoing,outgoing_value,incoming,incoming_value\n";
    for (std::size_t r = 0; r < o.top; ++r) {
      table << r + 1 << ',';
      if (r < outgoing.size()) {
        table << borgia_graph_label(labels, outgoing[r].second) << ',' << fmt(outgoing[r].first);
      } else {
        table << ',';
      }
      table << ',';
      if (r < incoming.size()) {
        table << borgia_graph_label(labels, incoming[r].second) << ',' << fmt(incoming[r].first);
      } else {
        table << ',';
      }
      table << '\n';
    }
    const auto top_path = output_path(g, "affinity_" + slug + "_top.csv");
    write_text(top_path, table.str());
    std::cout << table.str();
  }
  return 0;
}

int cmd_cluster(const GlobalOptions& g, ClusterOptions o) {
  json manifest_in;
  if (!o.from_manifest.empty()) {
    try {
      manifest_in = json::parse(read_text(o.from_manifest));
      const json& input = manifest_in.at("input");
      if (input.at("source") == "dataset") {
        o.in = {input.at("name").get<std::string>(), "", false};
      } else {
        o.in = {input.at("path").get<std::string>(), input.at("format").get<std::string>(), input.at("directed").get<bool>()};
      }
      o.classic = manifest_in.at("algorithm") == "classic";
      if (o.classic) {
        o.classic_cfg = classic_from_json(manifest_in.at("config"));
      } else {
        o.engine = engine_from_json(manifest_in.at("config"));
      }
      o.select = manifest_in.at("selection").at("mode").get<std::string>();
      if (o.select == "fixed-k") o.select = "score";
      o.truth = manifest_in.contains("truth") ? manifest_in["truth"].at("path").get<std::string>() : "";
    } catch (const json::exception& e) {
      throw Failure("parse_error", std::string("malformed manifest: ") + e.what(), BORGIA_ERR_PARSE);
    }
  }

  LoadedInput input = load_input(o.in);
  if (!manifest_in.is_null() && manifest_in["input"].at("sha256") != input.descriptor.at("sha256")) {
    throw Failure("checksum_mismatch", "input '" + o.in.input + "' no longer matches the manifest checksum",
                  BORGIA_ERR_IO);
  }
  PartitionPtr truth = std::move(input.truth);
  json truth_desc;
  if (!o.truth.empty()) {
    truth = load_partition(o.truth, input.graph.get());
    truth_desc = {{"path", fs::absolute(o.truth).lexically_normal().string()}, {"sha256", sha256_hex(read_text(o.truth))}};
  }
  if (o.select.empty()) o.select = o.classic ? "lifespan" : "score";
  const std::size_t k = o.classic ? 0 : o.engine.target_k;

  std::vector<borgia_iteration> trace_rows;
  auto collect = [](const borgia_iteration* it, void* user) {
    static_cast<std::vector<borgia_iteration>*>(user)->push_back(*it);
  };
  const auto start = std::chrono::steady_clock::now();
  borgia_dendrogram* raw = nullptr;
  borgia_run_info info{};
  if (o.classic) {
    check(borgia_classic_cluster(input.graph.get(), &o.classic_cfg, &raw, &info));
  } else {
    check(borgia_cluster(input.graph.get(), &o.engine, g.trace ? +collect : nullptr, &trace_rows, &raw, &info));
  }
  DendrogramPtr dendrogram(raw);
  PartitionPtr part = select_partition(raw, o.select, k);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  char* text = nullptr;
  check(borgia_dendrogram_to_json(raw, &text));
  const auto dendrogram_path = output_path(g, "dendrogram.json");
  write_text(dendrogram_path, take(text));
  check(borgia_partition_to_csv(part.get(), input.graph.get(), &text));
  const auto partition_path = output_path(g, "partition.csv");
  write_text(partition_path, take(text));

  borgia_metric_report report{};
  check(borgia_evaluate(input.graph.get(), part.get(), truth.get(), &report));

  json manifest;
  manifest["tool"] = "borgia";
  manifest["version"] = borgia_version();
  manifest["command"] = "cluster";
  manifest["input"] = input.descriptor;
  if (!truth_desc.is_null()) manifest["truth"] = truth_desc;
  manifest["algorithm"] = o.classic ? "classic" : "borgia";
  manifest["config"] = o.classic ? classic_to_json(o.classic_cfg) : engine_to_json(o.engine);
  manifest["selection"] = {{"mode", k ? "fixed-k" : o.select}, {"k", k}};
  manifest["outputs"] = {{"dendrogram", dendrogram_path.string()}, {"partition", partition_path.string()}};
  json warnings = json::array();
  for (std::size_t i = 0; i < borgia_dendrogram_warning_count(raw); ++i) warnings.push_back(borgia_dendrogram_warning(raw, i));
  manifest["result"] = {{"communities", borgia_partition_community_count(part.get())},
                        {"iterations", info.iterations},
                        {"forced_fusions", info.forced_fusions},
                        {"total_time", borgia_dendrogram_total_time(raw)},
                        {"warnings", warnings},
                        {"metrics", report_to_json(report)}};
  manifest["wall_clock_seconds"] = seconds;
  if (!manifest_in.is_null()) manifest["rerun_of"] = fs::absolute(o.from_manifest).lexically_normal().string();

  if (g.trace && !o.classic) {
    std::ostringstream t;
    t << "iteration,t,dt,delta,live,visited_pairs,nonzero_pairs,fastest_displacement\n";
    for (const auto& r : trace_rows) {
      t << r.iteration << ',' << fmt(r.t) << ',' << fmt(r.dt) << ',' << fmt(r.delta) << ',' << r.live << ','
        << r.visited_pairs << ',' << r.nonzero_pairs << ',' << fmt(r.fastest_displacement) << '\n';
    }
    const auto trace_path = output_path(g, "trace.csv");
    write_text(trace_path, t.str());
    manifest["outputs"]["trace"] = trace_path.string();
  }
  const auto manifest_path = output_path(g, "manifest.json");
  write_text(manifest_path, manifest.dump(2) + "\n");

  std::cout << "communities: " << report.k << "\niterations: " << info.iterations << "\n";
  if (report.has_truth) std::cout << "ari: " << short_fmt(report.ari) << "\nnmi: " << short_fmt(report.nmi) << "\n";
  for (const auto& w : warnings) std::cerr << "warning: " << w.get<std::string>() << "\n";
  std::cout << "manifest: " << manifest_path.string() << "\n";
  return 0;
}

int cmd_evaluate(const GlobalOptions& g, const EvaluateOptions& o) {
  const bool as_json = structured(g);
  InputOptions in = o.graph;
  if (!o.dataset.empty()) {
    if (!in.input.empty()) usage_error("give either --dataset or --graph, not both");
    in.input = o.dataset;
  }
  if (in.input.empty()) usage_error("evaluate needs --dataset or --graph");
  LoadedInput input = load_input(in);
  PartitionPtr part = load_partition(o.partition, input.graph.get());
  PartitionPtr truth = std::move(input.truth);
  if (!o.truth.empty()) truth = load_partition(o.truth, input.graph.get());
  borgia_metric_report report{};
  check(borgia_evaluate(input.graph.get(), part.get(), truth.get(), &report));
  const std::string text = as_json ? report_to_json(report).dump(2) + "\n" : report_to_csv(report);
  write_text(output_path(g, as_json ? "evaluation.json" : "evaluation.csv"), text);
  std::cout << text;
  return 0;
}

int cmd_sweep(const GlobalOptions& g, const SweepOptions& o) {
  const bool as_json = structured(g);
  const auto alphas = parse_list(o.alphas, "--alpha");
  const auto ps = parse_list(o.ps, "--p");
  const auto cs = parse_list(o.cs, "--c");
  const bool scaling = !o.edge_fractions.empty();
  const auto fractions = scaling ? parse_list(o.edge_fractions, "--edge-fractions") : std::vector<double>{1.0};
  if (o.repeats == 0) usage_error("--repeats must be positive");
  if (o.jobs == 0) usage_error("--jobs must be positive");
  LoadedInput input = load_input(o.in);

  struct Row {
    double alpha = 0.0, p = 0.0, c = 0.0, fraction = 1.0;
    std::size_t repeat = 0;
    std::size_t edges = 0;
    std::size_t k = 0;
    std::size_t iterations = 0;
    double runtime = 0.0;
    borgia_metric_report report{};
    std::string status = "ok";
    std::string error;
  };
  std::vector<Row> rows;
  for (double a : alphas)
    for (double p : ps)
      for (double c : cs)
        for (double f : fractions)
          for (std::size_t r = 0; r < (scaling ? o.repeats : 1); ++r) {
            Row row;
            row.alpha = a;
            row.p = p;
            row.c = c;
            row.fraction = f;
            row.repeat = r;
            rows.push_back(row);
          }

  auto run_row = [&](Row& row) {
    try {
      GraphPtr sampled;
      const borgia_graph* graph = input.graph.get();
      if (scaling) {
        borgia_graph* s = nullptr;
        check(borgia_graph_sample_edges(graph, row.fraction, o.seed + row.repeat, &s));
        sampled.reset(s);
        graph = s;
      }
      row.edges = borgia_graph_edge_count(graph);
      borgia_engine_config cfg = o.engine;
      cfg.alpha = row.alpha;
      cfg.p = row.p;
      cfg.c = row.c;
      const auto start = std::chrono::steady_clock::now();
      borgia_dendrogram* d = nullptr;
      borgia_run_info info{};
      check(borgia_cluster(graph, &cfg, nullptr, nullptr, &d, &info));
      DendrogramPtr dendrogram(d);
      PartitionPtr part = select_partition(d, "score", cfg.target_k);
      row.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      row.iterations = info.iterations;
      row.k = borgia_partition_community_count(part.get());
      check(borgia_evaluate(graph, part.get(), input.truth.get(), &row.report));
    } catch (const Failure& f) {
      row.status = f.code();
      row.error = f.what();
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) run_row(rows[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(o.jobs, rows.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const bool truth = input.truth != nullptr;
  std::string text;
  if (as_json) {
    json out = json::array();
    for (const auto& r : rows) {
      json j = {{"alpha", r.alpha}, {"p", r.p}, {"c", r.c}, {"edge_fraction", r.fraction}, {"repeat", r.repeat},
                {"edges", r.edges}, {"k", r.k}, {"iterations", r.iterations}, {"runtime_seconds", r.runtime},
                {"status", r.status}};
      if (r.status == "ok") {
        j["modularity"] = r.report.modularity;
        j["modularity_density"] = r.report.modularity_density;
        if (truth) {
          j["nmi"] = r.report.nmi;
          j["ari"] = r.report.ari;
        }
      } else {
        j["error"] = r.error;
      }
      out.push_back(j);
    }
    text = out.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "alpha,p,c,edge_fraction,repeat,edges,k,modularity,modularity_density,nmi,ari,iterations,runtime_seconds,status,"
         "error\n";
    for (const auto& r : rows) {
      const bool ok = r.status == "ok";
      std::string error = r.error;
      std::replace(error.begin(), error.end(), '"', '\'');
      s << fmt(r.alpha) << ',' << fmt(r.p) << ',' << fmt(r.c) << ',' << fmt(r.fraction) << ',' << r.repeat << ','
        << r.edges << ',' << r.k << ',' << (ok ? fmt(r.report.modularity) : "") << ','
        << (ok ? fmt(r.report.modularity_density) : "") << ',' << (ok && truth ? fmt(r.report.nmi) : "") << ','
        << (ok && truth ? fmt(r.report.ari) : "") << ',' << r.iterations << ',' << fmt(r.runtime) << ',' << r.status
        << ',' << (error.empty() ? "" : "\"" + error + "\"") << '\n';
    }
    text = s.str();
  }
  const auto sweep_path = output_path(g, as_json ? "sweep.json" : "sweep.csv");
  write_text(sweep_path, text);
  std::cout << "rows: " << rows.size() << "\nsweep: " << sweep_path.string() << "\n";

  if (scaling) {
    std::ostringstream s;
    s << "alpha,p,c,edge_fraction,median_edges,median_runtime_seconds,runs\n";
    for (double a : alphas)
      for (double p : ps)
        for (double c : cs)
          for (double f : fractions) {
            std::vector<double> times, edges;
            for (const auto& r : rows) {
              if (r.alpha == a && r.p == p && r.c == c && r.fraction == f && r.status == "ok") {
                times.push_back(r.runtime);
                edges.push_back(static_cast<double>(r.edges));
              }
            }
            s << fmt(a) << ',' << fmt(p) << ',' << fmt(c) << ',' << fmt(f) << ',' << fmt(median(edges)) << ','
              << fmt(median(times)) << ',' << times.size() << '\n';
          }
    const auto scaling_path = output_path(g, "scaling.csv");
    write_text(scaling_path, s.str());
    std::cout << "scaling: " << scaling_path.string() << "\n";
  }
  const bool failed = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.status != "ok"; });
  if (failed) std::cerr << "warning: some sweep rows failed; see the status column\n";
  return 0;
}

int cmd_ingest_corpus(const GlobalOptions& g, const IngestCorpusOptions& o) {
  const std::string text = read_text(o.text);
  borgia_corpus_options opts;
  borgia_corpus_options_init(&opts);
  opts.top_n = o.top_n;
  opts.default_stopwords = o.no_default_stopwords ? 0 : 1;
  std::string extra;
  if (!o.stopwords.empty()) {
    extra = read_text(o.stopwords);
    opts.extra_stopwords = extra.c_str();
  }
  size_t* offsets = nullptr;
  size_t count = 0;
  if (!o.chapters.empty()) {
    const std::string chapters = read_text(o.chapters);
    check(borgia_parse_chapter_offsets(chapters.data(), chapters.size(), &offsets, &count));
  }
  std::unique_ptr<size_t, void (*)(size_t*)> offsets_guard(offsets, borgia_offsets_free);
  opts.chapter_offsets = offsets;
  opts.chapter_count = count;

  borgia_graph* graph = nullptr;
  borgia_temporal* slices = nullptr;
  check(borgia_corpus_build(text.data(), text.size(), &opts, &graph, &slices));
  GraphPtr owned(graph);
  TemporalPtr owned_slices(slices);
  char* out = nullptr;
  check(borgia_graph_write(graph, "edge-list", &out));
  const auto path = output_path(g, "cooccurrence.edges");
  write_text(path, take(out));
  double dens = 0.0;
  check(borgia_graph_density(graph, &dens));
  std::cout << "actors: " << borgia_graph_size(graph) << "\nedges: " << borgia_graph_edge_count(graph)
            << "\ndensity: " << short_fmt(dens) << "\ngraph: " << path.string() << "\n";
  if (slices) {
    for (std::size_t t = 0; t < borgia_temporal_slice_count(slices); ++t) {
      std::ostringstream name;
      name << "slice_" << std::setw(3) << std::setfill('0') << t + 1 << ".edges";
      check(borgia_graph_write(borgia_temporal_slice(slices, t), "edge-list", &out));
      write_text(output_path(g, name.str()), take(out));
    }
    std::cout << "slices: " << borgia_temporal_slice_count(slices) << "\n";
  }
  return 0;
}

int cmd_ingest_votes(const GlobalOptions& g, const IngestVotesOptions& o) {
  const std::string text = read_text(o.csv);
  borgia_graph* graph = nullptr;
  check(borgia_votes_load(text.data(), text.size(), o.first_year, o.last_year, &graph));
  GraphPtr owned(graph);
  char* out = nullptr;
  check(borgia_graph_write(graph, "edge-list", &out));
  const auto path = output_path(g, "votes.edges");
  write_text(path, take(out));
  std::cout << "countries: " << borgia_graph_size(graph) << "\nedges: " << borgia_graph_edge_count(graph)
            << "\ngraph: " << path.string() << " (directed)\n";
  return 0;
}

int cmd_ingest_synthetic_votes(const GlobalOptions& g, const SyntheticVotesOptions& o) {
  borgia_graph* graph = nullptr;
  check(borgia_synthetic_votes(o.countries, o.edges, o.years, o.seed, &graph));
  GraphPtr owned(graph);
  char* out = nullptr;
  check(borgia_graph_write(graph, "edge-list", &out));
  const auto path = output_path(g, "synthetic_votes.edges");
  write_text(path, take(out));
  std::cout << "countries: " << borgia_graph_size(graph) << "\nedges: " << borgia_graph_edge_count(graph)
            << "\ngraph: " << path.string() << " (directed, synthetic)\n";
  return 0;
}

int cmd_datasets_list(const GlobalOptions& g) {
  const bool as_json = structured(g);
  json list = json::array();
  std::ostringstream csv;
  csv << "name,available,provenance\n";
  for (std::size_t i = 0; i < borgia_dataset_count(); ++i) {
    const char* name = borgia_dataset_name(i);
    const bool available = borgia_dataset_available(name, nullptr) != 0;
    const std::string provenance = borgia_dataset_provenance(name);
    csv << name << ',' << (available ? "yes" : "no") << ",\"" << provenance << "\"\n";
    list.push_back({{"name", name}, {"available", available}, {"provenance", provenance}});
  }
  std::cout << (as_json ? list.dump(2) + "\n" : csv.str());
  return 0;
}

int cmd_datasets_export(const GlobalOptions& g, const std::string& name) {
  borgia_graph* graph = nullptr;
  borgia_partition* truth = nullptr;
  check(borgia_dataset_load(name.c_str(), nullptr, &graph, &truth));
  GraphPtr owned(graph);
  PartitionPtr owned_truth(truth);
  char* out = nullptr;
  check(borgia_graph_write(graph, "edge-list", &out));
  const auto path = output_path(g, name + ".edges");
  write_text(path, take(out));
  std::cout << "graph: " << path.string() << "\n";
  if (truth) {
    check(borgia_partition_to_csv(truth, graph, &out));
    const auto labels = output_path(g, name + ".labels.csv");
    write_text(labels, take(out));
    std::cout << "labels: " << labels.string() << "\n";
  }
  return 0;
}

}  // namespace cli
