#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "handles.hpp"

namespace {

void add_input(CLI::App* cmd, cli::InputOptions& in, bool required = true) {
  auto* opt = cmd->add_option("input", in.input, "Graph file or bundled dataset name");
  if (required) opt->required();
  cmd->add_option("--input-format", in.format, "edge-list, matrix-csv or gml (default: from extension)")
      ->check(CLI::IsMember({"edge-list", "matrix-csv", "gml"}));
  cmd->add_flag("--directed", in.directed, "Read the input as a directed graph");
}

void add_engine(CLI::App* cmd, borgia_engine_config& e, bool grid) {
  if (!grid) {
    cmd->add_option("--alpha", e.alpha, "Weight of best friend against best common friend")->capture_default_str();
    cmd->add_option("--p", e.p, "Greedy expanse penalty exponent")->capture_default_str();
    cmd->add_option("--c", e.c, "Mass product exponent")->capture_default_str();
    cmd->add_option("--k", e.target_k, "Cut the dendrogram at exactly k communities");
  }
  cmd->add_option("--delta", e.delta, "Largest displacement per iteration")->capture_default_str();
  cmd->add_option_function<std::string>(
         "--tnorm", [&e](const std::string& v) { e.tnorm = v == "minimum" ? BORGIA_TNORM_MINIMUM : BORGIA_TNORM_PRODUCT; },
         "product or minimum")
      ->check(CLI::IsMember({"product", "minimum"}));
  cmd->add_option_function<std::string>(
         "--delta-mode",
         [&e](const std::string& v) { e.delta_mode = v == "static" ? BORGIA_DELTA_STATIC : BORGIA_DELTA_DYNAMIC_FIRST; },
         "static or dynamic-first")
      ->check(CLI::IsMember({"static", "dynamic-first"}));
  cmd->add_option_function<std::string>(
         "--policy", [&e](const std::string& v) { e.policy = v == "naive" ? BORGIA_POLICY_NAIVE : BORGIA_POLICY_EARLY_ROMAN; },
         "naive or early-roman")
      ->check(CLI::IsMember({"naive", "early-roman"}));
  cmd->add_option("--max-stall", e.max_stall_iterations, "Iterations without a fusion before giving up");
  cmd->add_flag("--weighted-mass", e.weighted_mass, "Use weighted degree as the initial mass");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection with affinity matrices and gravitational clustering", "borgia"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(borgia_version()));

  cli::GlobalOptions global;
  app.add_option("--out", global.out, "Output directory")->capture_default_str();
  app.add_option("--format", global.format, "Report format")
      ->check(CLI::IsMember({"csv", "structured-text"}))
      ->capture_default_str();
  app.add_flag("--trace", global.trace, "Write per-iteration trace.csv when clustering");

  cli::AffinityOptions aff;
  auto* affinity = app.add_subcommand("affinity", "Compute an affinity matrix");
  add_input(affinity, aff.in, false);
  affinity->add_option("--kind", aff.kind, "bf, bcf, ff, sn, ma or combined")->capture_default_str();
  affinity->add_option("--alpha", aff.alpha, "Mix for the combined kind")->capture_default_str();
  affinity->add_option("--base", aff.base, "Base affinity for sn and bcf");
  affinity->add_option("--base-alpha", aff.base_alpha, "Mix when the base is combined");
  affinity->add_option("--slices", aff.slices, "Temporal slice files (required for ff)");
  affinity->add_option("--top", aff.top, "Also write the top-k incoming and outgoing table");
  affinity->add_option("--actor", aff.actor, "Actor for --top");

  cli::ClusterOptions cl;
  borgia_engine_config_init(&cl.engine);
  borgia_classic_config_init(&cl.classic_cfg);
  auto* cluster = app.add_subcommand("cluster", "Run the clustering and select a partition");
  add_input(cluster, cl.in, false);
  add_engine(cluster, cl.engine, false);
  cluster->add_option_function<std::string>(
             "--baseline", [&cl](const std::string&) { cl.classic = true; }, "Run the classic gravitational baseline")
      ->check(CLI::IsMember({"classic"}));
  cluster->add_option("--G", cl.classic_cfg.G, "Classic: gravitational constant");
  cluster->add_option("--epsilon", cl.classic_cfg.epsilon, "Classic: merge distance (0 = automatic)");
  cluster->add_option("--classic-delta", cl.classic_cfg.delta, "Classic: displacement per step (0 = automatic)");
  cluster->add_option("--max-iterations", cl.classic_cfg.max_iterations, "Classic: iteration limit");
  cluster->add_option_function<std::string>(
             "--features", [&cl](const std::string& v) { cl.classic_cfg.affinity_rows = v == "affinity-rows"; },
             "Classic: adjacency-rows or affinity-rows")
      ->check(CLI::IsMember({"adjacency-rows", "affinity-rows"}));
  cluster->add_option("--select", cl.select, "score or lifespan")->check(CLI::IsMember({"score", "lifespan"}));
  cluster->add_option("--truth", cl.truth, "Ground-truth partition CSV for the manifest metrics");
  cluster->add_option("--from-manifest", cl.from_manifest, "Re-run exactly as recorded in a manifest");

  cli::EvaluateOptions ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score a partition");
  evaluate->add_option("partition", ev.partition, "Partition CSV (actor_label,community_id)")->required();
  evaluate->add_option("--dataset", ev.dataset, "Bundled dataset providing graph and truth");
  evaluate->add_option("--graph", ev.graph.input, "Graph file");
  evaluate->add_option("--input-format", ev.graph.format, "Graph format");
  evaluate->add_flag("--directed", ev.graph.directed, "Read the graph as directed");
  evaluate->add_option("--truth", ev.truth, "Ground-truth partition CSV");

  cli::SweepOptions sw;
  borgia_engine_config_init(&sw.engine);
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid");
  add_input(sweep, sw.in);
  add_engine(sweep, sw.engine, true);
  sweep->add_option("--alpha", sw.alphas, "Comma-separated alpha values")->capture_default_str();
  sweep->add_option("--p", sw.ps, "Comma-separated p values")->capture_default_str();
  sweep->add_option("--c", sw.cs, "Comma-separated c values")->capture_default_str();
  sweep->add_option("--k", sw.engine.target_k, "Fixed community count for every row");
  sweep->add_option("--edge-fractions", sw.edge_fractions, "Comma-separated edge fractions for a scaling study");
  sweep->add_option("--repeats", sw.repeats, "Samples per edge fraction")->capture_default_str();
  sweep->add_option("--seed", sw.seed, "Seed for edge sampling")->capture_default_str();
  sweep->add_option("--jobs", sw.jobs, "Concurrent runs")->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Build graphs from raw sources");
  ingest->require_subcommand(1);
  cli::IngestCorpusOptions co;
  auto* corpus = ingest->add_subcommand("corpus", "Paragraph co-occurrence network from a text");
  corpus->add_option("text", co.text, "Plain-text file")->required();
  corpus->add_option("--top-n", co.top_n, "Vocabulary size")->capture_default_str();
  corpus->add_option("--stopwords", co.stopwords, "Extra stopwords file");
  corpus->add_flag("--no-default-stopwords", co.no_default_stopwords, "Drop the built-in stopword list");
  corpus->add_option("--chapters", co.chapters, "Chapter start byte offsets, one per line");
  cli::IngestVotesOptions vo;
  auto* votes = ingest->add_subcommand("votes", "Directed voting network from year,from,to,points rows");
  votes->add_option("csv", vo.csv, "Vote CSV")->required();
  votes->add_option("--first-year", vo.first_year, "First year included")->capture_default_str();
  votes->add_option("--last-year", vo.last_year, "Last year included")->capture_default_str();
  cli::SyntheticVotesOptions so;
  auto* synthetic = ingest->add_subcommand("synthetic-votes", "Random voting network of a given size");
  synthetic->add_option("--countries", so.countries)->capture_default_str();
  synthetic->add_option("--edges", so.edges)->capture_default_str();
  synthetic->add_option("--years", so.years)->capture_default_str();
  synthetic->add_option("--seed", so.seed)->capture_default_str();

  auto* datasets = app.add_subcommand("datasets", "List or export bundled benchmarks");
  datasets->require_subcommand(1);
  auto* list = datasets->add_subcommand("list", "Show bundled datasets");
  std::string export_name;
  auto* exporter = datasets->add_subcommand("export", "Write a dataset's edges and labels to --out");
  exporter->add_option("name", export_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage_error: " << e.what() << "\n";
    return cli::kUsageExit;
  }

  try {
    if (affinity->parsed()) {
      if (aff.in.input.empty() && aff.slices.empty()) cli::usage_error("affinity needs an input graph or --slices");
      return cli::cmd_affinity(global, aff);
    }
    if (cluster->parsed()) {
      if (cl.in.input.empty() && cl.from_manifest.empty()) cli::usage_error("cluster needs an input or --from-manifest");
      return cli::cmd_cluster(global, cl);
    }
    if (evaluate->parsed()) return cli::cmd_evaluate(global, ev);
    if (sweep->parsed()) return cli::cmd_sweep(global, sw);
    if (corpus->parsed()) return cli::cmd_ingest_corpus(global, co);
    if (votes->parsed()) return cli::cmd_ingest_votes(global, vo);
    if (synthetic->parsed()) return cli::cmd_ingest_synthetic_votes(global, so);
    if (list->parsed()) return cli::cmd_datasets_list(global);
    if (exporter->parsed()) return cli::cmd_datasets_export(global, export_name);
  } catch (const cli::Failure& f) {
    std::cerr << "error: " << f.code() << ": " << f.what() << "\n";
    return f.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: internal_error: " << e.what() << "\n";
    return BORGIA_ERR_INTERNAL;
  }
  return 0;
}
