#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "borgia/borgia.h"

namespace cli {

struct GlobalOptions {
  std::string out = ".";
  std::string format = "csv";  // or structured-text
  bool trace = false;
};

// A graph file, or the name of a bundled dataset.
struct InputOptions {
  std::string input;
  std::string format;  // empty: infer from extension
  bool directed = false;
};

struct AffinityOptions {
  InputOptions in;
  std::string kind = "bf";
  double alpha = 0.7;
  std::string base;
  double base_alpha = 0.7;
  std::vector<std::string> slices;
  std::size_t top = 0;
  std::string actor;
};

struct ClusterOptions {
  InputOptions in;
  borgia_engine_config engine{};
  bool classic = false;
  borgia_classic_config classic_cfg{};
  std::string select;  // score, lifespan; empty: score for borgia, lifespan for classic
  std::string truth;
  std::string from_manifest;
};

struct EvaluateOptions {
  std::string partition;
  std::string dataset;
  InputOptions graph;
  std::string truth;
};

struct SweepOptions {
  InputOptions in;
  borgia_engine_config engine{};
  std::string alphas = "0.7";
  std::string ps = "3";
  std::string cs = "0";
  std::string edge_fractions;
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

struct IngestCorpusOptions {
  std::string text;
  std::size_t top_n = 130;
  std::string stopwords;
  bool no_default_stopwords = false;
  std::string chapters;
};

struct IngestVotesOptions {
  std::string csv;
  int first_year = 0;
  int last_year = 9999;
};

struct SyntheticVotesOptions {
  std::size_t countries = 52;
  std::size_t edges = 2369;
  std::size_t years = 60;
  std::uint64_t seed = 1;
};

int cmd_affinity(const GlobalOptions& g, const AffinityOptions& o);
int cmd_cluster(const GlobalOptions& g, ClusterOptions o);
int cmd_evaluate(const GlobalOptions& g, const EvaluateOptions& o);
int cmd_sweep(const GlobalOptions& g, const SweepOptions& o);
int cmd_ingest_corpus(const GlobalOptions& g, const IngestCorpusOptions& o);
int cmd_ingest_votes(const GlobalOptions& g, const IngestVotesOptions& o);
int cmd_ingest_synthetic_votes(const GlobalOptions& g, const SyntheticVotesOptions& o);
int cmd_datasets_list(const GlobalOptions& g);
int cmd_datasets_export(const GlobalOptions& g, const std::string& name);

}  // namespace cli
