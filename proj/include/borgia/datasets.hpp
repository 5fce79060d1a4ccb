#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "borgia/graph.hpp"
#include "borgia/partition.hpp"

namespace borgia {

struct LabeledDataset {
  std::string name;
  Graph graph;
  std::optional<Partition> ground_truth;
  std::string provenance;
};

/// Names load_benchmark understands, whether or not their files are present.
const std::vector<std::string>& benchmark_names();

/// Source note for a benchmark name; throws not_found for unknown names.
const std::string& benchmark_provenance(std::string_view name);

/// Directory holding the bundled benchmark files. BORGIA_DATA_DIR in the
/// environment overrides the build-time location.
std::string data_directory();

/// Loads `<name>.edges` and the optional `<name>.labels.csv` sidecar.
LabeledDataset load_benchmark(std::string_view name, const std::string& directory = {});

/// Benchmarks whose edge file is present in the directory.
std::vector<std::string> available_benchmarks(const std::string& directory = {});

struct CorpusSpec {
  std::string text;
  std::size_t top_n = 130;
  std::set<std::string> stopwords;
  // Byte offsets where chapters start; empty means no temporal slicing.
  std::vector<std::size_t> chapter_offsets;
};

struct Cooccurrence {
  Graph graph;
  std::optional<TemporalGraph> slices;
  // Token frequencies for the vocabulary, in label order.
  std::vector<std::size_t> frequencies;
};

/// Lowercase words made of ASCII letters.
std::vector<std::string> tokenize(std::string_view text);

/// Paragraphs separated by blank lines.
std::vector<std::string_view> split_paragraphs(std::string_view text);

/// A small English stopword list.
const std::set<std::string>& default_stopwords();

/// Undirected graph over the top_n most frequent non-stopword tokens, weighted
/// by the number of paragraphs that contain both words.
Cooccurrence build_cooccurrence(const CorpusSpec& spec);

/// One byte offset per line.
std::vector<std::size_t> parse_chapter_offsets(std::string_view text);

/// Directed graph of points summed over years in [first_year, last_year].
/// Input is CSV with the header `year,from,to,points`.
Graph load_votes(std::string_view csv, int first_year, int last_year);

/// Deterministic random directed weighted graph standing in for a voting
/// network: `countries` actors and exactly `edges` distinct directed edges with
/// integer weights in [1, 12 * years].
Graph synthetic_vote_network(std::size_t countries, std::size_t edges, std::size_t years, std::uint64_t seed);

/// Keeps a uniformly random subset of round(fraction * edge_count) edges.
/// Every actor is kept even when it loses all its edges.
Graph sample_edges(const Graph& g, double fraction, std::uint64_t seed);

}  // namespace borgia
