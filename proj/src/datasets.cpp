#include "borgia/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <tuple>
#include <unordered_map>

#include "borgia/error.hpp"
#include "borgia/graph_io.hpp"

#ifndef BORGIA_DATA_DIR
#define BORGIA_DATA_DIR "data"
#endif

namespace borgia {
namespace {

struct BenchmarkInfo {
  const char* name;
  const char* provenance;
};

constexpr BenchmarkInfo kBenchmarks[] = {
    {"karate", "Zachary karate club, 34 members; labels give the club each member joined after the split"},
    {"dolphins", "Lusseau bottlenose dolphin social network, 62 animals; labels give the two observed groups"},
    {"football", "Division IA college football games, fall 2000, 115 teams; labels give the 12 conferences"},
    {"polbooks", "Krebs books on US politics, 105 books; labels give liberal, neutral or conservative"},
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
  return value;
}

}  // namespace

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& b : kBenchmarks) out.emplace_back(b.name);
    return out;
  }();
  return names;
}

const std::string& benchmark_provenance(std::string_view name) {
  static const std::vector<std::string> notes = [] {
    std::vector<std::string> out;
    for (const auto& b : kBenchmarks) out.emplace_back(b.provenance);
    return out;
  }();
  const auto& names = benchmark_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return notes[i];
  }
  throw Error(ErrorCode::not_found, "unknown dataset '" + std::string(name) + "'; available datasets: " + join(names));
}

std::string data_directory() {
  if (const char* env = std::getenv("BORGIA_DATA_DIR"); env && *env) return env;
  return BORGIA_DATA_DIR;
}

LabeledDataset load_benchmark(std::string_view name, const std::string& directory) {
  const BenchmarkInfo* info = nullptr;
  for (const auto& b : kBenchmarks) {
    if (name == b.name) info = &b;
  }
  if (!info) {
    throw Error(ErrorCode::not_found,
                "unknown dataset '" + std::string(name) + "'; available datasets: " + join(benchmark_names()));
  }
  const std::filesystem::path dir = directory.empty() ? data_directory() : directory;
  const auto edges = dir / (std::string(name) + ".edges");
  const auto labels = dir / (std::string(name) + ".labels.csv");
  if (!std::filesystem::exists(edges)) {
    throw Error(ErrorCode::not_found, "dataset '" + std::string(name) + "' has no data file at " + edges.string());
  }
  LabeledDataset ds;
  ds.name = info->name;
  ds.provenance = info->provenance;
  ds.graph = load_graph_file(edges.string(), GraphFormat::edge_list, false);
  if (std::filesystem::exists(labels)) ds.ground_truth = partition_from_csv(read_file(labels.string()), ds.graph.labels());
  return ds;
}

std::vector<std::string> available_benchmarks(const std::string& directory) {
  const std::filesystem::path dir = directory.empty() ? data_directory() : directory;
  std::vector<std::string> out;
  for (const auto& b : kBenchmarks) {
    if (std::filesystem::exists(dir / (std::string(b.name) + ".edges"))) out.emplace_back(b.name);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string word;
  for (char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (c < 128 && std::isalpha(c)) {
      word.push_back(static_cast<char>(std::tolower(c)));
    } else if (!word.empty()) {
      out.push_back(std::move(word));
      word.clear();
    }
  }
  if (!word.empty()) out.push_back(std::move(word));
  return out;
}

std::vector<std::string_view> split_paragraphs(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  std::size_t para_start = std::string_view::npos;
  std::size_t para_end = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (blank(line)) {
      if (para_start != std::string_view::npos) out.push_back(text.substr(para_start, para_end - para_start));
      para_start = std::string_view::npos;
    } else {
      if (para_start == std::string_view::npos) para_start = start;
      para_end = end;
    }
    start = end + 1;
  }
  if (para_start != std::string_view::npos) out.push_back(text.substr(para_start, para_end - para_start));
  return out;
}

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = {
      "a",     "about", "above", "after", "again", "against", "all",    "am",    "an",    "and",   "any",
      "are",   "as",    "at",    "be",    "because", "been",  "before", "being", "below", "between", "both",
      "but",   "by",    "can",   "could", "did",   "do",      "does",   "doing", "down",  "during", "each",
      "few",   "for",   "from",  "further", "had", "has",     "have",   "having", "he",   "her",   "here",
      "hers",  "herself", "him", "himself", "his", "how",     "i",      "if",    "in",    "into",  "is",
      "it",    "its",   "itself", "just", "me",    "more",    "most",   "my",    "myself", "no",   "nor",
      "not",   "now",   "of",    "off",   "on",    "once",    "only",   "or",    "other", "our",   "ours",
      "ourselves", "out", "over", "own",  "s",     "said",    "same",   "shall", "she",   "should", "so",
      "some",  "such",  "t",     "than",  "that",  "the",     "their",  "theirs", "them", "themselves", "then",
      "there", "these", "they",  "this",  "those", "thou",    "through", "thee", "thy",   "to",    "too",
      "under", "until", "up",    "upon",  "us",    "very",    "was",    "we",    "were",  "what",  "when",
      "where", "which", "while", "who",   "whom",  "why",     "will",   "with",  "would", "ye",    "yes",
      "yet",   "you",   "your",  "yours", "yourself", "yourselves"};
  return words;
}

Cooccurrence build_cooccurrence(const CorpusSpec& spec) {
  if (spec.top_n < 2) throw Error(ErrorCode::out_of_range, "top_n must be at least 2");
  if (spec.text.empty()) throw Error(ErrorCode::invalid_argument, "corpus text is empty");
  const std::string_view text = spec.text;

  std::unordered_map<std::string, std::size_t> counts;
  for (auto& tok : tokenize(text)) {
    if (!spec.stopwords.count(tok)) ++counts[tok];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > spec.top_n) ranked.resize(spec.top_n);
  if (ranked.size() < 2) {
    throw Error(ErrorCode::invalid_argument,
                "vocabulary has " + std::to_string(ranked.size()) + " word(s) after filtering; at least 2 needed");
  }

  const std::size_t n = ranked.size();
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  Cooccurrence out;
  for (const auto& [word, count] : ranked) {
    index.emplace(word, labels.size());
    labels.push_back(word);
    out.frequencies.push_back(count);
  }

  auto count_pairs = [&](std::string_view part) {
    Matrix w = Matrix::square(n);
    for (std::string_view para : split_paragraphs(part)) {
      std::vector<std::size_t> present;
      for (const auto& tok : tokenize(para)) {
        auto it = index.find(tok);
        if (it != index.end()) present.push_back(it->second);
      }
      std::sort(present.begin(), present.end());
      present.erase(std::unique(present.begin(), present.end()), present.end());
      for (std::size_t a = 0; a < present.size(); ++a) {
        for (std::size_t b = a + 1; b < present.size(); ++b) {
          w(present[a], present[b]) += 1.0;
          w(present[b], present[a]) += 1.0;
        }
      }
    }
    return Graph(labels, std::move(w), false);
  };

  out.graph = count_pairs(text);
  if (!spec.chapter_offsets.empty()) {
    std::vector<std::size_t> offsets = spec.chapter_offsets;
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    if (offsets.back() >= text.size()) {
      throw Error(ErrorCode::out_of_range, "chapter offset " + std::to_string(offsets.back()) +
                                               " lies beyond the " + std::to_string(text.size()) + "-byte text");
    }
    std::vector<Graph> slices;
    for (std::size_t c = 0; c < offsets.size(); ++c) {
      const std::size_t end = c + 1 < offsets.size() ? offsets[c + 1] : text.size();
      slices.push_back(count_pairs(text.substr(offsets[c], end - offsets[c])));
    }
    out.slices.emplace(std::move(slices));
  }
  return out;
}

std::vector<std::size_t> parse_chapter_offsets(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_number<std::size_t>(line, line_no, "byte offset"));
  }
  if (out.empty()) throw Error(ErrorCode::invalid_argument, "slicing file lists no chapter offsets");
  return out;
}

Graph load_votes(std::string_view csv, int first_year, int last_year) {
  if (first_year > last_year) throw Error(ErrorCode::out_of_range, "first year is after last year");
  struct Row {
    std::string from;
    std::string to;
    double points;
  };
  std::vector<Row> rows;
  std::size_t start = 0;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (blank(line)) continue;
    const auto fields = split_csv_line(line, line_no);
    if (!header_seen) {
      header_seen = true;
      if (fields.size() != 4 || fields[0] != "year" || fields[1] != "from" || fields[2] != "to" || fields[3] != "points") {
        throw ParseError(line_no, "expected header 'year,from,to,points'");
      }
      continue;
    }
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 fields, found " + std::to_string(fields.size()));
    const int year = parse_number<int>(fields[0], line_no, "year");
    double points = 0.0;
    try {
      std::size_t used = 0;
      points = std::stod(fields[3], &used);
      if (used != fields[3].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(line_no, "invalid points '" + fields[3] + "'");
    }
    if (!std::isfinite(points) || points < 0.0) throw ParseError(line_no, "negative or non-finite points");
    if (fields[1].empty() || fields[2].empty()) throw ParseError(line_no, "empty country name");
    if (fields[1] == fields[2]) throw ParseError(line_no, "country '" + fields[1] + "' votes for itself");
    if (year < first_year || year > last_year) continue;
    rows.push_back({fields[1], fields[2], points});
  }
  if (!header_seen) throw ParseError(0, "vote file is empty");
  if (rows.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "no rows selected for years " + std::to_string(first_year) + "-" + std::to_string(last_year));
  }
  // Sorting makes the result independent of row order, including the
  // floating-point summation order.
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return std::tie(a.from, a.to, a.points) < std::tie(b.from, b.to, b.points); });
  std::set<std::string> names;
  for (const auto& r : rows) {
    names.insert(r.from);
    names.insert(r.to);
  }
  GraphBuilder builder(true);
  for (const auto& name : names) builder.add_node(name);
  for (const auto& r : rows) {
    if (r.points > 0.0) builder.add_edge(r.from, r.to, r.points);
  }
  return builder.build();
}

Graph synthetic_vote_network(std::size_t countries, std::size_t edges, std::size_t years, std::uint64_t seed) {
  if (countries < 2) throw Error(ErrorCode::out_of_range, "at least two countries are needed");
  if (edges > countries * (countries - 1)) throw Error(ErrorCode::out_of_range, "more edges requested than ordered pairs");
  if (years == 0) throw Error(ErrorCode::out_of_range, "years must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(countries * (countries - 1));
  for (std::size_t i = 0; i < countries; ++i) {
    for (std::size_t j = 0; j < countries; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<int> points(1, static_cast<int>(12 * years));
  Matrix w = Matrix::square(countries);
  for (std::size_t e = 0; e < edges; ++e) w(pairs[e].first, pairs[e].second) = points(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < countries; ++i) labels.push_back("C" + std::to_string(i));
  return Graph(std::move(labels), std::move(w), true);
}

Graph sample_edges(const Graph& g, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw Error(ErrorCode::out_of_range, "edge fraction must lie in [0, 1]");
  const std::size_t n = g.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = g.directed() ? 0 : i + 1; j < n; ++j) {
      if (g.weight(i, j) > 0.0) edges.emplace_back(i, j);
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  const auto keep = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(edges.size())));
  Matrix w = Matrix::square(n);
  for (std::size_t e = 0; e < keep; ++e) {
    const auto [i, j] = edges[e];
    w(i, j) = g.weight(i, j);
    if (!g.directed()) w(j, i) = g.weight(j, i);
  }
  return Graph(g.labels(), std::move(w), g.directed());
}

}  // namespace borgia
