#include "borgia/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "borgia/error.hpp"

namespace borgia {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

double parse_number(std::string_view field, std::size_t line, const char* what) {
  field = trim(field);
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find('\t') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find('\t', start);
      if (end == std::string_view::npos) end = line.size();
      auto f = trim(line.substr(start, end - start));
      if (!f.empty()) fields.push_back(f);
      start = end + 1;
    }
    return fields;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

Graph load_edge_list(std::string_view text, bool directed) {
  GraphBuilder builder(directed);
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    std::string_view line = lines[k];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() == 1) {
      builder.add_node(fields[0]);
      continue;
    }
    if (fields.size() > 3) throw ParseError(line_no, "expected 'src dst [weight]' but found " +
                                                         std::to_string(fields.size()) + " fields");
    const double w = fields.size() == 3 ? parse_number(fields[2], line_no, "weight") : 1.0;
    builder.add_edge(fields[0], fields[1], w, line_no);
  }
  if (builder.edge_records() == 0) throw ParseError(0, "graph must contain at least one edge");
  return builder.build();
}

Graph load_matrix_csv(std::string_view text, bool directed) {
  const auto lines = split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && trim(lines[k]).empty()) ++k;
  if (k == lines.size()) throw ParseError(0, "empty matrix csv");
  auto labels = split_csv_line(lines[k], k + 1);
  for (auto& l : labels) l = std::string(trim(l));
  const std::size_t n = labels.size();
  Matrix w = Matrix::square(n);
  std::size_t row = 0;
  for (++k; k < lines.size(); ++k) {
    if (trim(lines[k]).empty()) continue;
    const std::size_t line_no = k + 1;
    const auto fields = split_csv_line(lines[k], line_no);
    if (row >= n) throw ParseError(line_no, "more weight rows than labels");
    if (fields.size() != n) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " fields but found " + std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = parse_number(fields[j], line_no, "weight");
      if (v < 0.0) throw ParseError(line_no, "negative weight");
      if (j == row && v != 0.0) throw ParseError(line_no, "self-loop on '" + labels[row] + "'");
      w(row, j) = v;
    }
    ++row;
  }
  if (row != n) throw ParseError(0, "expected " + std::to_string(n) + " weight rows but found " + std::to_string(row));
  return Graph(std::move(labels), std::move(w), directed);
}

// Minimal GML reader: a token stream of keys, scalars, and bracketed lists.
class GmlReader {
 public:
  explicit GmlReader(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { word, string, open, close, end } kind;
    std::string text;
    std::size_t line;
  };

  Token next() {
    skip_space();
    if (pos_ >= text_.size()) return {Token::end, "", line_};
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      return {Token::open, "[", line_};
    }
    if (c == ']') {
      ++pos_;
      return {Token::close, "]", line_};
    }
    if (c == '"') {
      const std::size_t start_line = line_;
      std::string value;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') ++line_;
        value.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) throw ParseError(start_line, "unterminated string");
      ++pos_;
      return {Token::string, value, start_line};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '[' &&
           text_[pos_] != ']' && text_[pos_] != '"') {
      ++pos_;
    }
    return {Token::word, std::string(text_.substr(start, pos_ - start)), line_};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

using GmlRecord = std::map<std::string, std::string>;

// Reads `key value` pairs up to the matching close bracket; nested lists are skipped.
GmlRecord read_gml_record(GmlReader& reader, std::size_t open_line) {
  GmlRecord record;
  for (;;) {
    auto key = reader.next();
    if (key.kind == GmlReader::Token::close) return record;
    if (key.kind == GmlReader::Token::end) throw ParseError(open_line, "unterminated record");
    if (key.kind != GmlReader::Token::word) throw ParseError(key.line, "expected a key but found '" + key.text + "'");
    auto value = reader.next();
    if (value.kind == GmlReader::Token::open) {
      int depth = 1;
      while (depth > 0) {
        auto t = reader.next();
        if (t.kind == GmlReader::Token::end) throw ParseError(value.line, "unterminated list");
        if (t.kind == GmlReader::Token::open) ++depth;
        if (t.kind == GmlReader::Token::close) --depth;
      }
      continue;
    }
    if (value.kind != GmlReader::Token::word && value.kind != GmlReader::Token::string) {
      throw ParseError(value.line, "missing value for key '" + key.text + "'");
    }
    record[key.text] = value.text;
  }
}

Graph load_gml(std::string_view text, bool directed) {
  GmlReader reader(text);
  struct EdgeRecord {
    std::string source;
    std::string target;
    double weight;
    std::size_t line;
  };
  std::vector<std::pair<std::string, std::string>> nodes;  // id, label
  std::vector<EdgeRecord> edges;

  auto walk = [&](auto&& self, int depth) -> void {
    for (;;) {
      auto key = reader.next();
      if (key.kind == GmlReader::Token::end) {
        if (depth > 0) throw ParseError(key.line, "unbalanced brackets");
        return;
      }
      if (key.kind == GmlReader::Token::close) {
        if (depth == 0) throw ParseError(key.line, "unexpected ']'");
        return;
      }
      if (key.kind != GmlReader::Token::word) throw ParseError(key.line, "expected a key but found '" + key.text + "'");
      auto value = reader.next();
      if (value.kind == GmlReader::Token::open) {
        if (key.text == "graph") {
          self(self, depth + 1);
        } else if (key.text == "node") {
          auto rec = read_gml_record(reader, key.line);
          auto id = rec.find("id");
          if (id == rec.end()) throw ParseError(key.line, "node record without id");
          auto label = rec.find("label");
          nodes.emplace_back(id->second, label == rec.end() ? id->second : label->second);
        } else if (key.text == "edge") {
          auto rec = read_gml_record(reader, key.line);
          auto src = rec.find("source");
          auto dst = rec.find("target");
          if (src == rec.end() || dst == rec.end()) throw ParseError(key.line, "edge record without source/target");
          double w = 1.0;
          if (auto v = rec.find("value"); v != rec.end()) w = parse_number(v->second, key.line, "edge value");
          else if (auto v2 = rec.find("weight"); v2 != rec.end()) w = parse_number(v2->second, key.line, "edge weight");
          edges.push_back({src->second, dst->second, w, key.line});
        } else {
          read_gml_record(reader, key.line);
        }
      } else if (value.kind == GmlReader::Token::end || value.kind == GmlReader::Token::close) {
        throw ParseError(value.line, "missing value for key '" + key.text + "'");
      } else if (key.text == "directed" && depth == 1) {
        directed = value.text != "0";
      }
    }
  };
  walk(walk, 0);

  GraphBuilder builder(directed);
  std::map<std::string, std::string> label_of;
  for (const auto& [id, label] : nodes) {
    if (!label_of.emplace(id, label).second) throw ParseError(0, "duplicate node id " + id);
    const std::size_t before = builder.node_count();
    builder.add_node(label);
    if (builder.node_count() == before) throw ParseError(0, "duplicate label '" + label + "'");
  }
  for (const auto& e : edges) {
    auto s = label_of.find(e.source);
    auto t = label_of.find(e.target);
    if (s == label_of.end() || t == label_of.end()) throw ParseError(e.line, "edge references unknown node");
    builder.add_edge(s->second, t->second, e.weight, e.line);
  }
  if (builder.edge_records() == 0) throw ParseError(0, "graph must contain at least one edge");
  return builder.build();
}

std::string gml_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') throw Error(ErrorCode::invalid_argument, "label contains a double quote; not representable in gml");
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list" || name == "edges" || name == "edgelist") return GraphFormat::edge_list;
  if (name == "matrix-csv" || name == "csv") return GraphFormat::matrix_csv;
  if (name == "gml" || name == "gml-subset") return GraphFormat::gml;
  throw Error(ErrorCode::invalid_argument, "unknown graph format '" + std::string(name) +
                                               "' (expected edge-list, matrix-csv, or gml)");
}

const char* graph_format_name(GraphFormat format) noexcept {
  switch (format) {
    case GraphFormat::edge_list: return "edge-list";
    case GraphFormat::matrix_csv: return "matrix-csv";
    case GraphFormat::gml: return "gml";
  }
  return "edge-list";
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".csv")) return GraphFormat::matrix_csv;
  if (ends_with(".gml")) return GraphFormat::gml;
  return GraphFormat::edge_list;
}

Graph load_graph(std::string_view text, GraphFormat format, bool directed) {
  switch (format) {
    case GraphFormat::edge_list: return load_edge_list(text, directed);
    case GraphFormat::matrix_csv: return load_matrix_csv(text, directed);
    case GraphFormat::gml: return load_gml(text, directed);
  }
  throw Error(ErrorCode::invalid_argument, "unknown graph format");
}

Graph load_graph_file(const std::string& path, GraphFormat format, bool directed) {
  const std::string text = read_file(path);
  try {
    return load_graph(text, format, directed);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

std::string write_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  const std::size_t n = g.size();
  switch (format) {
    case GraphFormat::edge_list: {
      for (const auto& label : g.labels()) {
        if (label.find_first_of("\t\n#") != std::string::npos) {
          throw Error(ErrorCode::invalid_argument, "label '" + label + "' is not representable in an edge list");
        }
        out << label << '\n';
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = g.directed() ? 0 : i + 1; j < n; ++j) {
          if (g.weight(i, j) > 0.0) out << g.label(i) << '\t' << g.label(j) << '\t' << format_double(g.weight(i, j)) << '\n';
        }
      }
      break;
    }
    case GraphFormat::matrix_csv: {
      for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << csv_escape(g.label(i));
      out << '\n';
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << format_double(g.weight(i, j));
        out << '\n';
      }
      break;
    }
    case GraphFormat::gml: {
      out << "graph [\n  directed " << (g.directed() ? 1 : 0) << '\n';
      for (std::size_t i = 0; i < n; ++i) out << "  node [ id " << i << " label " << gml_quote(g.label(i)) << " ]\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = g.directed() ? 0 : i + 1; j < n; ++j) {
          if (g.weight(i, j) > 0.0) {
            out << "  edge [ source " << i << " target " << j << " value " << format_double(g.weight(i, j)) << " ]\n";
          }
        }
      }
      out << "]\n";
      break;
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path + "'");
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_number, "unterminated quoted field");
  fields.push_back(std::move(current));
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace borgia
