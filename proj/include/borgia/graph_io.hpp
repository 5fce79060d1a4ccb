#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "borgia/graph.hpp"

namespace borgia {

enum class GraphFormat { edge_list, matrix_csv, gml };

GraphFormat parse_graph_format(std::string_view name);
const char* graph_format_name(GraphFormat format) noexcept;

/// Guess the format from a file extension (.csv, .gml, anything else is an edge list).
GraphFormat format_from_path(std::string_view path);

/// Parses a graph from text.
///
/// edge-list: one `src dst [weight]` record per line, fields separated by tabs
/// when the line contains a tab and by blanks otherwise; `#` starts a comment; a
/// line holding a single field declares an actor without edges. Repeated records
/// for the same pair accumulate their weights.
/// matrix-csv: a header row of labels followed by one row of weights per actor.
/// gml: `node [ id label ]` and `edge [ source target value ]` records; other keys
/// are ignored except a graph-level `directed 1` which overrides `directed`.
Graph load_graph(std::string_view text, GraphFormat format, bool directed);

Graph load_graph_file(const std::string& path, GraphFormat format, bool directed);

std::string write_graph(const Graph& g, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number = 0);
std::string csv_escape(std::string_view field);

/// Formats a double with round-trip precision.
std::string format_double(double value);

}  // namespace borgia
