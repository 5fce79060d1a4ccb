#include "borgia/partition.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

#include "borgia/error.hpp"
#include "borgia/graph_io.hpp"

namespace borgia {

Partition::Partition(const std::vector<long long>& labels) {
  std::unordered_map<long long, std::size_t> renumber;
  assignment_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) throw Error(ErrorCode::invalid_argument, "negative community label for actor " + std::to_string(i));
    auto [it, inserted] = renumber.emplace(labels[i], renumber.size());
    assignment_.push_back(it->second);
  }
  k_ = renumber.size();
}

Partition Partition::singletons(std::size_t n) {
  std::vector<long long> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<long long>(i);
  return Partition(labels);
}

Partition Partition::single_community(std::size_t n) { return Partition(std::vector<long long>(n, 0)); }

std::vector<std::vector<std::size_t>> Partition::communities() const {
  std::vector<std::vector<std::size_t>> out(k_);
  for (std::size_t i = 0; i < assignment_.size(); ++i) out[assignment_[i]].push_back(i);
  return out;
}

std::string partition_to_csv(const Partition& p, const std::vector<std::string>& labels) {
  if (labels.size() != p.size()) throw Error(ErrorCode::dimension_mismatch, "label count does not match partition size");
  std::ostringstream out;
  out << "actor_label,community_id\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << csv_escape(labels[i]) << ',' << p.community_of(i) << '\n';
  return out.str();
}

Partition partition_from_csv(std::string_view text, const std::vector<std::string>& labels) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

  std::vector<long long> assigned(labels.size(), -1);
  std::map<std::string, long long> community_ids;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool first_record = true;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_csv_line(line, line_no);
    if (fields.size() != 2) throw ParseError(line_no, "expected 'actor_label,community_id'");
    if (first_record) {
      first_record = false;
      if (!index.count(fields[0]) && (fields[0] == "actor_label" || fields[0] == "actor" || fields[0] == "label")) continue;
    }
    auto it = index.find(fields[0]);
    if (it == index.end()) throw Error(ErrorCode::dimension_mismatch, "partition names unknown actor '" + fields[0] + "'");
    if (assigned[it->second] >= 0) throw ParseError(line_no, "actor '" + fields[0] + "' assigned twice");
    auto [cit, inserted] = community_ids.emplace(fields[1], static_cast<long long>(community_ids.size()));
    assigned[it->second] = cit->second;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (assigned[i] < 0) throw Error(ErrorCode::dimension_mismatch, "partition does not assign actor '" + labels[i] + "'");
  }
  return Partition(assigned);
}

}  // namespace borgia
