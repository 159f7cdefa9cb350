#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <string>
#include <string_view>

#include "cascadia/errors.hpp"
#include "cascadia/graph.hpp"

namespace cascadia {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_space(rest[j])) ++j;
  std::string_view token = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return token;
}

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  if (token.empty()) throw ParseError(line, "expected two node ids");
  if (token.front() == '-') {
    throw ParseError(line, "negative node id '" + std::string(token) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range ||
      (ec == std::errc{} && value >= std::numeric_limits<NodeId>::max())) {
    throw ParseError(line, "node id out of range '" + std::string(token) + "'");
  }
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "non-integer token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    std::string_view second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two node ids");
    // Columns past the second (e.g. weights or timestamps) are ignored.
    raw.emplace_back(parse_id(first, line_no), parse_id(second, line_no));
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.size());
  std::size_t node_count = 0;

  if (options.remap) {
    std::vector<std::uint64_t> ids;
    ids.reserve(raw.size() * 2);
    for (auto [u, v] : raw) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto index_of = [&](std::uint64_t id) {
      return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (auto [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
    node_count = ids.size();
  } else {
    for (auto [u, v] : raw) {
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
      node_count = std::max<std::size_t>(node_count, std::max(u, v) + 1);
    }
  }
  return Graph::from_edges(node_count, edges);
}

}  // namespace cascadia
