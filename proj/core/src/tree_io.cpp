#include "ekr/tree_io.hpp"

#include "ekr/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ekr {

namespace {

int parse_label(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
    throw InvalidInput("bad vertex label '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos = text.find_first_not_of(separators, pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = text.find_first_of(separators, pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

}  // namespace

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  for (std::string_view line : split(text, "\n")) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split(line, " \t\r");
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw InvalidInput("edge-list line must hold two labels: '" + std::string(line) + "'");
    edges.emplace_back(parse_label(tokens[0], line), parse_label(tokens[1], line));
  }
  return edges;
}

std::vector<Edge> read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open edge-list file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(std::span<const Edge> edges) {
  std::string out;
  for (const Edge& e : edges) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::vector<Edge> parse_inline_edges(std::string_view text) {
  std::vector<Edge> edges;
  for (std::string_view pair : split(text, ",; \t\n")) {
    auto dash = pair.find('-');
    if (dash == std::string_view::npos) throw InvalidInput("expected u-v, got '" + std::string(pair) + "'");
    edges.emplace_back(parse_label(pair.substr(0, dash), pair), parse_label(pair.substr(dash + 1), pair));
  }
  return edges;
}

nlohmann::ordered_json edges_to_json(std::span<const Edge> edges) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const nlohmann::ordered_json& value) {
  if (!value.is_array()) throw InvalidInput("edge JSON must be an array of [u,v] pairs");
  std::vector<Edge> edges;
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw InvalidInput("edge JSON entries must be [u,v] integer pairs");
    }
    int u = pair[0].get<int>();
    int v = pair[1].get<int>();
    if (u < 1 || v < 1) throw InvalidInput("edge labels are 1-based");
    edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace ekr
