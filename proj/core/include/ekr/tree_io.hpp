#pragma once

#include "ekr/treecore.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ekr {

// Edge-list text: one "u v" pair per line, 1-based, whitespace separated.
// Blank lines and '#' comments are ignored. Edges are canonicalized but not
// otherwise validated (callers decide whether cycles are an error).
std::vector<Edge> parse_edge_list(std::string_view text);
std::vector<Edge> read_edge_list_file(const std::string& path);

std::string format_edge_list(std::span<const Edge> edges);

// Compact inline form used on the command line: "1-2,2-3" (also accepts
// spaces or semicolons between pairs).
std::vector<Edge> parse_inline_edges(std::string_view text);

// JSON array of [u, v] pairs.
nlohmann::ordered_json edges_to_json(std::span<const Edge> edges);
std::vector<Edge> edges_from_json(const nlohmann::ordered_json& value);

}  // namespace ekr
