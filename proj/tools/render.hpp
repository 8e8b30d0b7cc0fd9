#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ekr::cli {

enum class Format { json, csv, text };

Format parse_format(std::string_view name);

// Plain text for one value: strings unquoted, containers as compact JSON.
std::string cell_text(const nlohmann::ordered_json& value);

// JSON: the document on one line. CSV: the "rows" array if present,
// otherwise one row of the top-level fields. Text: "key: value" lines, then
// rows as whitespace-separated columns.
void render(const nlohmann::ordered_json& doc, Format format, std::ostream& out);

}  // namespace ekr::cli
