#include "render.hpp"

#include <ekr/errors.hpp>

#include <ostream>

namespace ekr::cli {

using Json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw InvalidInput("unknown format '" + std::string(name) + "' (json, csv, text)");
}

std::string cell_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

namespace {

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostream& out, const Json& object, bool header) {
  bool first = true;
  for (const auto& [key, value] : object.items()) {
    if (!first) out << ',';
    first = false;
    out << csv_escape(header ? key : cell_text(value));
  }
  out << '\n';
}

}  // namespace

void render(const Json& doc, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      out << doc.dump() << '\n';
      return;
    case Format::csv: {
      if (doc.contains("rows") && doc["rows"].is_array()) {
        const auto& rows = doc["rows"];
        if (rows.empty()) return;
        csv_line(out, rows.front(), true);
        for (const auto& row : rows) csv_line(out, row, false);
      } else {
        csv_line(out, doc, true);
        csv_line(out, doc, false);
      }
      return;
    }
    case Format::text: {
      for (const auto& [key, value] : doc.items()) {
        if (key == "rows") continue;
        out << key << ": " << cell_text(value) << '\n';
      }
      if (doc.contains("rows") && doc["rows"].is_array()) {
        for (const auto& row : doc["rows"]) {
          bool first = true;
          for (const auto& [key, value] : row.items()) {
            out << (first ? "" : "  ") << key << '=' << cell_text(value);
            first = false;
          }
          out << '\n';
        }
      }
      return;
    }
  }
}

}  // namespace ekr::cli
