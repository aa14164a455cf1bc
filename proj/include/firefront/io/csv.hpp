#pragma once

// Minimal RFC 4180 reader: comma separator, optional double quotes, LF or
// CRLF line endings, UTF-8 with or without a BOM.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "firefront/error.hpp"

namespace firefront::io {

struct CsvRow {
  std::size_t line = 0;  ///< 1-based source line
  std::vector<std::string> fields;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;

  /// Column index by exact (trimmed, case-insensitive) name.
  std::optional<std::size_t> column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i].size() != name.size()) continue;
      bool eq = true;
      for (std::size_t k = 0; k < name.size() && eq; ++k)
        eq = std::tolower(static_cast<unsigned char>(header[i][k])) == std::tolower(static_cast<unsigned char>(name[k]));
      if (eq) return i;
    }
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    if (auto c = column(name)) return *c;
    throw ParseError("missing required column '" + std::string(name) + "'", 1);
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

inline CsvTable parse_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  CsvTable table;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, field_was_quoted = false;
  std::size_t line = 1, row_line = 1;

  auto end_field = [&] {
    fields.push_back(field_was_quoted ? field : detail::trim(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = fields.size() == 1 && fields[0].empty();
    if (!blank) {
      if (table.header.empty()) table.header = std::move(fields);
      else table.rows.push_back({row_line, std::move(fields)});
    }
    fields.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && detail::trim(field).empty()) {
      quoted = true;
      field_was_quoted = true;
      field.clear();
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      // handled by the '\n'
    } else if (c == '\n') {
      end_row();
      row_line = ++line;
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", row_line);
  if (!field.empty() || !fields.empty()) end_row();
  if (table.header.empty()) throw ParseError("empty CSV: header row required", 1);
  return table;
}

/// Strict decimal parse of a whole field.
inline std::optional<double> to_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Field `col` of `row` as a number, or a ParseError naming line and column.
inline double number_field(const CsvTable& t, const CsvRow& row, std::size_t col) {
  if (col >= row.fields.size())
    throw ParseError("row has " + std::to_string(row.fields.size()) + " fields, expected " +
                         std::to_string(t.header.size()),
                     row.line, col + 1);
  if (auto v = to_number(row.fields[col])) return *v;
  throw ParseError("column '" + t.header[col] + "': not a number: '" + row.fields[col] + "'", row.line, col + 1);
}

}  // namespace firefront::io
