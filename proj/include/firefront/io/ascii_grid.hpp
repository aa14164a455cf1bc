#pragma once

// ESRI ASCII grid reader/writer. Coordinates are in the scenario's local
// plane (meters). Header keys are case-insensitive; xllcenter/yllcenter are
// accepted and shifted to the corner convention.

#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include "firefront/error.hpp"
#include "firefront/geom.hpp"
#include "firefront/io/csv.hpp"

namespace firefront::io {

namespace detail {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  /// Next whitespace-delimited token; empty at end of input. Records the
  /// token's starting position.
  std::string_view next(std::size_t& tok_line, std::size_t& tok_col) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    tok_line = line;
    tok_col = col;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    return text.substr(start, pos - start);
  }

  std::string_view peek() const {
    std::size_t p = pos;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    std::size_t e = p;
    while (e < text.size() && !std::isspace(static_cast<unsigned char>(text[e]))) ++e;
    return text.substr(p, e - p);
  }

 private:
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
};

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace detail

inline ScalarGrid parse_ascii_grid(std::string_view text) {
  detail::Tokenizer tok{text};
  std::optional<double> ncols, nrows, xll, yll, cell, nodata;
  bool x_center = false, y_center = false;
  std::size_t ln = 0, cl = 0;

  // Header: key/value pairs until the first numeric token.
  for (;;) {
    const std::string_view key = tok.peek();
    if (key.empty() || to_number(key)) break;
    tok.next(ln, cl);
    const std::string k = detail::lower(key);
    const std::size_t kl = ln, kc = cl;
    const std::string_view val = tok.next(ln, cl);
    const auto v = to_number(val);
    if (!v) throw ParseError("header '" + std::string(key) + "': expected a number, got '" + std::string(val) + "'", ln, cl);
    if (k == "ncols") ncols = v;
    else if (k == "nrows") nrows = v;
    else if (k == "xllcorner") xll = v;
    else if (k == "xllcenter") xll = v, x_center = true;
    else if (k == "yllcorner") yll = v;
    else if (k == "yllcenter") yll = v, y_center = true;
    else if (k == "cellsize") cell = v;
    else if (k == "nodata_value") nodata = v;
    else throw ParseError("unknown header key '" + std::string(key) + "'", kl, kc);
  }
  if (!ncols || !nrows || !xll || !yll || !cell)
    throw ParseError("incomplete header: ncols, nrows, xllcorner, yllcorner and cellsize are required", tok.line, 1);
  if (*ncols < 1 || *nrows < 1 || *ncols != std::floor(*ncols) || *nrows != std::floor(*nrows))
    throw ParseError("ncols and nrows must be positive integers", 1);
  if (!(*cell > 0.0)) throw ParseError("cellsize must be positive", 1);

  const auto nc = static_cast<std::size_t>(*ncols), nr = static_cast<std::size_t>(*nrows);
  const std::size_t n = nc * nr;
  std::vector<double> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view t = tok.next(ln, cl);
    if (t.empty())
      throw ParseError("truncated body: expected " + std::to_string(n) + " values, found " + std::to_string(i), ln, cl);
    const auto v = to_number(t);
    if (!v) throw ParseError("non-numeric token '" + std::string(t) + "'", ln, cl);
    values.push_back(*v);
  }
  if (const std::string_view extra = tok.next(ln, cl); !extra.empty())
    throw ParseError("body has more than " + std::to_string(n) + " values", ln, cl);
  const Point2 origin{*xll - (x_center ? 0.5 * *cell : 0.0), *yll - (y_center ? 0.5 * *cell : 0.0)};
  return ScalarGrid(origin, *cell, nc, nr, std::move(values), nodata.value_or(-9999.0));
}

inline std::string write_ascii_grid(const ScalarGrid& g) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "ncols " << g.ncols() << "\nnrows " << g.nrows() << "\nxllcorner " << g.origin().x << "\nyllcorner "
      << g.origin().y << "\ncellsize " << g.cell_size() << "\nNODATA_value " << g.nodata() << "\n";
  for (std::size_t r = 0; r < g.nrows(); ++r) {
    for (std::size_t c = 0; c < g.ncols(); ++c) out << (c ? " " : "") << g.at(c, r);
    out << "\n";
  }
  return out.str();
}

}  // namespace firefront::io
