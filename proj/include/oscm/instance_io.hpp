#pragma once

// Plain-text instance format:
//
//   n_U n_V m h          # h = number of colors, 1 if uncolored
//   u v [color]          # m edge lines, 0-based indices
//
// Tokens are whitespace separated; '#' starts a comment that runs to the end
// of the line. Blank lines are ignored. U-vertices are listed in their fixed
// order.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oscm/bigraph.hpp"
#include "oscm/error.hpp"

namespace oscm {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

inline std::uint64_t parse_count(const Token& tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column,
                     std::string("expected non-negative integer for ") + what + ", got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace detail

inline BipartiteInstance parse_instance(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n_u = 0, n_v = 0, m = 0, h = 1;
  std::vector<Edge> edges;
  std::set<std::tuple<Vertex, Vertex, std::uint32_t>> seen;

  constexpr std::uint64_t kMaxVertices = std::numeric_limits<Vertex>::max();

  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = detail::tokenize(raw);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 4) {
        throw ParseError(line_no, tokens.front().column,
                         "header must be 'n_U n_V m h', got " + std::to_string(tokens.size()) +
                             " fields");
      }
      n_u = detail::parse_count(tokens[0], line_no, "n_U");
      n_v = detail::parse_count(tokens[1], line_no, "n_V");
      m = detail::parse_count(tokens[2], line_no, "m");
      h = detail::parse_count(tokens[3], line_no, "h");
      if (n_u > kMaxVertices) throw ParseError(line_no, tokens[0].column, "n_U too large");
      if (n_v > kMaxVertices) throw ParseError(line_no, tokens[1].column, "n_V too large");
      if (h == 0) throw ParseError(line_no, tokens[3].column, "h must be at least 1");
      if (h > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(line_no, tokens[3].column, "h too large");
      }
      have_header = true;
      continue;
    }

    if (edges.size() == m) {
      throw ParseError(line_no, tokens.front().column,
                       "more edge lines than the declared m = " + std::to_string(m));
    }
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, tokens.front().column,
                       "edge line must be 'u v [color]', got " + std::to_string(tokens.size()) +
                           " fields");
    }
    const std::uint64_t u = detail::parse_count(tokens[0], line_no, "u");
    const std::uint64_t v = detail::parse_count(tokens[1], line_no, "v");
    std::uint64_t color = 0;
    if (tokens.size() == 3) color = detail::parse_count(tokens[2], line_no, "color");
    if (u >= n_u) {
      throw ParseError(line_no, tokens[0].column,
                       "u = " + std::to_string(u) + " out of range [0, " + std::to_string(n_u) + ")");
    }
    if (v >= n_v) {
      throw ParseError(line_no, tokens[1].column,
                       "v = " + std::to_string(v) + " out of range [0, " + std::to_string(n_v) + ")");
    }
    if (color >= h) {
      throw ParseError(line_no, tokens[2].column,
                       "color = " + std::to_string(color) + " out of range [0, " +
                           std::to_string(h) + ")");
    }
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<std::uint32_t>(color)};
    if (!seen.emplace(e.u, e.v, e.color).second) {
      throw ParseError(line_no, tokens[0].column, "duplicate edge within one color class");
    }
    edges.push_back(e);
  }

  if (!have_header) throw ParseError(line_no + 1, 1, "missing header line 'n_U n_V m h'");
  if (edges.size() != m) {
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(edges.size()));
  }
  return BipartiteInstance(n_u, n_v, std::move(edges), h);
}

inline BipartiteInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

inline BipartiteInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "'");
  return parse_instance(in);
}

inline void emit_instance(std::ostream& out, const BipartiteInstance& inst) {
  out << inst.n_u() << ' ' << inst.n_v() << ' ' << inst.n_edges() << ' ' << inst.n_colors() << '\n';
  for (const Edge& e : inst.edges()) {
    out << e.u << ' ' << e.v;
    if (inst.colored()) out << ' ' << e.color;
    out << '\n';
  }
}

inline std::string to_text(const BipartiteInstance& inst) {
  std::ostringstream out;
  emit_instance(out, inst);
  return out.str();
}

inline void save_instance(const std::string& path, const BipartiteInstance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot write '" + path + "'");
  emit_instance(out, inst);
  if (!out) fail(ErrorCode::io, "write to '" + path + "' failed");
}

}  // namespace oscm
