#pragma once

// graph6 encoding for undirected graphs and the line-oriented text formats
// for digraphs (`dg <n> <m>`) and colored digraphs (`cdg <n> <m> <k>`).

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace frucht {

namespace detail {

inline void append_graph6_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

// Reads exactly `count` non-negative integers from a line, rejecting trailing junk.
inline std::vector<long long> read_ints(std::string_view line, std::size_t count, int line_no) {
  std::istringstream in{std::string(line)};
  std::vector<long long> out;
  long long v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ParseError(line_no, "expected integers, got '" + std::string(line) + "'");
  if (out.size() != count)
    throw ParseError(line_no, "expected " + std::to_string(count) + " integers, got " + std::to_string(out.size()));
  for (auto x : out)
    if (x < 0 || x > 100000000) throw ParseError(line_no, "integer out of range: " + std::to_string(x));
  return out;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  detail::append_graph6_size(out, n);
  unsigned acc = 0;
  int bits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(0, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError(0, "invalid graph6 character");

  std::size_t pos = 0;
  auto take6 = [&](int count) {
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError(0, "truncated graph6 size field");
      v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    }
    return v;
  };
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take6(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take6(6);
    if (n <= 258047) throw ParseError(0, "non-canonical graph6 size field");
  } else {
    pos = 1;
    n = take6(3);
    if (n <= 62) throw ParseError(0, "non-canonical graph6 size field");
  }
  if (n > 1000000) throw ParseError(0, "graph6 vertex count too large");

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count)
    throw ParseError(0, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                            std::to_string(byte_count));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    const int last = text[pos + k / 6] - 63;
    if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError(0, "non-zero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string to_text(const Digraph& d) {
  std::string out = "dg " + std::to_string(d.order()) + " " + std::to_string(d.size()) + "\n";
  for (const auto& a : d.arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

inline std::string to_text(const ColoredDigraph& d) {
  std::string out = "cdg " + std::to_string(d.order()) + " " + std::to_string(d.size()) + " " +
                    std::to_string(d.colors()) + "\n";
  for (const auto& a : d.arcs())
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + " " + std::to_string(a.color) + "\n";
  return out;
}

namespace detail {

// Returns (header fields, body lines with their 1-based line numbers).
struct TextBody {
  std::vector<long long> header;
  std::vector<std::pair<int, std::string_view>> lines;
};

inline TextBody read_text_body(std::string_view text, std::string_view tag, std::size_t header_ints) {
  auto lines = split_lines(text);
  TextBody body;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    auto line = lines[i];
    if (is_blank_or_comment(line)) continue;
    if (!have_header) {
      auto sp = line.find_first_of(" \t");
      if (line.substr(0, sp) != tag)
        throw ParseError(line_no, "malformed header, expected '" + std::string(tag) + "'");
      body.header = read_ints(sp == std::string_view::npos ? std::string_view{} : line.substr(sp), header_ints, line_no);
      have_header = true;
      continue;
    }
    body.lines.emplace_back(line_no, line);
  }
  if (!have_header) throw ParseError(0, "missing '" + std::string(tag) + "' header");
  if (body.lines.size() != static_cast<std::size_t>(body.header[1]))
    throw ParseError(0, "header declares " + std::to_string(body.header[1]) + " arcs, found " +
                            std::to_string(body.lines.size()));
  return body;
}

}  // namespace detail

inline Digraph digraph_from_text(std::string_view text) {
  auto body = detail::read_text_body(text, "dg", 2);
  const int n = static_cast<int>(body.header[0]);
  std::vector<Arc> arcs;
  std::vector<std::pair<Arc, int>> seen;
  for (auto [line_no, line] : body.lines) {
    auto v = detail::read_ints(line, 2, line_no);
    if (v[0] >= n || v[1] >= n) throw ParseError(line_no, "vertex index out of range");
    if (v[0] == v[1]) throw ParseError(line_no, "loop arc");
    arcs.push_back({static_cast<int>(v[0]), static_cast<int>(v[1])});
    seen.push_back({arcs.back(), line_no});
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      throw ParseError(std::max(seen[i].second, seen[i - 1].second), "duplicate arc");
  return Digraph(n, std::move(arcs));
}

inline ColoredDigraph colored_digraph_from_text(std::string_view text) {
  auto body = detail::read_text_body(text, "cdg", 3);
  const int n = static_cast<int>(body.header[0]);
  const int k = static_cast<int>(body.header[2]);
  std::vector<ColoredArc> arcs;
  std::vector<std::pair<Arc, int>> seen;
  for (auto [line_no, line] : body.lines) {
    auto v = detail::read_ints(line, 3, line_no);
    if (v[0] >= n || v[1] >= n) throw ParseError(line_no, "vertex index out of range");
    if (v[0] == v[1]) throw ParseError(line_no, "loop arc");
    if (v[2] >= k) throw ParseError(line_no, "color out of range");
    arcs.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
    seen.push_back({{arcs.back().tail, arcs.back().head}, line_no});
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      throw ParseError(std::max(seen[i].second, seen[i - 1].second), "duplicate colored arc");
  return ColoredDigraph(n, k, std::move(arcs));
}

}  // namespace frucht
