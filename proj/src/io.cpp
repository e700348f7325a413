#include "pivotminor/io.hpp"

#include <cctype>
#include <sstream>

namespace pivotminor {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw ParseError("graph6: non-printable or out-of-range byte " + std::to_string(b));
  return b - 63;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) text.remove_prefix(kGraph6Prefix.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() < 4 || text[1] == '~')
      throw ParseError("graph6: malformed long header");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (n < 63) throw ParseError("graph6: long header used for order " + std::to_string(n));
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > Graph::kMaxOrder)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                     std::to_string(text.size() - pos));

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = sextet(text[pos + k / 6]);
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: padding bits set");
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
  if (n < 0 || n > Graph::kMaxOrder) throw ParseError("edge list: order out of range");
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge list: edge count out of range");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(e));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range on edge " + std::to_string(e));
    if (u == v) throw ParseError("edge list: self-loop on edge " + std::to_string(e));
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing content '" + rest + "'");
  return g;
}

Graph parse_graph_text(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty graph input");
  // Edge lists start with a decimal order; graph6 headers never contain
  // whitespace, so a header line with a space decides the format.
  const auto eol = body.find('\n');
  const std::string_view first = trim(body.substr(0, eol));
  if (first.find(' ') != std::string_view::npos || first.find('\t') != std::string_view::npos)
    return parse_edge_list(body);
  if (eol != std::string_view::npos)
    throw ParseError("graph6 input has more than one line");
  return parse_graph6(first);
}

}  // namespace pivotminor
