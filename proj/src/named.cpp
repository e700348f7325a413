#include "pivotminor/named.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace pivotminor {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.set_neighbors(v, g.vertices() & ~bit(v));
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph wheel_graph(int n) {
  const Graph rim = cycle_graph(n);
  Graph g(n + 1);
  for (auto [u, v] : rim.edges()) g.add_edge(u, v);
  g.set_neighbors(n, full_set(n));
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

namespace {

// Fixtures transcribed from the standard drawings. Vertex comments give the
// drawing's labels where the drawing has them.
const std::map<std::string, Graph, std::less<>>& fixtures() {
  static const std::map<std::string, Graph, std::less<>> table = [] {
    std::map<std::string, Graph, std::less<>> t;
    // Triangle 0,1,2 with pendant 3 on vertex 0.
    t.emplace("paw", Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));
    // K4 minus the edge 2-3.
    t.emplace("diamond", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    // Complement of P1+paw: 0 universal, 1 of degree 3, leaf 4.
    t.emplace("dart", Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}}));
    t.emplace("claw", star_graph(3));
    // P5 plus the edge between its second and fourth vertices.
    t.emplace("bull", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}}));
    t.emplace("gem", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}));
    // Square 0-1-2-3 with roof vertex 4 on 2 and 3.
    t.emplace("house", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}));
    t.emplace("bowtie", Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}));
    // Triangles 0,1,2 and 3,4,5 joined by a perfect matching.
    t.emplace("prism", Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                            {0, 3}, {1, 4}, {2, 5}}));
    t.emplace("petersen",
              Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                     {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}));
    // C6 on 0..5 plus vertex 6 on the pairwise non-adjacent 0, 2, 4.
    t.emplace("BW3", Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                          {6, 0}, {6, 2}, {6, 4}}));
    // a1,a2,a3 = 0,1,2 (triangle); b1..b4 = 3..6 (clique); matching a_i b_i.
    t.emplace("co-BW3", Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2},
                                             {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6},
                                             {0, 3}, {1, 4}, {2, 5}}));

    // The nine minimal obstructions for 2P2.
    // O1 = 2P2.
    t.emplace("O1", Graph::from_edges(4, {{1, 2}, {3, 0}}));
    // O2: w2=0, v1=1, v2=2, w1=3, z=4. C4 w2 v1 w1 v2 with pendant z on w1.
    t.emplace("O2", Graph::from_edges(5, {{3, 1}, {1, 0}, {3, 2}, {2, 0}, {4, 3}}));
    // O3: O2 plus the chord v1 v2.
    t.emplace("O3", Graph::from_edges(5, {{3, 1}, {1, 0}, {3, 2}, {2, 0}, {4, 3}, {1, 2}}));
    // O4: v1=0, v2=1, v3=2, w2=3, w3=4, x1=5. Hexagon with inner triangle
    // v2 w2 x1.
    t.emplace("O4", Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 0},
                                         {1, 3}, {3, 5}, {5, 1}}));
    // O5: v0=0, hub v=1, path v1..v4 = 2..5.
    t.emplace("O5", Graph::from_edges(6, {{1, 0}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                         {2, 3}, {3, 4}, {4, 5}}));
    // O6: v00=0, v10=1, v20=2, v01=3, v11=4, v21=5.
    t.emplace("O6", Graph::from_edges(6, {{1, 2}, {2, 4}, {4, 5}, {5, 1}, {1, 0}, {0, 3},
                                         {3, 4}, {4, 1}}));
    // O7: K4 on 0..3 plus vertex 4 on 2 and 3.
    t.emplace("O7", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3},
                                         {4, 2}, {4, 3}}));
    // O8: O6 plus v10 v01.
    t.emplace("O8", Graph::from_edges(6, {{1, 2}, {2, 4}, {4, 5}, {5, 1}, {1, 0}, {0, 3},
                                         {3, 4}, {4, 1}, {1, 3}}));
    // O9: w2=0, v1=1, v2=2, w1=3, z=4. Diamond on w1 v1 v2 w2 plus z on w1, w2.
    t.emplace("O9", Graph::from_edges(5, {{3, 1}, {1, 0}, {3, 2}, {2, 0}, {1, 2}, {0, 4},
                                         {4, 3}}));

    // Edge-pivot example drawing. 0 is the centre vertex, 1..7 are the
    // drawing's v1..v7; the pivoted edge is u=1, v=7. The right-hand drawing
    // places u and v at each other's positions, so it equals the pivot result
    // with vertices 1 and 7 exchanged.
    t.emplace("fig1-left", Graph::from_edges(8, {{3, 2}, {2, 1}, {1, 7}, {7, 6}, {6, 4},
                                                {5, 7}, {5, 1}, {5, 2},
                                                {7, 0}, {0, 1}, {1, 3}, {3, 6}}));
    t.emplace("fig1-right", Graph::from_edges(8, {{3, 2}, {2, 1}, {1, 7}, {7, 6}, {6, 4},
                                                 {5, 7}, {5, 6}, {5, 1}, {5, 3},
                                                 {1, 3}, {6, 2}, {7, 0}, {0, 1},
                                                 {0, 2}, {0, 3}, {0, 6}}));
    return t;
  }();
  return table;
}

std::optional<int> parse_count(std::string_view s) {
  if (s.empty() || s.size() > 3) return std::nullopt;
  int n = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    n = n * 10 + (c - '0');
  }
  return n;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Graph base_graph(std::string_view name) {
  const std::map<std::string, Graph, std::less<>>& table = fixtures();
  if (auto it = table.find(name); it != table.end()) return it->second;
  for (const auto& [key, g] : table)
    if (lower(key) == lower(name)) return g;

  if (name.size() >= 2) {
    const char kind = name[0];
    const std::string_view rest = name.substr(1);
    if (kind == 'K') {
      if (auto comma = rest.find(','); comma != std::string_view::npos) {
        auto a = parse_count(rest.substr(0, comma));
        auto b = parse_count(rest.substr(comma + 1));
        if (a && b && *a + *b <= Graph::kMaxOrder) return complete_bipartite(*a, *b);
      } else if (auto n = parse_count(rest); n && *n <= Graph::kMaxOrder) {
        return complete_graph(*n);
      }
    }
    if (auto n = parse_count(rest)) {
      if (kind == 'P' && *n <= Graph::kMaxOrder) return path_graph(*n);
      if (kind == 'C' && *n >= 3 && *n <= Graph::kMaxOrder) return cycle_graph(*n);
      if (kind == 'W' && *n >= 3 && *n < Graph::kMaxOrder) return wheel_graph(*n);
    }
  }
  if (name.size() > 3 && name.substr(0, 3) == "co-") return complement(base_graph(name.substr(3)));
  throw UnknownGraphName("unknown graph name '" + std::string(name) + "'");
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name.empty()) throw UnknownGraphName("empty graph name");
  if (fixtures().count(name)) return fixtures().find(name)->second;
  Graph out(0);
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t end = name.find('+', start);
    if (end == std::string_view::npos) end = name.size();
    std::string_view term = name.substr(start, end - start);
    if (term.empty()) throw UnknownGraphName("malformed graph name '" + std::string(name) + "'");
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    int copies = 1;
    if (digits > 0) {
      auto parsed = parse_count(term.substr(0, digits));
      if (!parsed || *parsed == 0 || digits == term.size())
        throw UnknownGraphName("malformed multiplicity in '" + std::string(term) + "'");
      copies = *parsed;
    }
    const Graph part = base_graph(term.substr(digits));
    for (int i = 0; i < copies; ++i) {
      if (out.order() + part.order() > Graph::kMaxOrder)
        throw UnknownGraphName("graph '" + std::string(name) + "' exceeds 64 vertices");
      out = disjoint_union(out, part);
    }
    start = end + 1;
  }
  return out;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [key, g] : fixtures()) out.push_back(key);
  return out;
}

}  // namespace pivotminor
