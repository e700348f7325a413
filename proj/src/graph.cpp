#include "pivotminor/graph.hpp"

#include <stdexcept>
#include <string>

namespace pivotminor {

namespace {

// Removes bit v from a row and shifts the higher bits down by one.
VertexSet squeeze(VertexSet row, int v) {
  const VertexSet low = row & (bit(v) - 1);
  const VertexSet high = v >= 63 ? 0 : (row >> (v + 1)) << v;
  return low | high;
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder)
    throw std::out_of_range("graph order " + std::to_string(order) +
                            " outside [0, 64]");
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int order, std::initializer_list<Edge> edges) {
  return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_)
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " +
                            std::to_string(order_));
}

void Graph::check_pair(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u)
    for_each_vertex(rows_[u] & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

void Graph::toggle_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] ^= bit(v);
  rows_[v] ^= bit(u);
}

void Graph::set_neighbors(int v, VertexSet nbrs) {
  check_vertex(v);
  nbrs &= vertices() & ~bit(v);
  for_each_vertex(rows_[v] & ~nbrs, [&](int x) { rows_[x] &= ~bit(v); });
  for_each_vertex(nbrs & ~rows_[v], [&](int x) { rows_[x] |= bit(v); });
  rows_[v] = nbrs;
}

bool Graph::well_formed() const {
  const VertexSet all = vertices();
  for (int v = 0; v < kMaxOrder; ++v) {
    if (v >= order_) {
      if (rows_[v] != 0) return false;
      continue;
    }
    if (rows_[v] & ~all) return false;
    if (rows_[v] & bit(v)) return false;
    bool ok = true;
    for_each_vertex(rows_[v], [&](int x) { ok = ok && ((rows_[x] >> v) & 1U); });
    if (!ok) return false;
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order_ != b.order_) return false;
  for (int v = 0; v < a.order_; ++v)
    if (a.rows_[v] != b.rows_[v]) return false;
  return true;
}

std::size_t Graph::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(order_);
  for (int v = 0; v < order_; ++v) {
    h ^= rows_[v] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Graph local_complement(const Graph& g, int u) {
  g.check_vertex(u);
  Graph out = g;
  const VertexSet nbrs = g.rows_[u];
  for_each_vertex(nbrs, [&](int x) { out.rows_[x] ^= nbrs & ~bit(x); });
  return out;
}

Graph pivot(const Graph& g, int u, int v) {
  g.check_pair(u, v);
  if (!g.adjacent(u, v))
    throw std::invalid_argument("pivot on non-edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  const VertexSet nu = g.rows_[u] & ~bit(v);
  const VertexSet nv = g.rows_[v] & ~bit(u);
  const VertexSet su = nu & ~nv;
  const VertexSet sv = nv & ~nu;
  const VertexSet suv = nu & nv;

  Graph out = g;
  // Toggle every pair lying in two different classes. Each class row only
  // flips bits of the other two classes, so the result stays symmetric.
  for_each_vertex(su, [&](int x) { out.rows_[x] ^= sv | suv; });
  for_each_vertex(sv, [&](int x) { out.rows_[x] ^= su | suv; });
  for_each_vertex(suv, [&](int x) { out.rows_[x] ^= su | sv; });

  // Swap the private neighborhoods of u and v.
  out.rows_[u] = (g.rows_[u] & ~su) | sv;
  out.rows_[v] = (g.rows_[v] & ~sv) | su;
  for_each_vertex(su, [&](int x) { out.rows_[x] = (out.rows_[x] & ~bit(u)) | bit(v); });
  for_each_vertex(sv, [&](int x) { out.rows_[x] = (out.rows_[x] & ~bit(v)) | bit(u); });
  return out;
}

NeighborhoodSplit neighborhood_split(const Graph& g, int v, int w) {
  if (v < 0 || w < 0 || v >= g.order() || w >= g.order())
    throw std::out_of_range("neighborhood split on out-of-range vertex");
  if (v == w || !g.adjacent(v, w))
    throw std::invalid_argument("neighborhood split needs an edge");
  const VertexSet nv = g.neighbors(v) & ~bit(w);
  const VertexSet nw = g.neighbors(w) & ~bit(v);
  NeighborhoodSplit s;
  s.s1 = nv & ~nw;
  s.s2 = nv & nw;
  s.s3 = nw & ~nv;
  s.s4 = g.vertices() & ~(nv | nw | bit(v) | bit(w));
  return s;
}

Graph contract_pivot(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("contract_pivot: vertex out of range");
  const VertexSet nbrs = g.neighbors(v);
  if (nbrs == 0) return delete_vertex(g, v);
  return delete_vertex(pivot(g, lowest(nbrs), v), v);
}

Graph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  Graph out(g.order_ - 1);
  for (int x = 0, y = 0; x < g.order_; ++x) {
    if (x == v) continue;
    out.rows_[y++] = squeeze(g.rows_[x], v);
  }
  return out;
}

Graph delete_vertices(const Graph& g, VertexSet s) {
  s &= g.vertices();
  std::vector<int> keep;
  for_each_vertex(g.vertices() & ~s, [&](int v) { keep.push_back(v); });
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const int> subset) {
  Graph out(static_cast<int>(subset.size()));
  VertexSet seen = 0;
  for (int v : subset) {
    if (v < 0 || v >= g.order())
      throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (seen & bit(v))
      throw std::invalid_argument("induced_subgraph: duplicate vertex " + std::to_string(v));
    seen |= bit(v);
  }
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (g.adjacent(subset[i], subset[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet subset) {
  if (subset & ~g.vertices()) throw std::out_of_range("induced_subgraph: mask out of range");
  std::vector<int> list;
  for_each_vertex(subset, [&](int v) { list.push_back(v); });
  return induced_subgraph(g, list);
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) out.set_neighbors(v, all & ~g.neighbors(v) & ~bit(v));
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  VertexSet image = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || (image & bit(p)))
      throw std::invalid_argument("relabel: not a permutation");
    image |= bit(p);
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

VertexSet component_of(const Graph& g, int v, VertexSet within) {
  VertexSet seen = bit(v);
  VertexSet frontier = bit(v);
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int x) { next |= g.neighbors(x); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left) {
    const VertexSet c = component_of(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  VertexSet left = g.vertices();
  while (left) {
    const int root = lowest(left);
    VertexSet side[2] = {bit(root), 0};
    VertexSet frontier = bit(root);
    int parity = 0;
    VertexSet seen = bit(root);
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int x) { next |= g.neighbors(x); });
      if (next & side[parity]) return false;
      next &= ~seen;
      parity ^= 1;
      side[parity] |= next;
      seen |= next;
      frontier = next;
    }
    left &= ~seen;
  }
  return true;
}

bool is_complete(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && ((g.neighbors(v) | bit(v)) & s) == s; });
  return ok;
}

bool is_independent(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

bool adjacent_twins(const Graph& g, int u, int v) {
  return u != v && g.adjacent(u, v) &&
         (g.neighbors(u) | bit(u)) == (g.neighbors(v) | bit(v));
}

bool components_are_stars_or_cliques(const Graph& g) {
  for (VertexSet c : connected_components(g)) {
    if (is_complete(g, c)) continue;
    // A star with at least three vertices: one center, the rest leaves.
    bool star = false;
    for_each_vertex(c, [&](int center) {
      if ((g.neighbors(center) | bit(center)) != c) return;
      star = star || is_independent(g, c & ~bit(center));
    });
    if (!star) return false;
  }
  return true;
}

}  // namespace pivotminor
