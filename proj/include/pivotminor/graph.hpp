#ifndef PIVOTMINOR_GRAPH_HPP
#define PIVOTMINOR_GRAPH_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace pivotminor {

/// Bitmask over vertex indices 0..63.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Lowest vertex in a non-empty set.
inline int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls f(v) for every vertex in s, in increasing order.
template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

using Edge = std::pair<int, int>;

/**
 * Simple undirected graph on vertices 0..order()-1, order <= 64.
 *
 * Row i of the adjacency matrix is one machine word. The matrix is kept
 * symmetric with an empty diagonal by every mutator, so the invariants hold
 * for every reachable value.
 */
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges);

  int order() const { return order_; }
  VertexSet vertices() const { return full_set(order_); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(rows_[v]); }
  int edge_count() const;
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  /// Replaces the neighborhood of v, keeping the matrix symmetric.
  void set_neighbors(int v, VertexSet nbrs);

  /// Checks the symmetric / loopless / in-range invariants.
  bool well_formed() const;

  friend bool operator==(const Graph& a, const Graph& b);

  std::size_t hash() const;

 private:
  void check_vertex(int v) const;
  void check_pair(int u, int v) const;

  int order_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};

  friend Graph local_complement(const Graph&, int);
  friend Graph pivot(const Graph&, int, int);
  friend Graph delete_vertex(const Graph&, int);
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hash(); }
};

/// The four-way split of V(G) - {v, w} around an edge vw.
struct NeighborhoodSplit {
  VertexSet s1 = 0;  // neighbors of v only
  VertexSet s2 = 0;  // common neighbors
  VertexSet s3 = 0;  // neighbors of w only
  VertexSet s4 = 0;  // neither
};

// Pivot algebra.
Graph local_complement(const Graph& g, int u);
Graph pivot(const Graph& g, int u, int v);
NeighborhoodSplit neighborhood_split(const Graph& g, int v, int w);

/// G/v: G - v when v is isolated, else (G pivot zv) - v for the lowest
/// neighbor z of v.
Graph contract_pivot(const Graph& g, int v);

// Induced structure. Deletion collapses indices order-preservingly.
Graph delete_vertex(const Graph& g, int v);
Graph delete_vertices(const Graph& g, VertexSet s);

/// Vertex i of the result is g's vertex subset[i]; duplicates are rejected.
Graph induced_subgraph(const Graph& g, std::span<const int> subset);
Graph induced_subgraph(const Graph& g, VertexSet subset);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Components as vertex masks, ordered by their lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
VertexSet component_of(const Graph& g, int v, VertexSet within);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_complete(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);

/// u and v adjacent with N[u] == N[v].
bool adjacent_twins(const Graph& g, int u, int v);

/// True when the graph is a disjoint union of stars (K_{1,t}, t >= 0) and
/// complete graphs.
bool components_are_stars_or_cliques(const Graph& g);

}  // namespace pivotminor

#endif
