#include "pivotminor/matroid.hpp"

#include <algorithm>

#include "pivotminor/io.hpp"
#include "pivotminor/named.hpp"

namespace pivotminor {

std::vector<Edge> spanning_tree(const Graph& g) {
  std::vector<Edge> tree;
  if (g.order() == 0) return tree;
  VertexSet seen = bit(0);
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for_each_vertex(g.neighbors(x) & ~seen, [&](int y) {
      seen |= bit(y);
      tree.emplace_back(x, y);
      queue.push_back(y);
    });
  }
  if (seen != g.vertices()) throw DisconnectedGraph("spanning_tree: graph is disconnected");
  return tree;
}

namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

}  // namespace

FundamentalGraph fundamental_graph(const Graph& g, const std::vector<Edge>& tree) {
  const int n = g.order();
  if (n > 0 && static_cast<int>(tree.size()) != n - 1)
    throw std::invalid_argument("fundamental_graph: tree has the wrong number of edges");

  // Tree adjacency with the index of each tree edge.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  std::vector<Edge> tree_edges;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto [a, b] = tree[i];
    if (a < 0 || b < 0 || a >= n || b >= n || !g.adjacent(a, b))
      throw std::invalid_argument("fundamental_graph: tree edge is not an edge of the graph");
    adj[a].emplace_back(b, static_cast<int>(i));
    adj[b].emplace_back(a, static_cast<int>(i));
    tree_edges.push_back(normalized(tree[i]));
  }
  {
    auto sorted = tree_edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("fundamental_graph: repeated tree edge");
  }

  // Root the tree at 0: parent vertex and parent edge index for each vertex.
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
  if (n > 0) {
    depth[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (auto [y, idx] : adj[x]) {
        if (depth[y] >= 0) continue;
        depth[y] = depth[x] + 1;
        parent[y] = x;
        parent_edge[y] = idx;
        queue.push_back(y);
      }
    }
    if (std::count(depth.begin(), depth.end(), -1) > 0)
      throw std::invalid_argument("fundamental_graph: tree does not span the graph");
  }

  std::vector<Edge> cotree;
  for (const Edge& e : g.edges())
    if (std::find(tree_edges.begin(), tree_edges.end(), normalized(e)) == tree_edges.end())
      cotree.push_back(normalized(e));
  std::sort(cotree.begin(), cotree.end());

  const int t = static_cast<int>(tree.size());
  const int total = t + static_cast<int>(cotree.size());
  if (total > Graph::kMaxOrder) throw std::length_error("fundamental_graph: too many edges");

  FundamentalGraph out;
  out.graph = Graph(total);
  out.edge_labels = tree_edges;
  out.edge_labels.insert(out.edge_labels.end(), cotree.begin(), cotree.end());
  out.tree_mask = full_set(t);
  out.source = g;
  out.tree = tree;
  for (std::size_t j = 0; j < cotree.size(); ++j) {
    int a = cotree[j].first;
    int b = cotree[j].second;
    const int f = t + static_cast<int>(j);
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      out.graph.add_edge(parent_edge[a], f);
      a = parent[a];
    }
  }
  if (!is_bipartite(out.graph)) throw std::logic_error("fundamental graph is not bipartite");
  return out;
}

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n > kHamiltonianCap)
    throw std::length_error("hamiltonian_cycle: at most " + std::to_string(kHamiltonianCap) +
                            " vertices supported");
  if (n < 3) return std::nullopt;
  std::vector<int> path{0};
  auto extend = [&](auto&& self, VertexSet used) -> bool {
    const int last = path.back();
    if (static_cast<int>(path.size()) == n) return g.adjacent(last, 0);
    bool found = false;
    for_each_vertex(g.neighbors(last) & ~used, [&](int y) {
      if (found) return;
      path.push_back(y);
      if (self(self, used | bit(y)))
        found = true;
      else
        path.pop_back();
    });
    return found;
  };
  if (extend(extend, bit(0))) return path;
  return std::nullopt;
}

bool is_hamiltonian(const Graph& g) { return hamiltonian_cycle(g).has_value(); }

bool ReductionReport::agree() const {
  return contains != Verdict::inconclusive && (contains == Verdict::yes) == hamiltonian;
}

ReductionReport reduction_roundtrip(const Graph& g, ContainmentCache* cache,
                                    const EngineOptions& options) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) throw std::invalid_argument("reduction_roundtrip: graph is not cubic");
  if (!is_connected(g)) throw DisconnectedGraph("reduction_roundtrip: graph is disconnected");

  ReductionReport r;
  r.n = g.order();
  r.within_guarantee = r.n >= 5;
  r.cycle = hamiltonian_cycle(g);
  r.hamiltonian = r.cycle.has_value();
  const FundamentalGraph fg = fundamental_graph(g, spanning_tree(g));
  r.fundamental_order = fg.graph.order();
  r.fundamental_graph6 = emit_graph6(fg.graph);
  r.contains = contains_pivot_minor(fg.graph, star_graph(r.n - 1), cache, options);
  return r;
}

}  // namespace pivotminor
