#include "pivotminor/families.hpp"

#include <stdexcept>
#include <string>

namespace pivotminor {

namespace {

void add_cycle(Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) g.add_edge(vs[i], vs[(i + 1) % vs.size()]);
}

}  // namespace

Graph family_k4(int len1, int len2, int path_len) {
  if (len1 < 3 || len2 < 3 || len1 % 2 == 0 || len2 % 2 == 0)
    throw std::invalid_argument("family_k4: cycle lengths must be odd and at least 3");
  if (path_len < 0) throw std::invalid_argument("family_k4: negative path length");
  const int order = path_len == 0 ? len1 + len2 - 1 : len1 + len2 + path_len - 1;
  if (order > Graph::kMaxOrder) throw std::invalid_argument("family_k4: more than 64 vertices");
  Graph g(order);
  std::vector<int> first;
  for (int i = 0; i < len1; ++i) first.push_back(i);
  add_cycle(g, first);
  int next = len1;
  int anchor = 0;
  for (int i = 0; i < path_len; ++i) {
    g.add_edge(anchor, next);
    anchor = next++;
  }
  std::vector<int> second{anchor};
  while (static_cast<int>(second.size()) < len2) second.push_back(next++);
  add_cycle(g, second);
  return g;
}

Graph family_c3p1(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("family_c3p1: k must be odd and at least 3");
  if (k + 1 > Graph::kMaxOrder) throw std::invalid_argument("family_c3p1: more than 64 vertices");
  Graph g(k + 1);
  std::vector<int> cycle;
  for (int i = 0; i < k; ++i) cycle.push_back(i);
  add_cycle(g, cycle);
  return g;
}

Graph clique_star(int k_size, const std::vector<int>& l_sizes) {
  if (k_size < 1) throw std::invalid_argument("clique_star: central clique must be non-empty");
  if (l_sizes.empty()) throw std::invalid_argument("clique_star: need at least one outer clique");
  int order = k_size;
  for (int s : l_sizes) {
    if (s < 1) throw std::invalid_argument("clique_star: outer cliques must be non-empty");
    order += s;
  }
  if (order > Graph::kMaxOrder) throw std::invalid_argument("clique_star: more than 64 vertices");
  Graph g(order);
  const VertexSet centre = full_set(k_size);
  for_each_vertex(centre, [&](int v) { g.set_neighbors(v, g.vertices() & ~bit(v)); });
  int start = k_size;
  for (int s : l_sizes) {
    const VertexSet block = full_set(start + s) & ~full_set(start);
    for_each_vertex(block, [&](int v) { g.set_neighbors(v, (block | centre) & ~bit(v)); });
    start += s;
  }
  return g;
}

Graph leaf_attached_multipartite(const std::vector<int>& class_sizes,
                                 const std::vector<int>& leaves_per_singleton) {
  if (class_sizes.empty()) throw std::invalid_argument("multipartite graph needs a class");
  if (!leaves_per_singleton.empty() && leaves_per_singleton.size() != class_sizes.size())
    throw std::invalid_argument("leaf counts must match the class list");
  int order = 0;
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    if (class_sizes[i] < 1) throw std::invalid_argument("partition classes must be non-empty");
    const int leaves = leaves_per_singleton.empty() ? 0 : leaves_per_singleton[i];
    if (leaves < 0) throw std::invalid_argument("negative leaf count");
    if (leaves > 0 && class_sizes[i] != 1)
      throw std::invalid_argument("leaves requested on class " + std::to_string(i) + " of size " +
                                  std::to_string(class_sizes[i]));
    order += class_sizes[i] + leaves;
  }
  if (order > Graph::kMaxOrder) throw std::invalid_argument("multipartite graph exceeds 64 vertices");

  Graph g(order);
  std::vector<VertexSet> classes;
  int next = 0;
  for (int size : class_sizes) {
    classes.push_back(full_set(next + size) & ~full_set(next));
    next += size;
  }
  const VertexSet core = full_set(next);
  for (VertexSet c : classes) for_each_vertex(c, [&](int v) { g.set_neighbors(v, core & ~c); });
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    const int leaves = leaves_per_singleton.empty() ? 0 : leaves_per_singleton[i];
    const int hub = lowest(classes[i]);
    for (int l = 0; l < leaves; ++l) g.add_edge(hub, next++);
  }
  return g;
}

bool is_clique_star(const Graph& g, VertexSet component) {
  VertexSet universal = 0;
  for_each_vertex(component, [&](int v) {
    if (((g.neighbors(v) | bit(v)) & component) == component) universal |= bit(v);
  });
  VertexSet rest = component & ~universal;
  while (rest) {
    const VertexSet part = component_of(g, lowest(rest), rest);
    if (!is_complete(g, part)) return false;
    rest &= ~part;
  }
  return true;
}

bool is_complete_multipartite(const Graph& g, VertexSet component) {
  // Non-adjacency must be an equivalence relation on the component.
  bool ok = true;
  for_each_vertex(component, [&](int v) {
    if (!ok) return;
    const VertexSet cls = component & ~g.neighbors(v);
    for_each_vertex(cls, [&](int w) { ok = ok && (component & ~g.neighbors(w)) == cls; });
  });
  return ok;
}

bool is_leaf_attached_multipartite(const Graph& g, VertexSet component) {
  if (popcount(component) <= 2) return true;
  auto degree_in = [&](int v) { return popcount(g.neighbors(v) & component); };

  // A star is complete bipartite; handling it first removes the only case in
  // which a degree-one vertex could belong to the multipartite core.
  bool star = false;
  for_each_vertex(component, [&](int c) {
    if (((g.neighbors(c) | bit(c)) & component) == component &&
        is_independent(g, component & ~bit(c)))
      star = true;
  });
  if (star) return true;

  VertexSet leaves = 0;
  for_each_vertex(component, [&](int v) {
    if (degree_in(v) == 1) leaves |= bit(v);
  });
  const VertexSet core = component & ~leaves;
  if (!is_complete_multipartite(g, core)) return false;
  bool ok = true;
  for_each_vertex(leaves, [&](int leaf) {
    const VertexSet hub = g.neighbors(leaf) & component;
    if (!(hub & core)) {
      ok = false;
      return;
    }
    const int h = lowest(hub);
    // The hub's partition class is its set of non-neighbors in the core.
    ok = ok && (core & ~g.neighbors(h)) == bit(h);
  });
  return ok;
}

}  // namespace pivotminor
