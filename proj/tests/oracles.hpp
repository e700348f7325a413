// Slow, independent reference implementations used as test oracles. Nothing
// here calls into the library except to convert Graph values.
#ifndef PIVOTMINOR_TESTS_ORACLES_HPP
#define PIVOTMINOR_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pivotminor/graph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<char>>;

inline Dense dense(const pivotminor::Graph& g) {
  Dense m(g.order(), std::vector<char>(g.order(), 0));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) m[a][b] = g.adjacent(a, b) ? 1 : 0;
  return m;
}

inline pivotminor::Graph graph(const Dense& m) {
  pivotminor::Graph g(static_cast<int>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (m[a][b]) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

inline Dense local_complement(Dense m, int u) {
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && a != u && b != u && m[u][a] && m[u][b]) m[a][b] = !m[a][b];
  return m;
}

inline Dense pivot(const Dense& m, int u, int v) {
  return local_complement(local_complement(local_complement(m, u), v), u);
}

inline Dense remove(const Dense& m, int v) {
  Dense r;
  for (int a = 0; a < static_cast<int>(m.size()); ++a) {
    if (a == v) continue;
    std::vector<char> row;
    for (int b = 0; b < static_cast<int>(m.size()); ++b)
      if (b != v) row.push_back(m[a][b]);
    r.push_back(row);
  }
  return r;
}

inline Dense induced(const Dense& m, const std::vector<int>& s) {
  Dense r(s.size(), std::vector<char>(s.size(), 0));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) r[i][j] = m[s[i]][s[j]];
  return r;
}

/// Every permutation, so only for small n.
inline bool isomorphic(const Dense& a, const Dense& b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  auto edges = [](const Dense& m) {
    int e = 0;
    for (const auto& row : m) e += std::count(row.begin(), row.end(), 1);
    return e;
  };
  if (edges(a) != edges(b)) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = a[i][j] == b[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool isomorphic(const pivotminor::Graph& a, const pivotminor::Graph& b) {
  return isomorphic(dense(a), dense(b));
}

/// Smallest adjacency string over all vertex orders: a complete invariant.
inline std::vector<char> brute_canon(const Dense& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s.push_back(m[p[i]][p[j]]);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// All labeled graphs reachable from m by edge pivots.
inline std::set<Dense> orbit(const Dense& m) {
  std::set<Dense> seen{m};
  std::vector<Dense> stack{m};
  while (!stack.empty()) {
    Dense x = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < x.size(); ++u)
      for (std::size_t v = u + 1; v < x.size(); ++v)
        if (x[u][v]) {
          Dense y = pivot(x, static_cast<int>(u), static_cast<int>(v));
          if (seen.insert(y).second) stack.push_back(y);
        }
  }
  return seen;
}

/// Pivot-minor containment by exhaustive closure under pivots and
/// deletions; exponential, for n <= 6.
inline bool contains(const Dense& g, const Dense& h) {
  if (g.size() < h.size()) return false;
  std::set<Dense> level = orbit(g);
  while (level.begin()->size() > h.size()) {
    std::set<Dense> next;
    for (const Dense& x : level)
      for (int v = 0; v < static_cast<int>(x.size()); ++v) {
        Dense y = remove(x, v);
        if (next.count(y)) continue;
        for (const Dense& z : orbit(y)) next.insert(z);
      }
    level = std::move(next);
  }
  for (const Dense& x : level)
    if (isomorphic(x, h)) return true;
  return false;
}

inline bool contains(const pivotminor::Graph& g, const pivotminor::Graph& h) {
  return contains(dense(g), dense(h));
}

/// Induced subgraph test over all ordered vertex choices.
inline bool has_induced(const Dense& g, const Dense& h) {
  const int n = static_cast<int>(g.size());
  const int k = static_cast<int>(h.size());
  if (k > n) return false;
  std::vector<int> pick;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> bool {
    const int i = static_cast<int>(pick.size());
    if (i == k) return true;
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g[x][pick[j]] == h[i][j];
      if (!ok) continue;
      used[x] = 1;
      pick.push_back(x);
      if (self(self)) return true;
      pick.pop_back();
      used[x] = 0;
    }
    return false;
  };
  return rec(rec);
}

inline bool is_bipartite(const Dense& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> c(n, -1);
  for (int s = 0; s < n; ++s) {
    if (c[s] >= 0) continue;
    c[s] = 0;
    std::vector<int> q{s};
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      for (int y = 0; y < n; ++y)
        if (m[x][y]) {
          if (c[y] < 0) {
            c[y] = 1 - c[x];
            q.push_back(y);
          } else if (c[y] == c[x]) {
            return false;
          }
        }
    }
  }
  return true;
}

/// Components as vertex lists.
inline std::vector<std::vector<int>> components(const Dense& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> q{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      out.back().push_back(x);
      for (int y = 0; y < n; ++y)
        if (m[x][y] && comp[y] < 0) {
          comp[y] = comp[s];
          q.push_back(y);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// Clique-star by definition: some non-empty clique K is complete to the
/// rest, and the rest is a disjoint union of cliques (or empty).
inline bool clique_star(const Dense& m, const std::vector<int>& vs) {
  const int k = static_cast<int>(vs.size());
  for (int mask = 1; mask < (1 << k); ++mask) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) {
        const bool ki = mask >> i & 1, kj = mask >> j & 1;
        if (ki || kj) ok = m[vs[i]][vs[j]];
      }
    // Outside K: adjacency must be an equivalence relation.
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j)
        for (int l = 0; l < k && ok; ++l) {
          if ((mask >> i & 1) || (mask >> j & 1) || (mask >> l & 1)) continue;
          if (i == j || j == l || i == l) continue;
          if (m[vs[i]][vs[j]] && m[vs[j]][vs[l]]) ok = m[vs[i]][vs[l]];
        }
    if (ok) return true;
  }
  return false;
}

inline Dense random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Dense m(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m[a][b] = m[b][a] = coin(rng) ? 1 : 0;
  return m;
}

/// Every labeled graph on n vertices (n <= 6 keeps this cheap).
template <class F>
void each_labeled(int n, F&& f) {
  const int pairs = n * (n - 1) / 2;
  for (long long mask = 0; mask < (1LL << pairs); ++mask) {
    Dense m(n, std::vector<char>(n, 0));
    int bit = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b, ++bit)
        if (mask >> bit & 1) m[a][b] = m[b][a] = 1;
    f(m);
  }
}

/// n-1 edges with no cycle, by union-find.
inline bool is_spanning_tree(int n, const std::vector<pivotminor::Edge>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  for (const auto& [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    up[ra] = rb;
  }
  return true;
}

/// Every spanning tree of g as an edge list.
inline std::vector<std::vector<pivotminor::Edge>> spanning_trees(const pivotminor::Graph& g) {
  const auto edges = g.edges();
  const int n = g.order();
  std::vector<std::vector<pivotminor::Edge>> out;
  for (long long mask = 0; mask < (1LL << edges.size()); ++mask) {
    if (__builtin_popcountll(mask) != n - 1) continue;
    std::vector<pivotminor::Edge> pick;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) pick.push_back(edges[i]);
    if (is_spanning_tree(n, pick)) out.push_back(pick);
  }
  return out;
}

/// Fundamental-graph adjacency by the base-exchange rule: tree edge e and
/// co-tree edge f are adjacent iff swapping them gives another spanning tree.
inline bool exchangeable(int n, std::vector<pivotminor::Edge> tree, const pivotminor::Edge& e,
                         const pivotminor::Edge& f) {
  auto norm = [](pivotminor::Edge x) { return x.first < x.second ? x : pivotminor::Edge{x.second, x.first}; };
  tree.erase(std::remove_if(tree.begin(), tree.end(), [&](const auto& x) { return norm(x) == norm(e); }),
             tree.end());
  tree.push_back(f);
  return is_spanning_tree(n, tree);
}

}  // namespace oracle

#endif
