// Pivot algebra property checks shared by the unit suite and the acceptance
// binary.
#ifndef PIVOTMINOR_TESTS_PROPERTIES_HPP
#define PIVOTMINOR_TESTS_PROPERTIES_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pivotminor/canonical.hpp"
#include "pivotminor/engine.hpp"
#include "pivotminor/families.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/io.hpp"
#include "pivotminor/named.hpp"

namespace props {

using pivotminor::Graph;

struct Tally {
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> examples;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (examples.size() < 5) examples.push_back(what);
  }
  void merge(const Tally& o) {
    cases += o.cases;
    failures += o.failures;
    for (const auto& e : o.examples)
      if (examples.size() < 5) examples.push_back(e);
  }
};

inline std::string tag(const Graph& g, int u, int v) {
  return pivotminor::emit_graph6(g) + " edge " + std::to_string(u) + "," + std::to_string(v);
}

inline bool components_clique_stars(const Graph& g) {
  const oracle::Dense m = oracle::dense(g);
  for (const auto& c : oracle::components(m))
    if (!oracle::clique_star(m, c)) return false;
  return true;
}

inline std::vector<Graph> small_battery() {
  using pivotminor::named_graph;
  return {named_graph("C3"), named_graph("P4"), named_graph("2P2"), named_graph("3P1"),
          named_graph("claw"), named_graph("paw")};
}

/// Properties of a single edge pivot on g.
inline void pivot_edge_properties(const Graph& g, int u, int v, Tally& t, bool with_backward,
                                  pivotminor::ContainmentCache* cache) {
  using namespace pivotminor;
  const Graph p = pivot(g, u, v);
  const oracle::Dense d = oracle::dense(g);
  const std::string at = tag(g, u, v);

  t.check(p.well_formed(), "well-formed " + at);
  t.check(pivot(p, u, v) == g, "involution " + at);
  t.check(p == oracle::graph(oracle::pivot(d, u, v)), "set rule vs triple local complement " + at);
  t.check(oracle::pivot(d, u, v) == oracle::pivot(d, v, u), "(G*u*v*u) == (G*v*u*v) " + at);
  t.check(local_complement(local_complement(local_complement(g, u), v), u) ==
              local_complement(local_complement(local_complement(g, v), u), v),
          "library triple forms agree " + at);

  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (adjacent_twins(g, a, b)) t.check(adjacent_twins(p, a, b), "twins survive " + at);

  if (oracle::is_bipartite(d)) t.check(oracle::is_bipartite(oracle::dense(p)), "bipartite closure " + at);

  if (components_clique_stars(g)) {
    t.check(components_clique_stars(p), "clique-star closure under pivot " + at);
    for (int x = 0; x < g.order(); ++x)
      t.check(components_clique_stars(delete_vertex(g, x)), "clique-star closure under deletion " + at);
  }

  if (components_are_stars_or_cliques(g)) t.check(is_isomorphic(p, g), "star/complete invariance " + at);

  if (!with_backward) return;
  for (int x = 0; x < g.order(); ++x) {
    if (x == u || x == v) continue;
    t.check(delete_vertex(p, x) == pivot(delete_vertex(g, x), u - (u > x), v - (v > x)),
            "(G^uv)-x == (G-x)^uv " + at);
    const Verdict same = pivot_equivalent(contract_pivot(p, x), contract_pivot(g, x));
    t.check(same == Verdict::yes, "(G^uv)/x pivot-equivalent to G/x " + at + " x=" + std::to_string(x));
    for (const Graph& h : small_battery()) {
      t.check(contains_pivot_minor(delete_vertex(p, x), h, cache) ==
                  contains_pivot_minor(delete_vertex(g, x), h, cache),
              "containment after deletion " + at);
      t.check(contains_pivot_minor(contract_pivot(p, x), h, cache) ==
                  contains_pivot_minor(contract_pivot(g, x), h, cache),
              "containment after contraction " + at);
    }
  }
}

inline void all_edges(const Graph& g, Tally& t, bool with_backward, pivotminor::ContainmentCache* cache) {
  for (const auto& [u, v] : g.edges()) pivot_edge_properties(g, u, v, t, with_backward, cache);
}

/// Every labeled graph on up to max_n vertices, every edge.
inline Tally exhaustive(int max_n, pivotminor::ContainmentCache* cache) {
  Tally t;
  for (int n = 1; n <= max_n; ++n)
    oracle::each_labeled(n, [&](const oracle::Dense& m) { all_edges(oracle::graph(m), t, true, cache); });
  return t;
}

inline Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return pivotminor::relabel(g, perm);
}

/// Random disjoint union of clique-stars, or of stars and cliques.
inline Graph random_structured(std::mt19937_64& rng, int max_n, bool stars_only) {
  using namespace pivotminor;
  Graph g(0);
  std::uniform_int_distribution<int> small(1, 3);
  while (true) {
    Graph part;
    if (stars_only) {
      part = std::uniform_int_distribution<int>(0, 1)(rng) ? star_graph(small(rng)) : complete_graph(small(rng));
    } else {
      std::vector<int> ls(std::uniform_int_distribution<int>(1, 3)(rng));
      for (int& l : ls) l = small(rng);
      part = clique_star(small(rng), ls);
    }
    if (g.order() + part.order() > max_n) break;
    g = disjoint_union(g, part);
  }
  if (g.order() == 0) g = complete_graph(1);
  return shuffled(g, rng);
}

/// `count` random cases on 2..max_n vertices; every tenth case also runs
/// the lemma checks that need containment queries.
inline Tally randomized(long long count, int max_n, std::uint64_t seed, pivotminor::ContainmentCache* cache) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(2, max_n);
  for (long long i = 0; i < count; ++i) {
    Graph g;
    switch (i % 4) {
      case 0:
      case 1: g = oracle::graph(oracle::random_graph(rng, order(rng), 0.2 + 0.6 * (i % 7) / 6.0)); break;
      case 2: g = random_structured(rng, max_n, false); break;
      case 3: g = random_structured(rng, max_n, true); break;
    }
    const auto edges = g.edges();
    if (edges.empty()) {
      t.check(pivotminor::pivot_orbit(g).members.size() == 1, "edgeless orbit is trivial");
      continue;
    }
    const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    pivot_edge_properties(g, u, v, t, i % 10 == 0 && g.order() <= 8, cache);
  }
  return t;
}

}  // namespace props

#endif
