#ifndef PIVOTMINOR_CANONICAL_HPP
#define PIVOTMINOR_CANONICAL_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor {

/// graph6 text of an isomorphism-class representative.
struct CanonicalKey {
  std::string graph6;

  int order() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    return std::hash<std::string>{}(k.graph6);
  }
};

inline constexpr int kDefaultCanonicalCap = 16;

struct CanonicalForm {
  Graph graph;
  /// labeling[i] is the input vertex placed at position i.
  std::vector<int> labeling;
};

/**
 * Canonical representative of g's isomorphism class.
 *
 * The initial partition orders vertices by degree and is refined to an
 * equitable ordered partition; the search then individualizes vertices of
 * the first non-trivial cell, keeping the labeling whose column-ordered
 * upper triangle is lexicographically smallest. Prefixes that already
 * exceed the best labeling are cut, and twin vertices in the same cell are
 * branched on only once.
 *
 * Throws std::length_error when g.order() exceeds cap.
 */
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);
CanonicalKey canonical_key(const Graph& g, int cap = kDefaultCanonicalCap);
Graph graph_from_key(const CanonicalKey& key);

/// f[v] is the vertex of h matched to vertex v of g.
using Bijection = std::vector<int>;

/// Backtracking isomorphism test with degree pruning; independent of the
/// canonical labeling code. Returns a witness when g and h are isomorphic.
std::optional<Bijection> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

/// True when f is a bijection with uv in E(g) iff f(u)f(v) in E(h).
bool is_isomorphism(const Graph& g, const Graph& h, const Bijection& f);

}  // namespace pivotminor

#endif
