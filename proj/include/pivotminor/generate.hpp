#ifndef PIVOTMINOR_GENERATE_HPP
#define PIVOTMINOR_GENERATE_HPP

#include <string>
#include <vector>

#include "pivotminor/canonical.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

inline constexpr int kDefaultGenerationCap = 9;

/**
 * One canonical representative per isomorphism class of graphs on n
 * vertices, sorted by canonical key. Built level by level: every class on
 * n-1 vertices is extended by a new vertex with every possible neighborhood
 * and the results are deduplicated by canonical key.
 *
 * Throws std::length_error when n exceeds cap.
 */
std::vector<CanonicalKey> generate_all_keys(int n, int cap = kDefaultGenerationCap);
std::vector<Graph> generate_all_graphs(int n, int cap = kDefaultGenerationCap);

/// Number of labeled graphs on n vertices is 2^C(n,2); enumerates them all.
/// Only meant for n <= 6.
template <class F>
void for_each_labeled_graph(int n, F&& f) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const unsigned long long total = 1ULL << pairs.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1ULL) g.add_edge(pairs[k].first, pairs[k].second);
    f(g);
  }
}

}  // namespace pivotminor

#endif
