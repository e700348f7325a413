#ifndef PIVOTMINOR_FAMILIES_HPP
#define PIVOTMINOR_FAMILIES_HPP

#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor {

/// Two odd cycles joined by a path with path_len edges; path_len == 0
/// identifies one vertex of each cycle.
Graph family_k4(int len1, int len2, int path_len);

/// C_k + P_1 for odd k >= 3.
Graph family_c3p1(int k);

/// A clique of k_size vertices joined completely to disjoint cliques of the
/// given sizes, with no edges between those cliques.
Graph clique_star(int k_size, const std::vector<int>& l_sizes);

/// Complete multipartite graph with the given class sizes, plus
/// leaves_per_singleton[i] pendant vertices on class i (allowed only on
/// classes of size one). An empty leaf list means no leaves.
Graph leaf_attached_multipartite(const std::vector<int>& class_sizes,
                                 const std::vector<int>& leaves_per_singleton);

/// Is G[component] a clique-star (complete, or a universal clique joined to
/// pairwise anticomplete cliques)?
bool is_clique_star(const Graph& g, VertexSet component);

/// Is G[component] a complete multipartite graph?
bool is_complete_multipartite(const Graph& g, VertexSet component);

/// Is the connected G[component] a leaf-attached complete multipartite
/// graph?
bool is_leaf_attached_multipartite(const Graph& g, VertexSet component);

}  // namespace pivotminor

#endif
