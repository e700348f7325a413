#ifndef PIVOTMINOR_INDUCED_HPP
#define PIVOTMINOR_INDUCED_HPP

#include <optional>
#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor {

/// embedding[i] is the host vertex playing pattern vertex i.
using Embedding = std::vector<int>;

/// Backtracking search for an induced copy of pattern in host, restricted
/// to the vertices in `within`. Candidates are pruned by degree.
std::optional<Embedding> find_induced_subgraph(const Graph& host, const Graph& pattern,
                                               VertexSet within);
std::optional<Embedding> find_induced_subgraph(const Graph& host, const Graph& pattern);

}  // namespace pivotminor

#endif
