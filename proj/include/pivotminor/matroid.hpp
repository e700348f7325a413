#ifndef PIVOTMINOR_MATROID_HPP
#define PIVOTMINOR_MATROID_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pivotminor/engine.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

class DisconnectedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// BFS tree from vertex 0, edges as (parent, child) in discovery order.
std::vector<Edge> spanning_tree(const Graph& g);

/// Fundamental graph of the cycle matroid of `source` with respect to the
/// base `tree`. Vertex i < tree.size() stands for tree edge i; the rest are
/// the co-tree edges in increasing order.
struct FundamentalGraph {
  Graph graph;
  std::vector<Edge> edge_labels;
  VertexSet tree_mask = 0;
  Graph source;
  std::vector<Edge> tree;
};

FundamentalGraph fundamental_graph(const Graph& g, const std::vector<Edge>& tree);

inline constexpr int kHamiltonianCap = 12;

/// A Hamiltonian cycle as a vertex sequence, or nullopt. Throws
/// std::length_error above kHamiltonianCap vertices.
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g);
bool is_hamiltonian(const Graph& g);

struct ReductionReport {
  int n = 0;
  /// n >= 5; below that the two sides need not agree.
  bool within_guarantee = false;
  bool hamiltonian = false;
  std::optional<std::vector<int>> cycle;
  Verdict contains = Verdict::inconclusive;
  std::string fundamental_graph6;
  int fundamental_order = 0;

  /// Both sides definite and equal.
  bool agree() const;
};

/// Checks Hamiltonicity of a connected cubic graph against star
/// containment in its fundamental graph.
ReductionReport reduction_roundtrip(const Graph& g, ContainmentCache* cache = nullptr,
                                    const EngineOptions& options = {});

}  // namespace pivotminor

#endif
