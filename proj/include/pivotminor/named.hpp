#ifndef PIVOTMINOR_NAMED_HPP
#define PIVOTMINOR_NAMED_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pivotminor/graph.hpp"

namespace pivotminor {

class UnknownGraphName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parametric families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
/// C_n plus a vertex (index n) adjacent to all of it.
Graph wheel_graph(int n);
Graph edgeless_graph(int n);

/**
 * Graph from the named-graph vocabulary.
 *
 * A name is one or more terms joined by '+' (disjoint union); each term is
 * an optional multiplicity followed by a base name, e.g. "P3+2P1", "2P2",
 * "C5+P1". Base names: Pn, Cn, Kn, Ka,b, Wn, paw, diamond, dart, claw,
 * bull, gem, house, bowtie, prism, petersen, BW3, co-BW3, O1..O9,
 * fig1-left, fig1-right, and co-<name> for the complement of any base.
 */
Graph named_graph(std::string_view name);

/// Base names that are plain fixtures (no numeric parameter).
std::vector<std::string> fixture_names();

}  // namespace pivotminor

#endif
