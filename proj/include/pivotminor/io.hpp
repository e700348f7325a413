#ifndef PIVOTMINOR_IO_HPP
#define PIVOTMINOR_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pivotminor/graph.hpp"

namespace pivotminor {

/// Thrown on any malformed textual graph encoding.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * graph6: one header byte n+63 (n <= 62) or '~' plus three 6-bit bytes,
 * followed by the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
 * packed six bits per byte, most significant bit first, each byte offset by
 * 63. An optional ">>graph6<<" prefix is accepted on input.
 */
std::string emit_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

/// "n m" header, then m lines "u v" with 0-based endpoints.
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Reads a graph from text, accepting graph6 or edge-list form.
Graph parse_graph_text(std::string_view text);

}  // namespace pivotminor

#endif
