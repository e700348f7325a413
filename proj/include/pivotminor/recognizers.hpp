#ifndef PIVOTMINOR_RECOGNIZERS_HPP
#define PIVOTMINOR_RECOGNIZERS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pivotminor/certificate.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/miner.hpp"

namespace pivotminor {

/// Targets with an exact polynomial-time recognizer.
enum class Target { c3, p4, c4, paw, diamond, two_p2, three_p1, claw };

std::string_view to_string(Target t);
std::optional<Target> parse_target(std::string_view name);
Graph target_graph(Target t);
const std::vector<Target>& all_targets();

enum class RecognitionVerdict { free, contains, free_up_to_truncation };
enum class RecognitionMethod { structural, forbidden_search };

std::string_view to_string(RecognitionVerdict v);
std::string_view to_string(RecognitionMethod m);

struct RecognitionResult {
  RecognitionVerdict verdict = RecognitionVerdict::free;
  /// Present iff verdict == contains.
  std::optional<Certificate> certificate;
  RecognitionMethod method = RecognitionMethod::structural;
  std::string obstruction_name;
  /// Which structural branch accepted the graph, or which search found the
  /// obstruction.
  std::string branch;

  bool contains() const { return verdict == RecognitionVerdict::contains; }
};

/// Free iff g is bipartite; otherwise certified by a shortest odd cycle.
RecognitionResult recognize_c3(const Graph& g);
/// Free iff every component is a clique-star; otherwise an induced P4, C4
/// or dart.
RecognitionResult recognize_p4(const Graph& g);
RecognitionResult recognize_c4(const Graph& g);
/// Free iff every component is bipartite or complete; otherwise an odd hole,
/// a paw or a diamond.
RecognitionResult recognize_paw(const Graph& g);
RecognitionResult recognize_diamond(const Graph& g);
/// Free iff at most one component has an edge and it embeds in the prism or
/// W5 or is leaf-attached complete multipartite; otherwise one of O1..O9.
RecognitionResult recognize_2p2(const Graph& g);
/// Induced search for 3P1, W4 and co-BW3.
RecognitionResult recognize_3p1(const Graph& g);
/// Induced search for the claw, P5, bull, W4 and co-BW3.
RecognitionResult recognize_claw(const Graph& g);

RecognitionResult recognize(Target t, const Graph& g);

/// Minimal forbidden induced subgraphs for t, by fixture name. Odd-cycle
/// families are listed up to max_order vertices.
std::vector<std::string> forbidden_subgraph_names(Target t, int max_order);

/// Brute-force counterpart of recognize(): plain induced-subgraph search
/// over forbidden_subgraph_names(t, g.order()).
RecognitionResult recognize_by_search(Target t, const Graph& g);

/// Pivot-minor sequence taking the named obstruction fixture to the target
/// graph. Computed once per pair and kept for the process lifetime.
const PivotMinorSequence& canned_sequence(const std::string& obstruction, const Graph& obstruction_graph,
                                          const Graph& target);

/// Thrown when a bounded recognizer would rely on an obstruction set that
/// does not reach the order bound and truncation was not acknowledged.
class TruncatedObstructionSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Induced-subgraph search against a mined obstruction set for one of the
 * bounded families. A `free` verdict needs the set to be complete up to the
 * family's order bound; otherwise the verdict is `free_up_to_truncation`,
 * and only when allow_truncated is set.
 */
RecognitionResult recognize_bounded(BoundFamily family, int t, const Graph& g,
                                    const ObstructionSet& obstructions, bool allow_truncated);

/// Vertices of a shortest odd cycle of g[within] in cyclic order, or empty
/// when g[within] is bipartite. A shortest odd cycle is always induced.
std::vector<int> shortest_odd_cycle(const Graph& g, VertexSet within);

/// Steps taking the cycle 0-1-...-(k-1)-0 to the cycle on its first `to`
/// vertices, two vertices at a time.
PivotMinorSequence odd_cycle_reduction(int k, int to);

}  // namespace pivotminor

#endif
