#ifndef PIVOTMINOR_CERTIFICATE_HPP
#define PIVOTMINOR_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pivotminor/canonical.hpp"
#include "pivotminor/engine.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

/**
 * Witness that g contains h as a pivot-minor.
 *
 * obstruction_vertices is an ordered list: vertex i of the obstruction
 * graph G[S] is input vertex obstruction_vertices[i]. The sequence is
 * replayed on G[S], and target_isomorphism maps the replay result onto h.
 */
struct Certificate {
  std::vector<int> obstruction_vertices;
  CanonicalKey obstruction_key;
  std::string obstruction_name;
  PivotMinorSequence sequence;
  Bijection target_isomorphism;
};

/// Builds a certificate for an embedded obstruction, filling in the key and
/// the target isomorphism from a replay of seq.
Certificate make_certificate(const Graph& g, std::vector<int> subset, const PivotMinorSequence& seq,
                             const Graph& h, std::string name = {});

struct VerificationResult {
  bool valid = false;
  /// Index of the first failing sequence step, when the failure is a step.
  std::optional<std::size_t> failed_step;
  std::string reason;

  explicit operator bool() const { return valid; }
};

/**
 * Checks a certificate from scratch: re-extracts G[S], replays the sequence
 * on a plain adjacency matrix using the three-local-complementation form of
 * a pivot, and compares every vertex pair under the claimed isomorphism.
 * Shares no code with the search or the bitmask kernel.
 */
VerificationResult verify_certificate(const Graph& g, const Certificate& cert, const Graph& h);

}  // namespace pivotminor

#endif
