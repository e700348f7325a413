#ifndef PIVOTMINOR_ENGINE_HPP
#define PIVOTMINOR_ENGINE_HPP

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pivotminor/canonical.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

/// Three-valued answer: resource limits surface as `inconclusive`, never as
/// a silent `no`.
enum class Verdict { no, yes, inconclusive };

std::string_view to_string(Verdict v);

/// One step of a pivot-minor sequence. Vertex labels refer to the numbering
/// of the graph the step is applied to; a deletion shifts every higher label
/// down by one for the steps that follow.
struct SequenceStep {
  enum class Op { pivot_edge, delete_vertex };
  Op op = Op::delete_vertex;
  int u = -1;
  int v = -1;

  static SequenceStep pivot_edge(int u, int v) { return {Op::pivot_edge, u, v}; }
  static SequenceStep delete_vertex(int v) { return {Op::delete_vertex, v, -1}; }

  friend bool operator==(const SequenceStep&, const SequenceStep&) = default;
};

using PivotMinorSequence = std::vector<SequenceStep>;

int deletion_count(const PivotMinorSequence& seq);

class SequenceError : public std::invalid_argument {
 public:
  SequenceError(std::size_t step, const std::string& what)
      : std::invalid_argument("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Replays seq on g. Throws SequenceError naming the first invalid step.
Graph apply_sequence(const Graph& g, const PivotMinorSequence& seq);

inline constexpr std::size_t kDefaultOrbitLimit = std::size_t{1} << 20;

struct EngineOptions {
  /// Largest orbit (labeled graphs for pivot_orbit, isomorphism classes for
  /// the containment base case) explored before answering `inconclusive`.
  std::size_t orbit_limit = kDefaultOrbitLimit;
};

/// Isomorphism classes reachable from a graph by edge pivots.
struct ClassOrbit {
  std::unordered_set<CanonicalKey, CanonicalKeyHash> members;
  bool complete = true;
};

/**
 * Memo table shared by containment queries.
 *
 * Verdicts are keyed by the canonical keys of (target, host), so an answer
 * transfers to every isomorphic subproblem. Pivot orbits of targets are
 * cached alongside. All methods are safe to call concurrently; a second
 * store of the same key must agree with the first.
 */
class ContainmentCache {
 public:
  /// max_entries == 0 means unbounded. A disabled cache never memoizes.
  explicit ContainmentCache(std::size_t max_entries = 0, bool enabled = true)
      : max_entries_(max_entries), enabled_(enabled) {}

  bool enabled() const { return enabled_; }

  std::optional<bool> lookup(const CanonicalKey& target, const CanonicalKey& host) const;
  void store(const CanonicalKey& target, const CanonicalKey& host, bool contains);

  std::shared_ptr<const ClassOrbit> orbit(const CanonicalKey& g) const;
  void store_orbit(const CanonicalKey& g, std::shared_ptr<const ClassOrbit> orbit);

  std::size_t size() const;
  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }

 private:
  using Table = std::unordered_map<CanonicalKey, bool, CanonicalKeyHash>;

  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, Table, CanonicalKeyHash> verdicts_;
  std::unordered_map<CanonicalKey, std::shared_ptr<const ClassOrbit>, CanonicalKeyHash> orbits_;
  std::size_t entries_ = 0;
  std::size_t max_entries_;
  bool enabled_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

struct OrbitResult {
  std::vector<Graph> members;
  bool limit_exceeded = false;
};

/// Breadth-first closure of g under single edge pivots, as labeled graphs
/// on g's vertex set. Members appear in discovery order, g first.
OrbitResult pivot_orbit(const Graph& g, std::size_t limit = kDefaultOrbitLimit);

/// Closure of g's isomorphism class under edge pivots, as canonical keys.
ClassOrbit class_orbit(const Graph& g, std::size_t limit = kDefaultOrbitLimit);

/// `yes` iff h is a labeled member of g's pivot orbit.
Verdict pivot_equivalent(const Graph& g, const Graph& h, std::size_t limit = kDefaultOrbitLimit);

/**
 * Does g contain a pivot-minor isomorphic to h?
 *
 * For |g| > |h| the search branches on every vertex v into g - v and g/v;
 * one contraction neighbor suffices because all choices are
 * pivot-equivalent. At |g| == |h| the answer is membership of g's class in
 * the pivot orbit of h's class. A null cache uses a private one.
 */
Verdict contains_pivot_minor(const Graph& g, const Graph& h, ContainmentCache* cache = nullptr,
                             const EngineOptions& options = {});

struct Witness {
  PivotMinorSequence sequence;
  /// Maps the vertices of the replayed graph onto h.
  Bijection bijection;
};

/// A sequence turning g into a graph isomorphic to h, when one exists.
std::optional<Witness> find_pivot_minor_sequence(const Graph& g, const Graph& h,
                                                 ContainmentCache* cache = nullptr,
                                                 const EngineOptions& options = {});

}  // namespace pivotminor

#endif
