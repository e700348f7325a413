#ifndef PIVOTMINOR_MINER_HPP
#define PIVOTMINOR_MINER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pivotminor/canonical.hpp"
#include "pivotminor/engine.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

/// Induced-subgraph-minimal graphs containing a target as a pivot-minor,
/// exhaustively searched up to complete_up_to vertices.
struct ObstructionSet {
  CanonicalKey target;
  int complete_up_to = 0;
  /// Sorted by key; graphs are the canonical representatives.
  std::vector<CanonicalKey> members;
  /// Graphs whose status could not be settled within the orbit limit.
  std::vector<CanonicalKey> inconclusive;

  bool contains_key(const CanonicalKey& k) const;
  int max_member_order() const;
};

/// g contains h, and no g - v does. Vertex-deletion closure of
/// h-pivot-minor-freeness makes one-vertex deletions sufficient.
Verdict is_minimal_obstruction(const Graph& g, const Graph& h, ContainmentCache* cache = nullptr,
                               const EngineOptions& options = {});

struct MineOptions {
  int workers = 1;
  EngineOptions engine;
};

/// Filters every graph on at most n_max vertices through
/// is_minimal_obstruction.
ObstructionSet mine(const Graph& h, int n_max, ContainmentCache* cache = nullptr,
                    const MineOptions& options = {});

enum class BoundFamily { t_p1, p2_t_p1, star, p3_t_p1 };

std::string_view to_string(BoundFamily f);
std::optional<BoundFamily> parse_bound_family(std::string_view name);

/// The graph tP1, P2+tP1, K_{1,t} or P3+tP1.
Graph bound_family_graph(BoundFamily f, int t);

/// Upper bound on the order of any member of the obstruction set of the
/// family graph with parameter t.
std::int64_t bound_value(BoundFamily f, int t);

struct BoundRecord {
  BoundFamily family = BoundFamily::t_p1;
  int t = 0;
  std::int64_t bound = 0;
  int observed_max = 0;
  int n_max = 0;
  std::size_t members = 0;
  std::size_t inconclusive = 0;
  /// n_max reaches the bound, so the search covers every possible member.
  bool covered = false;
  /// covered, nothing inconclusive, and observed_max <= bound.
  bool verified = false;

  std::string status() const;
};

BoundRecord check_bound(BoundFamily f, int t, int n_max, ContainmentCache* cache = nullptr,
                        const MineOptions& options = {});

/// Writes manifest.json and members.g6 (sorted graph6 lines) into dir.
void save_obstruction_set(const ObstructionSet& set, const std::string& target_name,
                          const std::filesystem::path& dir);
ObstructionSet load_obstruction_set(const std::filesystem::path& dir);

struct ObstructionDiff {
  std::vector<CanonicalKey> only_in_first;
  std::vector<CanonicalKey> only_in_second;
  bool same_target = true;
  bool identical() const { return same_target && only_in_first.empty() && only_in_second.empty(); }
};

/// Compares member lists restricted to orders both sets cover.
ObstructionDiff diff_obstruction_sets(const ObstructionSet& a, const ObstructionSet& b);

}  // namespace pivotminor

#endif
