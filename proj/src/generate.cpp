#include "pivotminor/generate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace pivotminor {

namespace {

// Levels are shared between calls; building level 9 is the expensive part.
std::mutex level_mutex;
std::map<int, std::vector<CanonicalKey>> level_cache;

const std::vector<CanonicalKey>& level(int n) {
  if (auto it = level_cache.find(n); it != level_cache.end()) return it->second;
  std::vector<CanonicalKey> out;
  if (n == 0) {
    out.push_back(canonical_key(Graph(0)));
  } else {
    const std::vector<CanonicalKey>& prev = level(n - 1);
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    for (const CanonicalKey& key : prev) {
      const Graph base = graph_from_key(key);
      for (VertexSet nbrs = 0; nbrs <= full_set(n - 1); ++nbrs) {
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        g.set_neighbors(n - 1, nbrs);
        seen.insert(canonical_key(g));
      }
    }
    out.assign(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
  }
  return level_cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<CanonicalKey> generate_all_keys(int n, int cap) {
  if (n < 0) throw std::invalid_argument("generate: negative order");
  if (n > cap)
    throw std::length_error("generate: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
  std::lock_guard lock(level_mutex);
  return level(n);
}

std::vector<Graph> generate_all_graphs(int n, int cap) {
  std::vector<Graph> out;
  for (const CanonicalKey& key : generate_all_keys(n, cap)) out.push_back(graph_from_key(key));
  return out;
}

}  // namespace pivotminor
