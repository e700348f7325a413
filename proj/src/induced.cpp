#include "pivotminor/induced.hpp"

namespace pivotminor {

namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern, VertexSet within)
      : host_(host), pattern_(pattern), within_(within & host.vertices()) {
    // Pattern vertices in an order that keeps each one attached to earlier
    // ones where possible.
    VertexSet placed = 0;
    const int k = pattern.order();
    while (static_cast<int>(order_.size()) < k) {
      int pick = -1;
      int best_link = -1;
      int best_deg = -1;
      for_each_vertex(pattern.vertices() & ~placed, [&](int v) {
        const int link = popcount(pattern.neighbors(v) & placed);
        if (link > best_link || (link == best_link && pattern.degree(v) > best_deg)) {
          pick = v;
          best_link = link;
          best_deg = pattern.degree(v);
        }
      });
      order_.push_back(pick);
      placed |= bit(pick);
    }
    map_.assign(k, -1);
  }

  std::optional<Embedding> solve() {
    if (pattern_.order() > popcount(within_)) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    // Host candidates must be adjacent to the images of mapped neighbors of
    // p and non-adjacent to the images of mapped non-neighbors.
    VertexSet candidates = within_ & ~used_;
    for (std::size_t d = 0; d < depth; ++d) {
      const int q = order_[d];
      const VertexSet hn = host_.neighbors(map_[q]);
      candidates &= pattern_.adjacent(p, q) ? hn : ~hn;
    }
    const int need = pattern_.degree(p);
    bool found = false;
    for_each_vertex(candidates, [&](int c) {
      if (found || popcount(host_.neighbors(c) & within_) < need) return;
      map_[p] = c;
      used_ |= bit(c);
      if (extend(depth + 1)) {
        found = true;
        return;
      }
      used_ &= ~bit(c);
      map_[p] = -1;
    });
    return found;
  }

  const Graph& host_;
  const Graph& pattern_;
  VertexSet within_;
  std::vector<int> order_;
  std::vector<int> map_;
  VertexSet used_ = 0;
};

}  // namespace

std::optional<Embedding> find_induced_subgraph(const Graph& host, const Graph& pattern,
                                               VertexSet within) {
  return InducedMatcher(host, pattern, within).solve();
}

std::optional<Embedding> find_induced_subgraph(const Graph& host, const Graph& pattern) {
  return find_induced_subgraph(host, pattern, host.vertices());
}

}  // namespace pivotminor
