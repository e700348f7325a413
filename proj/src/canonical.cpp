#include "pivotminor/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "pivotminor/io.hpp"

namespace pivotminor {

int CanonicalKey::order() const { return graph_from_key(*this).order(); }

namespace {

using Cells = std::vector<VertexSet>;

// Refines an ordered partition until every cell is equitable with respect to
// every other cell. Split pieces are ordered by neighbor count, so the result
// only depends on the graph structure and the input cell order.
void refine(const Graph& g, Cells& cells) {
  std::array<std::pair<int, int>, Graph::kMaxOrder> tally{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (popcount(cells[c]) < 2) continue;
        int size = 0;
        for_each_vertex(cells[c], [&](int v) {
          tally[size++] = {popcount(g.neighbors(v) & splitter), v};
        });
        const auto [lo, hi] = std::minmax_element(
            tally.begin(), tally.begin() + size,
            [](const auto& a, const auto& b) { return a.first < b.first; });
        if (lo->first == hi->first) continue;
        std::sort(tally.begin(), tally.begin() + size);
        Cells pieces;
        for (int i = 0; i < size; ++i) {
          if (i == 0 || tally[i].first != tally[i - 1].first) pieces.push_back(0);
          pieces.back() |= bit(tally[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

// -1 if a < b, 0 if equal, 1 if a > b, comparing the bits of one column
// from row 0 upward.
int compare_column(VertexSet a, VertexSet b) {
  const VertexSet d = a ^ b;
  if (d == 0) return 0;
  return ((a >> lowest(d)) & 1U) ? 1 : -1;
}

class LabelingSearch {
 public:
  explicit LabelingSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Cells cells;
    if (n_ > 0) cells.push_back(g_.vertices());
    descend(std::move(cells));
    CanonicalForm out;
    out.labeling = best_labeling_;
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) position[best_labeling_[i]] = i;
    out.graph = relabel(g_, position);
    return out;
  }

 private:
  void descend(Cells cells) {
    refine(g_, cells);

    int prefix = 0;
    while (prefix < static_cast<int>(cells.size()) && popcount(cells[prefix]) == 1) ++prefix;

    // Columns of the labeling fixed so far.
    std::array<VertexSet, Graph::kMaxOrder> cols{};
    bool strictly_better = !have_best_;
    for (int j = 0; j < prefix; ++j) {
      const int vj = lowest(cells[j]);
      VertexSet col = 0;
      for (int i = 0; i < j; ++i)
        if (g_.adjacent(lowest(cells[i]), vj)) col |= bit(i);
      cols[j] = col;
      if (!strictly_better) {
        const int cmp = compare_column(col, best_cols_[j]);
        if (cmp > 0) return;
        if (cmp < 0) strictly_better = true;
      }
    }

    if (prefix == n_) {
      if (strictly_better) {
        have_best_ = true;
        best_cols_ = cols;
        best_labeling_.resize(n_);
        for (int i = 0; i < n_; ++i) best_labeling_[i] = lowest(cells[i]);
      }
      return;
    }

    const VertexSet target = cells[prefix];
    VertexSet tried = 0;
    for_each_vertex(target, [&](int v) {
      // Swapping v with an already tried twin is an automorphism fixing every
      // individualized vertex, so its subtree is a copy of one already seen.
      bool twin = false;
      for_each_vertex(tried, [&](int t) {
        twin = twin || (g_.neighbors(v) & ~bit(t)) == (g_.neighbors(t) & ~bit(v));
      });
      if (twin) return;
      tried |= bit(v);
      Cells next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + prefix);
      next.push_back(bit(v));
      next.push_back(target & ~bit(v));
      next.insert(next.end(), cells.begin() + prefix + 1, cells.end());
      descend(std::move(next));
    });
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::array<VertexSet, Graph::kMaxOrder> best_cols_{};
  std::vector<int> best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
  if (g.order() > cap)
    throw std::length_error("canonical form: order " + std::to_string(g.order()) +
                            " exceeds cap " + std::to_string(cap));
  return LabelingSearch(g).run();
}

CanonicalKey canonical_key(const Graph& g, int cap) {
  return CanonicalKey{emit_graph6(canonical_form(g, cap).graph)};
}

Graph graph_from_key(const CanonicalKey& key) { return parse_graph6(key.graph6); }

bool is_isomorphism(const Graph& g, const Graph& h, const Bijection& f) {
  if (g.order() != h.order() || static_cast<int>(f.size()) != g.order()) return false;
  VertexSet image = 0;
  for (int x : f) {
    if (x < 0 || x >= h.order() || (image & bit(x))) return false;
    image |= bit(x);
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(f[u], f[v])) return false;
  return true;
}

namespace {

std::vector<int> neighbor_degrees(const Graph& g, int v) {
  std::vector<int> d;
  for_each_vertex(g.neighbors(v), [&](int x) { d.push_back(g.degree(x)); });
  std::sort(d.begin(), d.end());
  return d;
}

class IsoMatcher {
 public:
  IsoMatcher(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      gsig_.push_back(neighbor_degrees(g, v));
      hsig_.push_back(neighbor_degrees(h, v));
    }
    // Match in an order where each vertex has many already-matched
    // neighbors, starting from a highest-degree vertex.
    VertexSet placed = 0;
    while (static_cast<int>(order_.size()) < n_) {
      int pick = -1;
      int best_link = -1;
      int best_deg = -1;
      for_each_vertex(g.vertices() & ~placed, [&](int v) {
        const int link = popcount(g.neighbors(v) & placed);
        if (link > best_link || (link == best_link && g.degree(v) > best_deg)) {
          pick = v;
          best_link = link;
          best_deg = g.degree(v);
        }
      });
      order_.push_back(pick);
      placed |= bit(pick);
    }
    map_.assign(n_, -1);
  }

  std::optional<Bijection> solve() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(int depth) {
    if (depth == n_) return true;
    const int v = order_[depth];
    for (int c = 0; c < n_; ++c) {
      if (used_ & bit(c)) continue;
      if (g_.degree(v) != h_.degree(c) || gsig_[v] != hsig_[c]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order_[d];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], c);
      }
      if (!ok) continue;
      map_[v] = c;
      used_ |= bit(c);
      if (extend(depth + 1)) return true;
      used_ &= ~bit(c);
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<std::vector<int>> gsig_;
  std::vector<std::vector<int>> hsig_;
  std::vector<int> order_;
  std::vector<int> map_;
  VertexSet used_ = 0;
};

}  // namespace

std::optional<Bijection> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg;
  std::vector<int> dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  return IsoMatcher(g, h).solve();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace pivotminor
