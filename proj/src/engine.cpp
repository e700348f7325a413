#include "pivotminor/engine.hpp"

#include <deque>
#include <mutex>

#include "pivotminor/io.hpp"

namespace pivotminor {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

int deletion_count(const PivotMinorSequence& seq) {
  int n = 0;
  for (const SequenceStep& s : seq) n += s.op == SequenceStep::Op::delete_vertex ? 1 : 0;
  return n;
}

Graph apply_sequence(const Graph& g, const PivotMinorSequence& seq) {
  Graph cur = g;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const SequenceStep& s = seq[i];
    if (s.op == SequenceStep::Op::delete_vertex) {
      if (s.u < 0 || s.u >= cur.order()) throw SequenceError(i, "deleted vertex out of range");
      cur = delete_vertex(cur, s.u);
    } else {
      if (s.u < 0 || s.v < 0 || s.u >= cur.order() || s.v >= cur.order())
        throw SequenceError(i, "pivot vertex out of range");
      if (s.u == s.v || !cur.adjacent(s.u, s.v)) throw SequenceError(i, "pivot on a non-edge");
      cur = pivot(cur, s.u, s.v);
    }
  }
  return cur;
}

std::optional<bool> ContainmentCache::lookup(const CanonicalKey& target,
                                             const CanonicalKey& host) const {
  if (!enabled_) return std::nullopt;
  std::shared_lock lock(mutex_);
  if (auto t = verdicts_.find(target); t != verdicts_.end()) {
    if (auto it = t->second.find(host); it != t->second.end()) {
      ++hits_;
      return it->second;
    }
  }
  ++misses_;
  return std::nullopt;
}

void ContainmentCache::store(const CanonicalKey& target, const CanonicalKey& host, bool contains) {
  if (!enabled_) return;
  std::unique_lock lock(mutex_);
  Table& table = verdicts_[target];
  if (auto it = table.find(host); it != table.end()) {
    if (it->second != contains)
      throw std::logic_error("containment cache: conflicting verdicts for " + host.graph6 +
                             " against " + target.graph6);
    return;
  }
  if (max_entries_ != 0 && entries_ >= max_entries_) return;
  table.emplace(host, contains);
  ++entries_;
}

std::shared_ptr<const ClassOrbit> ContainmentCache::orbit(const CanonicalKey& g) const {
  if (!enabled_) return nullptr;
  std::shared_lock lock(mutex_);
  auto it = orbits_.find(g);
  return it == orbits_.end() ? nullptr : it->second;
}

void ContainmentCache::store_orbit(const CanonicalKey& g, std::shared_ptr<const ClassOrbit> orbit) {
  if (!enabled_) return;
  std::unique_lock lock(mutex_);
  if (orbit->complete) {
    // Pivot-equivalence is an equivalence relation, so every member shares
    // the same orbit.
    for (const CanonicalKey& k : orbit->members) orbits_.emplace(k, orbit);
  }
  orbits_.emplace(g, std::move(orbit));
}

std::size_t ContainmentCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

OrbitResult pivot_orbit(const Graph& g, std::size_t limit) {
  OrbitResult out;
  std::unordered_set<Graph, GraphHash> seen{g};
  out.members.push_back(g);
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    const Graph cur = out.members[head];
    for (auto [u, v] : cur.edges()) {
      Graph next = pivot(cur, u, v);
      if (seen.insert(next).second) {
        if (out.members.size() >= limit) {
          out.limit_exceeded = true;
          return out;
        }
        out.members.push_back(std::move(next));
      }
    }
  }
  return out;
}

ClassOrbit class_orbit(const Graph& g, std::size_t limit) {
  ClassOrbit out;
  const CanonicalForm start = canonical_form(g);
  std::deque<Graph> queue{start.graph};
  out.members.insert(CanonicalKey{emit_graph6(start.graph)});
  while (!queue.empty()) {
    const Graph cur = queue.front();
    queue.pop_front();
    for (auto [u, v] : cur.edges()) {
      CanonicalForm next = canonical_form(pivot(cur, u, v));
      CanonicalKey key{emit_graph6(next.graph)};
      if (out.members.count(key)) continue;
      if (out.members.size() >= limit) {
        out.complete = false;
        return out;
      }
      out.members.insert(std::move(key));
      queue.push_back(std::move(next.graph));
    }
  }
  return out;
}

Verdict pivot_equivalent(const Graph& g, const Graph& h, std::size_t limit) {
  if (g.order() != h.order() || g.edge_count() == 0 || h.edge_count() == 0)
    return g == h ? Verdict::yes : Verdict::no;
  const OrbitResult orbit = pivot_orbit(g, limit);
  for (const Graph& m : orbit.members)
    if (m == h) return Verdict::yes;
  return orbit.limit_exceeded ? Verdict::inconclusive : Verdict::no;
}

namespace {

class ContainmentSearch {
 public:
  ContainmentSearch(const Graph& h, ContainmentCache* cache, const EngineOptions& options)
      : h_(h), options_(options) {
    if (cache == nullptr) {
      local_ = std::make_unique<ContainmentCache>();
      cache = local_.get();
    }
    cache_ = cache;
    target_ = canonical_key(h);
    orbit_ = cache_->orbit(target_);
    if (!orbit_) {
      orbit_ = std::make_shared<const ClassOrbit>(class_orbit(h, options_.orbit_limit));
      cache_->store_orbit(target_, orbit_);
    }
  }

  const CanonicalKey& target() const { return target_; }

  Verdict same_order(const CanonicalKey& key) const {
    if (orbit_->members.count(key)) return Verdict::yes;
    return orbit_->complete ? Verdict::no : Verdict::inconclusive;
  }

  Verdict contains(const Graph& g) {
    if (g.order() < h_.order()) return Verdict::no;
    if (h_.edge_count() > 0 && g.edge_count() == 0) return Verdict::no;
    const CanonicalKey key = canonical_key(g);
    if (g.order() == h_.order()) return same_order(key);
    return contains(g, key);
  }

  Verdict contains(const Graph& g, const CanonicalKey& key) {
    if (auto hit = cache_->lookup(target_, key)) return *hit ? Verdict::yes : Verdict::no;
    bool unsure = false;
    for (int v = 0; v < g.order(); ++v) {
      Verdict r = contains(delete_vertex(g, v));
      if (r == Verdict::no && g.degree(v) > 0) {
        const Verdict c = contains(contract_pivot(g, v));
        if (c != Verdict::no) r = c;
      }
      if (r == Verdict::yes) {
        cache_->store(target_, key, true);
        return Verdict::yes;
      }
      unsure = unsure || r == Verdict::inconclusive;
    }
    if (unsure) return Verdict::inconclusive;
    cache_->store(target_, key, false);
    return Verdict::no;
  }

 private:
  const Graph& h_;
  EngineOptions options_;
  std::unique_ptr<ContainmentCache> local_;
  ContainmentCache* cache_ = nullptr;
  CanonicalKey target_;
  std::shared_ptr<const ClassOrbit> orbit_;
};

// Labeled breadth-first search from g, one representative per isomorphism
// class, until a graph isomorphic to the target appears. Returns the pivots
// along the way.
std::optional<PivotMinorSequence> orbit_path(const Graph& g, const CanonicalKey& target,
                                             std::size_t limit, Graph& reached) {
  struct Node {
    Graph graph;
    int parent;
    int u;
    int v;
  };
  std::vector<Node> nodes{{g, -1, -1, -1}};
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen{canonical_key(g)};
  auto unwind = [&](int idx) {
    PivotMinorSequence path;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
      path.insert(path.begin(), SequenceStep::pivot_edge(nodes[i].u, nodes[i].v));
    reached = nodes[idx].graph;
    return path;
  };
  if (seen.count(target)) return unwind(0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Graph cur = nodes[head].graph;
    for (auto [u, v] : cur.edges()) {
      Graph next = pivot(cur, u, v);
      CanonicalKey key = canonical_key(next);
      if (!seen.insert(key).second) continue;
      nodes.push_back({std::move(next), static_cast<int>(head), u, v});
      if (key == target) return unwind(static_cast<int>(nodes.size()) - 1);
      if (nodes.size() >= limit) return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict contains_pivot_minor(const Graph& g, const Graph& h, ContainmentCache* cache,
                             const EngineOptions& options) {
  ContainmentSearch search(h, cache, options);
  return search.contains(g);
}

std::optional<Witness> find_pivot_minor_sequence(const Graph& g, const Graph& h,
                                                 ContainmentCache* cache,
                                                 const EngineOptions& options) {
  ContainmentSearch search(h, cache, options);
  if (search.contains(g) != Verdict::yes) return std::nullopt;

  Witness out;
  Graph cur = g;
  while (cur.order() > h.order()) {
    bool advanced = false;
    for (int v = 0; v < cur.order() && !advanced; ++v) {
      Graph removed = delete_vertex(cur, v);
      if (search.contains(removed) == Verdict::yes) {
        out.sequence.push_back(SequenceStep::delete_vertex(v));
        cur = std::move(removed);
        advanced = true;
        break;
      }
      const VertexSet nbrs = cur.neighbors(v);
      if (nbrs == 0) continue;
      Graph contracted = contract_pivot(cur, v);
      if (search.contains(contracted) == Verdict::yes) {
        out.sequence.push_back(SequenceStep::pivot_edge(v, lowest(nbrs)));
        out.sequence.push_back(SequenceStep::delete_vertex(v));
        cur = std::move(contracted);
        advanced = true;
      }
    }
    if (!advanced) return std::nullopt;
  }

  Graph reached;
  auto path = orbit_path(cur, search.target(), options.orbit_limit, reached);
  if (!path) return std::nullopt;
  out.sequence.insert(out.sequence.end(), path->begin(), path->end());
  auto bijection = find_isomorphism(reached, h);
  if (!bijection) return std::nullopt;
  out.bijection = std::move(*bijection);
  return out;
}

}  // namespace pivotminor
