#include "pivotminor/recognizers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "pivotminor/families.hpp"
#include "pivotminor/induced.hpp"
#include "pivotminor/named.hpp"

namespace pivotminor {

std::string_view to_string(Target t) {
  switch (t) {
    case Target::c3: return "C3";
    case Target::p4: return "P4";
    case Target::c4: return "C4";
    case Target::paw: return "paw";
    case Target::diamond: return "diamond";
    case Target::two_p2: return "2P2";
    case Target::three_p1: return "3P1";
    case Target::claw: return "claw";
  }
  return "?";
}

const std::vector<Target>& all_targets() {
  static const std::vector<Target> all = {Target::c3,     Target::p4,     Target::c4,
                                          Target::paw,    Target::diamond, Target::two_p2,
                                          Target::three_p1, Target::claw};
  return all;
}

std::optional<Target> parse_target(std::string_view name) {
  for (Target t : all_targets())
    if (name == to_string(t)) return t;
  if (name == "K1,3" || name == "K13") return Target::claw;
  if (name == "K3") return Target::c3;
  return std::nullopt;
}

Graph target_graph(Target t) { return named_graph(to_string(t)); }

std::string_view to_string(RecognitionVerdict v) {
  switch (v) {
    case RecognitionVerdict::free: return "free";
    case RecognitionVerdict::contains: return "contains";
    case RecognitionVerdict::free_up_to_truncation: return "free-up-to-truncation";
  }
  return "?";
}

std::string_view to_string(RecognitionMethod m) {
  return m == RecognitionMethod::structural ? "structural" : "forbidden-search";
}

std::vector<int> shortest_odd_cycle(const Graph& g, VertexSet within) {
  within &= g.vertices();
  int best_len = 0;
  std::vector<int> best;
  std::vector<int> dist(g.order());
  std::vector<int> parent(g.order());
  for_each_vertex(within, [&](int s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      // Past this depth no shorter odd cycle can close from s.
      if (best_len > 0 && 2 * dist[x] + 1 >= best_len) break;
      for_each_vertex(g.neighbors(x) & within, [&](int y) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        }
      });
      for_each_vertex(g.neighbors(x) & within, [&](int y) {
        if (y < x || dist[y] != dist[x]) return;
        const int len = 2 * dist[x] + 1;
        if (best_len != 0 && len >= best_len) return;
        std::vector<int> left;
        std::vector<int> right;
        for (int a = x; a >= 0; a = parent[a]) left.push_back(a);
        for (int b = y; b >= 0; b = parent[b]) right.push_back(b);
        // Both lists end at s; the minimal cycle's two paths meet only there.
        std::vector<int> cycle(left.rbegin(), left.rend());
        for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.push_back(right[i]);
        std::vector<int> check = cycle;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end()) return;
        best_len = len;
        best = std::move(cycle);
      });
    }
  });
  return best;
}

PivotMinorSequence odd_cycle_reduction(int k, int to) {
  if (k < to || (k - to) % 2 != 0 || to < 3)
    throw std::invalid_argument("odd_cycle_reduction: bad cycle lengths");
  PivotMinorSequence seq;
  for (int m = k; m > to; m -= 2) {
    seq.push_back(SequenceStep::pivot_edge(m - 1, m - 2));
    seq.push_back(SequenceStep::delete_vertex(m - 1));
    seq.push_back(SequenceStep::delete_vertex(m - 2));
  }
  return seq;
}

const PivotMinorSequence& canned_sequence(const std::string& obstruction,
                                          const Graph& obstruction_graph, const Graph& target) {
  static std::mutex mutex;
  static std::map<std::string, PivotMinorSequence> table;
  static ContainmentCache cache;
  const std::string key = obstruction + "|" + canonical_key(target).graph6;
  std::lock_guard lock(mutex);
  if (auto it = table.find(key); it != table.end()) return it->second;
  auto witness = find_pivot_minor_sequence(obstruction_graph, target, &cache);
  if (!witness)
    throw std::logic_error("obstruction " + obstruction + " does not reach the target");
  return table.emplace(key, std::move(witness->sequence)).first->second;
}

namespace {

RecognitionResult free_result(RecognitionMethod method, std::string branch) {
  RecognitionResult r;
  r.verdict = RecognitionVerdict::free;
  r.method = method;
  r.branch = std::move(branch);
  return r;
}

RecognitionResult certified(const Graph& g, std::vector<int> subset, const PivotMinorSequence& seq,
                            const Graph& target, const std::string& name, RecognitionMethod method,
                            std::string branch) {
  RecognitionResult r;
  r.verdict = RecognitionVerdict::contains;
  r.method = method;
  r.obstruction_name = name;
  r.branch = std::move(branch);
  r.certificate = make_certificate(g, std::move(subset), seq, target, name);
  return r;
}

// Certificate for an induced copy of a named fixture.
RecognitionResult from_embedding(const Graph& g, const Embedding& e, const std::string& name,
                                 const Graph& target, RecognitionMethod method, std::string branch) {
  const Graph fixture = named_graph(name);
  return certified(g, e, canned_sequence(name, fixture, target), target, name, method,
                   std::move(branch));
}

// Certificate for an induced odd cycle, listed in cyclic order.
RecognitionResult from_odd_cycle(const Graph& g, const std::vector<int>& cycle, const Graph& target,
                                 RecognitionMethod method, std::string branch) {
  const int k = static_cast<int>(cycle.size());
  // Shrink to the smallest cycle that still reaches the target, then finish
  // with the fixture sequence for that cycle.
  const int base = target.order() <= 3 ? 3 : 5;
  PivotMinorSequence seq = odd_cycle_reduction(k, base);
  const std::string name = "C" + std::to_string(base);
  const PivotMinorSequence& tail = canned_sequence(name, named_graph(name), target);
  seq.insert(seq.end(), tail.begin(), tail.end());
  return certified(g, cycle, seq, target, "C" + std::to_string(k), method, std::move(branch));
}

std::optional<RecognitionResult> search_fixtures(const Graph& g, const std::vector<std::string>& names,
                                                 const Graph& target, VertexSet within,
                                                 RecognitionMethod method) {
  for (const std::string& name : names) {
    const Graph fixture = named_graph(name);
    if (auto e = find_induced_subgraph(g, fixture, within))
      return from_embedding(g, *e, name, target, method, "induced " + name);
  }
  return std::nullopt;
}

RecognitionResult recognize_clique_star_target(const Graph& g, Target t) {
  const Graph target = target_graph(t);
  for (VertexSet comp : connected_components(g)) {
    if (is_clique_star(g, comp)) continue;
    if (auto r = search_fixtures(g, {"P4", "C4", "dart"}, target, comp, RecognitionMethod::structural))
      return *r;
    throw std::logic_error("non-clique-star component without an induced P4, C4 or dart");
  }
  return free_result(RecognitionMethod::structural, "clique-star components");
}

RecognitionResult recognize_bipartite_or_complete(const Graph& g, Target t) {
  const Graph target = target_graph(t);
  for (VertexSet comp : connected_components(g)) {
    if (is_complete(g, comp)) continue;
    const std::vector<int> cycle = shortest_odd_cycle(g, comp);
    if (cycle.empty()) continue;
    if (cycle.size() >= 5)
      return from_odd_cycle(g, cycle, target, RecognitionMethod::structural, "odd hole");
    // Grow the triangle to a maximal clique; the component is not complete,
    // so some outside vertex sees part of the clique but not all of it.
    VertexSet clique = 0;
    for (int v : cycle) clique |= bit(v);
    for_each_vertex(comp & ~clique, [&](int v) {
      if ((g.neighbors(v) & clique) == clique) clique |= bit(v);
    });
    int x = -1;
    for_each_vertex(comp & ~clique, [&](int v) {
      if (x < 0 && (g.neighbors(v) & clique) != 0) x = v;
    });
    if (x < 0) throw std::logic_error("maximal clique has no attached outside vertex");
    const int a = lowest(g.neighbors(x) & clique);
    const int b = lowest(clique & ~g.neighbors(x));
    const int c = lowest(clique & ~bit(a) & ~bit(b));
    const VertexSet quad = bit(x) | bit(a) | bit(b) | bit(c);
    if (auto r = search_fixtures(g, {"paw", "diamond"}, target, quad, RecognitionMethod::structural))
      return *r;
    throw std::logic_error("clique extension did not yield a paw or diamond");
  }
  return free_result(RecognitionMethod::structural, "bipartite or complete components");
}

}  // namespace

RecognitionResult recognize_c3(const Graph& g) {
  const std::vector<int> cycle = shortest_odd_cycle(g, g.vertices());
  if (cycle.empty()) return free_result(RecognitionMethod::structural, "bipartite");
  return from_odd_cycle(g, cycle, target_graph(Target::c3), RecognitionMethod::structural,
                        "shortest odd cycle");
}

RecognitionResult recognize_p4(const Graph& g) { return recognize_clique_star_target(g, Target::p4); }
RecognitionResult recognize_c4(const Graph& g) { return recognize_clique_star_target(g, Target::c4); }

RecognitionResult recognize_paw(const Graph& g) {
  return recognize_bipartite_or_complete(g, Target::paw);
}
RecognitionResult recognize_diamond(const Graph& g) {
  return recognize_bipartite_or_complete(g, Target::diamond);
}

RecognitionResult recognize_2p2(const Graph& g) {
  const Graph target = target_graph(Target::two_p2);
  std::vector<VertexSet> nontrivial;
  for (VertexSet comp : connected_components(g))
    if (popcount(comp) > 1) nontrivial.push_back(comp);

  std::string branch;
  if (nontrivial.empty()) {
    branch = "edgeless";
  } else if (nontrivial.size() == 1) {
    const VertexSet comp = nontrivial.front();
    const Graph part = induced_subgraph(g, comp);
    std::vector<std::string> fired;
    if (part.order() <= 6 && (find_induced_subgraph(named_graph("prism"), part) ||
                              find_induced_subgraph(named_graph("W5"), part)))
      fired.push_back("induced subgraph of prism or W5");
    if (is_leaf_attached_multipartite(g, comp)) fired.push_back("leaf-attached complete multipartite");
    for (std::size_t i = 0; i < fired.size(); ++i) branch += (i ? " + " : "") + fired[i];
  }
  if (!branch.empty()) return free_result(RecognitionMethod::structural, branch);

  std::vector<std::string> names;
  for (int i = 1; i <= 9; ++i) names.push_back("O" + std::to_string(i));
  if (auto r = search_fixtures(g, names, target, g.vertices(), RecognitionMethod::structural)) return *r;
  throw std::logic_error("structural 2P2 test failed but no O1..O9 is induced");
}

RecognitionResult recognize_3p1(const Graph& g) {
  return recognize_by_search(Target::three_p1, g);
}

RecognitionResult recognize_claw(const Graph& g) { return recognize_by_search(Target::claw, g); }

RecognitionResult recognize(Target t, const Graph& g) {
  switch (t) {
    case Target::c3: return recognize_c3(g);
    case Target::p4: return recognize_p4(g);
    case Target::c4: return recognize_c4(g);
    case Target::paw: return recognize_paw(g);
    case Target::diamond: return recognize_diamond(g);
    case Target::two_p2: return recognize_2p2(g);
    case Target::three_p1: return recognize_3p1(g);
    case Target::claw: return recognize_claw(g);
  }
  throw std::invalid_argument("unknown target");
}

std::vector<std::string> forbidden_subgraph_names(Target t, int max_order) {
  std::vector<std::string> out;
  auto odd_cycles = [&](int from) {
    for (int k = from; k <= max_order; k += 2) out.push_back("C" + std::to_string(k));
  };
  switch (t) {
    case Target::c3: odd_cycles(3); break;
    case Target::p4:
    case Target::c4: out = {"P4", "C4", "dart"}; break;
    case Target::paw:
    case Target::diamond:
      out = {"paw", "diamond"};
      odd_cycles(5);
      break;
    case Target::two_p2:
      for (int i = 1; i <= 9; ++i) out.push_back("O" + std::to_string(i));
      break;
    case Target::three_p1: out = {"3P1", "W4", "co-BW3"}; break;
    case Target::claw: out = {"claw", "P5", "bull", "W4", "co-BW3"}; break;
  }
  return out;
}

RecognitionResult recognize_by_search(Target t, const Graph& g) {
  const Graph target = target_graph(t);
  for (const std::string& name : forbidden_subgraph_names(t, g.order())) {
    const Graph fixture = named_graph(name);
    auto e = find_induced_subgraph(g, fixture);
    if (!e) continue;
    if (name[0] == 'C' && fixture.order() > target.order() && (t == Target::c3 || fixture.order() >= 5) &&
        fixture.edge_count() == fixture.order() && fixture.order() % 2 == 1)
      return from_odd_cycle(g, *e, target, RecognitionMethod::forbidden_search, "induced " + name);
    return from_embedding(g, *e, name, target, RecognitionMethod::forbidden_search, "induced " + name);
  }
  return free_result(RecognitionMethod::forbidden_search, "no forbidden induced subgraph");
}

RecognitionResult recognize_bounded(BoundFamily family, int t, const Graph& g,
                                    const ObstructionSet& obstructions, bool allow_truncated) {
  const Graph target = bound_family_graph(family, t);
  if (canonical_key(target) != obstructions.target)
    throw std::invalid_argument("obstruction set was mined for a different target");
  const bool complete = obstructions.complete_up_to >= bound_value(family, t);
  if (!complete && !allow_truncated)
    throw TruncatedObstructionSet("obstruction set complete up to " +
                                  std::to_string(obstructions.complete_up_to) +
                                  " vertices, below the bound " +
                                  std::to_string(bound_value(family, t)));
  for (const CanonicalKey& key : obstructions.members) {
    const Graph member = graph_from_key(key);
    auto e = find_induced_subgraph(g, member);
    if (!e) continue;
    const PivotMinorSequence& seq = canned_sequence(key.graph6, member, target);
    return certified(g, *e, seq, target, key.graph6, RecognitionMethod::forbidden_search,
                     "induced member of mined set");
  }
  RecognitionResult r = free_result(RecognitionMethod::forbidden_search, "no mined member induced");
  if (!complete) r.verdict = RecognitionVerdict::free_up_to_truncation;
  return r;
}

}  // namespace pivotminor
