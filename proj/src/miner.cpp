#include "pivotminor/miner.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pivotminor/generate.hpp"
#include "pivotminor/io.hpp"
#include "pivotminor/named.hpp"
#include "pivotminor/version.hpp"

namespace pivotminor {

bool ObstructionSet::contains_key(const CanonicalKey& k) const {
  return std::binary_search(members.begin(), members.end(), k);
}

int ObstructionSet::max_member_order() const {
  int best = 0;
  for (const CanonicalKey& k : members) best = std::max(best, graph_from_key(k).order());
  return best;
}

Verdict is_minimal_obstruction(const Graph& g, const Graph& h, ContainmentCache* cache,
                               const EngineOptions& options) {
  ContainmentCache local;
  if (cache == nullptr) cache = &local;
  const Verdict whole = contains_pivot_minor(g, h, cache, options);
  if (whole != Verdict::yes) return whole;
  bool unsure = false;
  for (int v = 0; v < g.order(); ++v) {
    const Verdict part = contains_pivot_minor(delete_vertex(g, v), h, cache, options);
    if (part == Verdict::yes) return Verdict::no;
    unsure = unsure || part == Verdict::inconclusive;
  }
  return unsure ? Verdict::inconclusive : Verdict::yes;
}

ObstructionSet mine(const Graph& h, int n_max, ContainmentCache* cache, const MineOptions& options) {
  ContainmentCache local;
  if (cache == nullptr) cache = &local;

  std::vector<CanonicalKey> candidates;
  for (int n = h.order(); n <= n_max; ++n) {
    auto level = generate_all_keys(n);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }

  ObstructionSet out;
  out.target = canonical_key(h);
  out.complete_up_to = n_max;
  std::mutex merge;
  auto work = [&](std::size_t first, std::size_t stride) {
    std::vector<CanonicalKey> found;
    std::vector<CanonicalKey> unsure;
    for (std::size_t i = first; i < candidates.size(); i += stride) {
      const Verdict v = is_minimal_obstruction(graph_from_key(candidates[i]), h, cache, options.engine);
      if (v == Verdict::yes) found.push_back(candidates[i]);
      if (v == Verdict::inconclusive) unsure.push_back(candidates[i]);
    }
    std::lock_guard lock(merge);
    out.members.insert(out.members.end(), found.begin(), found.end());
    out.inconclusive.insert(out.inconclusive.end(), unsure.begin(), unsure.end());
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, static_cast<std::size_t>(w),
                                                        static_cast<std::size_t>(workers));
    for (auto& t : pool) t.join();
  }
  std::sort(out.members.begin(), out.members.end());
  std::sort(out.inconclusive.begin(), out.inconclusive.end());
  return out;
}

std::string_view to_string(BoundFamily f) {
  switch (f) {
    case BoundFamily::t_p1: return "tP1";
    case BoundFamily::p2_t_p1: return "P2+tP1";
    case BoundFamily::star: return "K1,t";
    case BoundFamily::p3_t_p1: return "P3+tP1";
  }
  return "?";
}

std::optional<BoundFamily> parse_bound_family(std::string_view name) {
  for (BoundFamily f : {BoundFamily::t_p1, BoundFamily::p2_t_p1, BoundFamily::star, BoundFamily::p3_t_p1})
    if (name == to_string(f)) return f;
  if (name == "K1t" || name == "star") return BoundFamily::star;
  return std::nullopt;
}

Graph bound_family_graph(BoundFamily f, int t) {
  if (t < 0 || t > 60) throw std::invalid_argument("bound family parameter out of range");
  switch (f) {
    case BoundFamily::t_p1: return edgeless_graph(t);
    case BoundFamily::p2_t_p1: return disjoint_union(path_graph(2), edgeless_graph(t));
    case BoundFamily::star: return star_graph(t);
    case BoundFamily::p3_t_p1: return disjoint_union(path_graph(3), edgeless_graph(t));
  }
  throw std::invalid_argument("unknown bound family");
}

std::int64_t bound_value(BoundFamily f, int t) {
  if (t < 0 || t > 40) throw std::invalid_argument("bound family parameter out of range");
  const std::int64_t T = t;
  switch (f) {
    case BoundFamily::t_p1: return (std::int64_t{1} << t) - 1;
    case BoundFamily::p2_t_p1: return (T + 1) * ((std::int64_t{1} << (t + 2)) - T - 2);
    case BoundFamily::star: return (T * T - 1) * ((std::int64_t{1} << (t + 1)) - T - 3) + 2 * T + 2;
    case BoundFamily::p3_t_p1: return (T + 1) * ((std::int64_t{1} << (t + 3)) - T - 4) + 2;
  }
  throw std::invalid_argument("unknown bound family");
}

std::string BoundRecord::status() const {
  std::ostringstream out;
  out << to_string(family) << " t=" << t << ": bound " << bound << ", observed max " << observed_max
      << " over " << members << " members, searched n <= " << n_max;
  if (verified)
    out << " (verified: search covers the bound)";
  else if (!covered)
    out << " (not covered: n_max " << n_max << " < bound " << bound << ", no verification claimed)";
  else if (inconclusive > 0)
    out << " (not verified: " << inconclusive << " inconclusive graphs)";
  else
    out << " (VIOLATED: observed max exceeds bound)";
  return out.str();
}

BoundRecord check_bound(BoundFamily f, int t, int n_max, ContainmentCache* cache,
                        const MineOptions& options) {
  BoundRecord r;
  r.family = f;
  r.t = t;
  r.n_max = n_max;
  r.bound = bound_value(f, t);
  const ObstructionSet set = mine(bound_family_graph(f, t), n_max, cache, options);
  r.members = set.members.size();
  r.inconclusive = set.inconclusive.size();
  r.observed_max = set.max_member_order();
  r.covered = n_max >= r.bound;
  r.verified = r.covered && r.inconclusive == 0 && r.observed_max <= r.bound;
  return r;
}

void save_obstruction_set(const ObstructionSet& set, const std::string& target_name,
                          const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream list(dir / "members.g6");
  for (const CanonicalKey& k : set.members) list << k.graph6 << '\n';
  nlohmann::json manifest = {
      {"tool", kToolName},
      {"version", kToolVersion},
      {"target", target_name},
      {"target_key", set.target.graph6},
      {"complete_up_to", set.complete_up_to},
      {"members", set.members.size()},
      {"inconclusive", nlohmann::json::array()},
  };
  for (const CanonicalKey& k : set.inconclusive) manifest["inconclusive"].push_back(k.graph6);
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << '\n';
  if (!list || !std::filesystem::exists(dir / "manifest.json"))
    throw std::runtime_error("could not write obstruction set to " + dir.string());
}

ObstructionSet load_obstruction_set(const std::filesystem::path& dir) {
  std::ifstream mf(dir / "manifest.json");
  if (!mf) throw std::runtime_error("missing manifest.json in " + dir.string());
  const nlohmann::json manifest = nlohmann::json::parse(mf);
  ObstructionSet out;
  out.target = CanonicalKey{manifest.at("target_key").get<std::string>()};
  out.complete_up_to = manifest.at("complete_up_to").get<int>();
  for (const auto& k : manifest.value("inconclusive", nlohmann::json::array()))
    out.inconclusive.push_back(CanonicalKey{k.get<std::string>()});
  std::ifstream list(dir / "members.g6");
  if (!list) throw std::runtime_error("missing members.g6 in " + dir.string());
  std::string line;
  while (std::getline(list, line)) {
    if (line.empty()) continue;
    // Re-canonicalize so hand-edited lists still compare correctly.
    out.members.push_back(canonical_key(parse_graph6(line)));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

ObstructionDiff diff_obstruction_sets(const ObstructionSet& a, const ObstructionSet& b) {
  ObstructionDiff d;
  d.same_target = a.target == b.target;
  const int limit = std::min(a.complete_up_to, b.complete_up_to);
  auto restricted = [&](const ObstructionSet& s) {
    std::set<CanonicalKey> keep;
    for (const CanonicalKey& k : s.members)
      if (graph_from_key(k).order() <= limit) keep.insert(k);
    return keep;
  };
  const auto ra = restricted(a);
  const auto rb = restricted(b);
  std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(d.only_in_first));
  std::set_difference(rb.begin(), rb.end(), ra.begin(), ra.end(), std::back_inserter(d.only_in_second));
  return d;
}

}  // namespace pivotminor
