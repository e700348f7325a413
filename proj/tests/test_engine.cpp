#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pivotminor/certificate.hpp"
#include "pivotminor/engine.hpp"
#include "pivotminor/generate.hpp"
#include "pivotminor/io.hpp"
#include "pivotminor/json_io.hpp"
#include "pivotminor/miner.hpp"
#include "pivotminor/named.hpp"

using namespace pivotminor;

namespace {

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::map<CanonicalKey, int> orbit_profile(const Graph& g) {
  std::map<CanonicalKey, int> out;
  for (const Graph& m : pivot_orbit(g).members) ++out[canonical_key(m)];
  return out;
}

}  // namespace

TEST_CASE("pivot orbits") {
  for (int n = 1; n <= 6; ++n) CHECK(pivot_orbit(complete_graph(n)).members.size() == 1);

  const auto p4 = pivot_orbit(path_graph(4));
  bool has_c4 = false;
  for (const Graph& m : p4.members) has_c4 = has_c4 || m == pivot(path_graph(4), 1, 2);
  CHECK(has_c4);

  // Against the dense oracle, and stable under relabeling.
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : generate_all_graphs(n)) {
      const auto ours = pivot_orbit(g);
      CHECK_FALSE(ours.limit_exceeded);
      const auto ref = oracle::orbit(oracle::dense(g));
      CHECK(ours.members.size() == ref.size());
      for (const Graph& m : ours.members) CHECK(ref.count(oracle::dense(m)) == 1);
      std::vector<int> perm = identity(n);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(orbit_profile(g) == orbit_profile(relabel(g, perm)));
    }

  const auto capped = pivot_orbit(cycle_graph(7), 3);
  CHECK(capped.limit_exceeded);
  CHECK(capped.members.size() <= 3);
  CHECK_FALSE(class_orbit(cycle_graph(7), 2).complete);
}

TEST_CASE("pivot equivalence") {
  const Graph g = named_graph("bull");
  for (const auto& [u, v] : g.edges()) CHECK(pivot_equivalent(g, pivot(g, u, v)) == Verdict::yes);
  CHECK(pivot_equivalent(path_graph(4), pivot(path_graph(4), 1, 2)) == Verdict::yes);
  CHECK(pivot_equivalent(complete_graph(3), path_graph(3)) == Verdict::no);
  CHECK(pivot_equivalent(path_graph(3), path_graph(4)) == Verdict::no);
  // Relabelings of P4: pivot equivalence must match the dense orbit, and
  // some relabelings are out of reach.
  const auto ref = oracle::orbit(oracle::dense(path_graph(4)));
  std::vector<int> perm = identity(4);
  int unreachable = 0;
  do {
    const Graph r = relabel(path_graph(4), perm);
    const bool expect = ref.count(oracle::dense(r)) > 0;
    CHECK(pivot_equivalent(path_graph(4), r) == (expect ? Verdict::yes : Verdict::no));
    unreachable += expect ? 0 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(unreachable > 0);
  CHECK(pivot_equivalent(cycle_graph(7), complement(cycle_graph(7)), 2) == Verdict::inconclusive);
}

TEST_CASE("containment examples") {
  ContainmentCache cache;
  CHECK(contains_pivot_minor(cycle_graph(5), complete_graph(3), &cache) == Verdict::yes);
  CHECK(contains_pivot_minor(named_graph("W4"), named_graph("3P1"), &cache) == Verdict::yes);
  CHECK(contains_pivot_minor(cycle_graph(5), named_graph("3P1"), &cache) == Verdict::no);
  CHECK(contains_pivot_minor(path_graph(3), path_graph(4), &cache) == Verdict::no);
  CHECK(contains_pivot_minor(Graph(0), Graph(0), &cache) == Verdict::yes);
  CHECK(contains_pivot_minor(edgeless_graph(6), path_graph(2), &cache) == Verdict::no);
  CHECK(contains_pivot_minor(edgeless_graph(6), edgeless_graph(3), &cache) == Verdict::yes);
  CHECK(to_string(Verdict::yes) == "true");
  CHECK(to_string(Verdict::no) == "false");
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");

  // Bipartite graphs never reach a triangle.
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : generate_all_graphs(n))
      if (is_bipartite(g)) CHECK(contains_pivot_minor(g, complete_graph(3), &cache) == Verdict::no);
}

TEST_CASE("containment agrees with exhaustive closure") {
  ContainmentCache cache;
  std::vector<Graph> targets;
  for (int k = 1; k <= 4; ++k)
    for (const Graph& h : generate_all_graphs(k)) targets.push_back(h);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : generate_all_graphs(n))
      for (const Graph& h : targets) {
        const bool expect = oracle::contains(g, h);
        CHECK(contains_pivot_minor(g, h, &cache) == (expect ? Verdict::yes : Verdict::no));
      }
  // A sample on six vertices against the targets of order four and five.
  std::mt19937_64 rng(9);
  const auto six = generate_all_graphs(6);
  for (int i = 0; i < 40; ++i) {
    const Graph& g = six[rng() % six.size()];
    for (const char* name : {"P4", "C4", "2P2", "claw", "paw", "C5", "bull", "W4"}) {
      const Graph h = named_graph(name);
      CHECK(contains_pivot_minor(g, h, &cache) == (oracle::contains(g, h) ? Verdict::yes : Verdict::no));
    }
  }
}

TEST_CASE("base case matches raw orbit-times-permutation search") {
  for (int n = 1; n <= 5; ++n) {
    const auto graphs = generate_all_graphs(n);
    for (const Graph& g : graphs)
      for (const Graph& h : graphs) {
        bool raw = false;
        for (const auto& m : oracle::orbit(oracle::dense(g)))
          if (oracle::isomorphic(m, oracle::dense(h))) raw = true;
        CHECK(contains_pivot_minor(g, h) == (raw ? Verdict::yes : Verdict::no));
      }
  }
}

TEST_CASE("monotonicity under vertex deletion") {
  ContainmentCache cache;
  std::vector<Graph> targets;
  for (int k = 1; k <= 4; ++k)
    for (const Graph& h : generate_all_graphs(k)) targets.push_back(h);
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : generate_all_graphs(n))
      for (const Graph& h : targets)
        for (int v = 0; v < n; ++v)
          if (contains_pivot_minor(delete_vertex(g, v), h, &cache) == Verdict::yes)
            CHECK(contains_pivot_minor(g, h, &cache) == Verdict::yes);
}

TEST_CASE("cache coherence") {
  ContainmentCache shared;
  ContainmentCache disabled(0, false);
  ContainmentCache tiny(16);
  std::mt19937_64 rng(4);
  const auto seven = generate_all_graphs(7);
  for (int i = 0; i < 150; ++i) {
    const Graph& g = seven[rng() % seven.size()];
    for (const char* name : {"C3", "P4", "2P2", "3P1", "claw"}) {
      const Graph h = named_graph(name);
      const Verdict a = contains_pivot_minor(g, h, &shared);
      CHECK(a == contains_pivot_minor(g, h, &disabled));
      CHECK(a == contains_pivot_minor(g, h, &tiny));
      CHECK(a == contains_pivot_minor(g, h));
    }
  }
  CHECK(shared.hits() > 0);
  CHECK(disabled.size() == 0);
  CHECK(tiny.size() <= 16);

  const CanonicalKey a = canonical_key(path_graph(2));
  const CanonicalKey b = canonical_key(path_graph(3));
  shared.store(a, b, true);
  CHECK_NOTHROW(shared.store(a, b, true));
  CHECK_THROWS_AS(shared.store(a, b, false), std::logic_error);
}

TEST_CASE("orbit limit gives inconclusive, never a false negative") {
  EngineOptions tight;
  tight.orbit_limit = 1;
  // The class orbit of P4 also holds C4, so the base case cannot settle it.
  CHECK(contains_pivot_minor(cycle_graph(4), path_graph(4), nullptr, tight) == Verdict::inconclusive);
  CHECK(contains_pivot_minor(path_graph(4), path_graph(4), nullptr, tight) == Verdict::yes);
  CHECK(contains_pivot_minor(cycle_graph(4), path_graph(4)) == Verdict::yes);
}

TEST_CASE("sequence replay") {
  const Graph g = named_graph("bull");
  PivotMinorSequence seq = {SequenceStep::pivot_edge(1, 2), SequenceStep::delete_vertex(4),
                            SequenceStep::delete_vertex(0)};
  const Graph r = apply_sequence(g, seq);
  CHECK(r.order() == g.order() - deletion_count(seq));
  CHECK(r == delete_vertex(delete_vertex(pivot(g, 1, 2), 4), 0));

  try {
    apply_sequence(g, {SequenceStep::delete_vertex(0), SequenceStep::pivot_edge(0, 3)});
    FAIL("expected a sequence error");
  } catch (const SequenceError& e) {
    CHECK(e.step() == 1);
  }
  CHECK_THROWS_AS(apply_sequence(g, {SequenceStep::delete_vertex(5)}), SequenceError);
}

TEST_CASE("sequence extraction") {
  const auto w = find_pivot_minor_sequence(path_graph(4), cycle_graph(4));
  REQUIRE(w.has_value());
  REQUIRE(w->sequence.size() == 1);
  CHECK(w->sequence[0].op == SequenceStep::Op::pivot_edge);
  CHECK(is_isomorphism(apply_sequence(path_graph(4), w->sequence), cycle_graph(4), w->bijection));

  const Graph g = named_graph("petersen");
  const auto self = find_pivot_minor_sequence(g, g);
  REQUIRE(self.has_value());
  CHECK(self->sequence.empty());
  CHECK(is_isomorphism(g, g, self->bijection));

  CHECK_FALSE(find_pivot_minor_sequence(cycle_graph(6), complete_graph(3)).has_value());

  ContainmentCache cache;
  const ObstructionSet o = mine(named_graph("2P2"), 6, &cache);
  CHECK(o.members.size() == 9);
  for (const CanonicalKey& k : o.members) {
    const Graph f = graph_from_key(k);
    const auto fw = find_pivot_minor_sequence(f, named_graph("2P2"), &cache);
    REQUIRE(fw.has_value());
    const Certificate cert = make_certificate(f, identity(f.order()), fw->sequence, named_graph("2P2"), k.graph6);
    CHECK(verify_certificate(f, cert, named_graph("2P2")).valid);
  }

  // Random hosts with an assortment of targets.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const Graph host = oracle::graph(oracle::random_graph(rng, 5 + i % 4));
    for (const char* name : {"C3", "P4", "claw", "2P2", "C5"}) {
      const Graph h = named_graph(name);
      const auto fw = find_pivot_minor_sequence(host, h, &cache);
      CHECK(fw.has_value() == (contains_pivot_minor(host, h, &cache) == Verdict::yes));
      if (fw) CHECK(is_isomorphism(apply_sequence(host, fw->sequence), h, fw->bijection));
    }
  }
}

TEST_CASE("certificate verification is independent and strict") {
  const Graph g = named_graph("co-BW3");
  const Graph h = named_graph("3P1");
  const auto w = find_pivot_minor_sequence(g, h);
  REQUIRE(w.has_value());
  const Certificate good = make_certificate(g, identity(7), w->sequence, h, "co-BW3");
  CHECK(verify_certificate(g, good, h).valid);

  Certificate dropped = good;
  for (std::size_t i = 0; i < dropped.sequence.size(); ++i)
    if (dropped.sequence[i].op == SequenceStep::Op::delete_vertex) {
      dropped.sequence.erase(dropped.sequence.begin() + static_cast<long>(i));
      break;
    }
  CHECK_FALSE(verify_certificate(g, dropped, h).valid);

  Certificate bad_map = good;
  std::swap(bad_map.target_isomorphism[0], bad_map.target_isomorphism[1]);
  bad_map.target_isomorphism[0] = bad_map.target_isomorphism[1];
  CHECK_FALSE(verify_certificate(g, bad_map, h).valid);

  Certificate bad_pivot = good;
  bad_pivot.sequence.insert(bad_pivot.sequence.begin(), SequenceStep::pivot_edge(0, 6));
  const VerificationResult r = verify_certificate(g, bad_pivot, h);
  CHECK_FALSE(r.valid);
  REQUIRE(r.failed_step.has_value());
  CHECK(*r.failed_step == 0);

  Certificate outside = good;
  outside.obstruction_vertices[0] = 9;
  CHECK_FALSE(verify_certificate(g, outside, h).valid);

  Certificate trivial;
  trivial.obstruction_vertices = identity(5);
  trivial.target_isomorphism = identity(5);
  CHECK(verify_certificate(named_graph("bull"), trivial, named_graph("bull")).valid);
  CHECK_FALSE(verify_certificate(named_graph("bull"), trivial, named_graph("P5")).valid);
}

TEST_CASE("certificate documents round-trip through JSON") {
  const Graph g = named_graph("W4");
  const Graph h = named_graph("3P1");
  const auto w = find_pivot_minor_sequence(g, h);
  REQUIRE(w.has_value());
  const Certificate cert = make_certificate(g, {4, 0, 1, 2, 3}, w->sequence, h, "W4");
  const nlohmann::json j = certificate_to_json(g, cert, h);
  const CertificateDocument doc = certificate_from_json(nlohmann::json::parse(j.dump()));
  CHECK(doc.input == g);
  CHECK(doc.target == h);
  CHECK(doc.certificate.obstruction_vertices == cert.obstruction_vertices);
  CHECK(doc.certificate.sequence == cert.sequence);
  CHECK(doc.certificate.target_isomorphism == cert.target_isomorphism);
  CHECK(doc.certificate.obstruction_key == cert.obstruction_key);
  CHECK(verify_certificate(g, doc.certificate, h).valid);

  CHECK(sequence_from_json(sequence_to_json(cert.sequence)) == cert.sequence);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::object()), std::invalid_argument);
  nlohmann::json broken = j;
  broken["sequence"][0]["op"] = "twist";
  CHECK_THROWS_AS(certificate_from_json(broken), std::invalid_argument);
}
