#include "pivotminor/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace pivotminor {

Certificate make_certificate(const Graph& g, std::vector<int> subset, const PivotMinorSequence& seq,
                             const Graph& h, std::string name) {
  Certificate cert;
  const Graph obstruction = induced_subgraph(g, subset);
  cert.obstruction_vertices = std::move(subset);
  // Odd holes can be long; refinement settles cycles quickly at any order.
  cert.obstruction_key = canonical_key(obstruction, std::max(kDefaultCanonicalCap, obstruction.order()));
  cert.obstruction_name = std::move(name);
  cert.sequence = seq;
  const Graph reached = apply_sequence(obstruction, seq);
  auto iso = find_isomorphism(reached, h);
  if (!iso) throw std::logic_error("make_certificate: sequence does not reach the target");
  cert.target_isomorphism = std::move(*iso);
  return cert;
}

namespace {

using Matrix = std::vector<std::vector<char>>;

void complement_neighborhood(Matrix& m, int u) {
  const int n = static_cast<int>(m.size());
  std::vector<int> nbrs;
  for (int x = 0; x < n; ++x)
    if (m[u][x]) nbrs.push_back(x);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const int a = nbrs[i];
      const int b = nbrs[j];
      m[a][b] = m[b][a] = static_cast<char>(!m[a][b]);
    }
}

VerificationResult fail(std::string reason, std::optional<std::size_t> step = std::nullopt) {
  VerificationResult r;
  r.valid = false;
  r.failed_step = step;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

VerificationResult verify_certificate(const Graph& g, const Certificate& cert, const Graph& h) {
  const auto& subset = cert.obstruction_vertices;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (int v : subset) {
    if (v < 0 || v >= g.order()) return fail("obstruction vertex " + std::to_string(v) + " out of range");
    if (used[v]) return fail("obstruction vertex " + std::to_string(v) + " repeated");
    used[v] = 1;
  }

  Matrix m(subset.size(), std::vector<char>(subset.size(), 0));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (i != j) m[i][j] = g.adjacent(subset[i], subset[j]) ? 1 : 0;

  for (std::size_t s = 0; s < cert.sequence.size(); ++s) {
    const SequenceStep& step = cert.sequence[s];
    const int n = static_cast<int>(m.size());
    if (step.op == SequenceStep::Op::delete_vertex) {
      if (step.u < 0 || step.u >= n) return fail("deletion of a missing vertex", s);
      m.erase(m.begin() + step.u);
      for (auto& row : m) row.erase(row.begin() + step.u);
    } else {
      if (step.u < 0 || step.v < 0 || step.u >= n || step.v >= n)
        return fail("pivot on a missing vertex", s);
      if (step.u == step.v || !m[step.u][step.v]) return fail("pivot on a non-edge", s);
      complement_neighborhood(m, step.u);
      complement_neighborhood(m, step.v);
      complement_neighborhood(m, step.u);
    }
  }

  const int n = static_cast<int>(m.size());
  if (n != h.order())
    return fail("replay has " + std::to_string(n) + " vertices, target has " +
                std::to_string(h.order()));
  const Bijection& f = cert.target_isomorphism;
  if (static_cast<int>(f.size()) != n) return fail("isomorphism has the wrong size");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x : f) {
    if (x < 0 || x >= n || hit[x]) return fail("isomorphism is not a bijection");
    hit[x] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<bool>(m[a][b]) != h.adjacent(f[a], f[b]))
        return fail("isomorphism breaks pair " + std::to_string(a) + "," + std::to_string(b));

  VerificationResult ok;
  ok.valid = true;
  return ok;
}

}  // namespace pivotminor
