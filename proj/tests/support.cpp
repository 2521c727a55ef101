#include "support.hpp"

#include <algorithm>
#include <set>

#include "strongcol/decompose.hpp"
#include "strongcol/error.hpp"

namespace strongcol::testing {

Graph graph_of(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<VertexId, VertexId>> p(pairs.begin(), pairs.end());
  return build_graph(p);
}

Graph path(int edges) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < edges; ++i) p.emplace_back(i, i + 1);
  return graph_of(p);
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= leaves; ++i) p.emplace_back(0, i);
  return graph_of(p);
}

namespace {

std::vector<int> dihedral_min(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> best = p, q(p.size());
  for (int r = 0; r < n; ++r) {
    for (int flip = 0; flip < 2; ++flip) {
      for (int i = 0; i < n; ++i) q[i] = p[flip ? ((r - i) % n + n) % n : (r + i) % n];
      best = std::min(best, q);
    }
  }
  return best;
}

}  // namespace

std::vector<std::vector<int>> puffer_profiles(int n, int max_pendants, int max_edges) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  while (true) {
    int edges = n;
    for (int x : p) edges += x;
    if (edges <= max_edges && dihedral_min(p) == p) out.push_back(p);
    int i = 0;
    while (i < n && p[i] == max_pendants) p[i++] = 0;
    if (i == n) break;
    ++p[i];
  }
  return out;
}

Graph random_outerplanar(Rng& rng, int max_edges, bool bipartite) {
  while (true) {
    const int n = 2 + rng.index(static_cast<std::size_t>(max_edges));
    const int max_faces = max_edges - (n - 1);
    if (max_faces < 0) continue;
    const int faces = rng.index(static_cast<std::size_t>(max_faces + 1));
    const int budget = rng.index(static_cast<std::size_t>(n));
    try {
      return gen_outerplanar(n, faces, budget, bipartite, rng.next());
    } catch (const Error&) {
      // too many faces for n, or the parity cannot be met
    }
  }
}

std::vector<Graph> small_corpus(int max_edges, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int k = 3; k <= max_edges; ++k) out.push_back(gen_cycle(k));
  for (int k = 1; k <= max_edges; ++k) {
    out.push_back(path(k));
    out.push_back(star(k));
  }
  for (int n = 3; n <= max_edges; ++n) {
    for (const auto& p : puffer_profiles(n, 3, max_edges)) {
      out.push_back(gen_puffer(n, p));
      int edges = n;
      for (int x : p) edges += x;
      if (edges + 2 <= max_edges) out.push_back(gen_puffer(n, p, {0}));
    }
  }
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) out.push_back(random_outerplanar(rng, max_edges, i % 2 == 1));
  return out;
}

std::string profile_string(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

}  // namespace strongcol::testing
