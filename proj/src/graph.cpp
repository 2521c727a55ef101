#include "strongcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_set>

#include "strongcol/error.hpp"

namespace strongcol {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::string edge_text(VertexId u, VertexId v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto inc = incident(u);
  const auto it = std::lower_bound(inc.begin(), inc.end(), v,
                                   [](const Incidence& a, VertexId x) { return a.neighbour < x; });
  if (it != inc.end() && it->neighbour == v) return it->edge;
  return std::nullopt;
}

Graph build_graph(std::span<const std::pair<VertexId, VertexId>> pairs,
                  std::optional<VertexId> vertex_count, std::span<const int> source_lines) {
  auto line_of = [&](std::size_t i) {
    return i < source_lines.size() ? source_lines[i] : static_cast<int>(i) + 1;
  };

  VertexId n = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (u < 0 || v < 0) {
      throw Error(ErrorCode::kBadVertexIndex, "negative vertex index in edge " + edge_text(u, v),
                  line_of(i));
    }
    n = std::max({n, u + 1, v + 1});
  }
  if (vertex_count) {
    if (*vertex_count < 0) throw Error(ErrorCode::kBadVertexIndex, "negative vertex count");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [u, v] = pairs[i];
      if (u >= *vertex_count || v >= *vertex_count) {
        throw Error(ErrorCode::kBadVertexIndex,
                    "edge " + edge_text(u, v) + " exceeds vertex count " + std::to_string(*vertex_count),
                    line_of(i));
      }
    }
    n = *vertex_count;
  }

  Graph g;
  g.vertex_count_ = n;
  g.edges_.reserve(pairs.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(pairs.size() * 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (u == v) throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u), line_of(i));
    if (!seen.insert(pair_key(u, v)).second) {
      throw Error(ErrorCode::kDuplicateEdge, "duplicate edge " + edge_text(u, v), line_of(i));
    }
    g.edges_.push_back(Edge{u, v});
  }

  std::vector<std::size_t> degree(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges_) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t v = 0; v < degree.size(); ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edges_[static_cast<std::size_t>(id)];
    g.adjacency_[fill[static_cast<std::size_t>(e.u)]++] = Incidence{e.v, id};
    g.adjacency_[fill[static_cast<std::size_t>(e.v)]++] = Incidence{e.u, id};
  }
  for (std::size_t v = 0; v < degree.size(); ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
  }
  return g;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  for (VertexId v = 0; v < g.vertex_count(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
  for (const auto& e : g.edges()) {
    s.max_edge_degree_sum = std::max(s.max_edge_degree_sum, g.degree(e.u) + g.degree(e.v));
  }
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<VertexId> queue;
  for (VertexId root = 0; root < g.vertex_count() && s.bipartite; ++root) {
    if (side[static_cast<std::size_t>(root)] != -1) continue;
    side[static_cast<std::size_t>(root)] = 0;
    queue.push_back(root);
    while (!queue.empty() && s.bipartite) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(v)) {
        auto& w = side[static_cast<std::size_t>(inc.neighbour)];
        if (w == -1) {
          w = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(inc.neighbour);
        } else if (w == side[static_cast<std::size_t>(v)]) {
          s.bipartite = false;
        }
      }
    }
  }
  return s;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  VertexId reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!seen[static_cast<std::size_t>(inc.neighbour)]) {
        seen[static_cast<std::size_t>(inc.neighbour)] = 1;
        ++reached;
        stack.push_back(inc.neighbour);
      }
    }
  }
  return reached == g.vertex_count();
}

int edge_degree_lower_bound(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  return stats(g).max_edge_degree_sum - 1;
}

bool EdgeColouring::is_total() const {
  return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == kNoColour; });
}

int EdgeColouring::num_colours() const {
  std::vector<Colour> used;
  used.reserve(colours_.size());
  for (Colour c : colours_) {
    if (c != kNoColour) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  return static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
}

Colour EdgeColouring::max_colour() const {
  Colour best = kNoColour;
  for (Colour c : colours_) best = std::max(best, c);
  return best;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kAdjacentSameColour:
      return "adjacent-same-colour";
    case ViolationKind::kDistanceOneSameColour:
      return "distance-one-same-colour";
  }
  return "unknown";
}

std::vector<Violation> find_violations(const Graph& g, const EdgeColouring& c) {
  // Per vertex: (colour, edge) pairs of its coloured incident edges, sorted.
  std::vector<std::vector<std::pair<Colour, EdgeId>>> seen(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& list = seen[static_cast<std::size_t>(v)];
    for (const auto& inc : g.incident(v)) {
      if (c.coloured(inc.edge)) list.emplace_back(c[inc.edge], inc.edge);
    }
    std::sort(list.begin(), list.end());
  }

  std::vector<Violation> out;
  auto add = [&](EdgeId a, EdgeId b, ViolationKind kind) {
    if (a > b) std::swap(a, b);
    out.push_back(Violation{a, b, kind});
  };

  for (const auto& list : seen) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size() && list[j].first == list[i].first; ++j) {
        add(list[i].second, list[j].second, ViolationKind::kAdjacentSameColour);
      }
    }
  }

  // Equal colours on e at x and f at y, where xy is an edge: distance one
  // unless e and f already share a vertex (reported above).
  for (EdgeId joint = 0; joint < g.edge_count(); ++joint) {
    VertexId x = g.edge(joint).u;
    VertexId y = g.edge(joint).v;
    if (seen[static_cast<std::size_t>(x)].size() > seen[static_cast<std::size_t>(y)].size()) std::swap(x, y);
    const auto& small = seen[static_cast<std::size_t>(x)];
    const auto& large = seen[static_cast<std::size_t>(y)];
    for (const auto& [colour, e] : small) {
      if (e == joint) continue;
      auto it = std::lower_bound(large.begin(), large.end(), std::pair<Colour, EdgeId>{colour, -1});
      for (; it != large.end() && it->first == colour; ++it) {
        const EdgeId f = it->second;
        if (f == joint || f == e) continue;
        const Edge& ee = g.edge(e);
        const Edge& ff = g.edge(f);
        if (ee.u == ff.u || ee.u == ff.v || ee.v == ff.u || ee.v == ff.v) continue;
        add(e, f, ViolationKind::kDistanceOneSameColour);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.first, a.second, a.kind) < std::tie(b.first, b.second, b.kind);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport verify_strong(const Graph& g, const EdgeColouring& c) {
  if (c.size() != g.edge_count()) {
    throw Error(ErrorCode::kPartialColouring,
                "colouring covers " + std::to_string(c.size()) + " edges, graph has " +
                    std::to_string(g.edge_count()));
  }
  for (EdgeId e = 0; e < c.size(); ++e) {
    if (!c.coloured(e)) throw Error(ErrorCode::kPartialColouring, "edge " + std::to_string(e) + " is uncoloured");
    if (c[e] < 0) throw Error(ErrorCode::kBadParameter, "edge " + std::to_string(e) + " has a negative colour");
  }
  VerificationReport report;
  report.violations = find_violations(g, c);
  report.valid = report.violations.empty();
  report.colours_used = c.num_colours();
  return report;
}

}  // namespace strongcol
