#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace strongcol {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Colour = std::int32_t;

// Colour 0 marks an uncoloured edge; real colours start at 1.
inline constexpr Colour kNoColour = 0;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbour = 0;
  EdgeId edge = 0;
};

// Immutable simple undirected graph. Vertices are 0..n-1, edge ids follow
// insertion order. Incidence lists are sorted by neighbour id.
class Graph {
 public:
  Graph() = default;

  VertexId vertex_count() const { return vertex_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> incident(VertexId v) const {
    const auto begin = offsets_[static_cast<std::size_t>(v)];
    const auto end = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const Incidence>(adjacency_).subspan(begin, end - begin);
  }
  int degree(VertexId v) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] -
                            offsets_[static_cast<std::size_t>(v)]);
  }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

 private:
  friend Graph build_graph(std::span<const std::pair<VertexId, VertexId>>,
                           std::optional<VertexId>, std::span<const int>);

  VertexId vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

// Throws Error{kSelfLoop | kDuplicateEdge | kBadVertexIndex}. When
// `source_lines` is given it must be parallel to `pairs`; the offending line is
// attached to the error, otherwise the 1-based pair index is used.
Graph build_graph(std::span<const std::pair<VertexId, VertexId>> pairs,
                  std::optional<VertexId> vertex_count = std::nullopt,
                  std::span<const int> source_lines = {});

struct GraphStats {
  int max_degree = 0;
  int max_edge_degree_sum = 0;
  bool bipartite = true;
};

GraphStats stats(const Graph& g);

bool is_connected(const Graph& g);

// Max over edges uv of d(u)+d(v)-1. Throws kEmptyGraph on an edgeless graph.
int edge_degree_lower_bound(const Graph& g);

// Total or partial assignment of colours to edge ids.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(EdgeId edge_count) : colours_(static_cast<std::size_t>(edge_count), kNoColour) {}
  explicit EdgeColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  EdgeId size() const { return static_cast<EdgeId>(colours_.size()); }
  Colour operator[](EdgeId e) const { return colours_[static_cast<std::size_t>(e)]; }
  Colour get(EdgeId e) const { return colours_[static_cast<std::size_t>(e)]; }
  void set(EdgeId e, Colour c) { colours_[static_cast<std::size_t>(e)] = c; }
  bool coloured(EdgeId e) const { return get(e) != kNoColour; }

  bool is_total() const;
  int num_colours() const;  // distinct colours actually used
  Colour max_colour() const;
  std::span<const Colour> values() const { return colours_; }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<Colour> colours_;
};

enum class ViolationKind { kAdjacentSameColour, kDistanceOneSameColour };

struct Violation {
  EdgeId first = 0;
  EdgeId second = 0;
  ViolationKind kind = ViolationKind::kAdjacentSameColour;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view to_string(ViolationKind kind);

struct VerificationReport {
  bool valid = false;
  std::vector<Violation> violations;  // sorted, each pair listed once
  int colours_used = 0;
};

// Throws kPartialColouring when some edge is uncoloured.
VerificationReport verify_strong(const Graph& g, const EdgeColouring& c);

// Same check on the coloured edges only; uncoloured edges are ignored.
std::vector<Violation> find_violations(const Graph& g, const EdgeColouring& c);

// Edge-list text format: one "u v" pair per line, '#' lines are comments,
// "#n <count>" fixes the vertex count. Errors carry the source line.
struct EdgeListDocument {
  Graph graph;
  std::vector<std::string> comments;  // comment lines without the leading '#'
};

EdgeListDocument read_edge_list(std::istream& in);
EdgeListDocument read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string> comments = {});

}  // namespace strongcol
