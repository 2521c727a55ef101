#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "strongcol/graph.hpp"

namespace strongcol {

// Square of the line graph: one vertex per source edge, adjacent when the
// source edges share a vertex or are joined by an edge.
struct ConflictGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;  // sorted

  std::size_t edge_count() const;
  bool adjacent(int a, int b) const;
};

ConflictGraph conflict_graph(const Graph& g);

enum class SearchStatus { kExact, kTimeout, kAboveCap };

struct ExactResult {
  SearchStatus status = SearchStatus::kExact;
  int value = 0;  // the exact index when status is kExact
  int lower = 0;  // proven lower bound
  int upper = 0;  // colours of the best colouring found
  std::optional<EdgeColouring> colouring;
};

// Strong chromatic index by branch and bound. Searches k from the clique
// bound upward, no further than `max_colours`.
ExactResult exact_sci(const Graph& g, int max_colours = INT_MAX, double time_budget_s = 10.0);

enum class Feasibility { kFound, kInfeasible, kTimeout };

struct ColouringSearch {
  Feasibility verdict = Feasibility::kInfeasible;
  EdgeColouring colouring;
};

// A strong colouring with colours 1..k, or a proof that none exists.
ColouringSearch exact_colouring(const Graph& g, int k, double time_budget_s = 10.0);

// Independent second method: enumerates set partitions of the edges into
// conflict-free classes. Only meant for very small graphs.
int sci_by_partitions(const Graph& g);

}  // namespace strongcol
