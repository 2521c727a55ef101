#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strongcol/graph.hpp"
#include "strongcol/puffer.hpp"

namespace strongcol {

struct PufferSummary {
  std::vector<VertexId> cycle;
  PufferCase puffer_case;
  BoundReport bound;
  ConstructionRoute route = ConstructionRoute::kLemma;  // set by strong_colour only
  int colours_used = 0;                                 // set by strong_colour only
};

struct TheoremBound {
  int value = 0;
  Exactness exactness = Exactness::kExact;
  int lower_bound = 0;                  // max over edges of d(u)+d(v)-1
  std::optional<std::size_t> binding;   // puffer attaining the value, when it beats the lower bound
  std::vector<PufferSummary> puffers;   // one per inner face, blocks in decomposition order
};

// Max of the edge-degree bound and the bounds of all face puffers. Exact when
// it equals the edge-degree bound or some puffer attaining it is exact.
// Throws kDisconnected, kNotOuterplanar, kEmptyGraph.
TheoremBound theorem_bound(const Graph& g);

struct ColourOptions {
  ColourPufferOptions puffer;
  // Called with the partial colouring after each processing step.
  std::function<void(const EdgeColouring&)> on_step;
  // Called with the colouring so far just before strong_colour gives up with
  // kInternal: precoloured face edges that clash, or more colours than the
  // theorem bound plus one.
  std::function<void(const EdgeColouring&, const std::string&)> on_counterexample;
};

struct ColouringResult {
  EdgeColouring colouring;
  int colours_used = 0;
  TheoremBound theorem_bound;
  std::vector<PufferSummary> per_puffer;  // in processing order
  bool within_bound = true;               // colours_used <= theorem_bound.value
};

// Colours vertex 0's edges, then walks the block tree breadth first. A bridge
// colours the far endpoint's edges greedily; a 2-connected block is coloured
// face by face from its entry vertex, each face as a puffer whose edges at
// already finished vertices are precoloured. Throws kDisconnected,
// kNotOuterplanar, kEmptyGraph, and kInternal as described above.
ColouringResult strong_colour(const Graph& g, const ColourOptions& options = {});

// Greedy completion: uncoloured edges in breadth-first order from coloured
// edges, each taking the smallest colour not seen within distance one.
EdgeColouring extend_tree_edges(const Graph& g, const EdgeColouring& partial);

enum class BipartiteVerdict { kOptimal, kOptimalOrPlusOne };

// Throws kNotBipartite, or kInternal when the result uses more than LB + 1.
BipartiteVerdict bipartite_guarantee(const Graph& g, const ColouringResult& r);

}  // namespace strongcol
