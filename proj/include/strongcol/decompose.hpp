#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "strongcol/graph.hpp"

namespace strongcol {

// A maximal 2-connected subgraph, or a single bridge edge.
struct Block {
  std::vector<EdgeId> edges;       // sorted
  std::vector<VertexId> vertices;  // sorted
  bool is_bridge() const { return edges.size() == 1; }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;                // sorted
  std::vector<int> edge_block;                       // block index of each edge
  std::vector<std::vector<int>> vertex_blocks;       // blocks containing each vertex, ascending
  std::vector<std::vector<VertexId>> block_cut_vertices;  // block-cut tree adjacency
};

// Blocks of a connected graph, ordered by first discovery in a DFS from
// vertex 0. Throws kDisconnected.
BlockDecomposition block_decompose(const Graph& g);

// Same decomposition without the connectivity requirement.
BlockDecomposition biconnected_components(const Graph& g);

struct OuterplanarityResult {
  bool outerplanar = false;
  std::string reason;  // set when not outerplanar
  BlockDecomposition decomposition;
  // Outer cyclic vertex order of each 2-connected block; empty for bridges.
  std::vector<std::vector<VertexId>> outer_cycles;
};

OuterplanarityResult is_outerplanar(const Graph& g);

// Hamiltonian outer cycle of a 2-connected outerplanar block, or nullopt with
// `reason` filled in.
std::optional<std::vector<VertexId>> outer_cycle_of_block(const Graph& g, const Block& block,
                                                          std::string* reason = nullptr);

struct Ear {
  VertexId attach_u = 0;
  VertexId attach_v = 0;
  std::vector<VertexId> internal;  // path from attach_u's side to attach_v's side
  int parent_face = 0;             // 0 is the first cycle, i > 0 is ears[i - 1]
};

struct EarSequence {
  std::vector<VertexId> first_cycle;
  std::vector<Ear> ears;

  std::size_t face_count() const { return 1 + ears.size(); }
  // Cyclic vertex sequence of face i. Ear faces start at attach_u and end at
  // attach_v, so their closing edge is the attachment edge.
  std::vector<VertexId> face(std::size_t i) const;
};

// Inner faces of a 2-connected outerplanar block in breadth-first order over
// the weak dual. The first cycle is the inner face holding the block's
// lexicographically smallest edge, or with `root` set, the smallest edge at
// `root`. Throws kNotTwoConnected, kNotOuterplanar.
EarSequence ear_decompose(const Graph& g, const Block& block, std::optional<VertexId> root = std::nullopt);

// A cycle with pendant multiplicities and shared neighbours ("apexes") of
// consecutive cycle vertices.
//
// Edge layout: cycle edges 0..n-1 (edge i joins positions i and i+1), then the
// pendant edges grouped by position, then two edges per apex.
class PufferInstance {
 public:
  PufferInstance() = default;
  // Throws kBadParameter (length < 3, size mismatch, negative counts) or
  // kApexOverlap (the same position pair listed twice).
  PufferInstance(std::vector<VertexId> cycle, std::vector<int> pendant_count, std::vector<int> apexes = {});

  // Synthetic instance on cycle vertices 0..n-1.
  static PufferInstance from_profile(std::vector<int> pendant_count, std::vector<int> apexes = {});

  int length() const { return static_cast<int>(cycle_.size()); }
  const std::vector<VertexId>& cycle() const { return cycle_; }
  const std::vector<int>& pendant_count() const { return pendant_count_; }
  const std::vector<int>& apexes() const { return apexes_; }
  bool normalised() const { return apexes_.empty(); }

  int pendants(int pos) const { return pendant_count_[static_cast<std::size_t>(pos)]; }
  int apex_incidences(int pos) const;
  int degree(int pos) const { return 2 + pendants(pos) + apex_incidences(pos); }

  EdgeId edge_count() const;
  EdgeId cycle_edge(int pos) const { return pos; }
  EdgeId pendant_edge(int pos, int k) const;
  EdgeId apex_edge(int apex_index, int side) const;
  int cycle_position(EdgeId cycle_edge_id) const { return cycle_edge_id; }

  // Explicit graph with edge ids following the layout above: cycle vertices
  // 0..n-1, then pendant leaves, then apex vertices.
  Graph to_graph() const;

  // Puffer edge id -> host edge id, when built from a host graph.
  std::vector<EdgeId> origin_edges;
  // Optional partial precolouring over puffer edge ids.
  std::optional<EdgeColouring> base_precolouring;

 private:
  std::vector<VertexId> cycle_;
  std::vector<int> pendant_count_;
  std::vector<int> apexes_;  // sorted positions
  std::vector<EdgeId> pendant_begin_;
};

// The face-induced puffer of an induced cycle: the cycle plus every host edge
// incident to it. Colours of already coloured host edges become the base
// precolouring. Throws kNotInducedCycle, or kNotOuterplanar when the
// neighbourhood of the cycle is not a puffer graph.
PufferInstance puffer_of_cycle(const Graph& g, std::span<const VertexId> cycle,
                               const EdgeColouring* host_colouring = nullptr);

struct ApexSurrogates {
  int apex_position = 0;
  std::array<EdgeId, 2> original{};    // apex edges in the unsplit instance
  std::array<EdgeId, 2> surrogate{};   // pendant edges in the split instance
};

struct ApexMergeMap {
  std::vector<EdgeId> split_to_original;  // split edge id -> original edge id
  std::vector<ApexSurrogates> apexes;
};

struct SplitPuffer {
  PufferInstance instance;
  ApexMergeMap merge_map;
};

// Replaces each apex by one pendant at each of its two cycle vertices.
SplitPuffer split_apexes(const PufferInstance& p);

}  // namespace strongcol
