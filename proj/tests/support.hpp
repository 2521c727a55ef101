#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strongcol/gen.hpp"
#include "strongcol/graph.hpp"

namespace strongcol::testing {

Graph graph_of(const std::vector<std::pair<int, int>>& pairs);

Graph path(int edges);
Graph star(int leaves);

// Pendant profiles of length n with entries 0..max_pendants and at most
// max_edges edges in total, one per rotation/reflection class (the
// lexicographically smallest representative).
std::vector<std::vector<int>> puffer_profiles(int n, int max_pendants, int max_edges);

// Connected outerplanar graph with between 1 and max_edges edges, drawn
// through gen_outerplanar with random parameters.
Graph random_outerplanar(Rng& rng, int max_edges, bool bipartite);

// Cycles, paths, stars, puffers with and without apexes, and random
// outerplanar graphs, all with at most max_edges edges.
std::vector<Graph> small_corpus(int max_edges, std::uint64_t seed);

std::string profile_string(const std::vector<int>& p);

}  // namespace strongcol::testing
