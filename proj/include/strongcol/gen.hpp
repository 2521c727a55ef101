#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "strongcol/graph.hpp"

namespace strongcol {

// std::mt19937_64 with an unbiased bounded draw: values below
// (2^64 - b) mod b are rejected, then r mod b is returned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);
  int index(std::size_t size) { return static_cast<int>(below(size)); }
  bool one_in(std::uint64_t n) { return below(n) == 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Throws kBadParameter for k < 3.
Graph gen_cycle(int k);

// Cycle 0..n-1 with pendant leaves and apexes; the edge ids follow the
// PufferInstance layout. Throws kBadParameter or kApexOverlap.
Graph gen_puffer(int cycle_len, const std::vector<int>& pendants, const std::vector<int>& apexes = {});

// Connected outerplanar graph on n vertices with exactly `faces` inner faces
// and n - 1 + faces edges. Up to `pendant_budget` vertices arrive as pendant
// leaves; the rest belong to faces. With faces = 0 the result is a tree.
// Bipartite requests use even faces only. Throws kBadParameter when n is too
// small for the requested faces or the parity cannot be met.
Graph gen_outerplanar(int n, int faces, int pendant_budget, bool bipartite, std::uint64_t seed);

enum class GenKind { kCycle, kPuffer, kOuterplanar };

struct GenSpec {
  GenKind kind = GenKind::kCycle;
  int k = 0;                  // cycle
  int cycle_len = 0;          // puffer
  std::vector<int> pendants;  // puffer
  std::vector<int> apexes;    // puffer
  int n = 0;                  // outerplanar
  int faces = 0;
  int pendant_budget = 0;
  bool bipartite = false;
  std::uint64_t seed = 0;

  // "kind=outerplanar n=50 faces=8 pendant_budget=20 bipartite=1 seed=42"
  std::string canonical() const;
};

Graph generate(const GenSpec& spec);

}  // namespace strongcol
