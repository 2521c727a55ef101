#include "strongcol/gen.hpp"

#include <algorithm>

#include "strongcol/decompose.hpp"
#include "strongcol/error.hpp"

namespace strongcol {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kBadParameter, "empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

Graph gen_cycle(int k) {
  if (k < 3) throw Error(ErrorCode::kBadParameter, "cycle length must be at least 3");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
  return build_graph(pairs);
}

Graph gen_puffer(int cycle_len, const std::vector<int>& pendants, const std::vector<int>& apexes) {
  if (cycle_len < 3) throw Error(ErrorCode::kBadParameter, "cycle length must be at least 3");
  if (static_cast<int>(pendants.size()) != cycle_len) {
    throw Error(ErrorCode::kBadParameter, "pendant profile length differs from cycle length");
  }
  return PufferInstance::from_profile(pendants, apexes).to_graph();
}

namespace {

enum class Step { kFirstCycle, kEar, kNewBlock, kPendant };

struct Builder {
  Rng& rng;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::pair<VertexId, VertexId>> outer;  // edges that can carry an ear
  VertexId next = 0;

  explicit Builder(Rng& r) : rng(r) {}

  VertexId any_vertex() { return static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(next))); }

  void cycle_through(VertexId anchor, int fresh) {
    VertexId prev = anchor;
    for (int i = 0; i < fresh; ++i) {
      edges.emplace_back(prev, next);
      outer.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, anchor);
    outer.emplace_back(prev, anchor);
  }

  void first_cycle(int len) {
    const VertexId anchor = next++;
    cycle_through(anchor, len - 1);
  }

  void new_block(int fresh) { cycle_through(any_vertex(), fresh); }

  void ear(int internal) {
    const int pick = rng.index(outer.size());
    const auto [a, b] = outer[static_cast<std::size_t>(pick)];
    outer.erase(outer.begin() + pick);
    VertexId prev = a;
    for (int i = 0; i < internal; ++i) {
      edges.emplace_back(prev, next);
      outer.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, b);
    outer.emplace_back(prev, b);
  }

  void pendant() {
    const VertexId v = any_vertex();
    edges.emplace_back(v, next++);
  }
};

}  // namespace

Graph gen_outerplanar(int n, int faces, int pendant_budget, bool bipartite, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kBadParameter, "n must be positive");
  if (faces < 0 || pendant_budget < 0) throw Error(ErrorCode::kBadParameter, "negative face count or pendant budget");
  Rng rng(seed);
  Builder b(rng);

  if (faces == 0) {
    b.next = 1;
    for (int i = 1; i < n; ++i) b.pendant();
    return build_graph(b.edges, n);
  }

  // Face types and their minimum vertex contributions.
  std::vector<Step> kinds{Step::kFirstCycle};
  for (int i = 1; i < faces; ++i) kinds.push_back(rng.one_in(5) ? Step::kNewBlock : Step::kEar);
  auto minimum = [&](Step s) {
    switch (s) {
      case Step::kFirstCycle:
        return bipartite ? 4 : 3;
      case Step::kEar:
        return bipartite ? 2 : 1;
      case Step::kNewBlock:
        return bipartite ? 3 : 2;
      case Step::kPendant:
        break;
    }
    return 1;
  };
  int needed = 0;
  for (Step s : kinds) needed += minimum(s);
  if (needed > n) {
    throw Error(ErrorCode::kBadParameter,
                std::to_string(faces) + " faces need at least " + std::to_string(needed) + " vertices");
  }
  int pendants = std::min(pendant_budget, n - needed);
  int spare = n - pendants - needed;
  if (bipartite && spare % 2 != 0) {
    if (kinds.size() > 1) {
      // Swapping an ear for a new block (or back) shifts the minimum by one.
      Step& s = kinds.back();
      if (s == Step::kEar) {
        s = Step::kNewBlock;
        --spare;
      } else {
        s = Step::kEar;
        ++spare;
      }
    } else if (pendants > 0) {
      --pendants;
      ++spare;
    } else {
      throw Error(ErrorCode::kBadParameter, "a single bipartite face needs an even vertex count");
    }
  }
  std::vector<int> size(kinds.size());
  for (std::size_t i = 0; i < kinds.size(); ++i) size[i] = minimum(kinds[i]);
  const int unit = bipartite ? 2 : 1;
  for (int left = spare; left > 0; left -= unit) size[static_cast<std::size_t>(rng.index(size.size()))] += unit;

  // Face steps keep their order; pendant steps interleave after the first.
  std::vector<int> order;  // face index, or -1 for a pendant
  for (std::size_t i = 1; i < kinds.size(); ++i) order.push_back(static_cast<int>(i));
  for (int i = 0; i < pendants; ++i) order.push_back(-1);
  rng.shuffle(order);
  std::vector<int> faces_in_order;
  for (int x : order) {
    if (x >= 0) faces_in_order.push_back(x);
  }
  std::sort(faces_in_order.begin(), faces_in_order.end());
  std::size_t f = 0;
  for (int& x : order) {
    if (x >= 0) x = faces_in_order[f++];
  }

  b.first_cycle(size[0]);
  for (int x : order) {
    if (x < 0) {
      b.pendant();
    } else if (kinds[static_cast<std::size_t>(x)] == Step::kEar) {
      b.ear(size[static_cast<std::size_t>(x)]);
    } else {
      b.new_block(size[static_cast<std::size_t>(x)]);
    }
  }
  return build_graph(b.edges, n);
}

std::string GenSpec::canonical() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (kind) {
    case GenKind::kCycle:
      return "kind=cycle k=" + std::to_string(k);
    case GenKind::kPuffer:
      return "kind=puffer cycle=" + std::to_string(cycle_len) + " pendants=" + join(pendants) +
             " apexes=" + join(apexes);
    case GenKind::kOuterplanar:
      return "kind=outerplanar n=" + std::to_string(n) + " faces=" + std::to_string(faces) +
             " pendant_budget=" + std::to_string(pendant_budget) + " bipartite=" + (bipartite ? "1" : "0") +
             " seed=" + std::to_string(seed);
  }
  return "";
}

Graph generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::kCycle:
      return gen_cycle(spec.k);
    case GenKind::kPuffer:
      return gen_puffer(spec.cycle_len, spec.pendants, spec.apexes);
    case GenKind::kOuterplanar:
      return gen_outerplanar(spec.n, spec.faces, spec.pendant_budget, spec.bipartite, spec.seed);
  }
  throw Error(ErrorCode::kBadParameter, "unknown generator kind");
}

}  // namespace strongcol
