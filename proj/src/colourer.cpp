#include "strongcol/colourer.hpp"

#include <algorithm>
#include <deque>

#include "strongcol/decompose.hpp"
#include "strongcol/error.hpp"

namespace strongcol {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

OuterplanarityResult checked_structure(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no edges");
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  auto o = is_outerplanar(g);
  if (!o.outerplanar) throw Error(ErrorCode::kNotOuterplanar, o.reason);
  return o;
}

PufferSummary summarise(const PufferInstance& p, std::vector<VertexId> cycle) {
  const PufferInstance normal = p.normalised() ? p : split_apexes(p).instance;
  const auto pc = classify(normal);
  return PufferSummary{std::move(cycle), pc, bound(normal, pc)};
}

void finish_bound(TheoremBound& tb) {
  tb.value = tb.lower_bound;
  for (std::size_t i = 0; i < tb.puffers.size(); ++i) {
    if (tb.puffers[i].bound.value > tb.value) {
      tb.value = tb.puffers[i].bound.value;
      tb.binding = i;
    }
  }
  tb.exactness = Exactness::kUpper;
  if (tb.value == tb.lower_bound) {
    tb.exactness = Exactness::kExact;
    tb.binding.reset();
    return;
  }
  for (std::size_t i = 0; i < tb.puffers.size(); ++i) {
    const auto& b = tb.puffers[i].bound;
    if (b.value == tb.value && b.exactness == Exactness::kExact) {
      tb.exactness = Exactness::kExact;
      tb.binding = i;
      return;
    }
  }
}

// Smallest colour not on an edge within distance one of e.
class GreedyPicker {
 public:
  explicit GreedyPicker(const Graph& g) : g_(g) {}

  Colour pick(const EdgeColouring& c, EdgeId e) {
    ++stamp_;
    auto mark_at = [&](VertexId x) {
      for (const auto& inc : g_.incident(x)) {
        const Colour col = c[inc.edge];
        if (col == kNoColour) continue;
        if (at(col) >= seen_.size()) seen_.resize(at(col) * 2 + 1, 0);
        seen_[at(col)] = stamp_;
      }
    };
    for (VertexId end : {g_.edge(e).u, g_.edge(e).v}) {
      mark_at(end);
      for (const auto& inc : g_.incident(end)) mark_at(inc.neighbour);
    }
    Colour col = 1;
    while (at(col) < seen_.size() && seen_[at(col)] == stamp_) ++col;
    return col;
  }

 private:
  const Graph& g_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
};

}  // namespace

TheoremBound theorem_bound(const Graph& g) {
  const auto o = checked_structure(g);
  TheoremBound tb;
  tb.lower_bound = edge_degree_lower_bound(g);
  for (const Block& block : o.decomposition.blocks) {
    if (block.is_bridge()) continue;
    const EarSequence seq = ear_decompose(g, block);
    for (std::size_t i = 0; i < seq.face_count(); ++i) {
      auto cycle = seq.face(i);
      const PufferInstance p = puffer_of_cycle(g, cycle);
      tb.puffers.push_back(summarise(p, std::move(cycle)));
    }
  }
  finish_bound(tb);
  return tb;
}

ColouringResult strong_colour(const Graph& g, const ColourOptions& options) {
  const auto o = checked_structure(g);
  const auto& dec = o.decomposition;
  ColouringResult result;
  EdgeColouring& colouring = result.colouring;
  colouring = EdgeColouring(g.edge_count());
  GreedyPicker picker(g);
  std::vector<char> finished(at(g.vertex_count()), 0);

  auto notify = [&] {
    if (options.on_step) options.on_step(colouring);
  };
  auto give_up = [&](const std::string& why) {
    if (options.on_counterexample) options.on_counterexample(colouring, why);
    throw Error(ErrorCode::kInternal, why);
  };
  auto finish_greedily = [&](VertexId v) {
    for (const auto& inc : g.incident(v)) {
      if (!colouring.coloured(inc.edge)) colouring.set(inc.edge, picker.pick(colouring, inc.edge));
    }
    finished[at(v)] = 1;
    notify();
  };

  std::vector<char> block_done(dec.blocks.size(), 0);
  std::deque<std::pair<int, VertexId>> queue;  // (block, entry vertex)
  auto enqueue_blocks_at = [&](VertexId v) {
    for (int b : dec.vertex_blocks[at(v)]) {
      if (!block_done[at(b)]) {
        block_done[at(b)] = 1;
        queue.emplace_back(b, v);
      }
    }
  };

  finish_greedily(0);
  enqueue_blocks_at(0);
  while (!queue.empty()) {
    const auto [b, entry] = queue.front();
    queue.pop_front();
    const Block& block = dec.blocks[at(b)];
    if (block.is_bridge()) {
      const Edge& e = g.edge(block.edges[0]);
      const VertexId far = e.other(entry);
      if (!finished[at(far)]) finish_greedily(far);
      enqueue_blocks_at(far);
      continue;
    }
    const EarSequence seq = ear_decompose(g, block, entry);
    for (std::size_t i = 0; i < seq.face_count(); ++i) {
      auto cycle = seq.face(i);
      const PufferInstance p = puffer_of_cycle(g, cycle, &colouring);
      PufferColouring pc;
      try {
        pc = colour_puffer(p, options.puffer);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kBadParameter) throw;
        give_up(err.what());
      }
      for (EdgeId e = 0; e < p.edge_count(); ++e) {
        const EdgeId host = p.origin_edges[at(e)];
        const Colour c = pc.colouring[e];
        if (colouring.coloured(host)) {
          if (colouring[host] != c) give_up("puffer colouring changed a precoloured edge");
          continue;
        }
        colouring.set(host, c);
      }
      for (VertexId v : cycle) finished[at(v)] = 1;
      result.per_puffer.push_back(PufferSummary{std::move(cycle), pc.puffer_case, pc.bound, pc.route, pc.colours_used});
      notify();
    }
    for (VertexId v : block.vertices) enqueue_blocks_at(v);
  }

  if (!colouring.is_total()) colouring = extend_tree_edges(g, colouring);

  TheoremBound& tb = result.theorem_bound;
  tb.lower_bound = edge_degree_lower_bound(g);
  tb.puffers = result.per_puffer;
  finish_bound(tb);
  result.colours_used = colouring.num_colours();
  result.within_bound = result.colours_used <= tb.value;
  if (result.colours_used > tb.value + 1) {
    give_up(std::to_string(result.colours_used) + " colours exceed the theorem bound " + std::to_string(tb.value) +
            " plus one");
  }
  return result;
}

EdgeColouring extend_tree_edges(const Graph& g, const EdgeColouring& partial) {
  if (partial.size() != g.edge_count()) throw Error(ErrorCode::kBadParameter, "colouring size differs from edge count");
  EdgeColouring out = partial;
  GreedyPicker picker(g);
  std::vector<char> queued(at(g.vertex_count()), 0);
  std::deque<VertexId> queue;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!out.coloured(e)) continue;
    for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
      if (!queued[at(x)]) {
        queued[at(x)] = 1;
        queue.push_back(x);
      }
    }
  }
  VertexId scan = 0;
  while (true) {
    if (queue.empty()) {
      // Start a component without coloured edges at its smallest vertex.
      while (scan < g.vertex_count() && (queued[at(scan)] || g.degree(scan) == 0)) ++scan;
      if (scan == g.vertex_count()) break;
      queued[at(scan)] = 1;
      queue.push_back(scan);
    }
    const VertexId v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(v)) {
      if (!out.coloured(inc.edge)) out.set(inc.edge, picker.pick(out, inc.edge));
      if (!queued[at(inc.neighbour)]) {
        queued[at(inc.neighbour)] = 1;
        queue.push_back(inc.neighbour);
      }
    }
  }
  return out;
}

BipartiteVerdict bipartite_guarantee(const Graph& g, const ColouringResult& r) {
  if (!stats(g).bipartite) throw Error(ErrorCode::kNotBipartite, "graph is not bipartite");
  const int lb = edge_degree_lower_bound(g);
  if (r.colours_used < lb) throw Error(ErrorCode::kInternal, "colouring uses fewer colours than the lower bound");
  if (r.colours_used == lb) return BipartiteVerdict::kOptimal;
  if (r.colours_used == lb + 1) return BipartiteVerdict::kOptimalOrPlusOne;
  throw Error(ErrorCode::kInternal, "bipartite colouring uses " + std::to_string(r.colours_used) +
                                        " colours, more than the lower bound plus one (" + std::to_string(lb + 1) + ")");
}

}  // namespace strongcol
