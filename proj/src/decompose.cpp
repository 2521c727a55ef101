#include "strongcol/decompose.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "strongcol/error.hpp"

namespace strongcol {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

template <class T>
std::size_t idx(T v) {
  return static_cast<std::size_t>(v);
}

struct Frame {
  VertexId v;
  EdgeId parent_edge;
  std::size_t next;
};

}  // namespace

BlockDecomposition biconnected_components(const Graph& g) {
  const auto n = idx(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<Frame> frames;
  BlockDecomposition out;
  out.edge_block.assign(idx(g.edge_count()), -1);
  int timer = 0;

  auto emit_block = [&](EdgeId last) {
    Block b;
    while (true) {
      const EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back(e);
      if (e == last) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    for (EdgeId e : b.edges) {
      b.vertices.push_back(g.edge(e).u);
      b.vertices.push_back(g.edge(e).v);
      out.edge_block[idx(e)] = static_cast<int>(out.blocks.size());
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    out.blocks.push_back(std::move(b));
  };

  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (disc[idx(root)] != -1) continue;
    disc[idx(root)] = low[idx(root)] = timer++;
    frames.push_back(Frame{root, -1, 0});
    while (!frames.empty()) {
      const std::size_t top = frames.size() - 1;
      const VertexId v = frames[top].v;
      const auto inc = g.incident(v);
      if (frames[top].next < inc.size()) {
        const Incidence in = inc[frames[top].next++];
        if (in.edge == frames[top].parent_edge) continue;
        const VertexId w = in.neighbour;
        if (disc[idx(w)] == -1) {
          edge_stack.push_back(in.edge);
          disc[idx(w)] = low[idx(w)] = timer++;
          frames.push_back(Frame{w, in.edge, 0});
        } else if (disc[idx(w)] < disc[idx(v)]) {
          edge_stack.push_back(in.edge);
          low[idx(v)] = std::min(low[idx(v)], disc[idx(w)]);
        }
        continue;
      }
      const Frame done = frames.back();
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId p = frames.back().v;
      low[idx(p)] = std::min(low[idx(p)], low[idx(done.v)]);
      if (low[idx(done.v)] >= disc[idx(p)]) emit_block(done.parent_edge);
    }
  }

  out.vertex_blocks.assign(n, {});
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (VertexId v : out.blocks[b].vertices) out.vertex_blocks[idx(v)].push_back(static_cast<int>(b));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (out.vertex_blocks[idx(v)].size() >= 2) out.cut_vertices.push_back(v);
  }
  out.block_cut_vertices.assign(out.blocks.size(), {});
  for (VertexId v : out.cut_vertices) {
    for (int b : out.vertex_blocks[idx(v)]) out.block_cut_vertices[idx(b)].push_back(v);
  }
  return out;
}

BlockDecomposition block_decompose(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  return biconnected_components(g);
}

std::optional<std::vector<VertexId>> outer_cycle_of_block(const Graph& g, const Block& block, std::string* reason) {
  auto fail = [&](std::string why) -> std::optional<std::vector<VertexId>> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };
  const int n = static_cast<int>(block.vertices.size());
  if (block.is_bridge() || n < 3) return fail("block is a single edge");
  if (static_cast<int>(block.edges.size()) > 2 * n - 3) return fail("too many edges for an outerplanar block");

  auto local = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(block.vertices.begin(), block.vertices.end(), v) - block.vertices.begin());
  };
  std::vector<std::vector<int>> adj(idx(n));
  std::unordered_set<std::uint64_t> present;
  present.reserve(block.edges.size() * 2);
  for (EdgeId e : block.edges) {
    const int a = local(g.edge(e).u);
    const int b = local(g.edge(e).v);
    adj[idx(a)].push_back(b);
    adj[idx(b)].push_back(a);
    present.insert(pair_key(a, b));
  }
  std::vector<int> deg(idx(n));
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[idx(v)] = static_cast<int>(adj[idx(v)].size());
    if (deg[idx(v)] < 2) return fail("vertex " + std::to_string(block.vertices[idx(v)]) + " has block degree below 2");
    if (deg[idx(v)] == 2) queue.push_back(v);
  }

  // Repeatedly remove a degree-2 vertex v, replacing its path a-v-b by the
  // edge ab. Outerplanar 2-connected graphs always have such a vertex.
  struct Removal {
    int v, a, b;
  };
  std::vector<Removal> removals;
  std::vector<char> removed(idx(n), 0);
  int live = n;
  while (live > 2) {
    if (queue.empty()) return fail("no vertex of degree two remains during reduction");
    const int v = queue.front();
    queue.pop_front();
    if (removed[idx(v)] || deg[idx(v)] != 2) continue;
    int ends[2] = {-1, -1};
    int found = 0;
    for (int w : adj[idx(v)]) {
      if (removed[idx(w)] || w == ends[0]) continue;
      if (found == 2) return fail("inconsistent degree during reduction");
      ends[found++] = w;
    }
    if (found != 2) return fail("inconsistent degree during reduction");
    removed[idx(v)] = 1;
    --live;
    removals.push_back(Removal{v, ends[0], ends[1]});
    const auto key = pair_key(ends[0], ends[1]);
    if (present.count(key)) {
      for (int x : ends) {
        --deg[idx(x)];
        if (deg[idx(x)] == 2) queue.push_back(x);
        if (deg[idx(x)] < 2 && live > 2) return fail("reduction disconnects the block");
      }
    } else {
      present.insert(key);
      adj[idx(ends[0])].push_back(ends[1]);
      adj[idx(ends[1])].push_back(ends[0]);
    }
  }

  // Undo the reduction: each removed vertex goes back between its two ends,
  // which must be consecutive on the cycle built so far.
  std::vector<int> next(idx(n), -1), prev(idx(n), -1);
  {
    int s = -1, t = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[idx(v)]) continue;
      (s == -1 ? s : t) = v;
    }
    next[idx(s)] = t;
    prev[idx(s)] = t;
    next[idx(t)] = s;
    prev[idx(t)] = s;
  }
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    int a = it->a, b = it->b;
    if (next[idx(a)] != b) std::swap(a, b);
    if (next[idx(a)] != b) return fail("reduction does not reassemble into a cycle");
    next[idx(a)] = it->v;
    prev[idx(it->v)] = a;
    next[idx(it->v)] = b;
    prev[idx(b)] = it->v;
  }

  std::vector<int> order;
  order.reserve(idx(n));
  const bool forward = next[0] < prev[0];
  int cur = 0;
  do {
    order.push_back(cur);
    cur = forward ? next[idx(cur)] : prev[idx(cur)];
  } while (cur != 0 && static_cast<int>(order.size()) <= n);
  if (static_cast<int>(order.size()) != n) return fail("reduction order is not Hamiltonian");

  // Certificate check: consecutive pairs are edges, remaining edges are
  // non-crossing chords.
  std::vector<int> pos(idx(n));
  for (int i = 0; i < n; ++i) pos[idx(order[idx(i)])] = i;
  std::vector<std::vector<int>> closing(idx(n)), opening(idx(n));
  int cycle_edges = 0;
  for (EdgeId e : block.edges) {
    int p = pos[idx(local(g.edge(e).u))];
    int q = pos[idx(local(g.edge(e).v))];
    if (p > q) std::swap(p, q);
    if (q == p + 1 || (p == 0 && q == n - 1)) {
      ++cycle_edges;
      continue;
    }
    opening[idx(p)].push_back(q);
    closing[idx(q)].push_back(p);
  }
  if (cycle_edges != n) return fail("outer order misses a cycle edge");
  std::vector<std::pair<int, int>> stack;
  for (int i = 0; i < n; ++i) {
    auto& cl = closing[idx(i)];
    std::sort(cl.begin(), cl.end(), std::greater<>());
    for (int p : cl) {
      if (stack.empty() || stack.back() != std::pair<int, int>{p, i}) return fail("crossing chords");
      stack.pop_back();
    }
    auto& op = opening[idx(i)];
    std::sort(op.begin(), op.end(), std::greater<>());
    for (int q : op) stack.emplace_back(i, q);
  }

  std::vector<VertexId> result;
  result.reserve(idx(n));
  for (int v : order) result.push_back(block.vertices[idx(v)]);
  return result;
}

OuterplanarityResult is_outerplanar(const Graph& g) {
  OuterplanarityResult r;
  r.decomposition = biconnected_components(g);
  r.outer_cycles.assign(r.decomposition.blocks.size(), {});
  r.outerplanar = true;
  for (std::size_t b = 0; b < r.decomposition.blocks.size(); ++b) {
    const Block& block = r.decomposition.blocks[b];
    if (block.is_bridge()) continue;
    std::string why;
    auto cyc = outer_cycle_of_block(g, block, &why);
    if (!cyc) {
      r.outerplanar = false;
      r.reason = "block " + std::to_string(b) + ": " + why;
      r.outer_cycles.clear();
      return r;
    }
    r.outer_cycles[b] = std::move(*cyc);
  }
  return r;
}

std::vector<VertexId> EarSequence::face(std::size_t i) const {
  if (i == 0) return first_cycle;
  const Ear& ear = ears[i - 1];
  std::vector<VertexId> out;
  out.reserve(ear.internal.size() + 2);
  out.push_back(ear.attach_u);
  out.insert(out.end(), ear.internal.begin(), ear.internal.end());
  out.push_back(ear.attach_v);
  return out;
}

EarSequence ear_decompose(const Graph& g, const Block& block, std::optional<VertexId> root) {
  if (block.is_bridge() || block.vertices.size() < 3) {
    throw Error(ErrorCode::kNotTwoConnected, "block is a single edge");
  }
  std::string why;
  auto outer = outer_cycle_of_block(g, block, &why);
  if (!outer) {
    const bool degree_issue = why.find("degree below 2") != std::string::npos;
    throw Error(degree_issue ? ErrorCode::kNotTwoConnected : ErrorCode::kNotOuterplanar, why);
  }
  const int n = static_cast<int>(outer->size());
  std::unordered_map<VertexId, int> pos;
  pos.reserve(idx(n) * 2);
  for (int i = 0; i < n; ++i) pos[(*outer)[idx(i)]] = i;

  // Rotation at each vertex: neighbours by clockwise offset along the outer
  // order. The face after dart u->v continues with v->w, w preceding u.
  std::vector<std::vector<int>> rot(idx(n));
  for (EdgeId e : block.edges) {
    const int a = pos.at(g.edge(e).u);
    const int b = pos.at(g.edge(e).v);
    rot[idx(a)].push_back(b);
    rot[idx(b)].push_back(a);
  }
  auto offset = [n](int from, int to) { return (to - from + n) % n; };
  std::vector<std::size_t> dart_base(idx(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& r = rot[idx(v)];
    std::sort(r.begin(), r.end(), [&](int x, int y) { return offset(v, x) < offset(v, y); });
    dart_base[idx(v) + 1] = dart_base[idx(v)] + r.size();
  }
  auto slot = [&](int v, int w) {
    const auto& r = rot[idx(v)];
    const auto it = std::lower_bound(r.begin(), r.end(), w,
                                     [&](int x, int target) { return offset(v, x) < offset(v, target); });
    return static_cast<std::size_t>(it - r.begin());
  };
  auto dart_id = [&](int u, int v) { return dart_base[idx(u)] + slot(u, v); };

  std::vector<int> dart_face(dart_base.back(), -1);
  std::vector<std::vector<std::pair<int, int>>> faces;  // darts (from, to) in trace order
  for (int u = 0; u < n; ++u) {
    for (int v : rot[idx(u)]) {
      if (dart_face[dart_id(u, v)] != -1) continue;
      const int f = static_cast<int>(faces.size());
      faces.emplace_back();
      int a = u, b = v;
      while (dart_face[dart_id(a, b)] == -1) {
        dart_face[dart_id(a, b)] = f;
        faces.back().emplace_back(a, b);
        const auto& r = rot[idx(b)];
        const std::size_t s = slot(b, a);
        const int w = r[(s + r.size() - 1) % r.size()];
        a = b;
        b = w;
      }
    }
  }
  const int outer_face = dart_face[dart_id(1, 0)];
  if (static_cast<int>(faces[idx(outer_face)].size()) != n) {
    throw Error(ErrorCode::kInternal, "outer face trace does not match the outer cycle");
  }

  // First face: inner face on the smallest edge (restricted to `root`).
  std::pair<VertexId, VertexId> best{-1, -1};
  for (EdgeId e : block.edges) {
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    if (a > b) std::swap(a, b);
    if (root && a != *root && b != *root) continue;
    if (best.first == -1 || std::pair{a, b} < best) best = {a, b};
  }
  if (best.first == -1) throw Error(ErrorCode::kBadParameter, "root vertex is not in the block");
  int first = dart_face[dart_id(pos.at(best.first), pos.at(best.second))];
  bool from_min = true;
  if (first == outer_face) {
    first = dart_face[dart_id(pos.at(best.second), pos.at(best.first))];
    from_min = false;
  }

  auto rotate_to = [&](int f, int start_from, int start_to) {
    auto& darts = faces[idx(f)];
    const auto it = std::find(darts.begin(), darts.end(), std::pair<int, int>{start_from, start_to});
    std::rotate(darts.begin(), it, darts.end());
  };
  if (from_min) {
    rotate_to(first, pos.at(best.first), pos.at(best.second));
  } else {
    rotate_to(first, pos.at(best.second), pos.at(best.first));
  }

  EarSequence seq;
  for (const auto& [a, b] : faces[idx(first)]) seq.first_cycle.push_back((*outer)[idx(a)]);

  std::vector<int> face_index(faces.size(), -1);  // position in the ear sequence
  face_index[idx(first)] = 0;
  std::deque<int> queue{first};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const auto& [x, y] : faces[idx(f)]) {
      const int h = dart_face[dart_id(y, x)];
      if (h == outer_face || face_index[idx(h)] != -1) continue;
      rotate_to(h, y, x);
      // Trace of h: y -> x -> a1 -> ... -> ak -> y.
      Ear ear;
      ear.attach_u = (*outer)[idx(x)];
      ear.attach_v = (*outer)[idx(y)];
      ear.parent_face = face_index[idx(f)];
      const auto& darts = faces[idx(h)];
      for (std::size_t i = 1; i + 1 < darts.size(); ++i) ear.internal.push_back((*outer)[idx(darts[i].second)]);
      face_index[idx(h)] = static_cast<int>(seq.ears.size()) + 1;
      seq.ears.push_back(std::move(ear));
      queue.push_back(h);
    }
  }
  if (seq.face_count() + 1 != faces.size()) {
    throw Error(ErrorCode::kInternal, "weak dual of the block is not connected");
  }
  return seq;
}

// ---------------------------------------------------------------------------

PufferInstance::PufferInstance(std::vector<VertexId> cycle, std::vector<int> pendant_count, std::vector<int> apexes)
    : cycle_(std::move(cycle)), pendant_count_(std::move(pendant_count)), apexes_(std::move(apexes)) {
  const int n = length();
  if (n < 3) throw Error(ErrorCode::kBadParameter, "puffer cycle needs at least 3 vertices");
  if (pendant_count_.size() != cycle_.size()) {
    throw Error(ErrorCode::kBadParameter, "pendant profile length differs from cycle length");
  }
  for (int p : pendant_count_) {
    if (p < 0) throw Error(ErrorCode::kBadParameter, "negative pendant count");
  }
  for (int a : apexes_) {
    if (a < 0 || a >= n) throw Error(ErrorCode::kBadParameter, "apex position out of range");
  }
  std::sort(apexes_.begin(), apexes_.end());
  if (std::adjacent_find(apexes_.begin(), apexes_.end()) != apexes_.end()) {
    throw Error(ErrorCode::kApexOverlap, "two apexes on the same cycle edge");
  }
  pendant_begin_.resize(idx(n) + 1);
  pendant_begin_[0] = n;
  for (int i = 0; i < n; ++i) pendant_begin_[idx(i) + 1] = pendant_begin_[idx(i)] + pendant_count_[idx(i)];
}

PufferInstance PufferInstance::from_profile(std::vector<int> pendant_count, std::vector<int> apexes) {
  std::vector<VertexId> cycle(pendant_count.size());
  std::iota(cycle.begin(), cycle.end(), 0);
  return PufferInstance(std::move(cycle), std::move(pendant_count), std::move(apexes));
}

int PufferInstance::apex_incidences(int pos) const {
  const int n = length();
  int count = 0;
  if (std::binary_search(apexes_.begin(), apexes_.end(), pos)) ++count;
  if (std::binary_search(apexes_.begin(), apexes_.end(), (pos + n - 1) % n)) ++count;
  return count;
}

EdgeId PufferInstance::edge_count() const {
  return pendant_begin_.back() + 2 * static_cast<EdgeId>(apexes_.size());
}

EdgeId PufferInstance::pendant_edge(int pos, int k) const { return pendant_begin_[idx(pos)] + k; }

EdgeId PufferInstance::apex_edge(int apex_index, int side) const {
  return pendant_begin_.back() + 2 * apex_index + side;
}

Graph PufferInstance::to_graph() const {
  const int n = length();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(idx(edge_count()));
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  VertexId next = n;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < pendants(i); ++k) pairs.emplace_back(i, next++);
  }
  for (int a : apexes_) {
    pairs.emplace_back(a, next);
    pairs.emplace_back((a + 1) % n, next);
    ++next;
  }
  return build_graph(pairs, next);
}

PufferInstance puffer_of_cycle(const Graph& g, std::span<const VertexId> cycle, const EdgeColouring* host_colouring) {
  const int n = static_cast<int>(cycle.size());
  if (n < 3) throw Error(ErrorCode::kNotInducedCycle, "cycle needs at least 3 vertices");
  std::unordered_map<VertexId, int> pos;
  pos.reserve(idx(n) * 2);
  for (int i = 0; i < n; ++i) {
    const VertexId v = cycle[idx(i)];
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorCode::kBadVertexIndex, "cycle vertex out of range");
    if (!pos.emplace(v, i).second) throw Error(ErrorCode::kNotInducedCycle, "cycle repeats a vertex");
  }
  std::vector<EdgeId> cycle_edges(idx(n));
  for (int i = 0; i < n; ++i) {
    auto e = g.find_edge(cycle[idx(i)], cycle[idx((i + 1) % n)]);
    if (!e) throw Error(ErrorCode::kNotInducedCycle, "consecutive cycle vertices are not adjacent");
    cycle_edges[idx(i)] = *e;
  }

  std::unordered_map<VertexId, std::vector<int>> touches;
  for (int i = 0; i < n; ++i) {
    const VertexId prev = cycle[idx((i + n - 1) % n)];
    const VertexId next = cycle[idx((i + 1) % n)];
    for (const auto& inc : g.incident(cycle[idx(i)])) {
      if (pos.count(inc.neighbour)) {
        if (inc.neighbour != prev && inc.neighbour != next) {
          throw Error(ErrorCode::kNotInducedCycle, "cycle has a chord");
        }
        continue;
      }
      touches[inc.neighbour].push_back(i);
    }
  }
  std::vector<std::pair<int, VertexId>> apex_list;  // (position, apex vertex)
  for (const auto& [w, where] : touches) {
    if (where.size() == 1) continue;
    if (where.size() > 2) throw Error(ErrorCode::kNotOuterplanar, "vertex sees three cycle vertices");
    const int a = where[0], b = where[1];
    int position;
    if (b == a + 1) {
      position = a;
    } else if (a == 0 && b == n - 1) {
      position = n - 1;
    } else {
      throw Error(ErrorCode::kNotOuterplanar, "vertex sees two non-consecutive cycle vertices");
    }
    apex_list.emplace_back(position, w);
  }
  std::sort(apex_list.begin(), apex_list.end());
  for (std::size_t i = 1; i < apex_list.size(); ++i) {
    if (apex_list[i].first == apex_list[i - 1].first) {
      throw Error(ErrorCode::kNotOuterplanar, "two common neighbours of one cycle edge");
    }
  }

  std::vector<int> pendant_count(idx(n), 0);
  std::vector<EdgeId> origin(cycle_edges);
  for (int i = 0; i < n; ++i) {
    for (const auto& inc : g.incident(cycle[idx(i)])) {
      if (pos.count(inc.neighbour)) continue;
      if (touches.at(inc.neighbour).size() != 1) continue;
      ++pendant_count[idx(i)];
      origin.push_back(inc.edge);
    }
  }
  std::vector<int> apex_positions;
  for (const auto& [position, w] : apex_list) {
    apex_positions.push_back(position);
    origin.push_back(*g.find_edge(cycle[idx(position)], w));
    origin.push_back(*g.find_edge(cycle[idx((position + 1) % n)], w));
  }

  PufferInstance p(std::vector<VertexId>(cycle.begin(), cycle.end()), std::move(pendant_count),
                   std::move(apex_positions));
  p.origin_edges = std::move(origin);
  if (host_colouring) {
    EdgeColouring pre(p.edge_count());
    bool any = false;
    for (EdgeId e = 0; e < p.edge_count(); ++e) {
      const Colour c = host_colouring->get(p.origin_edges[idx(e)]);
      if (c != kNoColour) {
        pre.set(e, c);
        any = true;
      }
    }
    if (any) p.base_precolouring = std::move(pre);
  }
  return p;
}

SplitPuffer split_apexes(const PufferInstance& p) {
  const int n = p.length();
  const auto& apexes = p.apexes();
  std::vector<int> counts(p.pendant_count());
  for (int a : apexes) {
    ++counts[idx(a)];
    ++counts[idx((a + 1) % n)];
  }
  SplitPuffer out{PufferInstance(p.cycle(), counts), {}};
  const PufferInstance& s = out.instance;
  auto& map = out.merge_map.split_to_original;
  map.assign(idx(s.edge_count()), -1);
  for (int i = 0; i < n; ++i) map[idx(i)] = i;
  // Pendant order at position i: original pendants, then the surrogate of the
  // apex on (i, i+1), then the surrogate of the apex on (i-1, i).
  std::vector<int> used(idx(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < p.pendants(i); ++k) map[idx(s.pendant_edge(i, k))] = p.pendant_edge(i, k);
    used[idx(i)] = p.pendants(i);
  }
  for (std::size_t k = 0; k < apexes.size(); ++k) {
    const int a = apexes[k];
    ApexSurrogates sur;
    sur.apex_position = a;
    sur.original = {p.apex_edge(static_cast<int>(k), 0), p.apex_edge(static_cast<int>(k), 1)};
    sur.surrogate[0] = s.pendant_edge(a, used[idx(a)]++);
    out.merge_map.apexes.push_back(sur);
  }
  for (std::size_t k = 0; k < apexes.size(); ++k) {
    const int b = (apexes[k] + 1) % n;
    out.merge_map.apexes[k].surrogate[1] = s.pendant_edge(b, used[idx(b)]++);
  }
  for (const auto& sur : out.merge_map.apexes) {
    map[idx(sur.surrogate[0])] = sur.original[0];
    map[idx(sur.surrogate[1])] = sur.original[1];
  }

  if (!p.origin_edges.empty()) {
    out.instance.origin_edges.resize(map.size());
    for (std::size_t e = 0; e < map.size(); ++e) out.instance.origin_edges[e] = p.origin_edges[idx(map[e])];
  }
  if (p.base_precolouring) {
    EdgeColouring pre(s.edge_count());
    for (std::size_t e = 0; e < map.size(); ++e) {
      pre.set(static_cast<EdgeId>(e), p.base_precolouring->get(map[e]));
    }
    out.instance.base_precolouring = std::move(pre);
  }
  return out;
}

}  // namespace strongcol
