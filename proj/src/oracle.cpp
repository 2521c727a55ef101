#include "strongcol/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "strongcol/error.hpp"

namespace strongcol {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

struct OutOfTime {};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(std::max(seconds, 0.0)))),
        expired_(seconds <= 0) {}

  // Polls the clock every 1024 calls.
  bool expired() {
    if (expired_) return true;
    if ((++ticks_ & 1023u) == 0 && Clock::now() >= end_) expired_ = true;
    return expired_;
  }
  void check() {
    if (expired()) throw OutOfTime{};
  }

 private:
  Clock::time_point end_;
  bool expired_;
  unsigned ticks_ = 0;
};

std::vector<std::vector<char>> matrix_of(const ConflictGraph& h) {
  std::vector<std::vector<char>> m(at(h.vertex_count), std::vector<char>(at(h.vertex_count), 0));
  for (int v = 0; v < h.vertex_count; ++v) {
    for (int w : h.adjacency[at(v)]) m[at(v)][at(w)] = 1;
  }
  return m;
}

// Branch and bound maximum clique with greedy colouring bounds. On timeout
// the best clique so far is kept; it is still a valid lower bound.
class CliqueSearch {
 public:
  CliqueSearch(const ConflictGraph& h, const std::vector<std::vector<char>>& m, Deadline& deadline)
      : h_(h), m_(m), deadline_(deadline) {}

  std::vector<int> run() {
    std::vector<int> all(at(h_.vertex_count));
    std::iota(all.begin(), all.end(), 0);
    std::stable_sort(all.begin(), all.end(), [&](int a, int b) {
      return h_.adjacency[at(a)].size() > h_.adjacency[at(b)].size();
    });
    std::vector<int> current;
    try {
      expand(current, all);
    } catch (const OutOfTime&) {
    }
    return best_;
  }

 private:
  void expand(std::vector<int>& current, const std::vector<int>& candidates) {
    deadline_.check();
    // Greedy colouring of the candidates gives an upper bound per prefix.
    std::vector<int> order;
    std::vector<int> bound;
    std::vector<std::vector<int>> classes;
    for (int v : candidates) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (int w : classes[k]) {
          if (m_[at(v)][at(w)]) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (int v : classes[k]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(k) + 1);
      }
    }
    std::vector<char> removed(order.size(), 0);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const int v = order[i];
      current.push_back(v);
      std::vector<int> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (m_[at(v)][at(order[j])]) next.push_back(order[j]);
      }
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
    }
  }

  const ConflictGraph& h_;
  const std::vector<std::vector<char>>& m_;
  Deadline& deadline_;
  std::vector<int> best_;
};

std::vector<int> dsatur_greedy(const ConflictGraph& h) {
  const int n = h.vertex_count;
  std::vector<int> colour(at(n), 0);
  std::vector<std::vector<char>> seen(at(n));
  std::vector<int> sat(at(n), 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[at(v)]) continue;
      if (pick == -1 || sat[at(v)] > sat[at(pick)] ||
          (sat[at(v)] == sat[at(pick)] && h.adjacency[at(v)].size() > h.adjacency[at(pick)].size())) {
        pick = v;
      }
    }
    int c = 1;
    while (c < static_cast<int>(seen[at(pick)].size()) && seen[at(pick)][at(c)]) ++c;
    colour[at(pick)] = c;
    for (int w : h.adjacency[at(pick)]) {
      auto& s = seen[at(w)];
      if (static_cast<int>(s.size()) <= c) s.resize(at(c) + 1, 0);
      if (!s[at(c)]) {
        s[at(c)] = 1;
        ++sat[at(w)];
      }
    }
  }
  return colour;
}

// Decides k-colourability of the conflict graph. The clique is fixed to
// colours 1..|clique|; new colours are opened in increasing order only.
class ColouringSearchEngine {
 public:
  ColouringSearchEngine(const ConflictGraph& h, int k, Deadline& deadline)
      : h_(h), k_(k), deadline_(deadline), colour_(at(h.vertex_count), 0),
        count_(at(h.vertex_count), std::vector<int>(at(k) + 1, 0)), sat_(at(h.vertex_count), 0) {}

  Feasibility run(const std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) > k_) return Feasibility::kInfeasible;
    int used = 0;
    for (int v : clique) {
      if (!assign(v, ++used)) return Feasibility::kInfeasible;
    }
    try {
      return search(static_cast<int>(clique.size()), used) ? Feasibility::kFound : Feasibility::kInfeasible;
    } catch (const OutOfTime&) {
      return Feasibility::kTimeout;
    }
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  // Returns false when some uncoloured neighbour has no colour left.
  bool assign(int v, int c) {
    colour_[at(v)] = c;
    bool ok = true;
    for (int w : h_.adjacency[at(v)]) {
      if (++count_[at(w)][at(c)] == 1) {
        ++sat_[at(w)];
        if (!colour_[at(w)] && sat_[at(w)] >= k_) ok = false;
      }
    }
    return ok;
  }

  void unassign(int v) {
    const int c = colour_[at(v)];
    colour_[at(v)] = 0;
    for (int w : h_.adjacency[at(v)]) {
      if (--count_[at(w)][at(c)] == 0) --sat_[at(w)];
    }
  }

  bool search(int coloured, int used) {
    if (coloured == h_.vertex_count) return true;
    deadline_.check();
    int pick = -1;
    for (int v = 0; v < h_.vertex_count; ++v) {
      if (colour_[at(v)]) continue;
      if (pick == -1 || sat_[at(v)] > sat_[at(pick)] ||
          (sat_[at(v)] == sat_[at(pick)] && h_.adjacency[at(v)].size() > h_.adjacency[at(pick)].size())) {
        pick = v;
      }
    }
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (count_[at(pick)][at(c)]) continue;
      const bool ok = assign(pick, c);
      if (ok && search(coloured + 1, std::max(used, c))) return true;
      unassign(pick);
    }
    return false;
  }

  const ConflictGraph& h_;
  int k_;
  Deadline& deadline_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> count_;
  std::vector<int> sat_;
};

EdgeColouring to_edge_colouring(const std::vector<int>& colours) {
  return EdgeColouring(std::vector<Colour>(colours.begin(), colours.end()));
}

}  // namespace

std::size_t ConflictGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adjacency) total += a.size();
  return total / 2;
}

bool ConflictGraph::adjacent(int a, int b) const {
  const auto& list = adjacency[at(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

ConflictGraph conflict_graph(const Graph& g) {
  ConflictGraph h;
  h.vertex_count = g.edge_count();
  h.adjacency.assign(at(h.vertex_count), {});
  std::vector<int> stamp(at(h.vertex_count), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto& list = h.adjacency[at(e)];
    stamp[at(e)] = e;
    auto touch = [&](VertexId x) {
      for (const auto& inc : g.incident(x)) {
        if (stamp[at(inc.edge)] != e) {
          stamp[at(inc.edge)] = e;
          list.push_back(inc.edge);
        }
      }
    };
    for (VertexId end : {g.edge(e).u, g.edge(e).v}) {
      touch(end);
      for (const auto& inc : g.incident(end)) touch(inc.neighbour);
    }
    std::sort(list.begin(), list.end());
  }
  return h;
}

ColouringSearch exact_colouring(const Graph& g, int k, double time_budget_s) {
  if (k < 1) throw Error(ErrorCode::kBadParameter, "colour count must be at least 1");
  ColouringSearch out;
  if (g.edge_count() == 0) {
    out.verdict = Feasibility::kFound;
    return out;
  }
  Deadline deadline(time_budget_s);
  const ConflictGraph h = conflict_graph(g);
  const auto greedy = dsatur_greedy(h);
  if (*std::max_element(greedy.begin(), greedy.end()) <= k) {
    out.verdict = Feasibility::kFound;
    out.colouring = to_edge_colouring(greedy);
    return out;
  }
  const auto m = matrix_of(h);
  const auto clique = CliqueSearch(h, m, deadline).run();
  ColouringSearchEngine engine(h, k, deadline);
  out.verdict = engine.run(clique);
  if (out.verdict == Feasibility::kFound) out.colouring = to_edge_colouring(engine.colours());
  return out;
}

ExactResult exact_sci(const Graph& g, int max_colours, double time_budget_s) {
  ExactResult r;
  if (g.edge_count() == 0) return r;
  Deadline deadline(time_budget_s);
  r.lower = edge_degree_lower_bound(g);
  if (deadline.expired()) {
    r.status = SearchStatus::kTimeout;
    r.upper = g.edge_count();
    return r;
  }
  const ConflictGraph h = conflict_graph(g);
  const auto greedy = dsatur_greedy(h);
  r.upper = *std::max_element(greedy.begin(), greedy.end());
  r.colouring = to_edge_colouring(greedy);

  std::vector<int> clique;
  if (r.lower < r.upper && !deadline.expired()) {
    const auto m = matrix_of(h);
    clique = CliqueSearch(h, m, deadline).run();
    r.lower = std::max(r.lower, static_cast<int>(clique.size()));
  }
  while (r.lower < r.upper && r.lower <= max_colours) {
    ColouringSearchEngine engine(h, r.lower, deadline);
    const Feasibility f = engine.run(clique);
    if (f == Feasibility::kTimeout) {
      r.status = SearchStatus::kTimeout;
      return r;
    }
    if (f == Feasibility::kFound) {
      r.upper = r.lower;
      r.colouring = to_edge_colouring(engine.colours());
      break;
    }
    ++r.lower;
  }
  if (r.lower > max_colours) {
    r.status = SearchStatus::kAboveCap;
    return r;
  }
  r.status = SearchStatus::kExact;
  r.value = r.upper;
  return r;
}

int sci_by_partitions(const Graph& g) {
  const int m = g.edge_count();
  if (m == 0) return 0;
  const ConflictGraph h = conflict_graph(g);
  const auto conflict = matrix_of(h);
  int best = m;
  std::vector<std::vector<int>> classes;
  std::function<void(int)> place = [&](int e) {
    if (static_cast<int>(classes.size()) >= best) return;
    if (e == m) {
      best = static_cast<int>(classes.size());
      return;
    }
    // by index: deeper calls may grow `classes`
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& cls = classes[c];
      const bool free = std::none_of(cls.begin(), cls.end(), [&](int f) { return conflict[at(e)][at(f)]; });
      if (!free) continue;
      classes[c].push_back(e);
      place(e + 1);
      classes[c].pop_back();
    }
    classes.push_back({e});
    place(e + 1);
    classes.pop_back();
  };
  place(0);
  return best;
}

}  // namespace strongcol
