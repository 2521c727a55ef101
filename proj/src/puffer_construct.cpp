#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "strongcol/error.hpp"
#include "strongcol/oracle.hpp"
#include "strongcol/puffer.hpp"
#include "puffer_internal.hpp"

namespace strongcol {

std::string_view to_string(ConstructionRoute r) {
  switch (r) {
    case ConstructionRoute::kLemma:
      return "lemma";
    case ConstructionRoute::kPendantSearch:
      return "pendant-search";
    case ConstructionRoute::kExactSearch:
      return "exact-search";
    case ConstructionRoute::kOverBound:
      return "over-bound";
  }
  return "unknown";
}

namespace detail {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::vector<Colour> range(Colour from, int count) {
  std::vector<Colour> out;
  for (int i = 0; i < count; ++i) out.push_back(from + i);
  return out;
}

std::vector<Colour> repeat123(int len) {
  std::vector<Colour> out;
  for (int i = 0; i < len; ++i) out.push_back(i % 3 + 1);
  return out;
}

std::vector<Colour> concat(std::vector<Colour> a, std::initializer_list<Colour> b) {
  a.insert(a.end(), b);
  return a;
}

// Incremental frame colouring. Every colour placed is permissible, so the
// partial result is always strong; only completeness can fail.
class Builder {
 public:
  Builder(const PufferInstance& p, int start, int direction, int limit) : n_(p.length()), limit_(limit) {
    f_.start = start;
    f_.direction = direction;
    f_.cycle.assign(at(n_), kNoColour);
    f_.pendants.assign(at(n_), {});
    demand_.resize(at(n_));
    seen_.assign(at(n_), std::vector<char>(at(std::max(limit, 0) + 1), 0));
    for (int k = 0; k < n_; ++k) demand_[at(k)] = p.pendants(position(k));
  }

  int n() const { return n_; }
  int position(int k) const { return wrap(f_.start + f_.direction * k); }
  int demand(int k) const { return demand_[at(wrap(k))]; }
  int deficit(int k) const { return demand(k) - static_cast<int>(f_.pendants[at(wrap(k))].size()); }

  void set_cycle(std::vector<Colour> colours) { f_.cycle = std::move(colours); }

  // Cycle edges k-1..k+1 greedily, smallest colour clear of edges within two
  // steps that are already coloured.
  void greedy_cycle() {
    for (int k = 0; k < n_; ++k) {
      for (Colour c = 1;; ++c) {
        bool ok = true;
        for (int e = k - 2; e <= k + 2; ++e) {
          if (wrap(e) != k && f_.cycle[at(wrap(e))] == c) ok = false;
        }
        if (ok) {
          f_.cycle[at(k)] = c;
          break;
        }
      }
    }
  }

  bool blocked(int k, Colour c) const {
    for (int e : {k - 2, k - 1, k, k + 1}) {
      if (f_.cycle[at(wrap(e))] == c) return true;
    }
    for (int q : {k - 1, k, k + 1}) {
      if (seen_[at(wrap(q))][at(c)]) return true;
    }
    return false;
  }

  void fill(int k, const std::vector<Colour>& palette, int max_take = INT_MAX) {
    k = wrap(k);
    int taken = 0;
    for (Colour c : palette) {
      if (deficit(k) == 0 || taken >= max_take) break;
      if (c < 1 || c > limit_ || blocked(k, c)) continue;
      f_.pendants[at(k)].push_back(c);
      seen_[at(k)][at(c)] = 1;
      ++taken;
    }
  }

  void fill_all(const std::vector<Colour>& palette) {
    for (int k = 0; k < n_; ++k) fill(k, palette);
  }

  FrameColouring finish() {
    fill_all(range(1, limit_));
    f_.complete = true;
    for (int k = 0; k < n_; ++k) {
      if (deficit(k) != 0) f_.complete = false;
    }
    for (Colour c : f_.cycle) {
      if (c < 1 || c > limit_) f_.complete = false;
    }
    return f_;
  }

 private:
  int wrap(int i) const { return ((i % n_) + n_) % n_; }

  int n_;
  int limit_;
  FrameColouring f_;
  std::vector<int> demand_;
  std::vector<std::vector<char>> seen_;
};

int frame_index(const Builder& b, int position) {
  for (int k = 0; k < b.n(); ++k) {
    if (b.position(k) == position) return k;
  }
  return -1;
}

FrameColouring even_case(const PufferInstance& p, const PufferCase& c, const BoundReport& r) {
  const int n = p.length();
  Builder b(p, r.witness.u, r.witness.direction, r.value);
  const int du = p.degree(r.witness.u);
  const int dv = p.degree(r.witness.v);
  int cyc = 3, a_size = du - 2, cyc_take = 0;
  if (c.subcase == Subcase::kA) {
    b.set_cycle(repeat123(n));
  } else if (c.subcase == Subcase::kB) {
    b.set_cycle(concat(repeat123(n - 4), {4, 3, 2, 4}));
    cyc = 4;
    a_size = du - 3;
    cyc_take = 1;
  } else {
    b.set_cycle(concat(repeat123(n - 6), {5, 3, 4, 5, 2, 4}));
    cyc = 5;
    a_size = du - 4;
    cyc_take = 2;
  }
  const auto cycle_palette = range(1, cyc);
  const auto A = range(cyc + 1, std::max(a_size, 0));
  const auto B = range(cyc + 1 + std::max(a_size, 0), std::max(dv - 2, 0));
  if (cyc_take > 0) {
    for (int k = 0; k < n; k += 2) b.fill(k, cycle_palette, cyc_take);
  }
  for (int k = 0; k < n; k += 2) b.fill(k, A);
  for (int k = 1; k < n; k += 2) b.fill(k, B);
  for (int k = 0; k < n; k += 2) b.fill(k, B);
  for (int k = 1; k < n; k += 2) b.fill(k, A);
  b.fill_all(cycle_palette);
  return b.finish();
}

FrameColouring odd_case(const PufferInstance& p, const PufferCase& c, const BoundReport& r) {
  const int n = p.length();
  Builder b(p, (*r.witness.xyz)[0], r.witness.direction, r.value);
  const int iu = frame_index(b, r.witness.u);
  const int iv = frame_index(b, r.witness.v);
  // Classes after merging v1 into v2: frame 0 and odd frame indices form the
  // even class, even frame indices from 2 on form the odd class.
  auto in_even_class = [](int k) { return k == 0 || k % 2 == 1; };
  const int w_even = in_even_class(iu) ? iu : iv;
  const int w_odd = in_even_class(iu) ? iv : iu;
  const int d_even = p.degree(b.position(w_even));
  const int d_odd = p.degree(b.position(w_odd));

  int cyc = 3, b_size = d_even - 2, cyc_take = 0;
  if (c.subcase == Subcase::kA) {
    b.set_cycle(repeat123(n));
  } else if (c.subcase == Subcase::kB) {
    b.set_cycle(concat(repeat123(n - 6), {4, 1, 3, 4, 2, 3}));
    cyc = 4;
    b_size = d_even - 3;
    cyc_take = 1;
  } else {
    if (n == 7) {
      b.set_cycle({5, 1, 4, 5, 3, 4, 2});
    } else {
      b.set_cycle(concat(repeat123(n - 8), {5, 1, 4, 5, 3, 4, 2, 3}));
    }
    cyc = 5;
    b_size = d_even - 4;
    cyc_take = 2;
  }
  const int eta = r.eta.value_or(0);
  const auto cycle_palette = range(1, cyc);
  const auto A = range(cyc + 1, std::max(d_odd - 2, 0));
  const auto B = range(cyc + 1 + std::max(d_odd - 2, 0), std::max(b_size, 0));
  const auto E = range(cyc + 1 + std::max(d_odd - 2, 0) + std::max(b_size, 0), eta);

  if (cyc_take > 0) {
    for (int k = 1; k < n; k += 2) b.fill(k, cycle_palette, cyc_take);
  }
  b.fill(0, E);
  b.fill(2, E);
  for (int k = 0; k < n; ++k) b.fill(k, in_even_class(k) ? B : A);
  for (int k = 0; k < n; ++k) b.fill(k, in_even_class(k) ? A : B);
  b.fill_all(cycle_palette);
  return b.finish();
}

FrameColouring heavy_five(const PufferInstance& p, const BoundReport& r) {
  Builder b(p, r.witness.u, r.witness.direction, r.value);
  b.set_cycle({1, 2, 3, 4, 5});
  const auto cycle_palette = range(1, 5);
  for (int k = 0; k < 5; ++k) b.fill(k, cycle_palette, 1);
  const int du = p.degree(r.witness.u);
  const int dv = p.degree(r.witness.v);
  const auto A = range(6, std::max(du - 3, 0));
  const auto B = range(6 + std::max(du - 3, 0), std::max(dv - 3, 0));
  const auto E = range(6 + std::max(du - 3, 0) + std::max(dv - 3, 0), r.eta.value_or(0));
  b.fill(2, E);
  b.fill(4, E);
  b.fill(0, A);
  b.fill(1, B);
  b.fill(2, A);
  b.fill(4, B);
  b.fill(3, A);
  b.fill(3, B);
  return b.finish();
}

}  // namespace

FrameColouring lemma_construction(const PufferInstance& p, const PufferCase& c, const BoundReport& r) {
  const int n = p.length();
  switch (c.tag) {
    case PufferTag::kTriangle: {
      Builder b(p, 0, 1, r.value);
      b.set_cycle({1, 2, 3});
      Colour next = 4;
      for (int k = 0; k < 3; ++k) {
        b.fill(k, range(next, b.demand(k)));
        next += b.demand(k);
      }
      return b.finish();
    }
    case PufferTag::kFourCycle:
    case PufferTag::kFiveCycleSparse:
    case PufferTag::kFiveCycleLight: {
      Builder b(p, r.witness.u, 1, r.value);
      b.greedy_cycle();
      return b.finish();
    }
    case PufferTag::kBareFiveCycle: {
      Builder b(p, 0, 1, r.value);
      b.set_cycle({1, 2, 3, 4, 5});
      return b.finish();
    }
    case PufferTag::kFiveCycleHeavy:
      return heavy_five(p, r);
    case PufferTag::kBareCycle: {
      Builder b(p, 0, 1, r.value);
      if (n % 3 == 0) {
        b.set_cycle(repeat123(n));
      } else if (n % 3 == 1) {
        std::vector<Colour> cyc{4};
        const auto rest = repeat123(n - 1);
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        b.set_cycle(cyc);
      } else {
        std::vector<Colour> cyc{4, 1, 2, 3, 4};
        const auto rest = repeat123(n - 5);
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        b.set_cycle(cyc);
      }
      return b.finish();
    }
    case PufferTag::kEvenCycle:
      return even_case(p, c, r);
    case PufferTag::kOddCycle:
      return odd_case(p, c, r);
  }
  throw Error(ErrorCode::kInternal, "unhandled puffer case");
}

EdgeColouring to_instance_colouring(const PufferInstance& p, const FrameColouring& f) {
  const int n = p.length();
  EdgeColouring out(p.edge_count());
  auto pos = [&](int k) { return (((f.start + f.direction * k) % n) + n) % n; };
  for (int k = 0; k < n; ++k) {
    const int edge_pos = f.direction == 1 ? pos(k) : pos(k + 1);
    out.set(p.cycle_edge(edge_pos), f.cycle[at(k)]);
    const auto& list = f.pendants[at(k)];
    for (std::size_t i = 0; i < list.size(); ++i) out.set(p.pendant_edge(pos(k), static_cast<int>(i)), list[i]);
  }
  return out;
}

}  // namespace detail

namespace {

// Renames colours so precoloured edges keep their colours; the remaining
// colours become the smallest integers the precolouring does not use.
EdgeColouring respect_precolouring(const EdgeColouring& pre, const EdgeColouring& col) {
  std::map<Colour, Colour> rename;
  std::map<Colour, Colour> reverse;
  for (EdgeId e = 0; e < pre.size(); ++e) {
    if (!pre.coloured(e)) continue;
    const Colour from = col[e];
    const Colour to = pre[e];
    const auto a = rename.find(from);
    const auto b = reverse.find(to);
    if ((a != rename.end() && a->second != to) || (b != reverse.end() && b->second != from)) {
      throw Error(ErrorCode::kBadParameter,
                  "precoloured edges must be pairwise within distance one and distinctly coloured");
    }
    rename[from] = to;
    reverse[to] = from;
  }
  std::set<Colour> rest;
  for (Colour c : col.values()) {
    if (c != kNoColour && !rename.count(c)) rest.insert(c);
  }
  Colour candidate = 1;
  for (Colour c : rest) {
    while (reverse.count(candidate)) ++candidate;
    rename[c] = candidate++;
  }
  EdgeColouring out(col.size());
  for (EdgeId e = 0; e < col.size(); ++e) out.set(e, rename.at(col[e]));
  return out;
}

}  // namespace

PufferColouring colour_puffer(const PufferInstance& p, const PufferCase& c, const ColourPufferOptions& options) {
  const auto ev = detail::evaluate(p);
  if (!(ev.pc == c)) throw Error(ErrorCode::kBadParameter, "case " + c.label() + " does not match the instance");
  const Graph g = p.to_graph();
  const int K = ev.report.value;

  PufferColouring out;
  out.puffer_case = c;
  out.bound = ev.report;

  auto accept = [&](const EdgeColouring& col, ConstructionRoute route, int cap) {
    if (!col.is_total() || col.num_colours() > cap) return false;
    if (!verify_strong(g, col).valid) return false;
    out.colouring = col;
    out.route = route;
    return true;
  };

  detail::FrameColouring frame = detail::lemma_construction(p, c, ev.report);
  bool done = frame.complete && accept(detail::to_instance_colouring(p, frame), ConstructionRoute::kLemma, K);

  const int n = p.length();
  std::vector<int> demand(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) demand[static_cast<std::size_t>(k)] = p.pendants(((frame.start + frame.direction * k) % n + n) % n);
  auto with_pendants = [&](int palette) -> std::optional<EdgeColouring> {
    auto pend = complete_pendants(frame.cycle, demand, palette);
    if (!pend) return std::nullopt;
    detail::FrameColouring f = frame;
    f.pendants = std::move(*pend);
    return detail::to_instance_colouring(p, f);
  };

  if (!done) {
    if (auto col = with_pendants(K)) done = accept(*col, ConstructionRoute::kPendantSearch, K);
  }
  if (!done && options.allow_exact_search) {
    for (int cap : {K, K + 1}) {
      const auto search = exact_colouring(g, cap, options.exact_time_budget_s);
      if (search.verdict == Feasibility::kFound) {
        done = accept(search.colouring, cap == K ? ConstructionRoute::kExactSearch : ConstructionRoute::kOverBound, cap);
        if (done) break;
      }
    }
  }
  if (!done) {
    int max_demand = 0;
    for (int d : demand) max_demand = std::max(max_demand, d);
    for (int palette = K + 1; palette <= K + 2 * max_demand + 8 && !done; ++palette) {
      if (auto col = with_pendants(palette)) done = accept(*col, ConstructionRoute::kOverBound, INT_MAX);
    }
  }
  if (!done) throw Error(ErrorCode::kInternal, "no strong colouring found for a puffer instance");

  if (p.base_precolouring) out.colouring = respect_precolouring(*p.base_precolouring, out.colouring);
  out.colours_used = out.colouring.num_colours();
  if (out.route != ConstructionRoute::kLemma && options.on_fallback) options.on_fallback(p, out);
  return out;
}

EdgeColouring merge_apex_colours(const PufferInstance& original, const EdgeColouring& split_colouring,
                                 const ApexMergeMap& map) {
  if (split_colouring.size() != static_cast<EdgeId>(map.split_to_original.size())) {
    throw Error(ErrorCode::kBadParameter, "split colouring does not match the merge map");
  }
  for (const auto& sur : map.apexes) {
    const Colour a = split_colouring[sur.surrogate[0]];
    const Colour b = split_colouring[sur.surrogate[1]];
    if (a == b) {
      throw Error(ErrorCode::kMergeConflict,
                  "apex surrogates at position " + std::to_string(sur.apex_position) + " share colour " + std::to_string(a));
    }
  }
  EdgeColouring out(original.edge_count());
  for (std::size_t e = 0; e < map.split_to_original.size(); ++e) {
    out.set(map.split_to_original[e], split_colouring[static_cast<EdgeId>(e)]);
  }
  return out;
}

PufferColouring colour_puffer(const PufferInstance& p, const ColourPufferOptions& options) {
  if (p.normalised()) return colour_puffer(p, classify(p), options);
  const SplitPuffer split = split_apexes(p);
  PufferColouring out = colour_puffer(split.instance, classify(split.instance), options);
  out.colouring = merge_apex_colours(p, out.colouring, split.merge_map);
  out.colours_used = out.colouring.num_colours();
  return out;
}

}  // namespace strongcol
