#include <algorithm>
#include <bit>
#include <climits>

#include "strongcol/error.hpp"
#include "strongcol/puffer.hpp"

namespace strongcol {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Fresh colour sets S_i with |S_i| = f_i, consecutive sets disjoint, drawn
// from `fresh`. Even cycles split the palette from both ends; odd cycles
// track how much of S_s each set reuses, s being a position of least demand.
std::optional<std::vector<std::vector<Colour>>> assign_fresh(const std::vector<int>& f,
                                                             const std::vector<Colour>& fresh) {
  const int n = static_cast<int>(f.size());
  const int F = static_cast<int>(fresh.size());
  std::vector<std::vector<Colour>> out(at(n));
  for (int i = 0; i < n; ++i) {
    if (f[at(i)] + f[at((i + 1) % n)] > F) return std::nullopt;
  }
  if (n % 2 == 0) {
    for (int i = 0; i < n; ++i) {
      const int cnt = f[at(i)];
      if (i % 2 == 0) {
        out[at(i)].assign(fresh.begin(), fresh.begin() + cnt);
      } else {
        out[at(i)].assign(fresh.end() - cnt, fresh.end());
      }
    }
    return out;
  }

  const int s = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
  const int P = f[at(s)];
  const int Q = F - P;
  auto fpos = [&](int t) { return f[at((s + t) % n)]; };
  // from[t][a]: a predecessor count for a_t = a, or -1 when unreachable.
  std::vector<std::vector<int>> from(at(n), std::vector<int>(at(P) + 1, -1));
  from[0][at(P)] = P;
  for (int t = 1; t < n; ++t) {
    const int ft = fpos(t);
    const int fp = fpos(t - 1);
    for (int ap = 0; ap <= P; ++ap) {
      if (from[at(t - 1)][at(ap)] == -1) continue;
      const int bp = fp - ap;
      const int lo = std::max(0, ft - (Q - bp));
      int hi = std::min(ft, P - ap);
      if (t == n - 1) hi = std::min(hi, 0);
      for (int a = lo; a <= hi; ++a) {
        if (ft - a > Q) continue;
        if (from[at(t)][at(a)] == -1) from[at(t)][at(a)] = ap;
      }
    }
  }
  int a_last = -1;
  for (int a = 0; a <= P; ++a) {
    if (from[at(n - 1)][at(a)] != -1) {
      a_last = a;
      break;
    }
  }
  if (a_last == -1) return std::nullopt;
  std::vector<int> a(at(n));
  a[at(n - 1)] = a_last;
  for (int t = n - 1; t >= 1; --t) a[at(t - 1)] = from[at(t)][at(a[at(t)])];

  const std::vector<Colour> pool_p(fresh.begin(), fresh.begin() + P);
  const std::vector<Colour> pool_q(fresh.begin() + P, fresh.end());
  std::vector<Colour> prev(pool_p);
  out[at(s)] = pool_p;
  for (int t = 1; t < n; ++t) {
    std::vector<Colour> cur;
    auto take = [&](const std::vector<Colour>& pool, int count) {
      for (Colour c : pool) {
        if (count == 0) break;
        if (std::find(prev.begin(), prev.end(), c) != prev.end()) continue;
        cur.push_back(c);
        --count;
      }
    };
    take(pool_p, a[at(t)]);
    take(pool_q, fpos(t) - a[at(t)]);
    out[at((s + t) % n)] = cur;
    prev = std::move(cur);
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::vector<Colour>>> complete_pendants(const std::vector<Colour>& cycle_colours,
                                                                   const std::vector<int>& demand, int palette) {
  const int n = static_cast<int>(cycle_colours.size());
  if (n < 3 || demand.size() != cycle_colours.size()) {
    throw Error(ErrorCode::kBadParameter, "cycle colours and demands must describe the same cycle");
  }
  std::vector<Colour> used(cycle_colours);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used.front() < 1) throw Error(ErrorCode::kBadParameter, "cycle colour below 1");
  if (used.back() > palette) return std::nullopt;
  const int c = static_cast<int>(used.size());
  if (c > 20) return std::nullopt;
  const int F = palette - c;
  auto bit = [&](Colour col) {
    return 1u << static_cast<unsigned>(std::lower_bound(used.begin(), used.end(), col) - used.begin());
  };
  auto wrap = [n](int i) { return ((i % n) + n) % n; };

  // Candidate reuse sets T_i of cycle colours per position.
  const unsigned full = (1u << static_cast<unsigned>(c)) - 1;
  std::vector<std::vector<unsigned>> states(at(n));
  for (int i = 0; i < n; ++i) {
    unsigned forbidden = 0;
    for (int e : {i - 2, i - 1, i, i + 1}) forbidden |= bit(cycle_colours[at(wrap(e))]);
    const unsigned allowed = full & ~forbidden;
    const int d = demand[at(i)];
    for (unsigned t = allowed;; t = (t - 1) & allowed) {
      const int size = std::popcount(t);
      if (size <= d && d - size <= F) states[at(i)].push_back(t);
      if (t == 0) break;
    }
    if (states[at(i)].empty()) return std::nullopt;
  }
  auto fresh_need = [&](int i, unsigned t) { return demand[at(i)] - std::popcount(t); };
  auto compatible = [&](int i, unsigned ti, int j, unsigned tj) {
    return (ti & tj) == 0 && fresh_need(i, ti) + fresh_need(j, tj) <= F;
  };

  // Cyclic DP minimising total fresh demand.
  int best_total = INT_MAX;
  std::vector<unsigned> best_choice;
  for (unsigned t0 : states[0]) {
    std::vector<std::vector<int>> cost(at(n));
    std::vector<std::vector<int>> parent(at(n));
    cost[0] = {fresh_need(0, t0)};
    std::vector<unsigned> layer0{t0};
    std::vector<const std::vector<unsigned>*> layers(at(n));
    layers[0] = &layer0;
    for (int i = 1; i < n; ++i) layers[at(i)] = &states[at(i)];
    bool alive = true;
    for (int i = 1; i < n && alive; ++i) {
      const auto& cur = *layers[at(i)];
      const auto& prv = *layers[at(i - 1)];
      cost[at(i)].assign(cur.size(), INT_MAX);
      parent[at(i)].assign(cur.size(), -1);
      alive = false;
      for (std::size_t x = 0; x < cur.size(); ++x) {
        for (std::size_t y = 0; y < prv.size(); ++y) {
          if (cost[at(i - 1)][y] == INT_MAX || !compatible(i - 1, prv[y], i, cur[x])) continue;
          const int total = cost[at(i - 1)][y] + fresh_need(i, cur[x]);
          if (total < cost[at(i)][x]) {
            cost[at(i)][x] = total;
            parent[at(i)][x] = static_cast<int>(y);
            alive = true;
          }
        }
      }
    }
    if (!alive) continue;
    const auto& last = *layers[at(n - 1)];
    for (std::size_t x = 0; x < last.size(); ++x) {
      if (cost[at(n - 1)][x] == INT_MAX || !compatible(n - 1, last[x], 0, t0)) continue;
      if (cost[at(n - 1)][x] < best_total) {
        best_total = cost[at(n - 1)][x];
        best_choice.assign(at(n), 0);
        int idx = static_cast<int>(x);
        for (int i = n - 1; i >= 0; --i) {
          best_choice[at(i)] = (*layers[at(i)])[at(idx)];
          if (i > 0) idx = parent[at(i)][at(idx)];
        }
      }
    }
  }
  if (best_choice.empty()) return std::nullopt;
  if (n % 2 == 1 && static_cast<long long>(best_total) > static_cast<long long>(F) * ((n - 1) / 2)) return std::nullopt;

  std::vector<int> f(at(n));
  for (int i = 0; i < n; ++i) f[at(i)] = fresh_need(i, best_choice[at(i)]);
  std::vector<Colour> fresh;
  for (Colour col = 1; col <= palette; ++col) {
    if (!std::binary_search(used.begin(), used.end(), col)) fresh.push_back(col);
  }
  auto sets = assign_fresh(f, fresh);
  if (!sets) return std::nullopt;

  std::vector<std::vector<Colour>> out(at(n));
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < c; ++b) {
      if (best_choice[at(i)] & (1u << static_cast<unsigned>(b))) out[at(i)].push_back(used[at(b)]);
    }
    out[at(i)].insert(out[at(i)].end(), (*sets)[at(i)].begin(), (*sets)[at(i)].end());
  }
  return out;
}

}  // namespace strongcol
