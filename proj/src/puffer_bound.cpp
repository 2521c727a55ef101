#include <algorithm>
#include <tuple>

#include "strongcol/error.hpp"
#include "strongcol/puffer.hpp"
#include "puffer_internal.hpp"

namespace strongcol {

std::string PufferCase::label() const {
  std::string s = std::to_string(static_cast<int>(tag));
  switch (subcase) {
    case Subcase::kA:
      return s + "a";
    case Subcase::kB:
      return s + "b";
    case Subcase::kC:
      return s + "c";
    case Subcase::kNone:
      break;
  }
  return s;
}

std::string_view to_string(Exactness e) { return e == Exactness::kExact ? "exact" : "upper"; }

namespace detail {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

struct Candidate {
  PufferCase pc;
  BoundReport report;
  int du = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  const bool ea = a.report.exactness == Exactness::kExact;
  const bool eb = b.report.exactness == Exactness::kExact;
  return std::make_tuple(a.report.value, !ea, -a.du) < std::make_tuple(b.report.value, !eb, -b.du);
}

// Consecutive frame pair (k, k+1), k odd for the even case and even for the
// odd case, summing to S, other than the pair {u, v}.
bool has_twin(const std::vector<int>& fd, int S, int parity, std::pair<int, int> uv_frame, auto light) {
  const int n = static_cast<int>(fd.size());
  for (int k = parity; k < n; k += 2) {
    const int k1 = (k + 1) % n;
    if ((k == uv_frame.first && k1 == uv_frame.second) || (k == uv_frame.second && k1 == uv_frame.first)) continue;
    if (fd[static_cast<std::size_t>(k)] + fd[static_cast<std::size_t>(k1)] == S && light(fd[static_cast<std::size_t>(k1)])) {
      return true;
    }
  }
  return false;
}

Evaluation evaluate_even(const PufferInstance& p, const std::vector<int>& d, int S) {
  const int n = p.length();
  PufferCase base;
  base.tag = PufferTag::kEvenCycle;
  base.subcase = n % 3 == 0 ? Subcase::kA : (n % 3 == 2 ? Subcase::kB : Subcase::kC);
  const bool low = std::all_of(d.begin(), d.end(), [](int x) { return x <= 3; });

  std::optional<Candidate> best;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (d[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(j)] != S) continue;
    for (int dir : {1, -1}) {
      const int u = dir == 1 ? i : j;
      const int v = dir == 1 ? j : i;
      if (d[static_cast<std::size_t>(u)] < 3) continue;
      std::vector<int> fd(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) fd[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(wrap(u + dir * k, n))];
      Candidate c;
      c.pc = base;
      c.du = d[static_cast<std::size_t>(u)];
      c.report.witness = Witness{u, v, std::nullopt, dir};
      c.report.value = S - 1;
      c.report.exactness = Exactness::kExact;
      const std::pair<int, int> uv{0, 1};
      if (base.subcase == Subcase::kA) {
        c.report.branch = "8a";
      } else if (base.subcase == Subcase::kB) {
        c.pc.twin_pair = has_twin(fd, S, 1, uv, [](int x) { return x == 2; });
        if (c.pc.twin_pair) {
          c.report.value = S;
          c.report.exactness = Exactness::kUpper;
          c.report.branch = "8b.twin";
        } else {
          c.report.branch = "8b";
        }
      } else {
        c.pc.low_degree = low;
        c.pc.twin_pair = has_twin(fd, S, 1, uv, [](int x) { return x <= 3; });
        if (low) {
          c.report.value = S;
          c.report.exactness = Exactness::kUpper;
          c.report.branch = "8c.low";
        } else if (c.pc.twin_pair) {
          c.report.value = S;
          c.report.exactness = Exactness::kUpper;
          c.report.branch = "8c.twin";
        } else {
          c.report.branch = "8c";
        }
      }
      if (!best || better(c, *best)) best = c;
    }
  }
  if (!best) throw Error(ErrorCode::kInternal, "no maximising cycle edge carries pendants");
  return Evaluation{best->pc, best->report};
}

Evaluation evaluate_odd(const PufferInstance& p, const std::vector<int>& d, int S) {
  const int n = p.length();
  PufferCase base;
  base.tag = PufferTag::kOddCycle;
  base.subcase = n % 3 == 0 ? Subcase::kA : (n % 3 == 2 ? Subcase::kB : Subcase::kC);
  base.seven_cycle = n == 7;
  const bool low = std::all_of(d.begin(), d.end(), [](int x) { return x <= 3; });

  std::optional<Candidate> best;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (d[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(j)] != S) continue;
    // Light triples avoiding u and v.
    int T = -1;
    std::vector<int> starts;
    for (int s = 0; s < n; ++s) {
      bool clash = false;
      int sum = 0;
      for (int t = 0; t < 3; ++t) {
        const int q = (s + t) % n;
        if (q == i || q == j) clash = true;
        sum += d[static_cast<std::size_t>(q)];
      }
      if (clash) continue;
      if (T == -1 || sum < T) {
        T = sum;
        starts.clear();
      }
      if (sum == T) starts.push_back(s);
    }
    for (int s : starts) {
      for (int dir : {1, -1}) {
        const int x = dir == 1 ? s : (s + 2) % n;
        std::vector<int> fd(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) fd[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(wrap(x + dir * k, n))];
        const int iu = wrap((i - x) * dir, n);
        const int iv = wrap((j - x) * dir, n);

        Candidate c;
        c.pc = base;
        c.pc.surplus = S < T - 2;
        c.pc.low_degree = low;
        c.du = std::max(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
        c.report.witness = Witness{i, j, std::array<int, 3>{x, (s + 1) % n, dir == 1 ? (s + 2) % n : s}, dir};
        const int eta = c.pc.surplus ? (T - S - 2 + 1) / 2 : 0;
        if (c.pc.surplus) c.report.eta = eta;
        const std::pair<int, int> uv{iu, iv};
        auto set = [&](int value, Exactness ex, const char* branch) {
          c.report.value = value;
          c.report.exactness = ex;
          c.report.branch = branch;
        };
        if (base.subcase == Subcase::kA) {
          if (!c.pc.surplus) {
            set(S - 1, Exactness::kExact, "9a");
          } else {
            set(S - 1 + eta, Exactness::kUpper, "9a.eta");
          }
        } else if (base.subcase == Subcase::kB) {
          c.pc.twin_pair = has_twin(fd, S, 0, uv, [](int q) { return q == 2; });
          if (c.pc.surplus) {
            set(S - 1 + eta, Exactness::kUpper, "9b.eta");
          } else if (c.pc.twin_pair) {
            set(S, Exactness::kUpper, "9b.twin");
          } else {
            set(S - 1, Exactness::kExact, "9b");
          }
        } else {
          const bool twin_le3 = has_twin(fd, S, 0, uv, [](int q) { return q <= 3; });
          const bool twin_eq3 = has_twin(fd, S, 0, uv, [](int q) { return q == 3; });
          if (low) {
            set(S, Exactness::kUpper, "9c.low");
          } else if (!c.pc.surplus && twin_le3) {
            c.pc.twin_pair = true;
            set(S, Exactness::kUpper, "9c.twin");
          } else if (!c.pc.surplus) {
            set(S - 1, Exactness::kExact, "9c");
          } else if (twin_eq3) {
            c.pc.twin_pair = true;
            set(S + eta, Exactness::kUpper, "9c.eta.twin");
          } else {
            set(S - 1 + eta, Exactness::kUpper, "9c.eta");
          }
          if (c.pc.seven_cycle) {
            c.report.value += 1;
            c.report.exactness = Exactness::kUpper;
            c.report.branch += ".seven";
          }
        }
        if (!best || better(c, *best)) best = c;
      }
    }
  }
  if (!best) throw Error(ErrorCode::kInternal, "no maximising cycle edge found");
  return Evaluation{best->pc, best->report};
}

}  // namespace

Evaluation evaluate(const PufferInstance& p) {
  if (!p.normalised()) throw Error(ErrorCode::kBadParameter, "classification needs an instance without apexes");
  const int n = p.length();
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = p.degree(i);
  const bool bare = std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });

  int S = 0, su = 0;
  for (int i = 0; i < n; ++i) {
    const int s = d[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>((i + 1) % n)];
    if (s > S) {
      S = s;
      su = i;
    }
  }
  const int sv = (su + 1) % n;

  Evaluation ev;
  BoundReport& r = ev.report;
  r.witness = Witness{su, sv, std::nullopt, 1};
  r.exactness = Exactness::kExact;

  if (n == 3) {
    ev.pc.tag = PufferTag::kTriangle;
    r.value = d[0] + d[1] + d[2] - 3;
    r.branch = "1";
    return ev;
  }
  if (n == 4) {
    ev.pc.tag = PufferTag::kFourCycle;
    r.value = S;
    r.branch = "2";
    return ev;
  }
  if (n == 5) {
    std::vector<int> heavy;
    for (int i = 0; i < 5; ++i) {
      if (p.pendants(i) > 0) heavy.push_back(i);
    }
    if (heavy.empty()) {
      ev.pc.tag = PufferTag::kBareFiveCycle;
      r.value = 5;
      r.branch = "3";
      return ev;
    }
    const bool sparse = heavy.size() == 1 || (heavy.size() == 2 && (heavy[1] - heavy[0] == 2 || heavy[1] - heavy[0] == 3));
    if (sparse) {
      ev.pc.tag = PufferTag::kFiveCycleSparse;
      const auto it = std::max_element(d.begin(), d.end());
      r.value = *it + 2;
      r.witness = Witness{static_cast<int>(it - d.begin()), -1, std::nullopt, 1};
      r.branch = "4";
      return ev;
    }
    const bool all_heavy = std::all_of(p.pendant_count().begin(), p.pendant_count().end(), [](int x) { return x >= 2; });
    if (!all_heavy) {
      ev.pc.tag = PufferTag::kFiveCycleLight;
      r.value = S - 1;
      r.branch = "5";
      return ev;
    }
    ev.pc.tag = PufferTag::kFiveCycleHeavy;
    // Every maximising edge in both directions; u and v first, then x, y, z.
    std::optional<Candidate> best;
    for (int i = 0; i < 5; ++i) {
      const int j = (i + 1) % 5;
      if (d[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(j)] != S) continue;
      for (int dir : {1, -1}) {
        const int u = dir == 1 ? i : j;
        const int v = dir == 1 ? j : i;
        Candidate c;
        c.pc = ev.pc;
        c.du = d[static_cast<std::size_t>(u)];
        const int x = wrap(u + 2 * dir, 5), y = wrap(u + 3 * dir, 5), z = wrap(u + 4 * dir, 5);
        const int T = d[static_cast<std::size_t>(x)] + d[static_cast<std::size_t>(y)] + d[static_cast<std::size_t>(z)];
        c.pc.surplus = S < T - 3;
        c.report.witness = Witness{u, v, std::array<int, 3>{x, y, z}, dir};
        c.report.exactness = Exactness::kUpper;
        if (c.pc.surplus) {
          const int eta = (T - S - 3 + 1) / 2;
          c.report.eta = eta;
          c.report.value = S - 1 + eta;
          c.report.branch = "6.eta";
        } else {
          c.report.value = S - 1;
          c.report.branch = "6";
        }
        if (!best || better(c, *best)) best = c;
      }
    }
    return Evaluation{best->pc, best->report};
  }
  if (bare) {
    ev.pc.tag = PufferTag::kBareCycle;
    r.value = n % 3 == 0 ? 3 : 4;
    r.branch = "7";
    return ev;
  }
  return n % 2 == 0 ? evaluate_even(p, d, S) : evaluate_odd(p, d, S);
}

}  // namespace detail

PufferCase classify(const PufferInstance& p) { return detail::evaluate(p).pc; }

BoundReport bound(const PufferInstance& p, const PufferCase& c) {
  auto ev = detail::evaluate(p);
  if (!(ev.pc == c)) throw Error(ErrorCode::kBadParameter, "case " + c.label() + " does not match the instance");
  return ev.report;
}

BoundReport bound(const PufferInstance& p) { return detail::evaluate(p).report; }

}  // namespace strongcol
