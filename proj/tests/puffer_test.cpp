#include <gtest/gtest.h>

#include <algorithm>

#include "strongcol/error.hpp"
#include "strongcol/gen.hpp"
#include "strongcol/oracle.hpp"
#include "strongcol/puffer.hpp"
#include "support.hpp"

using namespace strongcol;
using strongcol::testing::puffer_profiles;

namespace {

PufferInstance profile(std::vector<int> p, std::vector<int> apexes = {}) {
  return PufferInstance::from_profile(std::move(p), std::move(apexes));
}

std::vector<int> rotate(const std::vector<int>& p, int r, bool flip) {
  const int n = static_cast<int>(p.size());
  std::vector<int> q(p.size());
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(flip ? ((r - i) % n + n) % n : (r + i) % n)];
  return q;
}

void expect_valid(const PufferInstance& p, const PufferColouring& pc) {
  const auto r = verify_strong(p.to_graph(), pc.colouring);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.colours_used, pc.colours_used);
}

// Plain backtracking over the pendant edges with the cycle fixed.
bool pendants_completable(const std::vector<Colour>& cycle, const std::vector<int>& demand, int palette) {
  const PufferInstance p = profile(demand);
  const Graph g = p.to_graph();
  EdgeColouring c(g.edge_count());
  for (int i = 0; i < p.length(); ++i) c.set(p.cycle_edge(i), cycle[static_cast<std::size_t>(i)]);
  std::vector<EdgeId> todo;
  for (int i = 0; i < p.length(); ++i) {
    for (int k = 0; k < p.pendants(i); ++k) todo.push_back(p.pendant_edge(i, k));
  }
  std::function<bool(std::size_t)> go = [&](std::size_t at) {
    if (at == todo.size()) return true;
    for (Colour col = 1; col <= palette; ++col) {
      c.set(todo[at], col);
      if (find_violations(g, c).empty() && go(at + 1)) return true;
    }
    c.set(todo[at], kNoColour);
    return false;
  };
  return go(0);
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(profile({0, 0, 0})).tag, PufferTag::kTriangle);
  EXPECT_EQ(classify(profile({3, 1, 2})).tag, PufferTag::kTriangle);
  EXPECT_EQ(classify(profile({0, 0, 0, 0, 0})).tag, PufferTag::kBareFiveCycle);
  EXPECT_EQ(classify(profile({2, 2, 2, 2, 2})).tag, PufferTag::kFiveCycleHeavy);
  EXPECT_EQ(classify(profile({0, 2, 2, 2, 2})).tag, PufferTag::kFiveCycleLight);
  EXPECT_EQ(classify(profile({3, 0, 0, 0, 0})).tag, PufferTag::kFiveCycleSparse);
  EXPECT_EQ(classify(profile({1, 0, 2, 0, 0})).tag, PufferTag::kFiveCycleSparse);
  EXPECT_EQ(classify(profile({1, 2, 0, 0, 0})).tag, PufferTag::kFiveCycleLight);
  EXPECT_EQ(classify(profile({0, 1, 0, 0})).tag, PufferTag::kFourCycle);
  EXPECT_EQ(classify(profile(std::vector<int>(11, 0))).tag, PufferTag::kBareCycle);

  const auto c8 = classify(profile({1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(c8.tag, PufferTag::kEvenCycle);
  EXPECT_EQ(c8.subcase, Subcase::kB);
  EXPECT_EQ(c8.label(), "8b");
  EXPECT_EQ(classify(profile({1, 0, 0, 0, 0, 0})).label(), "8a");
  EXPECT_EQ(classify(profile({1, 0, 0, 0})).label(), "2");
  EXPECT_EQ(classify(profile(std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0})).label(), "8c");
  EXPECT_EQ(classify(profile({1, 0, 0, 0, 0, 0, 0, 0, 0})).label(), "9a");
  EXPECT_EQ(classify(profile({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})).label(), "9b");
  EXPECT_EQ(classify(profile({1, 0, 0, 0, 0, 0, 0})).label(), "9c");
  EXPECT_TRUE(classify(profile({1, 0, 0, 0, 0, 0, 0})).seven_cycle);
}

TEST(Classify, NeedsNormalisedInstance) {
  try {
    classify(profile({0, 0, 0, 0}, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadParameter);
  }
}

TEST(Classify, RotationAndReflectionInvariant) {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& p : puffer_profiles(n, 3, 16)) {
      const auto base = classify(profile(p));
      const auto b = bound(profile(p));
      for (int r = 0; r < n; ++r) {
        for (bool flip : {false, true}) {
          const auto q = rotate(p, r, flip);
          const auto cq = classify(profile(q));
          EXPECT_EQ(cq.tag, base.tag) << strongcol::testing::profile_string(q);
          EXPECT_EQ(cq.subcase, base.subcase);
          const auto bq = bound(profile(q));
          EXPECT_EQ(bq.value, b.value);
          EXPECT_EQ(bq.exactness, b.exactness);
        }
      }
    }
  }
}

TEST(Bound, Examples) {
  auto b = bound(profile({0, 0, 0}));
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ(b.exactness, Exactness::kExact);

  b = bound(profile(std::vector<int>(9, 0)));
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ(b.exactness, Exactness::kExact);

  b = bound(profile({2, 2, 2, 2, 2}));
  EXPECT_EQ(b.value, 8);
  EXPECT_EQ(b.eta, 1);
  EXPECT_EQ(b.exactness, Exactness::kUpper);

  b = bound(profile({2, 1, 0, 0, 0, 0}));
  EXPECT_EQ(b.value, 6);
  EXPECT_EQ(b.exactness, Exactness::kExact);
  EXPECT_EQ(std::min(b.witness.u, b.witness.v), 0);
  EXPECT_EQ(std::max(b.witness.u, b.witness.v), 1);

  EXPECT_EQ(bound(profile({0, 0, 0, 0, 0})).value, 5);
  EXPECT_EQ(bound(profile(std::vector<int>(8, 0))).value, 4);
  EXPECT_EQ(bound(profile({3, 0, 0, 0, 0})).value, 7);
}

TEST(Bound, CaseMismatchRejected) {
  auto c = classify(profile({1, 1, 1, 1, 1, 1}));
  c.subcase = Subcase::kB;
  try {
    bound(profile({1, 1, 1, 1, 1, 1}), c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadParameter);
  }
}

TEST(ColourPuffer, BareCycles) {
  const auto c6 = colour_puffer(profile(std::vector<int>(6, 0)));
  EXPECT_EQ(c6.colours_used, 3);
  EXPECT_EQ(std::vector<Colour>(c6.colouring.values().begin(), c6.colouring.values().end()),
            (std::vector<Colour>{1, 2, 3, 1, 2, 3}));
  const auto c8 = colour_puffer(profile(std::vector<int>(8, 0)));
  EXPECT_EQ(c8.colours_used, 4);
  EXPECT_EQ(std::vector<Colour>(c8.colouring.values().begin(), c8.colouring.values().end()),
            (std::vector<Colour>{4, 1, 2, 3, 4, 1, 2, 3}));
}

TEST(ColourPuffer, CycleIdentity) {
  for (int k = 6; k <= 1000; ++k) {
    const auto pc = colour_puffer(profile(std::vector<int>(static_cast<std::size_t>(k), 0)));
    ASSERT_EQ(pc.colours_used, k % 3 == 0 ? 3 : 4) << k;
    ASSERT_EQ(pc.route, ConstructionRoute::kLemma) << k;
  }
  for (int k : {6, 7, 8, 100, 101, 997}) {
    const auto p = profile(std::vector<int>(static_cast<std::size_t>(k), 0));
    EXPECT_TRUE(verify_strong(p.to_graph(), colour_puffer(p).colouring).valid);
  }
}

TEST(ColourPuffer, Examples) {
  const auto heavy = profile({2, 2, 2, 2, 2});
  const auto h = colour_puffer(heavy);
  expect_valid(heavy, h);
  EXPECT_LE(h.colours_used, 8);

  const auto ones = profile({1, 1, 1, 1, 1, 1});
  const auto o = colour_puffer(ones);
  expect_valid(ones, o);
  EXPECT_EQ(o.colours_used, 5);
  EXPECT_EQ(exact_sci(ones.to_graph()).value, 5);
}

TEST(ColourPuffer, ApexInstances) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& p : puffer_profiles(n, 2, 14)) {
      for (int a = 0; a < n; a += 2) {
        const auto inst = profile(p, {a});
        const auto pc = colour_puffer(inst);
        ASSERT_EQ(pc.colouring.size(), inst.edge_count());
        expect_valid(inst, pc);
      }
    }
  }
}

TEST(ColourPuffer, FallbackReported) {
  int reported = 0;
  ColourPufferOptions opts;
  opts.on_fallback = [&](const PufferInstance&, const PufferColouring& pc) {
    EXPECT_NE(pc.route, ConstructionRoute::kLemma);
    ++reported;
  };
  for (int n = 3; n <= 9; ++n) {
    for (const auto& p : puffer_profiles(n, 3, 16)) {
      const auto pc = colour_puffer(profile(p), opts);
      reported -= pc.route != ConstructionRoute::kLemma;
    }
  }
  EXPECT_EQ(reported, 0);
}

TEST(ColourPuffer, PrecolouringRespected) {
  Rng rng(17);
  for (int n = 3; n <= 9; ++n) {
    for (const auto& prof : puffer_profiles(n, 3, 18)) {
      PufferInstance p = profile(prof);
      // Base edge (i, i+1) and every edge at its ends.
      const int i = rng.index(static_cast<std::size_t>(n));
      const int j = (i + 1) % n;
      std::vector<EdgeId> base{p.cycle_edge(i), p.cycle_edge((i + n - 1) % n), p.cycle_edge(j)};
      for (int pos : {i, j}) {
        for (int k = 0; k < p.pendants(pos); ++k) base.push_back(p.pendant_edge(pos, k));
      }
      std::sort(base.begin(), base.end());
      base.erase(std::unique(base.begin(), base.end()), base.end());
      std::vector<Colour> palette(20);
      for (int c = 0; c < 20; ++c) palette[static_cast<std::size_t>(c)] = c + 1;
      rng.shuffle(palette);
      EdgeColouring pre(p.edge_count());
      for (std::size_t k = 0; k < base.size(); ++k) pre.set(base[k], palette[k]);
      p.base_precolouring = pre;
      const auto pc = colour_puffer(p);
      expect_valid(p, pc);
      for (EdgeId e : base) ASSERT_EQ(pc.colouring[e], pre[e]) << strongcol::testing::profile_string(prof);
    }
  }
}

TEST(ColourPuffer, ClashingPrecolouringRejected) {
  PufferInstance p = profile({1, 0, 0, 0, 0, 0});
  EdgeColouring pre(p.edge_count());
  pre.set(0, 2);
  pre.set(1, 2);
  p.base_precolouring = pre;
  try {
    colour_puffer(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadParameter);
  }
}

TEST(Merge, TriangleApex) {
  const auto p = profile({0, 0, 0}, {0});
  const auto s = split_apexes(p);
  EdgeColouring split(s.instance.edge_count());
  for (EdgeId e = 0; e < split.size(); ++e) split.set(e, e + 1);
  const auto& a = s.merge_map.apexes[0];
  split.set(a.surrogate[0], 4);
  split.set(a.surrogate[1], 5);
  const auto merged = merge_apex_colours(p, split, s.merge_map);
  EXPECT_EQ(merged[a.original[0]], 4);
  EXPECT_EQ(merged[a.original[1]], 5);
}

TEST(Merge, IdentityAndConflict) {
  const auto p = profile({1, 0, 1, 0});
  const auto s = split_apexes(p);
  const EdgeColouring c({1, 2, 3, 4, 5, 6});
  EXPECT_EQ(merge_apex_colours(p, c, s.merge_map), c);

  const auto q = profile({0, 0, 0, 0}, {0});
  const auto sq = split_apexes(q);
  EdgeColouring bad(sq.instance.edge_count());
  for (EdgeId e = 0; e < bad.size(); ++e) bad.set(e, e + 1);
  bad.set(sq.merge_map.apexes[0].surrogate[1], bad[sq.merge_map.apexes[0].surrogate[0]]);
  try {
    merge_apex_colours(q, bad, sq.merge_map);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMergeConflict);
  }
}

TEST(Merge, FourCycleApexValid) {
  const auto q = profile({0, 0, 0, 0}, {0});
  const auto pc = colour_puffer(q);
  EXPECT_TRUE(verify_strong(q.to_graph(), pc.colouring).valid);
  EXPECT_NE(pc.colouring[q.apex_edge(0, 0)], pc.colouring[q.apex_edge(0, 1)]);
}

TEST(CompletePendants, MatchesBacktracking) {
  Rng rng(23);
  int feasible = 0, infeasible = 0;
  for (int round = 0; round < 400; ++round) {
    const int n = 3 + rng.index(5);
    const int palette = 3 + rng.index(4);
    std::vector<Colour> cycle(static_cast<std::size_t>(n));
    for (auto& c : cycle) c = 1 + rng.index(static_cast<std::size_t>(palette));
    if (!find_violations(gen_cycle(n), EdgeColouring(cycle)).empty()) continue;
    std::vector<int> demand(static_cast<std::size_t>(n));
    for (auto& d : demand) d = rng.index(3);
    const bool expected = pendants_completable(cycle, demand, palette);
    const auto got = complete_pendants(cycle, demand, palette);
    ASSERT_EQ(got.has_value(), expected);
    if (!got) {
      ++infeasible;
      continue;
    }
    ++feasible;
    const PufferInstance p = profile(demand);
    EdgeColouring c(p.edge_count());
    for (int i = 0; i < n; ++i) {
      c.set(p.cycle_edge(i), cycle[static_cast<std::size_t>(i)]);
      ASSERT_EQ((*got)[static_cast<std::size_t>(i)].size(), static_cast<std::size_t>(demand[static_cast<std::size_t>(i)]));
      for (int k = 0; k < demand[static_cast<std::size_t>(i)]; ++k) {
        const Colour col = (*got)[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        EXPECT_GE(col, 1);
        EXPECT_LE(col, palette);
        c.set(p.pendant_edge(i, k), col);
      }
    }
    EXPECT_TRUE(verify_strong(p.to_graph(), c).valid);
  }
  EXPECT_GT(feasible, 0);
  EXPECT_GT(infeasible, 0);
}

// The light five-cycle formula gives d(u)+d(v)-1 = 5 here, but the four edges at the degree-4
// vertex and the two cycle edges opposite it are pairwise within distance one.
TEST(ColourPuffer, FiveCycleLightUndercount) {
  const auto p = profile({0, 1, 1, 0, 2});
  const auto b = bound(p);
  EXPECT_EQ(b.branch, "5");
  EXPECT_EQ(b.value, 5);
  EXPECT_EQ(b.exactness, Exactness::kExact);
  EXPECT_EQ(exact_sci(p.to_graph()).value, 6);
  EXPECT_EQ(sci_by_partitions(p.to_graph()), 6);
  const auto pc = colour_puffer(p);
  expect_valid(p, pc);
  EXPECT_EQ(pc.colours_used, 6);
  EXPECT_EQ(pc.route, ConstructionRoute::kOverBound);
}
