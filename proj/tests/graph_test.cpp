#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "strongcol/error.hpp"
#include "strongcol/gen.hpp"
#include "strongcol/graph.hpp"
#include "support.hpp"

using namespace strongcol;
using strongcol::testing::graph_of;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

// Colour classes must be induced matchings.
bool classes_are_induced_matchings(const Graph& g, const EdgeColouring& c) {
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      if (c[a] != c[b]) continue;
      const Edge& x = g.edge(a);
      const Edge& y = g.edge(b);
      for (VertexId p : {x.u, x.v}) {
        for (VertexId q : {y.u, y.v}) {
          if (p == q || g.adjacent(p, q)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST(Graph, BuildPath) {
  const Graph g = graph_of({{0, 1}, {1, 2}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Graph, BuildTriangle) {
  const Graph g = graph_of({{0, 1}, {1, 2}, {2, 0}});
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_EQ(g.find_edge(0, 2), 2);
}

TEST(Graph, Rejections) {
  EXPECT_EQ(code_of([] { graph_of({{0, 1}, {0, 1}}); }), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code_of([] { graph_of({{0, 1}, {1, 0}}); }), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code_of([] { graph_of({{2, 2}}); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { graph_of({{0, -1}}); }), ErrorCode::kBadVertexIndex);
}

TEST(Graph, Stats) {
  auto s = stats(gen_cycle(6));
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_EQ(s.max_edge_degree_sum, 4);
  EXPECT_TRUE(s.bipartite);
  s = stats(gen_cycle(5));
  EXPECT_EQ(s.max_edge_degree_sum, 4);
  EXPECT_FALSE(s.bipartite);
  s = stats(strongcol::testing::star(4));
  EXPECT_EQ(s.max_degree, 4);
  EXPECT_EQ(s.max_edge_degree_sum, 5);
  EXPECT_TRUE(s.bipartite);
}

TEST(Graph, LowerBound) {
  EXPECT_EQ(edge_degree_lower_bound(gen_cycle(5)), 3);
  EXPECT_EQ(edge_degree_lower_bound(strongcol::testing::star(4)), 4);
  EXPECT_EQ(edge_degree_lower_bound(gen_puffer(6, {1, 1, 1, 1, 1, 1})), 5);
  EXPECT_EQ(code_of([] { edge_degree_lower_bound(Graph{}); }), ErrorCode::kEmptyGraph);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(gen_cycle(7)));
  EXPECT_FALSE(is_connected(graph_of({{0, 1}, {2, 3}})));
}

TEST(Verify, Examples) {
  auto r = verify_strong(gen_cycle(5), EdgeColouring({1, 2, 3, 4, 5}));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.colours_used, 5);

  r = verify_strong(gen_cycle(4), EdgeColouring({1, 2, 1, 2}));
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::kDistanceOneSameColour);

  r = verify_strong(strongcol::testing::path(3), EdgeColouring({1, 2, 1}));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violations, (std::vector<Violation>{{0, 2, ViolationKind::kDistanceOneSameColour}}));

  r = verify_strong(strongcol::testing::path(2), EdgeColouring({1, 1}));
  EXPECT_EQ(r.violations, (std::vector<Violation>{{0, 1, ViolationKind::kAdjacentSameColour}}));
}

TEST(Verify, PartialRejected) {
  EXPECT_EQ(code_of([] { verify_strong(gen_cycle(3), EdgeColouring({1, 2, kNoColour})); }),
            ErrorCode::kPartialColouring);
  EXPECT_TRUE(find_violations(gen_cycle(4), EdgeColouring({1, kNoColour, 1, kNoColour})).size() == 1);
}

TEST(Verify, AgreesWithInducedMatchingCheck) {
  Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    const Graph g = strongcol::testing::random_outerplanar(rng, 12, false);
    std::vector<Colour> cols(static_cast<std::size_t>(g.edge_count()));
    for (auto& c : cols) c = 1 + rng.index(5);
    const EdgeColouring c(cols);
    EXPECT_EQ(verify_strong(g, c).valid, classes_are_induced_matchings(g, c));
  }
}

TEST(Verify, EdgeOrderDoesNotMatter) {
  Rng rng(11);
  for (int round = 0; round < 100; ++round) {
    const Graph g = strongcol::testing::random_outerplanar(rng, 14, false);
    std::vector<Colour> cols(static_cast<std::size_t>(g.edge_count()));
    for (auto& c : cols) c = 1 + rng.index(6);
    std::vector<int> perm(cols.size());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<Colour> permuted;
    for (int i : perm) {
      pairs.emplace_back(g.edge(i).u, g.edge(i).v);
      permuted.push_back(cols[static_cast<std::size_t>(i)]);
    }
    EXPECT_EQ(verify_strong(g, EdgeColouring(cols)).valid,
              verify_strong(build_graph(pairs, g.vertex_count()), EdgeColouring(permuted)).valid);
  }
}

TEST(EdgeList, RoundTrip) {
  std::istringstream in("# a comment\n#n 6\n0 1\n1 2\n\n2 0\n");
  const auto doc = read_edge_list(in);
  EXPECT_EQ(doc.graph.vertex_count(), 6);
  EXPECT_EQ(doc.graph.edge_count(), 3);
  ASSERT_EQ(doc.comments.size(), 1u);
  EXPECT_EQ(doc.comments[0], " a comment");
  std::ostringstream out;
  write_edge_list(out, doc.graph);
  EXPECT_EQ(out.str(), "#n 6\n0 1\n1 2\n2 0\n");
}

TEST(EdgeList, ParseErrorsCarryLines) {
  std::istringstream in("0 1\n1 x\n");
  try {
    read_edge_list(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.line(), 2);
  }
  std::istringstream dup("0 1\n1 2\n2 1\n");
  try {
    read_edge_list(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateEdge);
    EXPECT_EQ(e.line(), 3);
  }
}
