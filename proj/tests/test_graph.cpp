#include <gtest/gtest.h>

#include <random>

#include "gstab/graph_io.hpp"
#include "oracles.hpp"

using namespace gstab;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  Graph g(3);
  g.add_edge(1, 2);
  EXPECT_THROW(g.add_edge(2, 1), InvalidInput);
  EXPECT_THROW(g.add_edge(3, 3), InvalidInput);
  EXPECT_THROW(g.add_edge(0, 1), InvalidInput);
  EXPECT_THROW(g.add_edge(1, 4), InvalidInput);
  EXPECT_EQ(g.m(), 1u);
}

TEST(Subdivision, SingleEdgeSevenTimesIsPathOnNine) {
  Graph g(2, {{1, 2}});
  Graph s = full_subdivision(g, 7);
  EXPECT_EQ(s.n(), 9);
  EXPECT_EQ(s.m(), 8u);
  // x, u1..u7, y
  int prev = 1;
  for (int t = 1; t <= 7; ++t) {
    int u = 2 + t;
    EXPECT_TRUE(s.has_edge(prev, u));
    EXPECT_EQ(s.role(u), Role::subdivision);
    EXPECT_EQ(s.provenance(u), (Provenance{{1, 2}, t}));
    prev = u;
  }
  EXPECT_TRUE(s.has_edge(prev, 2));
}

TEST(Subdivision, KOneAddsOneVertexPerEdge) {
  Graph g = cycle(5);
  Graph s = full_subdivision(g, 1);
  EXPECT_EQ(s.n(), 10);
  EXPECT_EQ(s.m(), 10u);
}

TEST(Subdivision, TriangleSevenTimes) {
  Graph s = full_subdivision(cycle(3), 7);
  EXPECT_EQ(s.n(), 24);
  EXPECT_EQ(s.m(), 24u);
}

TEST(Subdivision, CountsOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(2 + trial % 7, 0.4, rng);
    for (int k : {1, 2, 3, 7}) {
      Graph s = full_subdivision(g, k);
      EXPECT_EQ(s.n(), g.n() + k * static_cast<int>(g.m()));
      EXPECT_EQ(s.m(), (k + 1) * g.m());
    }
  }
}

TEST(Apex, RejectsEvenK) {
  Graph g(2, {{1, 2}});
  EXPECT_THROW(apex_graph(g, 4), WrongParity);
  EXPECT_THROW(apex_graph(g, 0), WrongParity);
}

TEST(Apex, SingleEdgeSeven) {
  Graph a = apex_graph(Graph(2, {{1, 2}}), 7);
  EXPECT_EQ(a.n(), 10);
  EXPECT_EQ(a.neighbors(10), (std::vector<int>{1, 2}));
  EXPECT_EQ(a.role(10), Role::apex);
}

TEST(Apex, SizeFormula) {
  // p = 10, |E| = 16
  Graph g(10);
  int added = 0;
  for (int u = 1; u <= 10 && added < 16; ++u)
    for (int v = u + 1; v <= 10 && added < 16; v += 3, ++added) g.add_edge(u, v);
  ASSERT_EQ(g.m(), 16u);
  EXPECT_EQ(apex_graph(g, 7).n(), 123);
}

TEST(Apex, GirthOfTriangleApexIsTen) { EXPECT_EQ(girth(apex_graph(cycle(3), 7)), 10); }

TEST(Apex, PropertiesOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(2 + trial % 5, 0.5, rng);
    if (g.m() == 0) g.add_edge(1, 2);
    for (int k = 1; k <= 11; k += 2) {
      Graph a = apex_graph(g, k);
      EXPECT_EQ(a.n(), g.n() + k * static_cast<int>(g.m()) + 1);
      EXPECT_EQ(static_cast<int>(a.degree(a.n())), g.n());
      EXPECT_NO_THROW(bipartition(a));
      EXPECT_EQ(girth(a), k + 3) << "k=" << k;
    }
  }
}

TEST(Girth, SmallCases) {
  EXPECT_EQ(girth(cycle(4)), 4);
  EXPECT_EQ(girth(cycle(3)), 3);
  EXPECT_FALSE(girth(Graph(4, {{1, 2}, {2, 3}, {2, 4}})).has_value());
  EXPECT_FALSE(girth(Graph(1)).has_value());
}

TEST(Girth, AgreesWithEdgeDeletionOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(3 + trial % 8, 0.3, rng);
    EXPECT_EQ(girth(g), oracle::girth(g));
  }
}

TEST(Bipartition, CanonicalParts) {
  BipartiteGraph b = bipartition(cycle(4));
  EXPECT_EQ(b.part_a(), (std::vector<int>{1, 3}));
  EXPECT_EQ(b.part_b(), (std::vector<int>{2, 4}));
}

TEST(Bipartition, OddCycleWitness) {
  try {
    bipartition(cycle(5));
    FAIL() << "expected OddCycle";
  } catch (const OddCycle& e) {
    const auto& w = e.witness;
    ASSERT_EQ(w.size() % 2, 1u);
    Graph g = cycle(5);
    for (std::size_t i = 0; i < w.size(); ++i)
      EXPECT_TRUE(g.has_edge(w[i], w[(i + 1) % w.size()]));
  }
  EXPECT_THROW(bipartition(cycle(3)), OddCycle);
}

TEST(Bipartition, WitnessIsAlwaysAnOddClosedWalk) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(4 + trial % 6, 0.4, rng);
    try {
      BipartiteGraph b = bipartition(g);
      for (auto [u, v] : g.edges()) EXPECT_NE(b.in_a(u), b.in_a(v));
    } catch (const OddCycle& e) {
      ASSERT_EQ(e.witness.size() % 2, 1u);
      for (std::size_t i = 0; i < e.witness.size(); ++i)
        EXPECT_TRUE(g.has_edge(e.witness[i], e.witness[(i + 1) % e.witness.size()]));
    }
  }
}

TEST(GraphIo, ParsesK2AndP3) {
  Graph k2 = parse_graph("p 2\ne 1 2");
  EXPECT_EQ(k2, Graph(2, {{1, 2}}));
  Graph p3 = parse_graph("p 3\ne 1 2\ne 2 3");
  EXPECT_EQ(p3, Graph(3, {{1, 2}, {2, 3}}));
}

TEST(GraphIo, RoundTripCanonicalizes) {
  std::string text = "c hello\np 4\ne 4 1\ne 2 1\n\ne 3 2\n";
  Graph g = parse_graph(text);
  EXPECT_EQ(serialize_graph(g), "p 4\ne 1 2\ne 1 4\ne 2 3\n");
  EXPECT_EQ(serialize_graph(parse_graph(serialize_graph(g))), serialize_graph(g));
}

TEST(GraphIo, RolesSurviveRoundTrip) {
  Graph a = apex_graph(Graph(3, {{1, 2}, {2, 3}}), 3);
  Graph back = parse_graph(serialize_graph(a));
  EXPECT_EQ(back, a);
  for (int v = 1; v <= a.n(); ++v) {
    EXPECT_EQ(back.role(v), a.role(v));
    EXPECT_EQ(back.provenance(v), a.provenance(v));
  }
}

TEST(GraphIo, ReportsLineNumbers) {
  try {
    parse_graph("p 3\ne 1 2\ne 1 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3);
  }
  EXPECT_THROW(parse_graph("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("p 2\nx 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("p 2\ne 1\n"), ParseError);
  EXPECT_THROW(parse_graph("c nothing\n"), ParseError);
}
