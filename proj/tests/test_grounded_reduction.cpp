#include <gtest/gtest.h>

#include "gstab/grounded_reduction.hpp"
#include "gstab/normalize.hpp"
#include "gstab/random.hpp"

using namespace gstab;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

std::set<std::array<int, 3>> triple_classes(const Graph& g) {
  std::set<std::array<int, 3>> out;
  enumerate_anchor_orders(g, [&](const std::vector<int>& order) {
    std::array<int, 3> t{};
    int k = 0;
    for (int v : order)
      if (v <= 3) t[k++] = v;
    out.insert(t);
    return true;
  });
  return out;
}

}  // namespace

TEST(LambdaGadget, Shape) {
  LambdaGadget lam = lambda_gadget();
  EXPECT_EQ(lam.graph.n(), 10);
  EXPECT_EQ(lam.graph.m(), 19u);
  EXPECT_EQ(lam.x, 2);
  EXPECT_TRUE(is_connected(lam.graph));
  EXPECT_EQ(lam.graph.neighbors(10), (std::vector<int>{4, 6, 7, 9}));
}

TEST(LambdaGadget, ValidatorReport) {
  LambdaReport r = validate_lambda_properties();
  EXPECT_EQ(r.gadget_orders, 4u);
  EXPECT_EQ(r.classes, (std::set<std::array<int, 3>>{{1, 2, 3}, {3, 2, 1}}));
  EXPECT_TRUE(r.x_in_middle);
  EXPECT_EQ(r.extended_orders, 4u);
  EXPECT_TRUE(r.u_rightmost);
  EXPECT_TRUE(r.passes());
}

// The ten-edge pairing without the triangles leaves the triple unordered.
TEST(LambdaGadget, SparsePairingAdmitsEveryTripleOrder) {
  Graph sparse(10, {{1, 4}, {1, 7}, {2, 5}, {2, 8}, {3, 6}, {3, 9}, {4, 10}, {6, 10}, {7, 10}, {9, 10}});
  EXPECT_EQ(triple_classes(sparse).size(), 6u);
}

TEST(LambdaGadget, CanonicalRepIsValid) {
  GroundedLRep rep = canonical_lambda_rep();
  EXPECT_TRUE(verify_grounded(rep, lambda_gadget().graph).valid());
}

TEST(Reduction, SizesForPathOnFive) {
  BipartiteGraph bg = bipartition(path(5));  // A = {1,3,5}, B = {2,4}
  ReductionOutput red = reduce_stick_to_groundedL(bg);
  EXPECT_EQ(red.h.n(), 3 + 10 * 2);
  EXPECT_EQ(red.h.m(), 19u * 2 + 10u * 4);
  EXPECT_EQ(red.a_vertex[1], 1);
  EXPECT_EQ(red.gadget_base[2], 2);
  EXPECT_EQ(red.x_vertex(2), 3);
  EXPECT_EQ(red.a_vertex[3], 12);
  for (int t = 0; t < 10; ++t) {
    EXPECT_TRUE(red.h.has_edge(1, 2 + t));
    EXPECT_TRUE(red.h.has_edge(12, 2 + t));
    EXPECT_FALSE(red.h.has_edge(red.a_vertex[5], 2 + t));
  }
}

TEST(Reduction, SizeFormulaOnRandomBipartiteGraphs) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    StickRep s = random_stick(1 + i % 8, rng);
    BipartiteGraph bg = stick_graph(s);
    ReductionOutput red = reduce_stick_to_groundedL(bg);
    const auto a = bg.part_a().size(), b = bg.part_b().size();
    EXPECT_EQ(red.h.n(), static_cast<int>(a + 10 * b));
    EXPECT_EQ(red.h.m(), 19 * b + 10 * bg.graph().m());
  }
}

TEST(Conversions, StickToNiceGroundedAndBack) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    StickRep s = random_stick(1 + i % 8, rng);
    BipartiteGraph bg = stick_graph(s);
    GroundedLRep nice = stick_to_nice_grounded(s, bg);
    ASSERT_TRUE(verify_grounded(nice, bg.graph()).valid());
    ASSERT_TRUE(is_nice(nice, bg));
    int steps = 0;
    StickRep back = nice_grounded_to_stick(nice, bg, [&](int step, int a, const GroundedLRep& cur) {
      ++steps;
      EXPECT_EQ(step, steps);
      EXPECT_TRUE(bg.in_a(a));
      EXPECT_EQ(cur.at(a).height, cur.at(a).anchor);
    });
    EXPECT_EQ(steps, static_cast<int>(bg.part_a().size()));
    EXPECT_TRUE(verify_stick(back, bg).valid());
  }
}

TEST(Conversions, NormalizedGroundedInputWorks) {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    StickRep s = random_stick(2 + i % 6, rng);
    BipartiteGraph bg = stick_graph(s);
    GroundedLRep nice = normalize_grounded(stick_to_nice_grounded(s, bg));
    ASSERT_TRUE(is_nice(nice, bg));
    EXPECT_TRUE(verify_stick(nice_grounded_to_stick(nice, bg), bg).valid());
  }
}

TEST(Conversions, RejectsNonNiceInput) {
  // a = 1 sits left of its neighbor b = 2.
  GroundedLRep rep({{1, Rational(1), Rational(2), Rational(0)},
                    {2, Rational(2), Rational(1), Rational(1, 2)}});
  BipartiteGraph bg(Graph(2, {{1, 2}}), {1}, {2});
  try {
    nice_grounded_to_stick(rep, bg);
    FAIL();
  } catch (const NotNice& e) {
    EXPECT_EQ(e.pairs, (std::vector<Edge>{{1, 2}}));
  }
}

TEST(BuildHRep, PathOnFive) {
  BipartiteGraph bg = bipartition(path(5));
  auto stick = recognize_stick(bg);
  ASSERT_TRUE(stick);
  ReductionOutput red = reduce_stick_to_groundedL(bg);
  GroundedLRep h = build_H_rep(*stick, red);
  EXPECT_EQ(h.n(), 23);
  EXPECT_TRUE(verify_grounded(h, red.h).valid());
  GroundedLRep g = extract_G_rep(h, red);
  EXPECT_TRUE(verify_grounded(g, bg.graph()).valid());
  EXPECT_TRUE(verify_stick(nice_grounded_to_stick(g, bg), bg).valid());
}

TEST(BuildHRep, SingleEdgeAndEdgeless) {
  BipartiteGraph k2(Graph(2, {{1, 2}}), {1}, {2});
  StickRep s({{1, Side::A, Rational(2), Rational(1)}, {2, Side::B, Rational(1), Rational(1)}});
  ReductionOutput red = reduce_stick_to_groundedL(k2);
  EXPECT_EQ(red.h.n(), 11);
  EXPECT_TRUE(verify_grounded(build_H_rep(s, red), red.h).valid());

  BipartiteGraph empty(Graph(3), {1}, {2, 3});
  StickRep e({{1, Side::A, Rational(1), Rational(1, 2)},
              {2, Side::B, Rational(2), Rational(1, 2)},
              {3, Side::B, Rational(3), Rational(1, 2)}});
  ReductionOutput red2 = reduce_stick_to_groundedL(empty);
  EXPECT_TRUE(verify_grounded(build_H_rep(e, red2), red2.h).valid());
}

TEST(BuildHRep, RandomStickWitnesses) {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    StickRep s = random_stick(1 + i % 8, rng);
    ReductionOutput red = reduce_stick_to_groundedL(stick_graph(s));
    GroundedLRep h = build_H_rep(s, red);
    EXPECT_TRUE(verify_grounded(h, red.h).valid());
    EXPECT_TRUE(is_nice(extract_G_rep(h, red), red.g));
  }
}
