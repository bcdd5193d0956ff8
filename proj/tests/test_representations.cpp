#include <gtest/gtest.h>

#include "gstab/normalize.hpp"
#include "gstab/random.hpp"
#include "gstab/rep_io.hpp"

using namespace gstab;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Graph path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

bool integral(const Rational& r) { return r.is_integer(); }

}  // namespace

TEST(VerifyGrounded, PathOfThree) {
  // 1 is tallest and reaches over 2; 3 sits under 2's arm.
  GroundedLRep rep({{1, R(1), R(3), R(1, 2)},
                    {2, R(2), R(2), R(1, 2)},
                    {3, R(3), R(1), R(3, 2)}});
  EXPECT_TRUE(verify_grounded(rep, path(3)).valid());
  Graph wrong(3, {{1, 2}});
  Report r = verify_grounded(rep, wrong);
  EXPECT_FALSE(r.valid());
  EXPECT_EQ(r.spurious, (std::vector<Edge>{{2, 3}}));
}

TEST(VerifyGrounded, ReportsMissingEdgesAndConventions) {
  GroundedLRep rep({{1, R(1), R(1), R(1, 2)}, {2, R(2), R(3), R(3, 2)}});
  Report r = verify_grounded(rep, Graph(2, {{1, 2}}));
  EXPECT_EQ(r.missing, (std::vector<Edge>{{1, 2}}));
  GroundedLRep same_height({{1, R(1), R(2), R(0)}, {2, R(2), R(2), R(1)}});
  EXPECT_FALSE(verify_grounded(same_height, Graph(2)).valid());
  EXPECT_THROW(verify_grounded(rep, Graph(3)), VertexMismatch);
}

TEST(VerifyStick, SingleEdge) {
  BipartiteGraph bg(Graph(2, {{1, 2}}), {1}, {2});
  StickRep ok({{1, Side::A, R(2), R(1)}, {2, Side::B, R(1), R(1)}});
  EXPECT_TRUE(verify_stick(ok, bg).valid());
  StickRep short_b({{1, Side::A, R(2), R(1)}, {2, Side::B, R(1), R(1, 2)}});
  EXPECT_EQ(verify_stick(short_b, bg).missing, (std::vector<Edge>{{1, 2}}));
  StickRep wrong_order({{1, Side::A, R(1), R(5)}, {2, Side::B, R(2), R(5)}});
  EXPECT_FALSE(verify_stick(wrong_order, bg).valid());
}

TEST(VerifyStick, RejectsBadInputs) {
  BipartiteGraph bg(Graph(2, {{1, 2}}), {1}, {2});
  StickRep wrong_side({{1, Side::B, R(2), R(1)}, {2, Side::B, R(1), R(1)}});
  EXPECT_FALSE(verify_stick(wrong_side, bg).valid());
  StickRep same_pos({{1, Side::A, R(1), R(1)}, {2, Side::B, R(1), R(1)}});
  EXPECT_FALSE(verify_stick(same_pos, bg).valid());
  StickRep zero({{1, Side::A, R(2), R(0)}, {2, Side::B, R(1), R(1)}});
  EXPECT_FALSE(verify_stick(zero, bg).valid());
}

TEST(VerifyStabgig, FourCycle) {
  // Two horizontals (1, 3) and two verticals (2, 4) forming a square.
  GridRep rep({{1, Segment::horizontal(R(0), R(-1), R(1))},
               {2, Segment::vertical(R(0), R(-1), R(1))},
               {3, Segment::horizontal(R(1), R(-1), R(1))},
               {4, Segment::vertical(R(1), R(0), R(1))}});
  Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  Report r = verify_stabgig(rep, c4);
  EXPECT_TRUE(r.valid()) << r.summary();
}

TEST(VerifyStabgig, FlagsUnstabbedAndOverlap) {
  GridRep rep({{1, Segment::horizontal(R(5), R(0), R(1))},
               {2, Segment::horizontal(R(0), R(-1), R(1))},
               {3, Segment::horizontal(R(0), R(0), R(2))}});
  Report r = verify_stabgig(rep, Graph(3));
  EXPECT_EQ(r.unstabbed, (std::vector<int>{1}));
  EXPECT_EQ(r.same_orientation, (std::vector<Edge>{{2, 3}}));
  EXPECT_FALSE(r.valid());
}

TEST(VerifyStabgig, ExtractedGraphIsAlwaysValid) {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    GridRep rep = random_grid(1 + i % 8, rng);
    Graph g = grid_graph(rep);
    EXPECT_TRUE(verify_stabgig(rep, g).valid());
    EXPECT_NO_THROW(bipartition(g));
  }
}

TEST(NormalizeGrounded, IntegerRanksAndSameGraph) {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 8;
    GroundedLRep rep = random_grounded(n, rng);
    Graph g = grounded_graph(rep);
    GroundedLRep norm = normalize_grounded(rep);
    ASSERT_TRUE(verify_grounded(norm, g).valid());
    std::set<Rational> heights;
    for (const auto& s : norm.shapes) {
      for (const auto* v : {&s.anchor, &s.left, &s.height}) {
        EXPECT_TRUE(integral(*v));
        EXPECT_GE(*v, R(1));
      }
      EXPECT_LE(s.anchor, R(2 * n));
      EXPECT_LE(s.height, R(n));
      heights.insert(s.height);
    }
    EXPECT_EQ(static_cast<int>(heights.size()), n);
    EXPECT_EQ(serialize_rep(normalize_grounded(norm)), serialize_rep(norm));
  }
}

TEST(NormalizeStabgig, GoodRepresentationProperties) {
  Rng rng(47);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 8;
    GridRep rep = random_grid(n, rng);
    Graph g = grid_graph(rep);
    GridRep norm = normalize_stabgig(rep);
    ASSERT_TRUE(verify_stabgig(norm, g).valid()) << verify_stabgig(norm, g).summary();
    for (const auto& s : norm.segments) {
      Point st = *stab_point(s.seg);
      EXPECT_TRUE(integral(st.x));
      EXPECT_GE(st.x, R(1));
      EXPECT_LE(st.x, R(n));
      if (g.degree(s.vertex) > 0) {
        EXPECT_TRUE(integral(s.seg.lo()));
        EXPECT_TRUE(integral(s.seg.hi()));
      }
    }
    EXPECT_EQ(serialize_rep(normalize_stabgig(norm)), serialize_rep(norm));
  }
}

TEST(NormalizeStabgig, RanksFollowStabOrder) {
  GridRep rep({{1, Segment::horizontal(R(7, 2), R(0), R(4))},
               {2, Segment::vertical(R(-1), R(-2), R(5))},
               {3, Segment::vertical(R(1, 3), R(0), R(4))}});
  EXPECT_EQ(stab_ranks(rep), (std::vector<int>{0, 3, 1, 2}));
}

TEST(RepIo, RoundTripIsBitExact) {
  Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    int n = i % 7;
    std::vector<AnyRep> reps{random_grounded(n, rng), random_stick(n, rng), random_grid(n, rng)};
    for (const auto& r : reps) {
      std::string text = serialize_rep(r);
      EXPECT_EQ(serialize_rep(parse_rep(text)), text);
    }
  }
}

TEST(RepIo, StickLayout) {
  StickRep s({{1, Side::A, R(3, 2), R(1)}, {2, Side::B, R(1), R(1, 2)}});
  auto j = nlohmann::json::parse(serialize_rep(s));
  EXPECT_EQ(j["kind"], "stick");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["sticks"][0]["pos"], "3/2");
  EXPECT_EQ(j["sticks"][1]["side"], "B");
}

TEST(RepIo, ErrorsCarryLines) {
  EXPECT_THROW(parse_rep("{\"kind\": \"grid\", \"n\": 1,\n \"segments\": [ }"), ParseError);
  try {
    parse_rep("{\n\"kind\": \"grid\",\n\"n\": 1,\n\"segments\": [,]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 4);
  }
  EXPECT_THROW(parse_rep(R"({"kind":"grid","n":2,"segments":[]})"), std::exception);
  EXPECT_THROW(parse_rep(R"({"kind":"blob","n":0})"), std::exception);
  EXPECT_THROW(parse_rep(R"({"kind":"grounded","n":1,"shapes":[{"v":1,"anchor":"x","height":"1","left":"0"}]})"),
               std::exception);
}
