#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "gstab/representations.hpp"

namespace gstab {

/// Replaces every x-coordinate by its rank among the 2n values
/// {left(v), anchor(v)} and every height by its rank among the n heights.
/// Equal x-values are ordered left extents first, then by vertex, which
/// keeps every contact "left(y) <= anchor(x)" intact while making all
/// coordinates distinct.
inline GroundedLRep normalize_grounded(const GroundedLRep& rep) {
  auto bad = grounded_conventions(rep);
  if (!bad.empty()) throw InvalidInput("cannot normalize: " + bad.front());
  const Graph before = grounded_graph(rep);

  struct Key {
    const Rational* value;
    int kind;  // 0 = left extent, 1 = anchor
    int vertex;
  };
  std::vector<Key> xs;
  for (const auto& s : rep.shapes) {
    xs.push_back({&s.left, 0, s.vertex});
    xs.push_back({&s.anchor, 1, s.vertex});
  }
  std::sort(xs.begin(), xs.end(), [](const Key& a, const Key& b) {
    if (*a.value != *b.value) return *a.value < *b.value;
    return std::tie(a.kind, a.vertex) < std::tie(b.kind, b.vertex);
  });
  GroundedLRep out = rep;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto& s = out.at(xs[i].vertex);
    (xs[i].kind == 0 ? s.left : s.anchor) = Rational(static_cast<std::int64_t>(i + 1));
  }
  std::vector<int> by_height;
  for (const auto& s : rep.shapes) by_height.push_back(s.vertex);
  std::sort(by_height.begin(), by_height.end(),
            [&](int a, int b) { return rep.at(a).height < rep.at(b).height; });
  for (std::size_t i = 0; i < by_height.size(); ++i)
    out.at(by_height[i]).height = Rational(static_cast<std::int64_t>(i + 1));

  if (!verify_grounded(out, before).valid())
    throw Error("normalization changed the intersection graph");
  return out;
}

/// Rank of every segment in the bottom-to-top order of stab points, ties
/// broken by vertex id. Index 0 is unused.
inline std::vector<int> stab_ranks(const GridRep& rep) {
  std::vector<int> order;
  for (const auto& s : rep.segments) {
    if (!stab_point(s.seg))
      throw InvalidInput("segment " + std::to_string(s.vertex) + " misses the stab line");
    order.push_back(s.vertex);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Rational& ca = rep.at(a).level();
    const Rational& cb = rep.at(b).level();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<int> rank(order.size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i) + 1;
  return rank;
}

/// Good representation of a graph for given ranks and orientations: the
/// segment of s lies on the line at r(s) and spans exactly the ranks of its
/// neighbors and itself (isolated vertices get a half unit on either side).
inline GridRep good_representation(const Graph& g, const std::vector<int>& rank,
                                   const std::vector<bool>& horizontal) {
  std::vector<GridSegment> segs;
  for (int v = 1; v <= g.n(); ++v) {
    int lo = rank[v], hi = rank[v];
    for (int w : g.neighbors(v)) {
      lo = std::min(lo, rank[w]);
      hi = std::max(hi, rank[w]);
    }
    Rational a(lo), b(hi), c(rank[v]);
    if (lo == hi) {
      a = c - Rational(1, 2);
      b = c + Rational(1, 2);
    }
    segs.push_back({v, horizontal[v] ? Segment::horizontal(c, a, b)
                                     : Segment::vertical(c, a, b)});
  }
  return GridRep(std::move(segs));
}

inline GridRep normalize_stabgig(const GridRep& rep) {
  const Graph g = grid_graph(rep);
  Report check = verify_stabgig(rep, g);
  if (!check.valid()) throw InvalidInput("cannot normalize: " + check.summary());
  std::vector<int> rank = stab_ranks(rep);
  std::vector<bool> horizontal(static_cast<std::size_t>(rep.n()) + 1, false);
  for (const auto& s : rep.segments) horizontal[s.vertex] = s.seg.is_horizontal();
  GridRep out = good_representation(g, rank, horizontal);
  if (!verify_stabgig(out, g).valid())
    throw Error("normalization changed the intersection graph");
  return out;
}

}  // namespace gstab
