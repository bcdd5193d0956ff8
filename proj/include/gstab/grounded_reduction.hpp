#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gstab/recognizers.hpp"
#include "gstab/representations.hpp"

namespace gstab {

/// The ten-vertex gadget. Vertices 1,2,3 form the triple, 7,8,9 and 4,5,6
/// are their upper and lower helpers (v_i^1 = i + 6, v_i^2 = i + 3), and 10
/// is joined to the helpers of 1 and 3. Vertex 2 is the designated x.
struct LambdaGadget {
  Graph graph;
  int x = 2;
  std::array<int, 3> triple{1, 2, 3};
  std::array<int, 3> upper{7, 8, 9};
  std::array<int, 3> lower{4, 5, 6};
};

inline const std::vector<Edge>& lambda_edges() {
  static const std::vector<Edge> edges = {
      {1, 2}, {1, 3}, {2, 3},                  // triple
      {4, 5}, {4, 6}, {5, 6},                  // lower helpers
      {7, 8}, {7, 9}, {8, 9},                  // upper helpers
      {1, 4}, {2, 5}, {3, 6},                  // rungs to the lower layer
      {1, 7}, {2, 8}, {3, 9},                  // rungs to the upper layer
      {4, 10}, {6, 10}, {7, 10}, {9, 10}};
  return edges;
}

inline LambdaGadget lambda_gadget() { return LambdaGadget{Graph(10, lambda_edges())}; }

/// H together with the vertex maps back to G. A-vertices of G become single
/// vertices of H; each B-vertex b becomes the gadget copy on
/// gadget_base[b] .. gadget_base[b] + 9.
struct ReductionOutput {
  BipartiteGraph g;
  Graph h;
  std::vector<int> a_vertex;     // G vertex -> H vertex (A only, else 0)
  std::vector<int> gadget_base;  // G vertex -> first H vertex of its gadget (B only)

  int x_vertex(int b) const { return gadget_base.at(b) + 1; }
};

inline ReductionOutput reduce_stick_to_groundedL(const BipartiteGraph& bg) {
  const Graph& g = bg.graph();
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> a_vertex(n + 1, 0), base(n + 1, 0);
  int next = 1;
  for (int v = 1; v <= g.n(); ++v) {
    if (bg.in_a(v)) {
      a_vertex[v] = next++;
    } else {
      base[v] = next;
      next += 10;
    }
  }
  Graph h(next - 1);
  for (int b : bg.part_b())
    for (auto [u, v] : lambda_edges()) h.add_edge(base[b] + u - 1, base[b] + v - 1);
  for (auto [u, v] : g.edges()) {
    int a = bg.in_a(u) ? u : v;
    int b = bg.in_a(u) ? v : u;
    for (int t = 0; t < 10; ++t) h.add_edge(a_vertex[a], base[b] + t);
  }
  return ReductionOutput{bg, std::move(h), std::move(a_vertex), std::move(base)};
}

namespace detail {

inline Rational min_gap(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  std::optional<Rational> best;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Rational d = xs[i] - xs[i - 1];
    if (d > Rational(0) && (!best || d < *best)) best = d;
  }
  return best.value_or(Rational(1));
}

}  // namespace detail

/// Rotates a stick representation into a nice grounded one: horizontals of
/// B become verticals standing on a common ground, verticals of A become
/// horizontals carried by a vertical arm, and B gets a short arm.
inline GroundedLRep stick_to_nice_grounded(const StickRep& rep, const BipartiteGraph& bg) {
  Report check = verify_stick(rep, bg);
  if (!check.valid()) throw InvalidInput("stick representation is not valid:\n" + check.summary());
  if (rep.n() == 0) return {};

  std::vector<Rational> positions, tops;
  for (const auto& s : rep.sticks) {
    positions.push_back(s.pos);
    tops.push_back(s.side == Side::A ? s.pos : s.pos + s.len);
  }
  const Rational ground = *std::min_element(positions.begin(), positions.end()) - Rational(1);
  const Rational arm = detail::min_gap(positions) / Rational(2);
  const Rational gap = detail::min_gap(tops);
  const auto n = static_cast<std::int64_t>(rep.n());

  std::vector<LShape> shapes;
  std::int64_t b_index = 0;
  for (const auto& s : rep.sticks) {
    if (s.side == Side::A) {
      shapes.push_back({s.vertex, s.pos, s.pos - ground, s.pos - s.len});
    } else {
      Rational lift = gap * Rational(b_index + 1, 2 * (n + 1));
      ++b_index;
      shapes.push_back({s.vertex, s.pos, s.pos + s.len - ground + lift, s.pos - arm});
    }
  }
  GroundedLRep out(std::move(shapes));
  Report r = verify_grounded(out, bg.graph());
  if (!r.valid()) throw Error("stick to grounded conversion failed:\n" + r.summary());
  if (!is_nice(out, bg)) throw Error("stick to grounded conversion is not nice");
  return out;
}

/// Called after every induction step with the step number, the A-vertex
/// just fixed and the current representation.
using NiceStepObserver = std::function<void(int, int, const GroundedLRep&)>;

/// Inverse direction. A-vertices are processed right to left; each gets
/// height equal to its (shifted) anchor and the verticals of its neighbors
/// are lengthened into the free band just above it. Afterwards every A
/// horizontal ends on the line y = x, which becomes the stick ground line.
inline StickRep nice_grounded_to_stick(const GroundedLRep& rep, const BipartiteGraph& bg,
                                       const NiceStepObserver& observer = {}) {
  const Graph& g = bg.graph();
  Report check = verify_grounded(rep, g);
  if (!check.valid()) throw InvalidInput("grounded representation is not valid:\n" + check.summary());
  auto bad = nice_violations(rep, bg);
  if (!bad.empty()) throw NotNice("grounded representation is not nice", bad);
  if (rep.n() == 0) return {};

  GroundedLRep cur = rep;

  // B horizontals meet nothing in a nice representation. Shrinking them so
  // that no anchor lies under them keeps it that way once verticals grow.
  std::vector<Rational> xs;
  for (const auto& s : rep.shapes) {
    xs.push_back(s.anchor);
    xs.push_back(s.left);
  }
  const Rational arm = detail::min_gap(xs) / Rational(2);
  for (int b : bg.part_b()) cur.at(b).left = cur.at(b).anchor - arm;

  Rational shift = rep.shapes.front().anchor;
  for (const auto& s : rep.shapes) {
    shift = std::min(shift, s.anchor);
    if (bg.in_a(s.vertex)) shift = std::min(shift, s.left - s.height);
  }
  shift -= Rational(1);
  // Nudge the shift so that no new A level coincides with an existing height.
  for (std::int64_t d = 1;; ++d) {
    Rational nudge = d == 1 ? Rational(0) : Rational(1, d);
    bool clash = false;
    for (int a : bg.part_a())
      for (const auto& s : cur.shapes)
        if (s.vertex != a && s.height == cur.at(a).anchor - (shift - nudge)) clash = true;
    if (!clash) {
      shift -= nudge;
      break;
    }
  }
  for (auto& s : cur.shapes) {
    s.anchor -= shift;
    s.left -= shift;
  }

  std::vector<int> as = bg.part_a();
  std::sort(as.begin(), as.end(),
            [&](int x, int y) { return cur.at(x).anchor > cur.at(y).anchor; });
  std::optional<Rational> ceiling;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const int a = as[i];
    const Rational level = cur.at(a).anchor;
    const Rational top = ceiling.value_or(level + Rational(1));
    cur.at(a).height = level;

    std::vector<int> low;
    for (int b : g.neighbors(a))
      if (cur.at(b).height < level) low.push_back(b);
    if (!low.empty()) {
      // Widest free band strictly between level and top.
      std::vector<Rational> marks{level, top};
      for (const auto& s : cur.shapes)
        if (s.vertex != a && level < s.height && s.height < top) marks.push_back(s.height);
      std::sort(marks.begin(), marks.end());
      std::size_t w = 1;
      for (std::size_t j = 2; j < marks.size(); ++j)
        if (marks[j] - marks[j - 1] > marks[w] - marks[w - 1]) w = j;
      const Rational lo = marks[w - 1];
      const Rational step = (marks[w] - lo) / Rational(static_cast<std::int64_t>(low.size()) + 1);
      for (std::size_t j = 0; j < low.size(); ++j)
        cur.at(low[j]).height = lo + step * Rational(static_cast<std::int64_t>(j) + 1);
    }
    ceiling = level;

    for (std::size_t k = 0; k <= i; ++k)
      if (cur.at(as[k]).height != cur.at(as[k]).anchor)
        throw Error("induction invariant h(a) = r(a) broken");
    Report step = verify_grounded(cur, g);
    if (!step.valid()) throw Error("induction step produced an invalid representation:\n" + step.summary());
    if (observer) observer(static_cast<int>(i) + 1, a, cur);
  }

  std::vector<Stick> sticks;
  for (const auto& s : cur.shapes) {
    if (bg.in_a(s.vertex)) {
      sticks.push_back({s.vertex, Side::A, s.anchor, s.anchor - s.left});
    } else {
      Rational len = g.degree(s.vertex) == 0 ? arm : s.height - s.anchor;
      sticks.push_back({s.vertex, Side::B, s.anchor, len});
    }
  }
  StickRep out(std::move(sticks));
  Report r = verify_stick(out, bg);
  if (!r.valid()) throw Error("grounded to stick conversion failed:\n" + r.summary());
  return out;
}

/// Representation of the gadget with the lexicographically smallest
/// feasible anchor order (anchors 1..10, heights 1..10).
inline GroundedLRep canonical_lambda_rep() {
  static const GroundedLRep rep = [] {
    Graph g = lambda_gadget().graph;
    auto order = first_anchor_order(g);
    if (!order) throw Error("gadget has no grounded representation");
    return *check_anchor_order(g, *order).rep;
  }();
  return rep;
}

/// Grounded witness for H from a stick witness for G: take the nice
/// representation of G and replace each shape of b in B by a scaled copy of
/// the gadget squeezed next to the anchor of b and into the height band
/// around h(b) that holds no other shape's height.
inline GroundedLRep build_H_rep(const StickRep& stick, const ReductionOutput& red) {
  const BipartiteGraph& bg = red.g;
  GroundedLRep nice = stick_to_nice_grounded(stick, bg);
  const GroundedLRep block = canonical_lambda_rep();

  std::vector<Rational> xs, heights;
  for (const auto& s : nice.shapes) {
    xs.push_back(s.anchor);
    xs.push_back(s.left);
    heights.push_back(s.height);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(heights.begin(), heights.end());

  std::vector<LShape> shapes;
  for (const auto& s : nice.shapes) {
    if (bg.in_a(s.vertex)) {
      LShape t = s;
      t.vertex = red.a_vertex[s.vertex];
      shapes.push_back(t);
      continue;
    }
    auto nx = std::upper_bound(xs.begin(), xs.end(), s.anchor);
    Rational width = nx == xs.end() ? Rational(1) : (*nx - s.anchor) / Rational(2);
    auto it = std::lower_bound(heights.begin(), heights.end(), s.height);
    // Halfway to the neighbouring heights, so bands of different b are disjoint.
    Rational below = midpoint(it == heights.begin() ? Rational(0) : *std::prev(it), s.height);
    Rational above =
        midpoint(s.height, std::next(it) == heights.end() ? s.height + Rational(1) : *std::next(it));
    const Rational eleven(11);
    for (const auto& t : block.shapes)
      shapes.push_back({red.gadget_base[s.vertex] + t.vertex - 1,
                        s.anchor + width * t.anchor / eleven,
                        below + (above - below) * t.height / eleven,
                        s.anchor + width * t.left / eleven});
  }
  GroundedLRep out(std::move(shapes));
  Report r = verify_grounded(out, red.h);
  if (!r.valid()) throw Error("witness for H failed verification:\n" + r.summary());
  return out;
}

/// Restricts a representation of H to A and the x-vertices of the gadgets,
/// relabelled as G. The result must be nice.
inline GroundedLRep extract_G_rep(const GroundedLRep& rep, const ReductionOutput& red) {
  Report check = verify_grounded(rep, red.h);
  if (!check.valid()) throw InvalidInput("representation of H is not valid:\n" + check.summary());
  const BipartiteGraph& bg = red.g;
  std::vector<LShape> shapes;
  for (int v = 1; v <= bg.graph().n(); ++v) {
    LShape s = rep.at(bg.in_a(v) ? red.a_vertex[v] : red.x_vertex(v));
    s.vertex = v;
    shapes.push_back(s);
  }
  GroundedLRep out(std::move(shapes));
  auto bad = nice_violations(out, bg);
  if (!bad.empty()) throw NotNice("restriction to G is not nice", bad);
  return out;
}

struct LambdaReport {
  std::size_t gadget_orders = 0;
  std::set<std::array<int, 3>> classes;  // left-to-right order of the triple
  bool x_in_middle = true;
  std::size_t extended_orders = 0;  // orders of the gadget plus a universal u
  bool u_rightmost = true;

  bool passes() const {
    return classes == std::set<std::array<int, 3>>{{1, 2, 3}, {3, 2, 1}} && x_in_middle &&
           extended_orders > 0 && u_rightmost;
  }
};

/// Exhaustive check of the gadget: its feasible anchor orders fall into
/// exactly two classes by the position of the triple, and a vertex adjacent
/// to all of it always sits rightmost.
inline LambdaReport validate_lambda_properties() {
  LambdaGadget lam = lambda_gadget();
  LambdaReport rep;
  enumerate_anchor_orders(lam.graph, [&](const std::vector<int>& order) {
    ++rep.gadget_orders;
    std::array<int, 3> t{};
    int k = 0;
    for (int v : order)
      if (v <= 3) t[k++] = v;
    rep.classes.insert(t);
    if (t[1] != lam.x) rep.x_in_middle = false;
    return true;
  });
  Graph plus(11, lambda_edges());
  for (int v = 1; v <= 10; ++v) plus.add_edge(v, 11);
  enumerate_anchor_orders(plus, [&](const std::vector<int>& order) {
    ++rep.extended_orders;
    if (order.back() != 11) rep.u_rightmost = false;
    return true;
  });
  return rep;
}

}  // namespace gstab
