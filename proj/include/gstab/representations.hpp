#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gstab/geometry.hpp"
#include "gstab/graph.hpp"

namespace gstab {

/// One shape per vertex, kept sorted by vertex id.
struct GroundedLRep {
  std::vector<LShape> shapes;

  GroundedLRep() = default;
  explicit GroundedLRep(std::vector<LShape> s) : shapes(std::move(s)) { sort(); }

  void sort() {
    std::sort(shapes.begin(), shapes.end(),
              [](const LShape& a, const LShape& b) { return a.vertex < b.vertex; });
  }
  const LShape& at(int v) const { return shapes.at(static_cast<std::size_t>(v - 1)); }
  LShape& at(int v) { return shapes.at(static_cast<std::size_t>(v - 1)); }
  int n() const { return static_cast<int>(shapes.size()); }

  /// Vertices in left-to-right anchor order.
  std::vector<int> anchor_order() const {
    std::vector<int> vs;
    for (const auto& s : shapes) vs.push_back(s.vertex);
    std::sort(vs.begin(), vs.end(),
              [&](int a, int b) { return at(a).anchor < at(b).anchor; });
    return vs;
  }
  friend bool operator==(const GroundedLRep&, const GroundedLRep&) = default;
};

enum class Side { A, B };

/// A-vertices are verticals rising from (pos,-pos); B-vertices are
/// horizontals going right from (pos,-pos).
struct Stick {
  int vertex = 0;
  Side side = Side::A;
  Rational pos;
  Rational len;

  Segment segment() const {
    Point g{pos, -pos};
    if (side == Side::A) return Segment(g, {pos, -pos + len});
    return Segment(g, {pos + len, -pos});
  }
  friend bool operator==(const Stick&, const Stick&) = default;
};

struct StickRep {
  std::vector<Stick> sticks;

  StickRep() = default;
  explicit StickRep(std::vector<Stick> s) : sticks(std::move(s)) { sort(); }

  void sort() {
    std::sort(sticks.begin(), sticks.end(),
              [](const Stick& a, const Stick& b) { return a.vertex < b.vertex; });
  }
  const Stick& at(int v) const { return sticks.at(static_cast<std::size_t>(v - 1)); }
  Stick& at(int v) { return sticks.at(static_cast<std::size_t>(v - 1)); }
  int n() const { return static_cast<int>(sticks.size()); }
  friend bool operator==(const StickRep&, const StickRep&) = default;
};

/// Stick segments meet iff the horizontal starts strictly earlier on the
/// ground line and the gap is within both lengths.
inline bool sticks_intersect(const Stick& s, const Stick& t) {
  if (s.side == t.side) return false;
  const Stick& a = s.side == Side::A ? s : t;
  const Stick& b = s.side == Side::A ? t : s;
  if (!(b.pos < a.pos)) return false;
  Rational d = a.pos - b.pos;
  return d <= a.len && d <= b.len;
}

struct GridSegment {
  int vertex = 0;
  Segment seg;
  friend bool operator==(const GridSegment&, const GridSegment&) = default;
};

/// Axis-parallel segments, one per vertex; the stab line is y = x.
struct GridRep {
  std::vector<GridSegment> segments;

  GridRep() = default;
  explicit GridRep(std::vector<GridSegment> s) : segments(std::move(s)) { sort(); }

  void sort() {
    std::sort(segments.begin(), segments.end(),
              [](const GridSegment& a, const GridSegment& b) { return a.vertex < b.vertex; });
  }
  const Segment& at(int v) const { return segments.at(static_cast<std::size_t>(v - 1)).seg; }
  int n() const { return static_cast<int>(segments.size()); }
  friend bool operator==(const GridRep&, const GridRep&) = default;
};

/// Outcome of a verifier; valid() iff every list is empty.
struct Report {
  std::vector<Edge> missing;           // edges of the graph not realized
  std::vector<Edge> spurious;          // realized pairs that are not edges
  std::vector<Edge> same_orientation;  // parallel segments sharing a point
  std::vector<int> unstabbed;          // segments missing the line y = x
  std::vector<std::string> violations;

  bool valid() const {
    return missing.empty() && spurious.empty() && same_orientation.empty() &&
           unstabbed.empty() && violations.empty();
  }

  std::string summary() const {
    if (valid()) return "VALID";
    std::ostringstream os;
    os << "INVALID";
    auto pairs = [&](const char* label, const std::vector<Edge>& es) {
      if (es.empty()) return;
      os << "\n  " << label << ':';
      for (auto [u, v] : es) os << ' ' << u << '-' << v;
    };
    pairs("missing", missing);
    pairs("spurious", spurious);
    pairs("same-orientation", same_orientation);
    if (!unstabbed.empty()) {
      os << "\n  unstabbed:";
      for (int v : unstabbed) os << ' ' << v;
    }
    for (const auto& s : violations) os << "\n  " << s;
    return os.str();
  }
};

namespace detail {

template <class Items>
void check_cover(const Items& items, int n, const char* what) {
  if (static_cast<int>(items.size()) != n)
    throw VertexMismatch(std::string(what) + " has " + std::to_string(items.size()) +
                         " records but the graph has " + std::to_string(n) + " vertices");
  for (int i = 0; i < n; ++i)
    if (items[static_cast<std::size_t>(i)].vertex != i + 1)
      throw VertexMismatch(std::string(what) + " does not cover vertices 1.." +
                           std::to_string(n) + " exactly once");
}

inline void compare_edges(Report& r, const Graph& g, int u, int v, bool met) {
  bool edge = g.has_edge(u, v);
  if (edge && !met) r.missing.push_back(make_edge(u, v));
  if (!edge && met) r.spurious.push_back(make_edge(u, v));
}

}  // namespace detail

/// Well-formedness of a grounded representation on its own: positive
/// heights, left extent strictly left of the anchor, distinct anchors and
/// distinct heights.
inline std::vector<std::string> grounded_conventions(const GroundedLRep& rep) {
  std::vector<std::string> out;
  for (const auto& s : rep.shapes) {
    if (!(s.height > Rational(0)))
      out.push_back("shape " + std::to_string(s.vertex) + " has non-positive height");
    if (!(s.left < s.anchor))
      out.push_back("shape " + std::to_string(s.vertex) + " has a degenerate horizontal");
  }
  for (std::size_t i = 0; i < rep.shapes.size(); ++i)
    for (std::size_t j = i + 1; j < rep.shapes.size(); ++j) {
      const auto& a = rep.shapes[i];
      const auto& b = rep.shapes[j];
      if (a.anchor == b.anchor)
        out.push_back("shapes " + std::to_string(a.vertex) + " and " +
                      std::to_string(b.vertex) + " share an anchor");
      if (a.height == b.height)
        out.push_back("shapes " + std::to_string(a.vertex) + " and " +
                      std::to_string(b.vertex) + " share a height");
    }
  return out;
}

inline Report verify_grounded(const GroundedLRep& rep, const Graph& g) {
  detail::check_cover(rep.shapes, g.n(), "grounded representation");
  Report r;
  r.violations = grounded_conventions(rep);
  if (!r.violations.empty()) return r;
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      detail::compare_edges(r, g, u, v, lshape_intersect(rep.at(u), rep.at(v)));
  return r;
}

/// Intersection graph of a grounded representation whose conventions hold.
inline Graph grounded_graph(const GroundedLRep& rep) {
  auto bad = grounded_conventions(rep);
  if (!bad.empty()) throw InvalidInput(bad.front());
  Graph g(rep.n());
  for (int u = 1; u <= rep.n(); ++u)
    for (int v = u + 1; v <= rep.n(); ++v)
      if (lshape_intersect(rep.at(u), rep.at(v))) g.add_edge(u, v);
  return g;
}

/// Edges ab (a in A) whose contact is not nice, i.e. a is left of b, so a
/// meets b with its vertical.
inline std::vector<Edge> nice_violations(const GroundedLRep& rep, const BipartiteGraph& g) {
  std::vector<Edge> out;
  for (auto [u, v] : g.graph().edges()) {
    int a = g.in_a(u) ? u : v;
    int b = g.in_a(u) ? v : u;
    if (rep.at(a).anchor < rep.at(b).anchor) out.emplace_back(a, b);
  }
  return out;
}

inline bool is_nice(const GroundedLRep& rep, const BipartiteGraph& g) {
  return nice_violations(rep, g).empty();
}

inline Report verify_stick(const StickRep& rep, const BipartiteGraph& bg) {
  const Graph& g = bg.graph();
  detail::check_cover(rep.sticks, g.n(), "stick representation");
  Report r;
  for (const auto& s : rep.sticks) {
    if (!(s.len > Rational(0)))
      r.violations.push_back("stick " + std::to_string(s.vertex) + " has non-positive length");
    if ((s.side == Side::A) != bg.in_a(s.vertex))
      r.violations.push_back("stick " + std::to_string(s.vertex) + " is on the wrong side");
  }
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      if (rep.at(u).pos == rep.at(v).pos)
        r.violations.push_back("sticks " + std::to_string(u) + " and " + std::to_string(v) +
                               " share a ground position");
  if (!r.violations.empty()) return r;
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      detail::compare_edges(r, g, u, v, sticks_intersect(rep.at(u), rep.at(v)));
  return r;
}

inline Report verify_stabgig(const GridRep& rep, const Graph& g) {
  detail::check_cover(rep.segments, g.n(), "grid representation");
  Report r;
  for (int u = 1; u <= g.n(); ++u) {
    if (!stab_point(rep.at(u))) r.unstabbed.push_back(u);
    for (int v = u + 1; v <= g.n(); ++v) {
      const Segment& s = rep.at(u);
      const Segment& t = rep.at(v);
      bool met = false;
      if (s.orientation() == t.orientation()) {
        try {
          met = segments_intersect(s, t).has_value();
        } catch (const SameOrientationOverlap&) {
          met = true;
        }
        if (met) r.same_orientation.push_back({u, v});
        if (g.has_edge(u, v)) r.missing.push_back({u, v});
        continue;
      }
      detail::compare_edges(r, g, u, v, segments_intersect(s, t).has_value());
    }
  }
  return r;
}

/// Intersection graph of a grid representation (parallel contacts ignored).
inline Graph grid_graph(const GridRep& rep) {
  Graph g(rep.n());
  for (int u = 1; u <= rep.n(); ++u)
    for (int v = u + 1; v <= rep.n(); ++v)
      if (rep.at(u).orientation() != rep.at(v).orientation() &&
          segments_intersect(rep.at(u), rep.at(v)))
        g.add_edge(u, v);
  return g;
}

/// Intersection graph of a stick representation together with its sides.
inline BipartiteGraph stick_graph(const StickRep& rep) {
  Graph g(rep.n());
  std::vector<int> a, b;
  for (const auto& s : rep.sticks) (s.side == Side::A ? a : b).push_back(s.vertex);
  for (int u = 1; u <= rep.n(); ++u)
    for (int v = u + 1; v <= rep.n(); ++v)
      if (sticks_intersect(rep.at(u), rep.at(v))) g.add_edge(u, v);
  return BipartiteGraph(std::move(g), std::move(a), std::move(b));
}

}  // namespace gstab
