#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gstab/errors.hpp"
#include "gstab/rational.hpp"

namespace gstab {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Orientation { horizontal, vertical };

/// Axis-parallel segment of positive length with p1 < p2 along its axis.
class Segment {
 public:
  Segment(Point a, Point b) {
    if (a.y == b.y && a.x != b.x) {
      orientation_ = Orientation::horizontal;
      if (b.x < a.x) std::swap(a, b);
    } else if (a.x == b.x && a.y != b.y) {
      orientation_ = Orientation::vertical;
      if (b.y < a.y) std::swap(a, b);
    } else {
      throw InvalidInput("segment [(" + a.x.str() + "," + a.y.str() + "),(" +
                         b.x.str() + "," + b.y.str() +
                         ")] is degenerate or not axis-parallel");
    }
    p1_ = std::move(a);
    p2_ = std::move(b);
  }

  static Segment horizontal(Rational y, Rational x1, Rational x2) {
    return Segment({x1, y}, {x2, std::move(y)});
  }
  static Segment vertical(Rational x, Rational y1, Rational y2) {
    return Segment({x, y1}, {std::move(x), y2});
  }

  const Point& p1() const { return p1_; }
  const Point& p2() const { return p2_; }
  Orientation orientation() const { return orientation_; }
  bool is_horizontal() const { return orientation_ == Orientation::horizontal; }
  bool is_vertical() const { return orientation_ == Orientation::vertical; }

  /// Coordinate shared by both endpoints (y for horizontals, x for verticals).
  const Rational& level() const { return is_horizontal() ? p1_.y : p1_.x; }
  const Rational& lo() const { return is_horizontal() ? p1_.x : p1_.y; }
  const Rational& hi() const { return is_horizontal() ? p2_.x : p2_.y; }

  bool contains(const Point& p) const {
    if (is_horizontal()) return p.y == p1_.y && p1_.x <= p.x && p.x <= p2_.x;
    return p.x == p1_.x && p1_.y <= p.y && p.y <= p2_.y;
  }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point p1_, p2_;
  Orientation orientation_ = Orientation::horizontal;
};

/// Common point of two segments, or nullopt when they are disjoint. Touching
/// at an endpoint counts. Parallel segments meeting in exactly one point
/// return that point; sharing more than a point throws
/// SameOrientationOverlap.
inline std::optional<Point> segments_intersect(const Segment& s, const Segment& t) {
  if (s.orientation() != t.orientation()) {
    const Segment& h = s.is_horizontal() ? s : t;
    const Segment& v = s.is_horizontal() ? t : s;
    const Rational& x = v.level();
    const Rational& y = h.level();
    if (h.lo() <= x && x <= h.hi() && v.lo() <= y && y <= v.hi()) return Point{x, y};
    return std::nullopt;
  }
  if (s.level() != t.level()) return std::nullopt;
  const Rational& lo = std::max(s.lo(), t.lo());
  const Rational& hi = std::min(s.hi(), t.hi());
  if (hi < lo) return std::nullopt;
  if (lo == hi)
    return s.is_horizontal() ? Point{lo, s.level()} : Point{s.level(), lo};
  throw SameOrientationOverlap("parallel segments overlap on [" + lo.str() + ", " +
                               hi.str() + "]");
}

/// Intersection with the stab line y = x.
inline std::optional<Point> stab_point(const Segment& s) {
  const Rational& c = s.level();
  if (s.lo() <= c && c <= s.hi()) return Point{c, c};
  return std::nullopt;
}

/// Grounded shape: vertical segment [(anchor,0),(anchor,height)] joined at
/// its top to the horizontal segment [(left,height),(anchor,height)].
struct LShape {
  int vertex = 0;
  Rational anchor;
  Rational height;
  Rational left;

  Segment vertical_segment() const { return Segment::vertical(anchor, Rational(0), height); }
  friend bool operator==(const LShape&, const LShape&) = default;
};

/// Two grounded shapes with anchors x < y meet iff the vertical of x reaches
/// the horizontal of y, i.e. left(y) <= anchor(x) and height(y) <= height(x).
inline bool lshape_intersect(const LShape& a, const LShape& b) {
  if (a.anchor == b.anchor)
    throw EqualAnchors("shapes " + std::to_string(a.vertex) + " and " +
                       std::to_string(b.vertex) + " share anchor " + a.anchor.str());
  const LShape& l = a.anchor < b.anchor ? a : b;
  const LShape& r = a.anchor < b.anchor ? b : a;
  return r.left <= l.anchor && r.height <= l.height;
}

}  // namespace gstab
