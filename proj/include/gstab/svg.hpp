#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "gstab/rep_io.hpp"

namespace gstab {

namespace detail {

struct SvgLine {
  double x1, y1, x2, y2;
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

/// Maps model coordinates (y up) into a fixed-size canvas (y down).
class Canvas {
 public:
  Canvas(double x0, double y0, double x1, double y1) {
    if (x1 - x0 < 1) x1 = x0 + 1;
    if (y1 - y0 < 1) y1 = y0 + 1;
    x0_ = x0 - 0.05 * (x1 - x0) - 0.5;
    y0_ = y0 - 0.05 * (y1 - y0) - 0.5;
    double w = x1 - x0_ + 0.05 * (x1 - x0) + 0.5;
    double h = y1 - y0_ + 0.05 * (y1 - y0) + 0.5;
    scale_ = 640.0 / std::max(w, h);
    width_ = w * scale_;
    height_ = h * scale_;
  }
  double x(double v) const { return (v - x0_) * scale_; }
  double y(double v) const { return height_ - (v - y0_) * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }

 private:
  double x0_, y0_, scale_, width_, height_;
};

inline std::string color(int v) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return palette[(v - 1) % 8];
}

}  // namespace detail

/// Deterministic drawing of a representation: the ground or stab line is
/// dashed and every vertex is stroked in its own color with a label.
inline std::string render_svg(const AnyRep& rep) {
  using detail::fmt;
  std::vector<std::pair<double, double>> pts;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, GroundedLRep>) {
          for (const auto& s : r.shapes) {
            pts.emplace_back(s.left.to_double(), s.height.to_double());
            pts.emplace_back(s.anchor.to_double(), 0.0);
          }
        } else if constexpr (std::is_same_v<T, StickRep>) {
          for (const auto& s : r.sticks) {
            auto seg = s.segment();
            pts.emplace_back(seg.p1().x.to_double(), seg.p1().y.to_double());
            pts.emplace_back(seg.p2().x.to_double(), seg.p2().y.to_double());
          }
        } else {
          for (const auto& s : r.segments) {
            pts.emplace_back(s.seg.p1().x.to_double(), s.seg.p1().y.to_double());
            pts.emplace_back(s.seg.p2().x.to_double(), s.seg.p2().y.to_double());
          }
        }
      },
      rep);
  if (pts.empty()) pts = {{0, 0}, {1, 1}};
  double x0 = pts[0].first, x1 = x0, y0 = pts[0].second, y1 = y0;
  for (auto [x, y] : pts) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  if (rep.index() == 2) {
    x0 = y0 = std::min(x0, y0);
    x1 = y1 = std::max(x1, y1);
  }
  detail::Canvas cv(x0, y0, x1, y1);

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(cv.width()) +
                    "\" height=\"" + fmt(cv.height()) + "\" viewBox=\"0 0 " + fmt(cv.width()) +
                    " " + fmt(cv.height()) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto line = [&](double ax, double ay, double bx, double by, const std::string& cls,
                  const std::string& stroke) {
    out += "<line class=\"" + cls + "\" x1=\"" + fmt(cv.x(ax)) + "\" y1=\"" + fmt(cv.y(ay)) +
           "\" x2=\"" + fmt(cv.x(bx)) + "\" y2=\"" + fmt(cv.y(by)) + "\" stroke=\"" + stroke +
           "\"" + (cls == "axis" ? " stroke-dasharray=\"6 4\"" : " stroke-width=\"2\"") + "/>\n";
  };
  auto label = [&](double x, double y, int v) {
    out += "<text x=\"" + fmt(cv.x(x) + 3) + "\" y=\"" + fmt(cv.y(y) - 3) +
           "\" font-size=\"11\" fill=\"" + detail::color(v) + "\">" + std::to_string(v) +
           "</text>\n";
  };
  const double lo = std::min(x0, y0) - 1, hi = std::max(x1, y1) + 1;

  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, GroundedLRep>) {
          line(x0 - 1, 0, x1 + 1, 0, "axis", "#888");
          for (const auto& s : r.shapes) {
            double ax = s.anchor.to_double(), h = s.height.to_double(), l = s.left.to_double();
            out += "<polyline class=\"shape\" fill=\"none\" stroke-width=\"2\" stroke=\"" +
                   detail::color(s.vertex) + "\" points=\"" + fmt(cv.x(ax)) + "," +
                   fmt(cv.y(0)) + " " + fmt(cv.x(ax)) + "," + fmt(cv.y(h)) + " " +
                   fmt(cv.x(l)) + "," + fmt(cv.y(h)) + "\"/>\n";
            label(l, h, s.vertex);
          }
        } else if constexpr (std::is_same_v<T, StickRep>) {
          line(lo, -lo, hi, -hi, "axis", "#888");
          for (const auto& s : r.sticks) {
            auto seg = s.segment();
            line(seg.p1().x.to_double(), seg.p1().y.to_double(), seg.p2().x.to_double(),
                 seg.p2().y.to_double(), "seg", detail::color(s.vertex));
            label(seg.p2().x.to_double(), seg.p2().y.to_double(), s.vertex);
          }
        } else {
          line(lo, lo, hi, hi, "axis", "#888");
          for (const auto& s : r.segments) {
            line(s.seg.p1().x.to_double(), s.seg.p1().y.to_double(), s.seg.p2().x.to_double(),
                 s.seg.p2().y.to_double(), "seg", detail::color(s.vertex));
            label(s.seg.p2().x.to_double(), s.seg.p2().y.to_double(), s.vertex);
          }
        }
      },
      rep);
  out += "</svg>\n";
  return out;
}

}  // namespace gstab
