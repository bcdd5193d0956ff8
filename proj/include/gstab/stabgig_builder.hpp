#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gstab/graph_io.hpp"
#include "gstab/representations.hpp"

namespace gstab {

enum class Page { left, right };

inline const char* to_string(Page p) { return p == Page::left ? "left" : "right"; }

/// An edge drawn across the vertical axis outside the band of original
/// rows. `rank` orders crossing points on the same side outwards (rank 1 is
/// closest to the band); `left_half` names the endpoint whose half lies on
/// the left page.
struct CrossEdge {
  int u = 0, v = 0;
  bool below = true;
  int rank = 1;
  int left_half = 0;
  friend bool operator==(const CrossEdge&, const CrossEdge&) = default;
};

/// Certificate for the builder: a vertex order along the spine and a page
/// for every edge.
struct TwoPageLayout {
  std::vector<int> order;
  std::vector<Edge> left, right;
  std::vector<CrossEdge> cross;
  friend bool operator==(const TwoPageLayout&, const TwoPageLayout&) = default;
};

/// Text form:
///
///     # comment
///     order: 1 2 3 4
///     left: 1-2 2-3
///     right: 3-4
///     cross: (1,4,below,1,1)
///
/// Keyword lines may repeat; their items accumulate.
inline TwoPageLayout parse_layout(std::string_view text) {
  TwoPageLayout L;
  bool have_order = false;
  int lineno = 0;
  std::size_t pos = 0;
  auto parse_edge = [&](std::string_view tok) {
    auto dash = tok.find('-');
    if (dash == std::string_view::npos) throw ParseError(lineno, "edge must be 'u-v'");
    return Edge{detail::to_int(tok.substr(0, dash), lineno),
                detail::to_int(tok.substr(dash + 1), lineno)};
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto colon = line.find(':');
    auto head = detail::split_ws(line.substr(0, colon == std::string_view::npos ? 0 : colon));
    if (colon == std::string_view::npos) {
      if (!detail::split_ws(line).empty()) throw ParseError(lineno, "expected 'keyword: items'");
      continue;
    }
    if (head.size() != 1) throw ParseError(lineno, "expected 'keyword: items'");
    auto items = detail::split_ws(line.substr(colon + 1));
    if (head[0] == "order") {
      if (have_order) throw ParseError(lineno, "duplicate order line");
      have_order = true;
      for (auto t : items) L.order.push_back(detail::to_int(t, lineno));
    } else if (head[0] == "left" || head[0] == "right") {
      auto& dst = head[0] == "left" ? L.left : L.right;
      for (auto t : items) dst.push_back(parse_edge(t));
    } else if (head[0] == "cross") {
      std::string rest(line.substr(colon + 1));
      std::size_t p = 0;
      while ((p = rest.find('(', p)) != std::string::npos) {
        auto q = rest.find(')', p);
        if (q == std::string::npos) throw ParseError(lineno, "unterminated cross record");
        std::string body = rest.substr(p + 1, q - p - 1);
        std::replace(body.begin(), body.end(), ',', ' ');
        auto f = detail::split_ws(body);
        if (f.size() != 5) throw ParseError(lineno, "cross record needs 5 fields");
        CrossEdge c;
        c.u = detail::to_int(f[0], lineno);
        c.v = detail::to_int(f[1], lineno);
        if (f[2] == "below") {
          c.below = true;
        } else if (f[2] == "above") {
          c.below = false;
        } else {
          throw ParseError(lineno, "cross side must be below or above");
        }
        c.rank = detail::to_int(f[3], lineno);
        c.left_half = detail::to_int(f[4], lineno);
        L.cross.push_back(c);
        p = q + 1;
      }
    } else {
      throw ParseError(lineno, "unknown keyword '" + std::string(head[0]) + "'");
    }
  }
  if (!have_order) throw ParseError(lineno, "missing order line");
  return L;
}

inline std::string serialize_layout(const TwoPageLayout& L) {
  std::ostringstream os;
  os << "order:";
  for (int v : L.order) os << ' ' << v;
  os << "\nleft:";
  for (auto [u, v] : L.left) os << ' ' << u << '-' << v;
  os << "\nright:";
  for (auto [u, v] : L.right) os << ' ' << u << '-' << v;
  os << "\ncross:";
  for (const auto& c : L.cross)
    os << " (" << c.u << ',' << c.v << ',' << (c.below ? "below" : "above") << ',' << c.rank
       << ',' << c.left_half << ')';
  os << '\n';
  return os.str();
}

/// An edge of the subdivided graph H between w-ranks i < j, drawn on one
/// page. `source` is the edge of G it belongs to.
struct FrameEdge {
  int i = 0, j = 0;
  Page page = Page::left;
  Edge source{0, 0};
  friend bool operator==(const FrameEdge&, const FrameEdge&) = default;
};

/// G with crossing vertices inserted, listed bottom to top as w_1..w_{n_H}.
/// Original vertex v_p (p-th in the order) sits on row p - 1, crossing
/// vertices below the band on rows -1, -2, ... and above it on n, n+1, ...
struct SubdividedFrame {
  int n = 0;    // vertices of G
  int n_h = 0;  // vertices of H
  int c = 0;    // crossing vertices below the band
  Graph h;
  std::vector<int> g_vertex;  // w-rank -> G vertex, 0 for crossing vertices
  std::vector<int> rank_of;   // G vertex -> w-rank
  std::vector<int> cross_rank;  // index into layout.cross -> w-rank of its crossing vertex
  std::vector<FrameEdge> edges;

  int row(int m) const { return m - 1 - c; }

  std::vector<std::pair<int, int>> intervals(Page p) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges)
      if (e.page == p) out.emplace_back(e.i, e.j);
    return out;
  }
};

namespace detail {

inline bool intervals_cross(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline bool interval_contains(std::pair<int, int> outer, std::pair<int, int> inner) {
  return outer.first <= inner.first && inner.second <= outer.second;
}

}  // namespace detail

/// Checks the certificate against g and inserts crossing vertices.
/// Requires at least two vertices and one edge so the apex has a row span.
inline SubdividedFrame validate_layout(const Graph& g, const TwoPageLayout& L) {
  const int n = g.n();
  if (n < 2 || g.m() == 0) throw InvalidInput("layout needs a graph with at least one edge");
  if (static_cast<int>(L.order.size()) != n) throw InvalidInput("order must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t p = 0; p < L.order.size(); ++p) {
    int v = L.order[p];
    if (v < 1 || v > n || pos[v]) throw InvalidInput("order must list every vertex once");
    pos[v] = static_cast<int>(p) + 1;
  }

  std::map<Edge, int> seen;
  auto assign = [&](int u, int v) {
    if (!g.has_edge(u, v))
      throw InvalidInput("layout names " + std::to_string(u) + "-" + std::to_string(v) +
                         ", which is not an edge");
    if (seen[make_edge(u, v)]++)
      throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " is assigned twice");
  };
  for (auto [u, v] : L.left) assign(u, v);
  for (auto [u, v] : L.right) assign(u, v);
  std::vector<int> below_ranks, above_ranks;
  for (const auto& x : L.cross) {
    assign(x.u, x.v);
    if (x.left_half != x.u && x.left_half != x.v)
      throw InvalidInput("cross record left half must be an endpoint of its edge");
    (x.below ? below_ranks : above_ranks).push_back(x.rank);
  }
  for (const auto& e : g.edges())
    if (!seen.count(e)) throw Unassigned(e);
  for (auto* ranks : {&below_ranks, &above_ranks}) {
    std::sort(ranks->begin(), ranks->end());
    for (std::size_t r = 0; r < ranks->size(); ++r)
      if ((*ranks)[r] != static_cast<int>(r) + 1)
        throw InvalidInput("crossing ranks on one side must be 1..count without repeats");
  }

  SubdividedFrame f;
  f.n = n;
  f.c = static_cast<int>(below_ranks.size());
  f.n_h = n + static_cast<int>(L.cross.size());
  f.h = Graph(f.n_h);
  f.g_vertex.assign(static_cast<std::size_t>(f.n_h) + 1, 0);
  f.rank_of.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    f.rank_of[v] = pos[v] + f.c;
    f.g_vertex[f.rank_of[v]] = v;
  }
  auto add = [&](int a, int b, Page p, Edge src) {
    f.h.add_edge(a, b);
    f.edges.push_back({std::min(a, b), std::max(a, b), p, src});
  };
  for (auto [u, v] : L.left) add(f.rank_of[u], f.rank_of[v], Page::left, make_edge(u, v));
  for (auto [u, v] : L.right) add(f.rank_of[u], f.rank_of[v], Page::right, make_edge(u, v));
  for (const auto& x : L.cross) {
    int m = x.below ? f.c + 1 - x.rank : n + f.c + x.rank;
    f.cross_rank.push_back(m);
    int other = x.left_half == x.u ? x.v : x.u;
    add(f.rank_of[x.left_half], m, Page::left, make_edge(x.u, x.v));
    add(f.rank_of[other], m, Page::right, make_edge(x.u, x.v));
  }

  for (Page p : {Page::left, Page::right})
    for (std::size_t a = 0; a < f.edges.size(); ++a)
      for (std::size_t b = a + 1; b < f.edges.size(); ++b) {
        const auto& e1 = f.edges[a];
        const auto& e2 = f.edges[b];
        if (e1.page != p || e2.page != p) continue;
        if (detail::intervals_cross({e1.i, e1.j}, {e2.i, e2.j}))
          throw CrossingPair(e1.source, e2.source, to_string(p));
      }
  return f;
}

/// Depth of every interval of a laminar family: the number of members
/// containing it, itself included.
inline std::map<std::pair<int, int>, int> depth_table(const std::vector<std::pair<int, int>>& family) {
  std::map<std::pair<int, int>, int> depth;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b)
      if (a != b && detail::intervals_cross(family[a], family[b]))
        throw InvalidInput("interval family is not laminar");
    int d = 0;
    for (const auto& other : family)
      if (detail::interval_contains(other, family[a])) ++d;
    if (!depth.emplace(family[a], d).second) throw InvalidInput("duplicate interval");
  }
  return depth;
}

/// Drawing of one frame edge: a cup below the band on the left page or a cap
/// above it on the right page, with `steps` staircase steps.
struct EdgeDrawing {
  FrameEdge edge;
  int depth = 1;
  Rational near;  // corner abscissa at the j end: j_e on the left page, J_e on the right
  Rational far;   // corner abscissa at the i end: i_e on the left page, I_e on the right
  int steps = 0;

  /// Inner segments of the path from w_i to w_j.
  std::vector<Segment> path(const SubdividedFrame& f, const Rational& eps) const {
    const Rational row_i(f.row(edge.i)), row_j(f.row(edge.j));
    const Rational e2 = eps / Rational(steps + 1);
    std::vector<Segment> out;
    if (edge.page == Page::left) {
      auto a = [&](int t) { return near + e2 * Rational(t); };
      out.push_back(Segment::vertical(far, a(steps), row_i));
      out.push_back(Segment::horizontal(a(steps), a(steps), far));
      for (int t = steps - 1; t >= 0; --t) {
        out.push_back(Segment::vertical(a(t + 1), a(t), a(t + 1)));
        out.push_back(Segment::horizontal(a(t), a(t), a(t + 1)));
      }
      out.push_back(Segment::vertical(near, near, row_j));
    } else {
      auto b = [&](int t) { return far - e2 * Rational(t); };
      out.push_back(Segment::vertical(far, row_i, far));
      for (int t = 0; t < steps; ++t) {
        out.push_back(Segment::horizontal(b(t), b(t + 1), b(t)));
        out.push_back(Segment::vertical(b(t + 1), b(t + 1), b(t)));
      }
      out.push_back(Segment::horizontal(b(steps), near, b(steps)));
      out.push_back(Segment::vertical(near, row_j, b(steps)));
    }
    return out;
  }
};

/// Rows, apex and per-edge drawings for the subdivided frame.
struct ApexDrawing {
  SubdividedFrame frame;
  Rational eps;
  std::vector<EdgeDrawing> edges;

  Segment row_segment(int m) const {
    const int c = frame.c;
    Rational tenth(1, 10);
    return Segment::horizontal(Rational(frame.row(m)), Rational(-(m + c)) - tenth,
                               Rational(2 * frame.n_h - m) + tenth);
  }
  Segment apex_segment() const { return Segment::vertical(Rational(0), Rational(0), Rational(frame.n - 1)); }

  /// Graph drawn: rows 1..n_H, then the inner path vertices edge by edge,
  /// then the apex (adjacent to original rows only).
  std::pair<Graph, GridRep> assemble() const {
    std::vector<GridSegment> segs;
    std::vector<Edge> es;
    for (int m = 1; m <= frame.n_h; ++m) segs.push_back({m, row_segment(m)});
    int next = frame.n_h + 1;
    for (const auto& d : edges) {
      int prev = d.edge.i;
      for (auto& s : d.path(frame, eps)) {
        segs.push_back({next, s});
        es.emplace_back(prev, next);
        prev = next++;
      }
      es.emplace_back(prev, d.edge.j);
    }
    segs.push_back({next, apex_segment()});
    for (int m = 1; m <= frame.n_h; ++m)
      if (frame.g_vertex[m]) es.emplace_back(m, next);
    return {Graph(next, es), GridRep(std::move(segs))};
  }
};

/// Three-segment drawing of every frame edge: left-page edges become cups
/// with corners j_e = -(j+c) + eps*depth and i_e = -(i+c) - eps*depth,
/// right-page edges caps with J_e = 2n_H - j + eps*depth and
/// I_e = 2n_H - i - eps*depth, where eps = 1/(100 n_H).
inline ApexDrawing build_apex3_rep(const SubdividedFrame& f) {
  ApexDrawing d;
  d.frame = f;
  d.eps = Rational(1, 100 * static_cast<std::int64_t>(f.n_h));
  auto left = depth_table(f.intervals(Page::left));
  auto right = depth_table(f.intervals(Page::right));
  for (const auto& e : f.edges) {
    EdgeDrawing ed;
    ed.edge = e;
    if (e.page == Page::left) {
      ed.depth = left.at({e.i, e.j});
      Rational shift = d.eps * Rational(ed.depth);
      ed.near = Rational(-(e.j + f.c)) + shift;
      ed.far = Rational(-(e.i + f.c)) - shift;
    } else {
      ed.depth = right.at({e.i, e.j});
      Rational shift = d.eps * Rational(ed.depth);
      ed.near = Rational(2 * f.n_h - e.j) + shift;
      ed.far = Rational(2 * f.n_h - e.i) - shift;
    }
    d.edges.push_back(ed);
  }
  return d;
}

/// Replaces the middle segment of edge `index` by a staircase of h steps,
/// lengthening its path by 2h.
inline ApexDrawing staircase_subdivide(ApexDrawing d, std::size_t index, int h) {
  if (h < 1) throw InvalidInput("staircase needs at least one step");
  auto& e = d.edges.at(index);
  if (e.steps != 0) throw InvalidInput("edge already carries a staircase");
  e.steps = h;
  return d;
}

struct CoordinateOrderViolation {
  FrameEdge first, second;
};

/// Every pair of same-page drawings must be separated (j' < i' < j < i) or
/// nested (j' < j < i < i'), where (j, i) are the corner abscissas ordered
/// so that j < i.
inline std::vector<CoordinateOrderViolation> check_coordinate_orders(const ApexDrawing& d) {
  std::vector<CoordinateOrderViolation> out;
  for (std::size_t a = 0; a < d.edges.size(); ++a)
    for (std::size_t b = a + 1; b < d.edges.size(); ++b) {
      const auto& x = d.edges[a];
      const auto& y = d.edges[b];
      if (x.edge.page != y.edge.page) continue;
      auto lohi = [](const EdgeDrawing& e) { return std::pair{e.near, e.far}; };
      auto [xj, xi] = lohi(x);
      auto [yj, yi] = lohi(y);
      if (!(xj < xi) || !(yj < yi)) {
        out.push_back({x.edge, y.edge});
        continue;
      }
      bool disjoint = (xi < yj) || (yi < xj);
      bool nested = (xj < yj && yi < xi) || (yj < xj && xi < yi);
      if (!disjoint && !nested) out.push_back({x.edge, y.edge});
    }
  return out;
}

struct ApexBuild {
  Graph graph;
  GridRep rep;
  ApexDrawing drawing;
};

/// Representation of apex_graph(g, k) from a two-page layout of g. Page
/// edges get one staircase with (k-3)/2 steps; a crossing edge is split
/// 3 + 1 + 3 and its left half gets (k-7)/2 more steps.
inline ApexBuild build_apex_rep(const Graph& g, const TwoPageLayout& L, int k) {
  if (k < 7 || k % 2 == 0)
    throw WrongParity("apex construction needs an odd k >= 7, got " + std::to_string(k));
  SubdividedFrame f = validate_layout(g, L);
  ApexDrawing d = build_apex3_rep(f);
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& fe = d.edges[i].edge;
    bool crossing = f.g_vertex[fe.i] == 0 || f.g_vertex[fe.j] == 0;
    int h = crossing ? (fe.page == Page::left ? (k - 7) / 2 : 0) : (k - 3) / 2;
    if (h > 0) d = staircase_subdivide(std::move(d), i, h);
  }

  Graph target = apex_graph(g, k);
  std::vector<std::optional<Segment>> seg(static_cast<std::size_t>(target.n()) + 1);
  for (int m = 1; m <= f.n_h; ++m)
    if (f.g_vertex[m]) seg[f.g_vertex[m]] = d.row_segment(m);
  seg[target.n()] = d.apex_segment();

  // Inner vertices of G-edge xy in the target are numbered from x; collect
  // each edge's segments walking from x to y through the frame.
  std::map<Edge, int> first_inner;
  {
    int next = g.n() + 1;
    for (const auto& e : g.edges()) {
      first_inner[e] = next;
      next += k;
    }
  }
  std::map<Edge, std::vector<Segment>> walk;
  for (const auto& ed : d.edges) {
    const Edge src = ed.edge.source;
    auto& w = walk[src];
    auto p = ed.path(f, d.eps);
    // Pieces touching x are walked away from x and go first; the other half
    // of a crossing edge is walked towards y and goes last.
    const int gi = f.g_vertex[ed.edge.i], gj = f.g_vertex[ed.edge.j];
    const bool has_x = gi == src.first || gj == src.first;
    const bool forward = has_x ? gi == src.first : gj == src.second;
    if (!forward) std::reverse(p.begin(), p.end());
    w.insert(has_x ? w.begin() : w.end(), p.begin(), p.end());
  }
  for (std::size_t x = 0; x < L.cross.size(); ++x) {
    const Edge src = make_edge(L.cross[x].u, L.cross[x].v);
    auto& w = walk[src];
    // The crossing vertex sits between the two halves; the half at x has
    // an odd number of segments.
    int half = 0;
    for (const auto& ed : d.edges)
      if (ed.edge.source == src &&
          (f.g_vertex[ed.edge.i] == src.first || f.g_vertex[ed.edge.j] == src.first))
        half = static_cast<int>(ed.path(f, d.eps).size());
    w.insert(w.begin() + half, d.row_segment(f.cross_rank[x]));
  }
  for (const auto& [e, w] : walk) {
    if (static_cast<int>(w.size()) != k) throw Error("edge path has the wrong length");
    for (int t = 0; t < k; ++t) seg[first_inner[e] + t] = w[t];
  }
  std::vector<GridSegment> segs;
  for (int v = 1; v <= target.n(); ++v) segs.push_back({v, *seg[v]});
  GridRep rep(std::move(segs));
  Report r = verify_stabgig(rep, target);
  if (!r.valid()) throw Error("apex construction failed verification:\n" + r.summary());
  return {std::move(target), std::move(rep), std::move(d)};
}

}  // namespace gstab
