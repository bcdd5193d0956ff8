#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <queue>
#include <thread>
#include <vector>

#include "gstab/normalize.hpp"
#include "gstab/representations.hpp"

namespace gstab {

struct SearchLimits {
  int max_vertices;
  int jobs = 1;
};

inline constexpr int kGroundedLimit = 13;
inline constexpr int kStickLimit = 12;
inline constexpr int kStabLimit = 9;

/// Arc (x, y) demands height(y) < height(x).
using Arc = std::pair<int, int>;

/// Height constraints for anchor order `order` (vertices left to right):
/// an edge x before y gives x -> y; a non-neighbor x strictly between y's
/// leftmost neighbor and y gives y -> x.
inline std::vector<Arc> height_constraints(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < order.size(); ++j) {
    int y = order[j];
    std::optional<std::size_t> lm;
    for (std::size_t i = 0; i < j; ++i) {
      int x = order[i];
      if (g.has_edge(x, y)) {
        if (!lm) lm = i;
        arcs.emplace_back(x, y);
      } else if (lm) {
        arcs.emplace_back(y, x);
      }
    }
  }
  return arcs;
}

struct AnchorOrderResult {
  std::optional<GroundedLRep> rep;
  std::vector<int> cycle;  // closed walk v1 -> v2 -> ... -> v1 when infeasible
  bool feasible() const { return rep.has_value(); }
};

namespace detail {

inline void check_permutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw InvalidInput("order has wrong length");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[v]) throw InvalidInput("order is not a permutation");
    seen[v] = 1;
  }
}

/// Builds the grounded witness for a feasible anchor order: anchors at
/// positions 1..n, heights by topological rank, left extents half a unit
/// before the leftmost neighbor.
inline GroundedLRep anchor_witness(const Graph& g, const std::vector<int>& order,
                                   const std::vector<int>& topo) {
  const int n = g.n();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
  std::vector<LShape> shapes;
  for (int v = 1; v <= n; ++v) shapes.push_back({v, Rational(pos[v]), Rational(0), Rational(0)});
  for (int i = 0; i < n; ++i)
    shapes[topo[i] - 1].height = Rational(n - i);
  for (int j = 0; j < n; ++j) {
    int y = order[j];
    int lm = j;
    for (int i = 0; i < j; ++i)
      if (g.has_edge(order[i], y)) {
        lm = i;
        break;
      }
    shapes[y - 1].left = Rational(2 * (lm + 1) - 1, 2);
  }
  return GroundedLRep(std::move(shapes));
}

}  // namespace detail

/// Decides whether `g` has a grounded representation whose anchors appear
/// in the given order. Deterministic: the topological sort always takes the
/// leftmost available vertex.
inline AnchorOrderResult check_anchor_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  detail::check_permutation(order, n);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1);
  std::vector<int> indeg(out.size(), 0), pos(out.size(), 0);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (auto [x, y] : height_constraints(g, order)) {
    out[x].push_back(y);
    ++indeg[y];
  }
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.push({pos[v], v});
  std::vector<int> topo;
  while (!ready.empty()) {
    int v = ready.top().second;
    ready.pop();
    topo.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push({pos[w], w});
  }
  AnchorOrderResult res;
  if (static_cast<int>(topo.size()) == n) {
    res.rep = detail::anchor_witness(g, order, topo);
    if (!verify_grounded(*res.rep, g).valid())
      throw Error("anchor-order witness failed verification");
    return res;
  }
  // Walk backwards along arcs inside the residual digraph until a vertex
  // repeats; every residual vertex keeps a residual predecessor.
  std::vector<std::vector<int>> in(out.size());
  for (int v = 1; v <= n; ++v)
    if (indeg[v] > 0)
      for (int w : out[v])
        if (indeg[w] > 0) in[w].push_back(v);
  int v = 1;
  while (indeg[v] == 0) ++v;
  std::vector<int> seen(out.size(), -1), walk;
  while (seen[v] < 0) {
    seen[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = in[v].front();
  }
  res.cycle.assign(walk.begin() + seen[v], walk.end());
  std::reverse(res.cycle.begin(), res.cycle.end());
  return res;
}

namespace detail {

using Mask = std::uint64_t;
inline Mask bit(int v) { return Mask{1} << v; }

/// Depth-first enumeration of feasible anchor orders in lexicographic order.
/// The digraph is maintained through transitive reach sets; a vertex can be
/// appended iff no vertex it must be above is reachable from a vertex it
/// must be below. A forward check discards prefixes that already doom some
/// unplaced vertex.
class AnchorSearch {
 public:
  explicit AnchorSearch(const Graph& g) : g_(g), n_(g.n()), adj_(static_cast<std::size_t>(n_) + 1, 0) {
    if (n_ > 62) throw SizeLimitExceeded(static_cast<std::size_t>(n_), 62);
    for (auto [u, v] : g.edges()) {
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    }
    reach_.assign(adj_.size(), 0);
  }

  /// Visits every feasible order starting with `first` (0 = any) until the
  /// visitor returns false or `stop` is raised. Returns false if stopped.
  bool run(int first, const std::function<bool(const std::vector<int>&)>& visit,
           const std::atomic<bool>* stop = nullptr) {
    visit_ = &visit;
    stop_ = stop;
    order_.clear();
    std::fill(reach_.begin(), reach_.end(), 0);
    if (first == 0) return rec(0);
    auto [in, out] = arcs(first, 0);
    if (!place(first, in, out, 0)) return true;
    return rec(bit(first));
  }

 private:
  std::pair<Mask, Mask> arcs(int y, Mask placed) const {
    Mask in = adj_[y] & placed, out = 0;
    if (in) {
      std::size_t i = 0;
      while (!(in & bit(order_[i]))) ++i;
      for (++i; i < order_.size(); ++i)
        if (!(adj_[y] & bit(order_[i]))) out |= bit(order_[i]);
    }
    return {in, out};
  }

  Mask closure(Mask out) const {
    Mask r = out;
    for (Mask m = out; m; m &= m - 1) r |= reach_[__builtin_ctzll(m)];
    return r;
  }

  bool place(int y, Mask in, Mask out, Mask /*placed*/) {
    Mask r = closure(out);
    if (r & in) return false;
    reach_[y] = r;
    for (int v : order_)
      if ((in & bit(v)) || (reach_[v] & in)) reach_[v] |= bit(y) | r;
    order_.push_back(y);
    return true;
  }

  bool doomed(Mask placed) const {
    for (int z = 1; z <= n_; ++z) {
      if (placed & bit(z)) continue;
      auto [in, out] = arcs(z, placed);
      if (in && (closure(out) & in)) return true;
    }
    return false;
  }

  bool rec(Mask placed) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    if (static_cast<int>(order_.size()) == n_) return (*visit_)(order_);
    if (doomed(placed)) return true;
    for (int y = 1; y <= n_; ++y) {
      if (placed & bit(y)) continue;
      auto [in, out] = arcs(y, placed);
      std::vector<Mask> saved = reach_;
      if (place(y, in, out, placed)) {
        bool go = rec(placed | bit(y));
        order_.pop_back();
        reach_ = std::move(saved);
        if (!go) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int n_;
  std::vector<Mask> adj_;
  std::vector<Mask> reach_;
  std::vector<int> order_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  const std::atomic<bool>* stop_ = nullptr;
};

/// Runs `branch(first, stop)` for first = 1..n on `jobs` threads and
/// returns the smallest `first` whose branch succeeded. Branches above a
/// known success are cancelled.
template <class Branch>
std::optional<int> first_success(int n, int jobs, Branch branch) {
  std::atomic<int> next{1};
  std::atomic<int> best{std::numeric_limits<int>::max()};
  std::vector<std::atomic<bool>> stop(static_cast<std::size_t>(n) + 1);
  for (auto& s : stop) s = false;
  auto worker = [&] {
    for (;;) {
      int f = next.fetch_add(1);
      if (f > n) return;
      if (f > best.load()) continue;
      if (branch(f, stop[f])) {
        int cur = best.load();
        while (f < cur && !best.compare_exchange_weak(cur, f)) {
        }
        for (int h = f + 1; h <= n; ++h) stop[h] = true;
      }
    }
  };
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (best.load() == std::numeric_limits<int>::max()) return std::nullopt;
  return best.load();
}

inline void check_limit(int n, const SearchLimits& limits) {
  if (n > limits.max_vertices)
    throw SizeLimitExceeded(static_cast<std::size_t>(n),
                            static_cast<std::size_t>(limits.max_vertices));
}

}  // namespace detail

/// Calls `visit` on every feasible anchor order of `g` in lexicographic
/// order; stops early when `visit` returns false.
inline void enumerate_anchor_orders(const Graph& g,
                                    const std::function<bool(const std::vector<int>&)>& visit) {
  detail::AnchorSearch(g).run(0, visit);
}

/// The lexicographically smallest feasible anchor order, or nullopt.
inline std::optional<std::vector<int>> first_anchor_order(const Graph& g, int jobs = 1) {
  if (g.n() == 0) return std::vector<int>{};
  std::vector<std::vector<int>> found(static_cast<std::size_t>(g.n()) + 1);
  auto branch = [&](int first, const std::atomic<bool>& stop) {
    detail::AnchorSearch s(g);
    bool hit = false;
    s.run(first, [&](const std::vector<int>& o) {
      found[first] = o;
      hit = true;
      return false;
    }, &stop);
    return hit;
  };
  auto f = detail::first_success(g.n(), jobs, branch);
  if (!f) return std::nullopt;
  return found[*f];
}

inline std::optional<GroundedLRep> recognize_grounded_L(const Graph& g,
                                                        SearchLimits limits = {kGroundedLimit}) {
  detail::check_limit(g.n(), limits);
  auto order = first_anchor_order(g, limits.jobs);
  if (!order) return std::nullopt;
  return check_anchor_order(g, *order).rep;
}

/// Greedy stick check for ground order `order` (first = top-left end of the
/// ground line): every stick reaches exactly its farthest neighbor.
inline std::optional<StickRep> check_ground_order(const BipartiteGraph& bg,
                                                  const std::vector<int>& order) {
  const Graph& g = bg.graph();
  const int n = g.n();
  detail::check_permutation(order, n);
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
  std::vector<Stick> sticks;
  for (int v = 1; v <= n; ++v) {
    Stick s{v, bg.in_a(v) ? Side::A : Side::B, Rational(pos[v]), Rational(1, 2)};
    int far = 0;
    for (int w : g.neighbors(v)) {
      int d = s.side == Side::A ? pos[v] - pos[w] : pos[w] - pos[v];
      if (d <= 0) return std::nullopt;
      far = std::max(far, d);
    }
    if (far > 0) s.len = Rational(far);
    sticks.push_back(std::move(s));
  }
  StickRep rep(std::move(sticks));
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.has_edge(u, v) && sticks_intersect(rep.at(u), rep.at(v))) return std::nullopt;
  if (!verify_stick(rep, bg).valid()) throw Error("stick witness failed verification");
  return rep;
}

namespace detail {

/// Lexicographic search over ground orders. A vertical must come after all
/// its neighbors and a horizontal before all of them; a non-adjacent pair
/// whose gap is already within both current reach lower bounds is fatal.
class StickSearch {
 public:
  explicit StickSearch(const BipartiteGraph& bg)
      : bg_(bg), g_(bg.graph()), n_(g_.n()), pos_(static_cast<std::size_t>(n_) + 1, 0),
        reach_(pos_.size(), 0) {}

  std::optional<StickRep> run(int first, const std::atomic<bool>* stop) {
    stop_ = stop;
    order_.clear();
    std::fill(pos_.begin(), pos_.end(), 0);
    std::fill(reach_.begin(), reach_.end(), 0);
    result_.reset();
    if (first == 0) {
      rec();
    } else if (push(first)) {
      rec();
    }
    return result_;
  }

 private:
  bool push(int v) {
    const int p = static_cast<int>(order_.size()) + 1;
    for (int w : g_.neighbors(v)) {
      if (bg_.in_a(v) && !pos_[w]) return false;
      if (bg_.in_b(v) && pos_[w]) return false;
    }
    pos_[v] = p;
    order_.push_back(v);
    if (bg_.in_a(v)) {
      for (int w : g_.neighbors(v)) {
        reach_[v] = std::max(reach_[v], p - pos_[w]);
        reach_[w] = std::max(reach_[w], p - pos_[w]);
      }
      for (int b : order_) {
        if (!bg_.in_b(b) || g_.has_edge(b, v)) continue;
        int d = p - pos_[b];
        if (d <= reach_[v] && d <= reach_[b]) return undo(v), false;
      }
      // Horizontals grew; recheck them against earlier verticals.
      for (int b : g_.neighbors(v))
        for (int a : order_)
          if (bg_.in_a(a) && pos_[a] > pos_[b] && !g_.has_edge(a, b)) {
            int d = pos_[a] - pos_[b];
            if (d <= reach_[a] && d <= reach_[b]) return undo(v), false;
          }
    }
    return true;
  }

  void undo(int v) {
    order_.pop_back();
    pos_[v] = 0;
    // Lower bounds are rebuilt from scratch; cheap at this size.
    std::fill(reach_.begin(), reach_.end(), 0);
    for (int a : order_)
      if (bg_.in_a(a))
        for (int w : g_.neighbors(a)) {
          reach_[a] = std::max(reach_[a], pos_[a] - pos_[w]);
          reach_[w] = std::max(reach_[w], pos_[a] - pos_[w]);
        }
  }

  bool rec() {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    if (static_cast<int>(order_.size()) == n_) {
      result_ = check_ground_order(bg_, order_);
      return !result_;
    }
    for (int v = 1; v <= n_; ++v) {
      if (pos_[v]) continue;
      if (!push(v)) continue;
      bool go = rec();
      undo(v);
      if (!go) return false;
    }
    return true;
  }

  const BipartiteGraph& bg_;
  const Graph& g_;
  int n_;
  std::vector<int> pos_, reach_, order_;
  std::optional<StickRep> result_;
  const std::atomic<bool>* stop_ = nullptr;
};

}  // namespace detail

inline std::optional<StickRep> recognize_stick(const BipartiteGraph& bg,
                                               SearchLimits limits = {kStickLimit}) {
  const int n = bg.graph().n();
  detail::check_limit(n, limits);
  if (n == 0) return StickRep{};
  std::vector<std::optional<StickRep>> found(static_cast<std::size_t>(n) + 1);
  auto branch = [&](int first, const std::atomic<bool>& stop) {
    found[first] = detail::StickSearch(bg).run(first, &stop);
    return found[first].has_value();
  };
  auto f = detail::first_success(n, limits.jobs, branch);
  if (!f) return std::nullopt;
  return found[*f];
}

namespace detail {

/// Search over good representations: ranks are handed out bottom to top,
/// each component's orientation is fixed when its first vertex is ranked.
/// The first component is horizontal-rooted (reflection in y = x swaps
/// orientations) and isolated vertices are always horizontal.
class StabSearch {
 public:
  StabSearch(const Graph& g, const BipartiteGraph& bg)
      : g_(g), n_(g.n()), rank_(static_cast<std::size_t>(n_) + 1, 0),
        comp_(rank_.size(), 0), color_(rank_.size(), false),
        horizontal_(rank_.size(), false) {
    auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) comp_[v] = static_cast<int>(c);
    comp_orient_.assign(comps.size(), -1);
    comp_isolated_.assign(comps.size(), false);
    for (std::size_t c = 0; c < comps.size(); ++c) comp_isolated_[c] = comps[c].size() == 1;
    for (int v = 1; v <= n_; ++v) color_[v] = bg.in_b(v);
  }

  std::optional<GridRep> run(int first, const std::atomic<bool>* stop) {
    stop_ = stop;
    result_.reset();
    placed_ = 0;
    if (first == 0) {
      rec();
    } else {
      try_vertex(first);
    }
    return result_;
  }

 private:
  // Returns false when the search should stop.
  bool try_vertex(int v) {
    int c = comp_[v];
    if (comp_orient_[c] >= 0) return descend(v);
    std::vector<int> choices{0, 1};
    if (comp_isolated_[c] || c == 0) choices = {0};
    for (int o : choices) {
      comp_orient_[c] = o;
      bool go = descend(v);
      comp_orient_[c] = -1;
      if (!go) return false;
    }
    return true;
  }

  bool descend(int v) {
    rank_[v] = ++placed_;
    horizontal_[v] = (comp_orient_[comp_[v]] == 1) == color_[v];
    bool go = true;
    if (consistent()) go = rec();
    rank_[v] = 0;
    --placed_;
    return go;
  }

  std::pair<int, int> hull(int v) const {
    int lo = rank_[v], hi = rank_[v];
    for (int w : g_.neighbors(v))
      if (rank_[w]) {
        lo = std::min(lo, rank_[w]);
        hi = std::max(hi, rank_[w]);
      }
    return {lo, hi};
  }

  bool consistent() const {
    for (int h = 1; h <= n_; ++h) {
      if (!rank_[h] || !horizontal_[h]) continue;
      auto [hlo, hhi] = hull(h);
      if (hlo == hhi) continue;
      for (int v = 1; v <= n_; ++v) {
        if (!rank_[v] || horizontal_[v] || g_.has_edge(h, v)) continue;
        auto [vlo, vhi] = hull(v);
        if (vlo == vhi) continue;
        if (hlo <= rank_[v] && rank_[v] <= hhi && vlo <= rank_[h] && rank_[h] <= vhi)
          return false;
      }
    }
    return true;
  }

  bool rec() {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    if (placed_ == n_) {
      GridRep rep = good_representation(g_, rank_, horizontal_);
      if (verify_stabgig(rep, g_).valid()) {
        result_ = std::move(rep);
        return false;
      }
      return true;
    }
    for (int v = 1; v <= n_; ++v) {
      if (rank_[v]) continue;
      if (!try_vertex(v)) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int placed_ = 0;
  std::vector<int> rank_, comp_;
  std::vector<bool> color_, horizontal_;
  std::vector<int> comp_orient_;
  std::vector<bool> comp_isolated_;
  std::optional<GridRep> result_;
  const std::atomic<bool>* stop_ = nullptr;
};

}  // namespace detail

inline std::optional<GridRep> recognize_stabgig(const Graph& g,
                                                SearchLimits limits = {kStabLimit}) {
  std::optional<BipartiteGraph> bg;
  try {
    bg = bipartition(g);
  } catch (const OddCycle&) {
    return std::nullopt;
  }
  detail::check_limit(g.n(), limits);
  if (g.n() == 0) return GridRep{};
  std::vector<std::optional<GridRep>> found(static_cast<std::size_t>(g.n()) + 1);
  auto branch = [&](int first, const std::atomic<bool>& stop) {
    found[first] = detail::StabSearch(g, *bg).run(first, &stop);
    return found[first].has_value();
  };
  auto f = detail::first_success(g.n(), limits.jobs, branch);
  if (!f) return std::nullopt;
  return found[*f];
}

}  // namespace gstab
