#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gstab/errors.hpp"

namespace gstab {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

enum class Role { original, subdivision, apex };

inline const char* to_string(Role r) {
  switch (r) {
    case Role::original: return "original";
    case Role::subdivision: return "subdivision";
    case Role::apex: return "apex";
  }
  return "?";
}

/// Where a subdivision vertex came from: the `index`-th inner vertex (1-based,
/// counted from `edge.first`) of the path replacing `edge`.
struct Provenance {
  Edge edge{0, 0};
  int index = 0;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Simple undirected graph on the vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw InvalidInput("negative vertex count");
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (!edges_.insert(make_edge(u, v)).second)
      throw InvalidInput("duplicate edge " + std::to_string(u) + "-" +
                         std::to_string(v));
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_) return false;
    return edges_.count(make_edge(u, v)) != 0;
  }

  /// Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  std::size_t degree(int v) const { return neighbors(v).size(); }

  /// Edges in lexicographic order.
  const std::set<Edge>& edges() const { return edges_; }

  bool has_roles() const { return !roles_.empty(); }
  Role role(int v) const {
    check_vertex(v);
    return roles_.empty() ? Role::original : roles_[v];
  }
  const Provenance& provenance(int v) const {
    check_vertex(v);
    static const Provenance none{};
    return provenance_.empty() ? none : provenance_[v];
  }
  void set_role(int v, Role r, Provenance p = {}) {
    check_vertex(v);
    if (roles_.empty()) {
      roles_.assign(static_cast<std::size_t>(n_) + 1, Role::original);
      provenance_.assign(static_cast<std::size_t>(n_) + 1, Provenance{});
    }
    roles_[v] = r;
    provenance_[v] = p;
  }

  std::vector<int> vertices() const {
    std::vector<int> vs(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) vs[i] = i + 1;
    return vs;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw InvalidInput("vertex " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n_));
  }
  static void insert_sorted(std::vector<int>& xs, int v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_{1};
  std::set<Edge> edges_;
  std::vector<Role> roles_;
  std::vector<Provenance> provenance_;
};

/// A graph with a fixed bipartition (A, B).
class BipartiteGraph {
 public:
  BipartiteGraph(Graph g, std::vector<int> part_a, std::vector<int> part_b)
      : graph_(std::move(g)),
        a_(std::move(part_a)),
        b_(std::move(part_b)),
        side_(static_cast<std::size_t>(graph_.n()) + 1, 0) {
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
    for (int v : a_) mark(v, 1);
    for (int v : b_) mark(v, 2);
    for (int v = 1; v <= graph_.n(); ++v)
      if (side_[v] == 0)
        throw InvalidInput("vertex " + std::to_string(v) + " is in neither part");
    for (auto [u, v] : graph_.edges())
      if (side_[u] == side_[v])
        throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " lies inside one part");
  }

  const Graph& graph() const { return graph_; }
  const std::vector<int>& part_a() const { return a_; }
  const std::vector<int>& part_b() const { return b_; }
  bool in_a(int v) const { return side_.at(v) == 1; }
  bool in_b(int v) const { return side_.at(v) == 2; }

 private:
  void mark(int v, char s) {
    if (v < 1 || v > graph_.n())
      throw InvalidInput("part vertex " + std::to_string(v) + " out of range");
    if (side_[v] != 0)
      throw InvalidInput("vertex " + std::to_string(v) + " listed twice");
    side_[v] = s;
  }

  Graph graph_;
  std::vector<int> a_, b_;
  std::vector<char> side_;
};

/// Replaces every edge xy (x < y) by the path x, u^1, ..., u^k, y. New
/// vertices are numbered n+1, n+2, ... edge by edge in lexicographic edge
/// order and carry role `subdivision` with their provenance.
inline Graph full_subdivision(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("subdivision count must be positive");
  const int n = g.n();
  Graph out(n + k * static_cast<int>(g.m()));
  for (int v = 1; v <= n; ++v)
    out.set_role(v, g.has_roles() ? g.role(v) : Role::original, g.provenance(v));
  int next = n + 1;
  for (auto [x, y] : g.edges()) {
    int prev = x;
    for (int t = 1; t <= k; ++t) {
      out.set_role(next, Role::subdivision, Provenance{{x, y}, t});
      out.add_edge(prev, next);
      prev = next++;
    }
    out.add_edge(prev, y);
  }
  return out;
}

/// Full k-subdivision plus an apex vertex (numbered last) adjacent to exactly
/// the original vertices. Requires odd k.
inline Graph apex_graph(const Graph& g, int k) {
  if (k < 1 || k % 2 == 0)
    throw WrongParity("apex graph needs a positive odd k, got " + std::to_string(k));
  Graph sub = full_subdivision(g, k);
  Graph out(sub.n() + 1);
  for (int v = 1; v <= sub.n(); ++v) out.set_role(v, sub.role(v), sub.provenance(v));
  for (auto [u, v] : sub.edges()) out.add_edge(u, v);
  const int apex = out.n();
  out.set_role(apex, Role::apex);
  for (int v = 1; v <= g.n(); ++v) out.add_edge(apex, v);
  return out;
}

/// Length of a shortest cycle; std::nullopt for forests. BFS from every
/// vertex, O(n*m).
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(g.n()) + 1), parent(dist.size());
  for (int root = 1; root <= g.n(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] >= *best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Canonical 2-colouring: in every component the lowest-index vertex goes to
/// part A. Throws OddCycle with a witness cycle otherwise.
inline BipartiteGraph bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> color(n + 1, -1), parent(n + 1, 0), depth(n + 1, 0);
  std::vector<int> a, b;
  for (int s = 1; s <= g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Walk both BFS-tree paths up to their meeting point.
          std::vector<int> left{u}, right{w};
          int x = u, y = w;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              x = parent[x];
              left.push_back(x);
            } else {
              y = parent[y];
              right.push_back(y);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          throw OddCycle(std::move(left));
        }
      }
    }
  }
  for (int v = 1; v <= g.n(); ++v) (color[v] == 0 ? a : b).push_back(v);
  return BipartiteGraph(g, std::move(a), std::move(b));
}

/// Subgraph induced by `keep` (in the given order), relabelled to 1..|keep|.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> index(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<int>(i) + 1;
  Graph out(static_cast<int>(keep.size()));
  for (auto [u, v] : g.edges())
    if (index[u] && index[v]) out.add_edge(index[u], index[v]);
  return out;
}

}  // namespace gstab
