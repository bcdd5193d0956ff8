// Runs every acceptance criterion at its stated threshold and prints one
// PASS/FAIL line each. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gstab/cli.hpp"

using namespace gstab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << std::endl;
  if (!o.pass) ++failures;
}

template <class F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

struct Instance {
  std::string name;
  Graph g;
  TwoPageLayout layout;
};

std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (const auto& entry : std::filesystem::directory_iterator(GSTAB_DATA_DIR "/corpus")) {
    if (entry.path().extension() != ".graph") continue;
    auto layout = entry.path();
    layout.replace_extension(".layout");
    out.push_back({entry.path().stem().string(), parse_graph(slurp(entry.path())),
                   parse_layout(slurp(layout))});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

Outcome gadget_classes() {
  auto t0 = Clock::now();
  std::ostringstream out, err;
  int code = cli::run({"validate-lambda"}, out, err);
  LambdaReport r = validate_lambda_properties();
  double secs = seconds_since(t0);
  bool ok = code == 0 && out.str() == "classes: 2; u rightmost: yes\n" &&
            r.classes == std::set<std::array<int, 3>>{{1, 2, 3}, {3, 2, 1}} && r.x_in_middle &&
            secs < 300;
  std::ostringstream d;
  d << r.gadget_orders << " feasible orders, " << r.classes.size() << " classes, x in middle "
    << (r.x_in_middle ? "yes" : "no") << ", " << secs << " s";
  return {ok, d.str()};
}

Outcome universal_rightmost() {
  auto t0 = Clock::now();
  LambdaReport r = validate_lambda_properties();
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << r.extended_orders << " feasible orders with u, u rightmost in all: "
    << (r.u_rightmost ? "yes" : "no") << ", " << secs << " s";
  return {r.extended_orders > 0 && r.u_rightmost && secs < 1800, d.str()};
}

Outcome stick_round_trip() {
  Rng rng(2024);
  int cases = 0, bad = 0, steps = 0;
  for (; cases < 200; ++cases) {
    StickRep s = random_stick(1 + cases % 8, rng);
    BipartiteGraph bg = stick_graph(s);
    try {
      GroundedLRep nice = stick_to_nice_grounded(s, bg);
      if (!verify_grounded(nice, bg.graph()).valid() || !is_nice(nice, bg)) {
        ++bad;
        continue;
      }
      bool invariant = true;
      StickRep back = nice_grounded_to_stick(nice, bg, [&](int step, int a, const GroundedLRep& cur) {
        ++steps;
        // The step-th A-vertex from the right was just placed; it and every
        // A-vertex to its right must satisfy h(a) = r(a).
        std::vector<int> as = bg.part_a();
        std::sort(as.begin(), as.end(),
                  [&](int x, int y) { return cur.at(x).anchor > cur.at(y).anchor; });
        if (as[step - 1] != a) invariant = false;
        for (int k = 0; k < step; ++k)
          if (cur.at(as[k]).height != cur.at(as[k]).anchor) invariant = false;
        if (!verify_grounded(cur, bg.graph()).valid()) invariant = false;
      });
      if (!invariant || !verify_stick(back, bg).valid()) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  std::ostringstream d;
  d << cases << " random stick representations (n <= 8), " << steps << " induction steps checked, "
    << bad << " failures";
  return {bad == 0 && cases >= 200, d.str()};
}

Outcome small_equivalence() {
  auto t0 = Clock::now();
  int graphs = 0, bad = 0, yes = 0;
  for (int na = 0; na <= 2; ++na) {
    const int b = na + 1;
    for (int mask = 0; mask < (1 << na); ++mask) {
      Graph g(na + 1);
      for (int a = 1; a <= na; ++a)
        if (mask >> (a - 1) & 1) g.add_edge(a, b);
      std::vector<int> part_a;
      for (int a = 1; a <= na; ++a) part_a.push_back(a);
      BipartiteGraph bg(g, part_a, {b});
      ReductionOutput red = reduce_stick_to_groundedL(bg);
      auto stick = recognize_stick(bg);
      auto grounded = recognize_grounded_L(red.h);
      ++graphs;
      if (stick.has_value() != grounded.has_value()) ++bad;
      if (grounded && !verify_grounded(*grounded, red.h).valid()) ++bad;
      if (stick) {
        ++yes;
        if (!verify_grounded(build_H_rep(*stick, red), red.h).valid()) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << graphs << " graphs with |A| <= 2, |B| = 1; " << yes << " yes-instances; " << bad
    << " disagreements; " << seconds_since(t0) << " s";
  return {bad == 0 && seconds_since(t0) < 3600, d.str()};
}

Outcome apex_corpus(const std::vector<Instance>& instances, int& violations) {
  int runs = 0, bad = 0;
  double slowest = 0;
  bool below = false, above = false;
  for (const auto& in : instances) {
    for (const auto& c : in.layout.cross) (c.below ? below : above) = true;
    for (int k : {7, 9, 11}) {
      auto t0 = Clock::now();
      ApexBuild b = build_apex_rep(in.g, in.layout, k);
      bool ok = verify_stabgig(b.rep, b.graph).valid() &&
                b.graph.n() == in.g.n() + k * static_cast<int>(in.g.m()) + 1 &&
                girth(b.graph) == k + 3 && b.graph == apex_graph(in.g, k);
      violations += static_cast<int>(check_coordinate_orders(b.drawing).size());
      slowest = std::max(slowest, seconds_since(t0));
      ++runs;
      if (!ok) {
        ++bad;
        std::cerr << "  " << in.name << " k=" << k << " failed\n";
      }
    }
  }
  std::ostringstream d;
  d << instances.size() << " (graph, layout) pairs x k in {7, 9, 11}: " << runs - bad << "/" << runs
    << " VALID with exact size and girth; slowest " << slowest << " s";
  return {bad == 0 && instances.size() >= 20 && below && above && slowest < 10, d.str()};
}

Outcome normalization() {
  Rng rng(77);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 8;
    GroundedLRep r = random_grounded(n, rng);
    Graph g = grounded_graph(r);
    GroundedLRep norm = normalize_grounded(r);
    bool ok = verify_grounded(norm, g).valid() && normalize_grounded(norm) == norm;
    for (const auto& s : norm.shapes)
      for (const Rational* v : {&s.anchor, &s.left, &s.height})
        ok = ok && v->is_integer() && *v >= Rational(1) && *v <= Rational(2 * n);
    if (!ok) ++bad;
  }
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 8;
    GridRep r = random_grid(n, rng);
    Graph g = grid_graph(r);
    GridRep norm = normalize_stabgig(r);
    bool ok = verify_stabgig(norm, g).valid() && normalize_stabgig(norm) == norm;
    for (const auto& s : norm.segments) {
      Rational c = s.seg.level();
      ok = ok && c.is_integer() && c >= Rational(1) && c <= Rational(n);
      // Isolated segments keep a half-unit extent around their stab point.
      if (g.degree(s.vertex) > 0) ok = ok && s.seg.lo().is_integer() && s.seg.hi().is_integer();
      ok = ok && s.seg.lo() >= Rational(1, 2) && s.seg.hi() <= Rational(2 * n + 1, 2);
    }
    if (!ok) ++bad;
  }
  std::ostringstream d;
  d << "200 grounded + 200 grid representations normalized, " << bad << " failures";
  return {bad == 0, d.str()};
}

Outcome recognizer_fuzz() {
  Rng rng(99);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    GroundedLRep r = random_grounded(1 + i % 7, rng);
    Graph g = grounded_graph(r);
    auto w = recognize_grounded_L(g);
    if (!w || !verify_grounded(*w, g).valid()) ++bad;
  }
  for (int i = 0; i < 500; ++i) {
    StickRep r = random_stick(1 + i % 7, rng);
    BipartiteGraph bg = stick_graph(r);
    auto w = recognize_stick(bg);
    if (!w || !verify_stick(*w, bg).valid()) ++bad;
  }
  for (int i = 0; i < 500; ++i) {
    GridRep r = random_grid(1 + i % 7, rng);
    Graph g = grid_graph(r);
    auto w = recognize_stabgig(g);
    if (!w || !verify_stabgig(*w, g).valid()) ++bad;
  }
  std::ostringstream d;
  d << "500 cases per kind (grounded, stick, grid), n <= 7: " << bad << " failures";
  return {bad == 0, d.str()};
}

}  // namespace

int main() {
  report(1, guarded(gadget_classes));
  report(2, guarded(universal_rightmost));
  report(3, guarded(stick_round_trip));
  report(4, guarded(small_equivalence));
  int violations = 0;
  std::vector<Instance> instances;
  Outcome c5 = guarded([&] {
    instances = corpus();
    return apex_corpus(instances, violations);
  });
  report(5, c5);
  report(6, guarded(normalization));
  report(7, guarded(recognizer_fuzz));
  report(8, {c5.pass && violations == 0,
             std::to_string(violations) + " coordinate-order violations over all same-page pairs in " +
                 std::to_string(instances.size() * 3) + " builds"});
  return failures == 0 ? 0 : 1;
}
