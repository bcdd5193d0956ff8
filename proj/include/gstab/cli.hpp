#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gstab/graph_io.hpp"
#include "gstab/grounded_reduction.hpp"
#include "gstab/normalize.hpp"
#include "gstab/random.hpp"
#include "gstab/recognizers.hpp"
#include "gstab/rep_io.hpp"
#include "gstab/stabgig_builder.hpp"
#include "gstab/svg.hpp"

namespace gstab::cli {

enum Exit : int { yes = 0, no = 1, usage = 2 };

struct CommandConfig {
  std::string kind;
  std::vector<std::string> inputs;
  std::string out;
  std::string graph_out;
  std::string report;
  int limit = 0;
  int k = 7;
  int jobs = 1;
  std::uint64_t seed = 1;
  int count = 200;
  int max_n = 7;
};

namespace detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

/// Writes to --out when given, else to stdout.
inline void emit(const CommandConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_file(cfg.out, text);
  }
}

inline json report_json(const Report& r) {
  auto pairs = [](const std::vector<Edge>& es) {
    json a = json::array();
    for (auto [u, v] : es) a.push_back({u, v});
    return a;
  };
  return {{"valid", r.valid()},
          {"missing", pairs(r.missing)},
          {"spurious", pairs(r.spurious)},
          {"same_orientation", pairs(r.same_orientation)},
          {"unstabbed", r.unstabbed},
          {"violations", r.violations}};
}

template <class Rep>
Rep expect(const AnyRep& rep, const char* kind) {
  if (const auto* r = std::get_if<Rep>(&rep)) return *r;
  throw InvalidInput(std::string("expected a ") + kind + " representation, got " +
                     kind_name(rep));
}

inline GroundedLRep load_grounded(const std::string& path) {
  return expect<GroundedLRep>(parse_rep(read_file(path)), "grounded");
}
inline StickRep load_stick(const std::string& path) {
  return expect<StickRep>(parse_rep(read_file(path)), "stick");
}
inline GridRep load_grid(const std::string& path) {
  return expect<GridRep>(parse_rep(read_file(path)), "grid");
}
inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

/// Bipartition whose A side is read off a representation; fails if an edge
/// stays inside one side.
inline BipartiteGraph sides_of(const Graph& g, const StickRep& rep) {
  if (rep.n() != g.n()) throw VertexMismatch("stick representation and graph differ in size");
  std::vector<int> a, b;
  for (const auto& s : rep.sticks) (s.side == Side::A ? a : b).push_back(s.vertex);
  return BipartiteGraph(g, a, b);
}

/// Bipartition of g oriented by a grounded representation: per component,
/// A is the side of the right shape of the first edge.
inline BipartiteGraph sides_from_grounded(const Graph& g, const GroundedLRep& rep) {
  BipartiteGraph canon = bipartition(g);
  std::vector<int> a, b;
  for (const auto& comp : components(g)) {
    bool flip = false;
    for (int v : comp)
      if (!g.neighbors(v).empty()) {
        int w = g.neighbors(v).front();
        int right = rep.at(v).anchor < rep.at(w).anchor ? w : v;
        flip = canon.in_b(right);
        break;
      }
    for (int v : comp) ((canon.in_a(v) != flip) ? a : b).push_back(v);
  }
  return BipartiteGraph(g, a, b);
}

inline void need(const CommandConfig& cfg, std::size_t count, const char* what) {
  if (cfg.inputs.size() != count) throw InvalidInput(std::string("usage: ") + what);
}

inline int cmd_verify(const CommandConfig& cfg, std::ostream& out, json& rep) {
  need(cfg, 2, "verify <gl|stick|stab> <rep> <graph>");
  Graph g = load_graph(cfg.inputs[1]);
  Report r;
  if (cfg.kind == "gl") {
    r = verify_grounded(load_grounded(cfg.inputs[0]), g);
  } else if (cfg.kind == "stick") {
    StickRep s = load_stick(cfg.inputs[0]);
    try {
      r = verify_stick(s, sides_of(g, s));
    } catch (const VertexMismatch&) {
      throw;
    } catch (const InvalidInput& e) {
      r.violations.push_back(e.what());
    }
  } else if (cfg.kind == "stab") {
    r = verify_stabgig(load_grid(cfg.inputs[0]), g);
  } else {
    throw InvalidInput("unknown kind '" + cfg.kind + "' (gl, stick, stab)");
  }
  out << r.summary() << '\n';
  rep["report"] = report_json(r);
  return r.valid() ? yes : no;
}

inline int cmd_recognize(const CommandConfig& cfg, std::ostream& out, json& rep) {
  need(cfg, 1, "recognize <gl|stick|stab> <graph>");
  Graph g = load_graph(cfg.inputs[0]);
  std::optional<AnyRep> witness;
  if (cfg.kind == "gl") {
    if (auto r = recognize_grounded_L(g, {cfg.limit ? cfg.limit : kGroundedLimit, cfg.jobs}))
      witness = *r;
  } else if (cfg.kind == "stick") {
    std::optional<BipartiteGraph> bg;
    try {
      bg = bipartition(g);
    } catch (const OddCycle&) {
    }
    if (bg)
      if (auto r = recognize_stick(*bg, {cfg.limit ? cfg.limit : kStickLimit, cfg.jobs}))
        witness = *r;
  } else if (cfg.kind == "stab") {
    if (auto r = recognize_stabgig(g, {cfg.limit ? cfg.limit : kStabLimit, cfg.jobs}))
      witness = *r;
  } else {
    throw InvalidInput("unknown kind '" + cfg.kind + "' (gl, stick, stab)");
  }
  rep["representable"] = witness.has_value();
  if (!witness) {
    out << "not representable\n";
    return no;
  }
  emit(cfg, out, serialize_rep(*witness));
  return yes;
}

inline std::string reduction_text(const ReductionOutput& red) {
  std::vector<std::string> comments;
  const Graph& g = red.g.graph();
  for (int v = 1; v <= g.n(); ++v) {
    if (red.g.in_a(v)) {
      comments.push_back("map a " + std::to_string(v) + " " + std::to_string(red.a_vertex[v]));
    } else {
      comments.push_back("map b " + std::to_string(v) + " " +
                         std::to_string(red.gadget_base[v]) + ".." +
                         std::to_string(red.gadget_base[v] + 9) + " x " +
                         std::to_string(red.x_vertex(v)));
    }
  }
  return serialize_graph(red.h, comments);
}

inline int cmd_reduce(const CommandConfig& cfg, std::ostream& out, json& rep) {
  need(cfg, 1, "reduce <gl|stab> <graph>");
  Graph g = load_graph(cfg.inputs[0]);
  if (cfg.kind == "gl") {
    ReductionOutput red = reduce_stick_to_groundedL(bipartition(g));
    rep["vertices"] = red.h.n();
    rep["edges"] = red.h.m();
    emit(cfg, out, reduction_text(red));
  } else if (cfg.kind == "stab") {
    Graph a = apex_graph(g, cfg.k);
    rep["vertices"] = a.n();
    rep["edges"] = a.m();
    emit(cfg, out, serialize_graph(a));
  } else {
    throw InvalidInput("unknown reduction '" + cfg.kind + "' (gl, stab)");
  }
  return yes;
}

inline int cmd_convert(const CommandConfig& cfg, std::ostream& out, json&) {
  if (cfg.kind == "stick-to-gl") {
    need(cfg, 1, "convert stick-to-gl <stick-rep>");
    StickRep s = load_stick(cfg.inputs[0]);
    emit(cfg, out, serialize_rep(stick_to_nice_grounded(s, stick_graph(s))));
  } else if (cfg.kind == "gl-to-stick") {
    need(cfg, 2, "convert gl-to-stick <grounded-rep> <graph>");
    GroundedLRep r = load_grounded(cfg.inputs[0]);
    Graph g = load_graph(cfg.inputs[1]);
    if (r.n() != g.n()) throw VertexMismatch("representation and graph differ in size");
    emit(cfg, out, serialize_rep(nice_grounded_to_stick(r, sides_from_grounded(g, r))));
  } else {
    throw InvalidInput("unknown conversion '" + cfg.kind + "' (stick-to-gl, gl-to-stick)");
  }
  return yes;
}

inline int cmd_build_h_rep(const CommandConfig& cfg, std::ostream& out, json& rep) {
  need(cfg, 1, "build-h-rep <stick-rep>");
  StickRep s = load_stick(cfg.inputs[0]);
  ReductionOutput red = reduce_stick_to_groundedL(stick_graph(s));
  GroundedLRep h = build_H_rep(s, red);
  rep["vertices"] = red.h.n();
  if (!cfg.graph_out.empty()) write_file(cfg.graph_out, reduction_text(red));
  emit(cfg, out, serialize_rep(h));
  return yes;
}

inline int cmd_build_apex_rep(const CommandConfig& cfg, std::ostream& out, json& rep) {
  need(cfg, 2, "build-apex-rep <graph> <layout>");
  Graph g = load_graph(cfg.inputs[0]);
  TwoPageLayout L = parse_layout(read_file(cfg.inputs[1]));
  ApexBuild b = build_apex_rep(g, L, cfg.k);
  rep["vertices"] = b.graph.n();
  rep["girth"] = girth(b.graph).value_or(0);
  rep["coordinate_order_violations"] = check_coordinate_orders(b.drawing).size();
  if (!cfg.graph_out.empty()) write_file(cfg.graph_out, serialize_graph(b.graph));
  emit(cfg, out, serialize_rep(b.rep));
  return yes;
}

inline int cmd_normalize(const CommandConfig& cfg, std::ostream& out, json&) {
  need(cfg, 1, "normalize <gl|stab> <rep>");
  if (cfg.kind == "gl") {
    emit(cfg, out, serialize_rep(normalize_grounded(load_grounded(cfg.inputs[0]))));
  } else if (cfg.kind == "stab") {
    emit(cfg, out, serialize_rep(normalize_stabgig(load_grid(cfg.inputs[0]))));
  } else {
    throw InvalidInput("unknown kind '" + cfg.kind + "' (gl, stab)");
  }
  return yes;
}

inline int cmd_validate_lambda(const CommandConfig&, std::ostream& out, json& rep) {
  LambdaReport r = validate_lambda_properties();
  out << "classes: " << r.classes.size() << "; u rightmost: " << (r.u_rightmost ? "yes" : "no")
      << '\n';
  json classes = json::array();
  for (const auto& c : r.classes) classes.push_back(c);
  rep["orders"] = r.gadget_orders;
  rep["classes"] = classes;
  rep["x_in_middle"] = r.x_in_middle;
  rep["extended_orders"] = r.extended_orders;
  rep["u_rightmost"] = r.u_rightmost;
  return r.passes() ? yes : no;
}

inline int cmd_render(const CommandConfig& cfg, std::ostream& out, json&) {
  need(cfg, 1, "render-svg <rep>");
  emit(cfg, out, render_svg(parse_rep(read_file(cfg.inputs[0]))));
  return yes;
}

/// Random valid representations of the chosen kind; each extracted graph
/// must be accepted by the recognizer and survive normalization.
inline int cmd_fuzz(const CommandConfig& cfg, std::ostream& out, json& rep) {
  need(cfg, 0, "fuzz <gl|stick|stab>");
  if (cfg.kind != "gl" && cfg.kind != "stick" && cfg.kind != "stab")
    throw InvalidInput("unknown kind '" + cfg.kind + "' (gl, stick, stab)");
  Rng rng(cfg.seed);
  std::uniform_int_distribution<int> size(1, std::max(1, cfg.max_n));
  int failures = 0;
  for (int i = 0; i < cfg.count; ++i) {
    int n = size(rng);
    bool ok = true;
    if (cfg.kind == "gl") {
      GroundedLRep r = random_grounded(n, rng);
      Graph g = grounded_graph(r);
      ok = recognize_grounded_L(g, {kGroundedLimit, cfg.jobs}).has_value() &&
           verify_grounded(normalize_grounded(r), g).valid();
    } else if (cfg.kind == "stick") {
      StickRep r = random_stick(n, rng);
      ok = recognize_stick(stick_graph(r), {kStickLimit, cfg.jobs}).has_value();
    } else {
      GridRep r = random_grid(n, rng);
      Graph g = grid_graph(r);
      ok = recognize_stabgig(g, {kStabLimit, cfg.jobs}).has_value() &&
           verify_stabgig(normalize_stabgig(r), g).valid();
    }
    if (!ok) ++failures;
  }
  out << "fuzz " << cfg.kind << ": " << cfg.count << " cases, " << failures << " failures\n";
  rep["cases"] = cfg.count;
  rep["failures"] = failures;
  return failures == 0 ? yes : no;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grounded L-shape, stick and stabbed grid representation workbench", "gstab"};
  app.require_subcommand(1);
  CommandConfig cfg;
  app.add_option("--limit", cfg.limit, "vertex bound for recognizers")->check(CLI::PositiveNumber);
  app.add_option("--k", cfg.k, "subdivision count (odd)");
  app.add_option("--jobs", cfg.jobs, "worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for fuzz runs");
  app.add_option("--count", cfg.count, "cases per fuzz run")->check(CLI::PositiveNumber);
  app.add_option("--max-n", cfg.max_n, "largest fuzz instance")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--graph-out", cfg.graph_out, "also write the produced graph here");
  app.add_option("--report", cfg.report, "write a JSON report here");

  using Handler = int (*)(const CommandConfig&, std::ostream&, detail::json&);
  struct Sub {
    const char* name;
    const char* help;
    bool has_kind;
    Handler fn;
  };
  const Sub subs[] = {
      {"verify", "check a representation against a graph", true, detail::cmd_verify},
      {"recognize", "search for a representation", true, detail::cmd_recognize},
      {"reduce", "build H (gl) or the apex graph (stab)", true, detail::cmd_reduce},
      {"convert", "stick-to-gl or gl-to-stick", true, detail::cmd_convert},
      {"build-h-rep", "grounded witness for H from a stick witness", false, detail::cmd_build_h_rep},
      {"build-apex-rep", "grid witness for the apex graph from a layout", false,
       detail::cmd_build_apex_rep},
      {"normalize", "integer rank normal form", true, detail::cmd_normalize},
      {"validate-lambda", "exhaustive check of the gadget", false, detail::cmd_validate_lambda},
      {"render-svg", "draw a representation", false, detail::cmd_render},
      {"fuzz", "random cross-check of recognizers and normalizers", true, detail::cmd_fuzz},
  };
  std::vector<std::pair<CLI::App*, Handler>> registered;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    if (s.has_kind) sub->add_option("kind", cfg.kind, "variant")->required();
    sub->add_option("inputs", cfg.inputs, "input files");
    registered.emplace_back(sub, s.fn);
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? yes : usage;
  }

  detail::json report{{"command", ""}};
  int code = usage;
  try {
    for (auto [sub, fn] : registered)
      if (sub->parsed()) {
        report["command"] = sub->get_name();
        if (!cfg.kind.empty()) report["kind"] = cfg.kind;
        code = fn(cfg, out, report);
      }
  } catch (const NotNice& e) {
    err << "error: " << e.what() << ':';
    for (auto [a, b] : e.pairs) err << ' ' << a << '-' << b;
    err << '\n';
    report["error"] = e.what();
    code = no;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    report["error"] = e.what();
    code = usage;
  }
  report["exit"] = code;
  if (!cfg.report.empty()) {
    try {
      detail::write_file(cfg.report, report.dump(1) + "\n");
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }
  return code;
}

}  // namespace gstab::cli
