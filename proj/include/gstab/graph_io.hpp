#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gstab/graph.hpp"

namespace gstab {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int to_int(std::string_view s, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  return value;
}

}  // namespace detail

/// Parses the edge-list format:
///
///     c free-form comment
///     p <n>
///     e <u> <v>
///
/// Comments of the form `c role <v> original|apex` and
/// `c role <v> subdivision <x> <y> <index>` restore vertex roles.
inline Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  struct PendingRole {
    int line, v;
    Role role;
    Provenance prov;
  };
  std::vector<PendingRole> roles;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") {
      if (tok.size() >= 4 && tok[1] == "role") {
        PendingRole r{lineno, detail::to_int(tok[2], lineno), Role::original, {}};
        if (tok[3] == "original" && tok.size() == 4) {
          r.role = Role::original;
        } else if (tok[3] == "apex" && tok.size() == 4) {
          r.role = Role::apex;
        } else if (tok[3] == "subdivision" && tok.size() == 7) {
          r.role = Role::subdivision;
          r.prov = {make_edge(detail::to_int(tok[4], lineno), detail::to_int(tok[5], lineno)),
                    detail::to_int(tok[6], lineno)};
        } else {
          throw ParseError(lineno, "malformed role annotation");
        }
        roles.push_back(r);
      }
      continue;
    }
    if (tok[0] == "p") {
      if (g) throw ParseError(lineno, "duplicate header");
      if (tok.size() != 2) throw ParseError(lineno, "header must be 'p <n>'");
      int n = detail::to_int(tok[1], lineno);
      if (n < 0) throw ParseError(lineno, "negative vertex count");
      g.emplace(n);
      continue;
    }
    if (tok[0] == "e") {
      if (!g) throw ParseError(lineno, "edge before header");
      if (tok.size() != 3) throw ParseError(lineno, "edge must be 'e <u> <v>'");
      try {
        g->add_edge(detail::to_int(tok[1], lineno), detail::to_int(tok[2], lineno));
      } catch (const InvalidInput& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!g) throw ParseError(lineno, "missing 'p <n>' header");
  for (const auto& r : roles) {
    try {
      g->set_role(r.v, r.role, r.prov);
    } catch (const InvalidInput& e) {
      throw ParseError(r.line, e.what());
    }
  }
  return *g;
}

/// Canonical text: header, role annotations (if any), edges in lexicographic
/// order with the smaller endpoint first.
inline std::string serialize_graph(const Graph& g,
                                   const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "c " << c << '\n';
  os << "p " << g.n() << '\n';
  if (g.has_roles()) {
    for (int v = 1; v <= g.n(); ++v) {
      os << "c role " << v << ' ' << to_string(g.role(v));
      if (g.role(v) == Role::subdivision) {
        const auto& p = g.provenance(v);
        os << ' ' << p.edge.first << ' ' << p.edge.second << ' ' << p.index;
      }
      os << '\n';
    }
  }
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace gstab
