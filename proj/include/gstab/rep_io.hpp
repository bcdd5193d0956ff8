#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "gstab/representations.hpp"

namespace gstab {

using AnyRep = std::variant<GroundedLRep, StickRep, GridRep>;

inline const char* kind_name(const AnyRep& rep) {
  switch (rep.index()) {
    case 0: return "grounded";
    case 1: return "stick";
    default: return "grid";
  }
}

namespace detail {

using nlohmann::json;

inline Rational field(const json& rec, const char* key) {
  if (!rec.contains(key) || !rec[key].is_string())
    throw InvalidInput(std::string("record lacks rational field '") + key + "'");
  return Rational::parse(rec[key].get<std::string>());
}

inline int vertex_field(const json& rec) {
  if (!rec.contains("v") || !rec["v"].is_number_integer())
    throw InvalidInput("record lacks integer field 'v'");
  return rec["v"].get<int>();
}

inline json to_json(const GroundedLRep& rep) {
  json shapes = json::array();
  for (const auto& s : rep.shapes)
    shapes.push_back({{"v", s.vertex},
                      {"anchor", s.anchor.str()},
                      {"height", s.height.str()},
                      {"left", s.left.str()}});
  return {{"kind", "grounded"}, {"n", rep.n()}, {"shapes", shapes}};
}

inline json to_json(const StickRep& rep) {
  json sticks = json::array();
  for (const auto& s : rep.sticks)
    sticks.push_back({{"v", s.vertex},
                      {"side", s.side == Side::A ? "A" : "B"},
                      {"pos", s.pos.str()},
                      {"len", s.len.str()}});
  return {{"kind", "stick"}, {"n", rep.n()}, {"sticks", sticks}};
}

inline json to_json(const GridRep& rep) {
  json segs = json::array();
  for (const auto& s : rep.segments)
    segs.push_back({{"v", s.vertex},
                    {"x1", s.seg.p1().x.str()},
                    {"y1", s.seg.p1().y.str()},
                    {"x2", s.seg.p2().x.str()},
                    {"y2", s.seg.p2().y.str()}});
  return {{"kind", "grid"}, {"n", rep.n()}, {"segments", segs}};
}

template <class Rep>
void check_count(const Rep& rep, const json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() != rep.n())
    throw InvalidInput("field 'n' does not match the number of records");
}

inline const json& records(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw InvalidInput(std::string("missing array '") + key + "'");
  return doc[key];
}

}  // namespace detail

inline std::string serialize_rep(const AnyRep& rep) {
  return std::visit([](const auto& r) { return detail::to_json(r).dump(1) + "\n"; }, rep);
}

/// Reads any of the three representation documents. Records may come in any
/// order; they are sorted by vertex.
inline AnyRep parse_rep(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto upto = std::min<std::size_t>(e.byte, text.size());
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(line, "malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw InvalidInput("representation document needs a string field 'kind'");
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "grounded") {
    GroundedLRep rep;
    for (const auto& r : detail::records(doc, "shapes"))
      rep.shapes.push_back({detail::vertex_field(r), detail::field(r, "anchor"),
                            detail::field(r, "height"), detail::field(r, "left")});
    rep.sort();
    detail::check_count(rep, doc);
    return rep;
  }
  if (kind == "stick") {
    StickRep rep;
    for (const auto& r : detail::records(doc, "sticks")) {
      if (!r.contains("side") || !r["side"].is_string())
        throw InvalidInput("stick record lacks 'side'");
      auto side = r["side"].get<std::string>();
      if (side != "A" && side != "B") throw InvalidInput("stick side must be A or B");
      rep.sticks.push_back({detail::vertex_field(r), side == "A" ? Side::A : Side::B,
                            detail::field(r, "pos"), detail::field(r, "len")});
    }
    rep.sort();
    detail::check_count(rep, doc);
    return rep;
  }
  if (kind == "grid") {
    GridRep rep;
    for (const auto& r : detail::records(doc, "segments"))
      rep.segments.push_back(
          {detail::vertex_field(r),
           Segment({detail::field(r, "x1"), detail::field(r, "y1")},
                   {detail::field(r, "x2"), detail::field(r, "y2")})});
    rep.sort();
    detail::check_count(rep, doc);
    return rep;
  }
  throw InvalidInput("unknown representation kind '" + kind + "'");
}

}  // namespace gstab
