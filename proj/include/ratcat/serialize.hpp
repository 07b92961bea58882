#pragma once

// JSON forms of the library values. Every to_json has a matching parser.

#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcat/glue.hpp"
#include "ratcat/qtpoly.hpp"

namespace ratcat {

using Json = nlohmann::ordered_json;

namespace detail {

inline GridParams params_from_json(const Json& j) {
  try {
    return GridParams(j.at("n").get<int>(), j.at("m").get<int>(), j.value("d", 1));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("bad parameters: ") + e.what());
  }
}

// Coefficients stay exact: numbers while they fit in 64 bits, decimal strings beyond.
inline Json coefficient_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

inline BigInt coefficient_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

}  // namespace detail

inline Json to_json(const GridParams& p) { return {{"n", p.n()}, {"m", p.m()}, {"d", p.d()}}; }

inline Json to_json(const DyckPath& D) {
  Json j = to_json(D.params());
  j["steps"] = D.steps();
  return j;
}

inline DyckPath path_from_json(const Json& j) {
  return DyckPath::parse(j.at("steps").get<std::string>(), detail::params_from_json(j));
}

inline Json to_json(const InvariantSet& s) {
  Json j = to_json(s.params());
  j["generators"] = generators_n(s);
  return j;
}

inline InvariantSet invset_from_json(const Json& j) {
  const auto gens = j.at("generators").get<std::vector<Int>>();
  return InvariantSet::from_generators(detail::params_from_json(j), gens);
}

inline Json to_json(const Skeleton& sk) {
  Json out = Json::array();
  for (const auto& e : sk.entries)
    out.push_back({{"value", e.value},
                   {"kind", e.kind == SkeletonKind::Generator ? "generator" : "cogenerator"},
                   {"residue", e.residue}});
  return out;
}

inline Skeleton skeleton_from_json(const GridParams& p, const Json& j) {
  std::vector<Int> values;
  for (const auto& e : j) values.push_back(e.at("value").get<Int>());
  Skeleton sk = skeleton(InvariantSet::from_skeleton(p, values));
  for (std::size_t k = 0; k < sk.entries.size(); ++k) {
    const std::string kind = j[k].at("kind").get<std::string>();
    const auto expect = sk.entries[k].kind == SkeletonKind::Generator ? "generator" : "cogenerator";
    ensure(j[k].at("value").get<Int>() == sk.entries[k].value && kind == expect,
           ErrorKind::InvalidSkeleton, "skeleton entries are out of order or mislabeled");
  }
  return sk;
}

inline Json to_json(const QTPoly& poly) {
  Json out = Json::array();
  for (const auto& [k, c] : poly.terms())
    out.push_back({{"q", k.first}, {"t", k.second}, {"c", detail::coefficient_to_json(c)}});
  return out;
}

inline QTPoly poly_from_json(const Json& j) {
  QTPoly p;
  for (const auto& term : j)
    p.add(term.at("q").get<Int>(), term.at("t").get<Int>(), detail::coefficient_from_json(term.at("c")));
  return p;
}

inline Json to_json(const QTSeries& s) { return {{"q_cutoff", s.q_cutoff}, {"terms", to_json(s.poly)}}; }

inline QTSeries series_from_json(const Json& j) {
  return {poly_from_json(j.at("terms")), j.at("q_cutoff").get<Int>()};
}

inline Json to_json(const LabeledDigraph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges) edges.push_back({i, j});
  return {{"n", g.params.n()}, {"m", g.params.m()}, {"labels", g.labels},
          {"edges", edges},    {"source", g.source}};
}

inline LabeledDigraph graph_from_json(const Json& j) {
  LabeledDigraph g;
  g.labels = j.at("labels").get<std::vector<std::vector<Int>>>();
  g.params = GridParams(j.at("n").get<int>(), j.at("m").get<int>(), int(g.labels.size()));
  for (const auto& e : j.at("edges")) g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  std::sort(g.edges.begin(), g.edges.end());
  g.source = j.at("source").get<int>();
  validate_graph(g);
  return g;
}

inline Json to_json(const ColoredPath& c) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < c.components.size(); ++i)
    comps.push_back({{"color", i}, {"steps", c.components[i].steps()}});
  Json j = to_json(c.base.params());
  j["steps"] = c.base.steps();
  j["colors"] = c.colors;
  j["components"] = comps;
  return j;
}

inline ColoredPath colored_from_json(const Json& j) {
  const DyckPath base = path_from_json(j);
  const GridParams cp = base.params().coprime();
  ColoredPath c{base, j.at("colors").get<std::vector<int>>(), {}};
  for (const auto& comp : j.at("components"))
    c.components.push_back(DyckPath::parse(comp.at("steps").get<std::string>(), cp));
  return c;
}

}  // namespace ratcat
