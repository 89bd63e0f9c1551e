#pragma once

// JSON encodings of posets, colorings, potentials, functors, PD codes,
// complexes and cohomology results.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinposet/coloring.hpp"
#include "thinposet/functor_complex.hpp"
#include "thinposet/khovanov.hpp"
#include "thinposet/poset.hpp"

namespace thinposet::io {

using json = nlohmann::ordered_json;

namespace detail {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("field '") + key + "': " + e.what());
  }
}

inline int sign_of(const json& v) {
  if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
    fail(ErrorKind::InvalidInput, "expected +1 or -1, got " + v.dump());
  return v.get<int>();
}

inline json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline BigInt big_from_json(const json& v) {
  if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return BigInt(v.get<std::string>());
  fail(ErrorKind::InvalidInput, "expected an integer, got " + v.dump());
}

inline json matrix_to_json(const IntMatrix& m) { return m.to_rows(); }

inline IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail(ErrorKind::ShapeMismatch, "matrix must be an array of rows");
  if (rows == 0) {
    if (!j.empty()) fail(ErrorKind::ShapeMismatch, "matrix into a zero module must be empty");
    return IntMatrix(0, cols);
  }
  if (cols == 0 && j.empty()) return IntMatrix(rows, 0);
  if (j.size() != rows) fail(ErrorKind::ShapeMismatch, "matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      fail(ErrorKind::ShapeMismatch, "matrix row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) fail(ErrorKind::InvalidInput, "matrix entries must be integers");
      m(r, c) = j[r][c].get<std::int64_t>();
    }
  }
  return m;
}

}  // namespace detail

// Poset: {"elements":[...], "covers":[[x,y],...]}, covers sorted.

inline json to_json(const Poset& p) {
  json covers = json::array();
  for (const auto& [a, b] : p.cover_pairs()) covers.push_back({a, b});
  return {{"elements", p.ids()}, {"covers", covers}};
}

inline Poset poset_from_json(const json& j) {
  auto elements = detail::get<std::vector<std::string>>(j, "elements");
  auto raw = detail::get<std::vector<std::vector<std::string>>>(j, "covers");
  std::vector<Poset::IdPair> covers;
  covers.reserve(raw.size());
  for (const auto& c : raw) {
    if (c.size() != 2) fail(ErrorKind::InvalidInput, "each cover must be a pair [x,y]");
    covers.emplace_back(c[0], c[1]);
  }
  return Poset::from_cover_relations(std::move(elements), covers);
}

// Edge coloring: {"edges":[[x,y,±1],...]}, in cover order.

inline json to_json(const Poset& p, const EdgeColoring& c) {
  check_domain(p, c);
  json edges = json::array();
  for (std::size_t i = 0; i < c.values.size(); ++i)
    edges.push_back({p.id(p.covers()[i].lower), p.id(p.covers()[i].upper), c.values[i]});
  return {{"edges", edges}};
}

inline EdgeColoring coloring_from_json(const Poset& p, const json& j) {
  const auto edges = detail::get<json>(j, "edges");
  if (!edges.is_array()) fail(ErrorKind::InvalidInput, "'edges' must be an array");
  EdgeColoring c{std::vector<int>(p.covers().size(), 0)};
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      fail(ErrorKind::InvalidInput, "each edge must be [x, y, sign]");
    const auto i = p.cover_index(p.at(e[0].get<std::string>()), p.at(e[1].get<std::string>()));
    if (!i) fail(ErrorKind::DomainMismatch, "(" + e[0].get<std::string>() + "," + e[1].get<std::string>() + ") is not a cover");
    if (c.values[*i] != 0) fail(ErrorKind::InvalidInput, "edge listed twice");
    c.values[*i] = detail::sign_of(e[2]);
  }
  for (int v : c.values)
    if (v == 0) fail(ErrorKind::DomainMismatch, "coloring must assign every cover");
  return c;
}

// Potential: {"values":[[x,±1],...]}, in id order.

inline json to_json(const Poset& p, const Potential& f) {
  json values = json::array();
  for (Element e : p.by_id()) values.push_back({p.id(e), f.values.at(e)});
  return {{"values", values}};
}

inline Potential potential_from_json(const Poset& p, const json& j) {
  const auto values = detail::get<json>(j, "values");
  Potential f{std::vector<int>(p.size(), 0)};
  for (const auto& v : values) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string()) fail(ErrorKind::InvalidInput, "each value must be [x, sign]");
    int& slot = f.values[p.at(v[0].get<std::string>())];
    if (slot != 0) fail(ErrorKind::InvalidInput, "element listed twice");
    slot = detail::sign_of(v[1]);
  }
  for (int v : f.values)
    if (v == 0) fail(ErrorKind::DomainMismatch, "potential must assign every element");
  return f;
}

// Functor: {"poset":..., "dims":{x:[q,...]}, "maps":{"x,y":[[...]]}, "ring":"Z"}.
// Maps between zero-rank modules may be omitted.

inline json to_json(const FreeFunctor& f) {
  const Poset& p = f.poset;
  json dims = json::object();
  for (Element e : p.by_id()) dims[p.id(e)] = f.dims[e];
  json maps = json::object();
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    const Cover& c = p.covers()[i];
    maps[p.id(c.lower) + "," + p.id(c.upper)] = detail::matrix_to_json(f.maps[i]);
  }
  return {{"poset", to_json(p)}, {"dims", dims}, {"maps", maps}, {"ring", f.ring.to_string()}};
}

inline FreeFunctor functor_from_json(const json& j) {
  Poset p = poset_from_json(detail::get<json>(j, "poset"));
  const auto dims = detail::get<json>(j, "dims");
  const auto maps = j.contains("maps") ? j.at("maps") : json::object();
  FreeFunctor f{p, std::vector<std::vector<int>>(p.size()), {}, BaseRing::parse(j.value("ring", std::string("Z")))};
  if (!dims.is_object()) fail(ErrorKind::InvalidInput, "'dims' must map element ids to q-degree lists");
  std::vector<char> seen(p.size(), 0);
  for (const auto& [id, qs] : dims.items()) {
    const Element e = p.at(id);
    try {
      f.dims[e] = qs.get<std::vector<int>>();
    } catch (const json::exception&) {
      fail(ErrorKind::InvalidInput, "dims of '" + id + "' must be a list of integers");
    }
    seen[e] = 1;
  }
  for (Element e = 0; e < p.size(); ++e)
    if (!seen[e]) fail(ErrorKind::ShapeMismatch, "dims missing for '" + p.id(e) + "'");
  // Keys "x,y" are matched against the known covers since ids may contain commas.
  std::map<std::string, std::size_t> key_to_cover;
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const Cover& c = p.covers()[i];
    if (!key_to_cover.emplace(p.id(c.lower) + "," + p.id(c.upper), i).second)
      fail(ErrorKind::InvalidInput, "ambiguous map key for cover (" + p.id(c.lower) + "," + p.id(c.upper) + ")");
  }
  std::vector<std::optional<IntMatrix>> parsed(p.covers().size());
  if (!maps.is_object()) fail(ErrorKind::InvalidInput, "'maps' must be an object keyed by \"x,y\"");
  for (const auto& [key, m] : maps.items()) {
    auto it = key_to_cover.find(key);
    if (it == key_to_cover.end()) fail(ErrorKind::UnknownElement, "map key '" + key + "' is not a cover");
    const Cover& c = p.covers()[it->second];
    parsed[it->second] = detail::matrix_from_json(m, f.rank(c.upper), f.rank(c.lower));
  }
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const Cover& c = p.covers()[i];
    if (!parsed[i]) {
      if (f.rank(c.upper) != 0 && f.rank(c.lower) != 0)
        fail(ErrorKind::ShapeMismatch, "map missing for cover (" + p.id(c.lower) + "," + p.id(c.upper) + ")");
      parsed[i] = IntMatrix(f.rank(c.upper), f.rank(c.lower));
    }
    f.maps.push_back(*parsed[i]);
  }
  validate_functor(f);
  return f;
}

// PD code: {"pd":[[a,b,c,d],...], "signs":[±1,...], "loops":n}.

inline json to_json(const LinkDiagram& d) {
  json pd = json::array();
  for (const auto& x : d.pd()) pd.push_back(std::vector<int>(x.begin(), x.end()));
  return {{"pd", pd}, {"signs", d.signs()}, {"loops", d.loops()}};
}

inline LinkDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pd")) fail(ErrorKind::MalformedPD, "missing field 'pd'");
  std::vector<Crossing> pd;
  for (const auto& x : j.at("pd")) {
    if (!x.is_array() || x.size() != 4) fail(ErrorKind::MalformedPD, "each crossing must list 4 arc labels");
    Crossing c{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!x[i].is_number_integer()) fail(ErrorKind::MalformedPD, "arc labels must be integers");
      c[i] = x[i].get<int>();
    }
    pd.push_back(c);
  }
  std::vector<int> signs;
  if (j.contains("signs"))
    for (const auto& s : j.at("signs")) {
      if (!s.is_number_integer()) fail(ErrorKind::MalformedPD, "signs must be +1 or -1");
      signs.push_back(s.get<int>());
    }
  std::optional<int> loops;
  if (j.contains("loops")) {
    if (!j.at("loops").is_number_integer()) fail(ErrorKind::MalformedPD, "loops must be an integer");
    loops = j.at("loops").get<int>();
  }
  return LinkDiagram::make(std::move(pd), std::move(signs), loops);
}

// Simplicial complex: a list of facets, each a list of integer vertices.

inline std::vector<std::vector<int>> facets_from_json(const json& j) {
  try {
    return j.get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    fail(ErrorKind::InvalidInput, "facets must be a list of integer lists");
  }
}

inline json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.coefficients()) out[std::to_string(e)] = c;
  return out;
}

inline LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& [e, c] : j.items()) p.add(std::stoi(e), c.get<std::int64_t>());
  return p;
}

// Complex: direction, ring, one entry per degree with blocks and q-degrees,
// one matrix per differential.

inline json to_json(const CochainComplex& cx) {
  json degrees = json::array();
  for (std::size_t i = 0; i < cx.size(); ++i) {
    json blocks = json::array();
    for (const Block& b : cx.blocks[i]) blocks.push_back({{"element", b.element}, {"offset", b.offset}, {"size", b.size}});
    degrees.push_back({{"degree", cx.degree(i)}, {"dim", cx.dim(i)}, {"blocks", blocks}, {"q", cx.qdegrees[i]}});
  }
  json diffs = json::array();
  for (std::size_t i = 0; i < cx.maps.size(); ++i) {
    const bool co = cx.direction == Direction::Cohomological;
    const int from = co ? cx.degree(i) : cx.degree(i + 1);
    const int to = co ? cx.degree(i + 1) : cx.degree(i);
    diffs.push_back({{"from", from}, {"to", to}, {"matrix", detail::matrix_to_json(cx.maps[i])}});
  }
  return {{"direction", to_string(cx.direction)}, {"ring", cx.ring.to_string()}, {"degrees", degrees},
          {"differentials", diffs}};
}

inline CochainComplex complex_from_json(const json& j) {
  CochainComplex cx;
  cx.direction = parse_direction(detail::get<std::string>(j, "direction"));
  cx.ring = BaseRing::parse(detail::get<std::string>(j, "ring"));
  const auto degrees = detail::get<json>(j, "degrees");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const auto& g = degrees[i];
    if (i == 0) cx.first_degree = detail::get<int>(g, "degree");
    if (detail::get<int>(g, "degree") != cx.degree(i)) fail(ErrorKind::InvalidInput, "degrees must be consecutive");
    std::vector<Block> blocks;
    for (const auto& b : detail::get<json>(g, "blocks"))
      blocks.push_back({detail::get<std::string>(b, "element"), detail::get<std::size_t>(b, "offset"),
                        detail::get<std::size_t>(b, "size")});
    cx.blocks.push_back(std::move(blocks));
    cx.qdegrees.push_back(detail::get<std::vector<int>>(g, "q"));
    if (cx.qdegrees.back().size() != detail::get<std::size_t>(g, "dim"))
      fail(ErrorKind::ShapeMismatch, "q list length differs from dim");
  }
  const auto diffs = detail::get<json>(j, "differentials");
  if (diffs.size() + 1 != cx.size() && !(cx.size() == 0 && diffs.empty()))
    fail(ErrorKind::ShapeMismatch, "expected one differential between consecutive degrees");
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const bool co = cx.direction == Direction::Cohomological;
    const std::size_t rows = co ? cx.dim(i + 1) : cx.dim(i);
    const std::size_t cols = co ? cx.dim(i) : cx.dim(i + 1);
    cx.maps.push_back(detail::matrix_from_json(detail::get<json>(diffs[i], "matrix"), rows, cols));
  }
  return cx;
}

inline json torsion_to_json(const std::vector<BigInt>& t) {
  json out = json::array();
  for (const auto& v : t) out.push_back(detail::big_to_json(v));
  return out;
}

inline std::vector<BigInt> torsion_from_json(const json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(detail::big_from_json(v));
  return out;
}

inline json to_json(const CohomologyResult& r) {
  json groups = json::array();
  for (const auto& g : r.groups) {
    json entry = {{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion_to_json(g.torsion)}};
    if (r.graded) {
      json q = json::array();
      for (const auto& piece : g.graded)
        q.push_back({{"q", piece.q}, {"betti", piece.betti}, {"torsion", torsion_to_json(piece.torsion)}});
      entry["q"] = q;
    }
    groups.push_back(entry);
  }
  return {{"ring", r.ring.to_string()}, {"direction", to_string(r.direction)}, {"graded", r.graded}, {"groups", groups}};
}

inline CohomologyResult result_from_json(const json& j) {
  CohomologyResult r;
  r.ring = BaseRing::parse(detail::get<std::string>(j, "ring"));
  r.direction = parse_direction(detail::get<std::string>(j, "direction"));
  r.graded = detail::get<bool>(j, "graded");
  for (const auto& g : detail::get<json>(j, "groups")) {
    CohomologyGroup grp;
    grp.degree = detail::get<int>(g, "degree");
    grp.betti = detail::get<std::size_t>(g, "betti");
    grp.torsion = torsion_from_json(detail::get<json>(g, "torsion"));
    if (r.graded)
      for (const auto& piece : detail::get<json>(g, "q"))
        grp.graded.push_back({detail::get<int>(piece, "q"), detail::get<std::size_t>(piece, "betti"),
                              torsion_from_json(detail::get<json>(piece, "torsion"))});
    r.groups.push_back(std::move(grp));
  }
  return r;
}

}  // namespace thinposet::io
