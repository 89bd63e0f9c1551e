// thinposet: build thin posets, analyze them, and compute functor cohomology.
//
// Exit codes: 0 ok, 2 bad parameters, 3 input is not a valid poset,
// 4 the computation is mathematically infeasible.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thinposet/thinposet.hpp"

namespace {

using namespace thinposet;
using io::json;

constexpr int kBadParams = 2;
constexpr int kBadPoset = 3;
constexpr int kInfeasible = 4;

struct ExitError {
  int code;
  std::string message;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kBadParams, "cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path, int code_on_failure) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ExitError{code_on_failure, path + ": " + e.what()};
  }
}

Poset read_poset(const std::string& path) {
  const json j = read_json(path, kBadPoset);
  try {
    return io::poset_from_json(j);
  } catch (const Error& e) {
    throw ExitError{kBadPoset, path + ": " + e.what()};
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyPoset:
    case ErrorKind::UnknownElement:
    case ErrorKind::CycleError:
    case ErrorKind::NotGraded:
    case ErrorKind::NotReduced:
      return kBadPoset;
    case ErrorKind::NotThin:
    case ErrorKind::NotDiamondTransitive:
    case ErrorKind::NotTransitiveNoCleanWitness:
    case ErrorKind::NoBottom:
    case ErrorKind::NotCentral:
    case ErrorKind::NotBalanced:
    case ErrorKind::NotFunctorial:
    case ErrorKind::DSquaredNonzero:
    case ErrorKind::NaturalityViolated:
    case ErrorKind::ColoringIncompatible:
    case ErrorKind::IntervalTooLarge:
      return kInfeasible;
    default:
      return kBadParams;
  }
}

json ids_json(const Poset& p, const std::vector<Element>& elements) { return ids_of(p, elements); }

json analyze(const Poset& p) {
  json r;
  r["elements"] = p.size();
  r["covers"] = p.covers().size();
  r["graded"] = true;
  const Verdict thin = is_thin(p);
  r["thin"] = thin.holds;
  if (thin.witness) r["thin_witness"] = {p.id(thin.witness->first), p.id(thin.witness->second)};
  const Verdict eul = is_eulerian(p);
  r["eulerian"] = eul.holds;
  if (eul.witness) r["eulerian_witness"] = {p.id(eul.witness->first), p.id(eul.witness->second)};
  if (!thin) {
    for (const char* k : {"diamond_transitive", "balanced_colorable", "n_diamonds", "h1_z2", "h2_z2"}) r[k] = nullptr;
    return r;
  }
  r["n_diamonds"] = enumerate_diamonds(p).size();
  r["interval_shape"] = interval_shape_check(p).holds;
  const TransitivityReport dt = is_diamond_transitive(p);
  r["diamond_transitive"] = dt.transitive;
  if (dt.witness) {
    const auto& w = *dt.witness;
    json wj = {{"bottom", p.id(w.bottom)},
               {"top", p.id(w.top)},
               {"chains", {ids_json(p, w.first.elements), ids_json(p, w.second.elements)}}};
    if (auto pw = pinch_witness(p)) wj["pinch"] = {ids_json(p, pw->part_c), ids_json(p, pw->part_d)};
    r["witness"] = wj;
  }
  r["balanced_colorable"] = find_balanced_coloring(p).has_value();
  const DiamondSpace ds = diamond_space(p);
  const std::size_t h1 = h1_z2(ds);
  r["h1_z2"] = h1;
  r["h2_z2"] = h2_z2(ds);
  if (!p.bottom()) {
    r["h1_check"] = "skipped: no unique minimal element";
  } else if (dt.transitive) {
    r["h1_check"] = h1 == 0 ? "consistent" : "violated";
  } else {
    r["h1_check"] = "not applicable";
  }
  return r;
}

// Colorings that extend over an adjoined bottom come first, so posets
// without a 0̂ (cell posets) get the untwisted complex by default.
std::vector<EdgeColoring> candidate_colorings(const Poset& p, std::size_t limit) {
  auto v = bottom_extendable_colorings(p, limit);
  if (v.empty()) v = balanced_coloring_family(p, limit);
  if (v.empty()) throw ExitError{kInfeasible, "no balanced coloring exists for this poset"};
  return v;
}

struct CohomologyOptions {
  std::string functor_path;
  std::string coloring_path;
  std::string ring;
  std::string direction = "cohomological";
  std::string khovanov_path;
  std::string constant_path;
  std::size_t dim = 1;
  bool graded = false;
  std::optional<std::uint64_t> seed;
};

json cohomology_report(const CohomologyOptions& o) {
  const int sources = !o.functor_path.empty() + !o.khovanov_path.empty() + !o.constant_path.empty();
  if (sources != 1) throw ExitError{kBadParams, "give exactly one of FUNCTOR, --khovanov, --constant"};
  std::optional<LinkDiagram> diagram;
  FreeFunctor f = [&] {
    if (!o.khovanov_path.empty()) {
      diagram = io::diagram_from_json(read_json(o.khovanov_path, kBadParams));
      return cube_functor(*diagram);
    }
    if (!o.constant_path.empty()) return constant_functor(read_poset(o.constant_path), o.dim);
    const json j = read_json(o.functor_path, kBadParams);
    try {
      return io::functor_from_json(j);
    } catch (const Error& e) {
      throw ExitError{exit_code_for(e.kind()), o.functor_path + ": " + e.what()};
    }
  }();
  if (!o.ring.empty()) f.ring = BaseRing::parse(o.ring);
  const Direction dir = parse_direction(o.direction);
  const bool graded = o.graded || diagram.has_value();
  const Poset& p = f.poset;
  if (!is_thin(p)) throw ExitError{kInfeasible, "poset is not thin"};

  EdgeColoring c;
  std::string source;
  if (!o.coloring_path.empty()) {
    c = io::coloring_from_json(p, read_json(o.coloring_path, kBadParams));
    source = "file";
  } else if (o.seed) {
    const auto family = candidate_colorings(p, 64);
    std::mt19937_64 rng(*o.seed);
    c = family[rng() % family.size()];
    source = "seed " + std::to_string(*o.seed);
  } else {
    c = candidate_colorings(p, 1).front();
    source = p.bottom() || !find_bottom_extendable_coloring(p) ? "solver" : "solver, extended over an adjoined bottom";
  }
  if (!is_balanced(p, c)) throw ExitError{kInfeasible, "supplied coloring is not balanced"};

  CochainComplex cx = assemble(f, c, dir);
  LaurentPoly alternator = rank_alternator(p, [&](Element e) { return graded_rank(f, e); });
  if (diagram) {
    cx = shift(std::move(cx), -diagram->n_minus(), diagram->n_plus() - 2 * diagram->n_minus());
    alternator = alternator.shifted(diagram->n_plus() - 2 * diagram->n_minus());
    if (diagram->n_minus() % 2 != 0) alternator = -alternator;
  }
  const CohomologyResult h = cohomology(cx, graded);
  LaurentPoly chi_c = euler_characteristic(cx);
  if (!graded) {
    chi_c = LaurentPoly(chi_c.at_one());
    alternator = LaurentPoly(alternator.at_one());
  }
  const LaurentPoly chi_h = euler_characteristic(h);

  json r;
  r["coloring"] = source;
  json dims = json::array();
  for (std::size_t i = 0; i < cx.size(); ++i) dims.push_back({{"degree", cx.degree(i)}, {"dim", cx.dim(i)}});
  r["complex"] = dims;
  r["result"] = io::to_json(h);
  r["euler_characteristic"] = {{"complex", io::to_json(chi_c)},
                               {"cohomology", io::to_json(chi_h)},
                               {"rank_alternator", io::to_json(alternator)},
                               {"consistent", chi_c == chi_h && chi_h == alternator},
                               {"text", chi_h.to_string()}};
  if (diagram) {
    const LaurentPoly jones = shifted_bracket(*diagram);
    r["khovanov"] = {{"n_plus", diagram->n_plus()},
                     {"n_minus", diagram->n_minus()},
                     {"jones", io::to_json(jones)},
                     {"jones_text", jones.to_string()},
                     {"jones_check", jones == chi_h}};
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thin posets, diamond transitivity, balanced colorings and functor cohomology"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");

  auto* build = app.add_subcommand("build", "Construct a poset and print it as JSON");
  build->require_subcommand(1);
  int n = 0;
  auto* b_bool = build->add_subcommand("boolean", "Boolean lattice of subsets of {1..N}");
  b_bool->add_option("N", n)->required();
  auto* b_bruhat = build->add_subcommand("bruhat", "Bruhat order on permutations of N letters");
  b_bruhat->add_option("N", n)->required();
  auto* b_polygon = build->add_subcommand("polygon", "Face poset of a K-gon");
  b_polygon->add_option("K", n)->required();
  std::string path_a, path_b;
  bool no_empty = false;
  auto* b_simp = build->add_subcommand("simplicial", "Face poset of a simplicial complex given by facets");
  b_simp->add_option("FACETS", path_a, "JSON list of facets")->required();
  b_simp->add_flag("--no-empty", no_empty, "Omit the empty face");
  auto* b_pinch = build->add_subcommand("pinch", "Pinch product of two bounded posets");
  b_pinch->add_option("A", path_a)->required();
  b_pinch->add_option("B", path_b)->required();
  auto* b_top = build->add_subcommand("adjoin-top", "Adjoin a new maximum");
  b_top->add_option("POSET", path_a)->required();
  auto* b_bottom = build->add_subcommand("adjoin-bottom", "Adjoin a new minimum");
  b_bottom->add_option("POSET", path_a)->required();

  auto* an = app.add_subcommand("analyze", "Report structural properties of a poset");
  an->add_option("POSET", path_a, "Poset JSON ('-' for stdin)")->required();

  CohomologyOptions co;
  auto* coh = app.add_subcommand("cohomology", "Cohomology of a functor with a balanced coloring");
  coh->add_option("FUNCTOR", co.functor_path, "Functor JSON");
  coh->add_option("--coloring", co.coloring_path, "Balanced coloring JSON");
  coh->add_option("--ring", co.ring, "Z, Q or Fp:p (overrides the functor's ring)");
  coh->add_flag("--graded", co.graded, "Split by q-degree");
  coh->add_option("--direction", co.direction, "cohomological or homological")
      ->check(CLI::IsMember({"cohomological", "homological"}));
  coh->add_option("--seed", co.seed, "Pick a pseudo-random balanced coloring");
  coh->add_option("--khovanov", co.khovanov_path, "PD code JSON; computes Khovanov homology");
  coh->add_option("--constant", co.constant_path, "Poset JSON; uses the constant functor");
  coh->add_option("--dim", co.dim, "Rank of the constant functor")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadParams;
  }

  try {
    json result;
    if (build->parsed()) {
      if (b_bool->parsed()) result = io::to_json(boolean_lattice(n));
      if (b_bruhat->parsed()) result = io::to_json(bruhat_order(n));
      if (b_polygon->parsed()) result = io::to_json(polygon_face_poset(n));
      if (b_simp->parsed())
        result = io::to_json(face_poset_simplicial(io::facets_from_json(read_json(path_a, kBadParams)), !no_empty));
      if (b_pinch->parsed()) result = io::to_json(pinch_product(read_poset(path_a), read_poset(path_b)));
      if (b_top->parsed()) result = io::to_json(adjoin_top(read_poset(path_a)));
      if (b_bottom->parsed()) result = io::to_json(adjoin_bottom(read_poset(path_a)));
    } else if (an->parsed()) {
      result = analyze(read_poset(path_a));
    } else {
      result = cohomology_report(co);
    }
    const std::string text = result.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw ExitError{kBadParams, "cannot write '" + out_path + "'"};
      out << text;
    }
    return 0;
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}
