#include "catch_amalgamated.hpp"
#include "corpus.hpp"

using namespace thinposet;
using io::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("poset round trip") {
  for (const auto& [name, p] : corpus::cw_posets()) {
    INFO(name);
    const json j = io::to_json(p);
    CHECK(io::poset_from_json(json::parse(j.dump())) == p);
  }
  const Poset b1 = boolean_lattice(1);
  CHECK(io::to_json(b1).dump() == R"({"elements":["{}","{1}"],"covers":[["{}","{1}"]]})");
  CHECK(kind_of([] { io::poset_from_json(json::parse(R"({"covers":[]})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::poset_from_json(json::parse(R"({"elements":["a"],"covers":[["a"]]})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::poset_from_json(json::parse(R"({"elements":["a","b"],"covers":[["a","c"]]})")); }) ==
        ErrorKind::UnknownElement);
}

TEST_CASE("coloring and potential round trips") {
  const Poset b3 = boolean_lattice(3);
  const EdgeColoring c = *find_balanced_coloring(b3);
  CHECK(io::coloring_from_json(b3, io::to_json(b3, c)) == c);
  const Potential f = greedy_potential(b3, central_coloring_basis(b3)[2]);
  CHECK(io::potential_from_json(b3, io::to_json(b3, f)) == f);
  json partial = io::to_json(b3, c);
  partial["edges"].erase(0);
  CHECK(kind_of([&] { io::coloring_from_json(b3, partial); }) == ErrorKind::DomainMismatch);
  json bad = io::to_json(b3, c);
  bad["edges"][0][2] = 2;
  CHECK(kind_of([&] { io::coloring_from_json(b3, bad); }) == ErrorKind::InvalidInput);
  json noncover = json::parse(R"({"edges":[["{}","{1,2}",1]]})");
  CHECK(kind_of([&] { io::coloring_from_json(b3, noncover); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("functor round trip") {
  for (const auto& [name, f, graded] : corpus::functors()) {
    INFO(name);
    const FreeFunctor g = io::functor_from_json(json::parse(io::to_json(f).dump()));
    CHECK(g.poset == f.poset);
    CHECK(g.dims == f.dims);
    CHECK(g.maps == f.maps);
    CHECK(g.ring == f.ring);
  }
  FreeFunctor f = constant_functor(boolean_lattice(2), 1, BaseRing::prime_field(3));
  CHECK(io::functor_from_json(io::to_json(f)).ring == BaseRing::prime_field(3));
  json j = io::to_json(f);
  j["maps"]["{},{1,2}"] = json::array({json::array({1})});
  CHECK_THROWS_AS(io::functor_from_json(j), Error);
  json shape = io::to_json(f);
  shape["maps"]["{},{1}"] = json::array({json::array({1, 2})});
  CHECK(kind_of([&] { io::functor_from_json(shape); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("link diagram round trip") {
  for (const char* name : {"unknot.json", "hopf.json", "trefoil_left.json", "figure_eight.json"}) {
    INFO(name);
    const LinkDiagram d = corpus::diagram(name);
    const LinkDiagram e = io::diagram_from_json(io::to_json(d));
    CHECK(e.pd() == d.pd());
    CHECK(e.signs() == d.signs());
    CHECK(e.loops() == d.loops());
  }
  CHECK(kind_of([] { io::diagram_from_json(json::parse(R"({"pd":[[1,2,3]]})")); }) == ErrorKind::MalformedPD);
}

TEST_CASE("Laurent polynomial round trip") {
  const LaurentPoly p = LaurentPoly::monomial(-3, 2) + LaurentPoly::monomial(5, -1) + LaurentPoly(7);
  CHECK(io::laurent_from_json(io::to_json(p)) == p);
  CHECK(io::to_json(p).dump() == R"({"-3":2,"0":7,"5":-1})");
}

TEST_CASE("complex and result round trips") {
  std::mt19937_64 rng(31);
  for (const auto& [name, f, graded] : corpus::functors()) {
    INFO(name);
    const auto c = f.poset.bottom() ? find_balanced_coloring(f.poset) : find_bottom_extendable_coloring(f.poset);
    const auto cx = assemble(f, *c);
    CHECK(io::complex_from_json(json::parse(io::to_json(cx).dump())) == cx);
    const auto r = cohomology(cx, graded);
    CHECK(io::result_from_json(json::parse(io::to_json(r).dump())) == r);
  }
  const auto ho = assemble(constant_functor(bruhat_order(3)), *find_balanced_coloring(bruhat_order(3)), Direction::Homological);
  CHECK(io::complex_from_json(io::to_json(ho)) == ho);
  const auto kh = khovanov_complex(corpus::diagram("trefoil_left.json"));
  CHECK(io::complex_from_json(io::to_json(kh)) == kh);
}

TEST_CASE("large torsion is written as a string") {
  const BigInt big("123456789012345678901234567890");
  const json j = io::torsion_to_json({BigInt(2), big});
  CHECK(j[0] == 2);
  CHECK(j[1] == "123456789012345678901234567890");
  CHECK(io::torsion_from_json(j) == std::vector<BigInt>{2, big});
}

TEST_CASE("facet lists") {
  CHECK(corpus::facets("hexagon_boundary.json").size() == 6);
  CHECK_THROWS_AS(io::facets_from_json(json::parse(R"({"a":1})")), Error);
}
