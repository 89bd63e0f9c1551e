#include "catch_amalgamated.hpp"
#include "corpus.hpp"

using namespace thinposet;

namespace {

using Table = std::map<std::pair<int, int>, std::size_t>;
using TorsionTable = std::map<std::pair<int, int>, std::vector<BigInt>>;

Table free_table(const CohomologyResult& r) {
  Table t;
  for (const auto& g : r.groups)
    for (const auto& piece : g.graded)
      if (piece.betti) t[{g.degree, piece.q}] = piece.betti;
  return t;
}

TorsionTable torsion_table(const CohomologyResult& r) {
  TorsionTable t;
  for (const auto& g : r.groups)
    for (const auto& piece : g.graded)
      if (!piece.torsion.empty()) t[{g.degree, piece.q}] = piece.torsion;
  return t;
}

const std::vector<std::string> kDiagrams{"unknot.json", "unlink2.json", "hopf.json", "trefoil_left.json",
                                         "trefoil_right.json", "figure_eight.json"};

}  // namespace

TEST_CASE("PD validation") {
  CHECK_THROWS_AS(LinkDiagram::make({{1, 1, 1, 2}}), Error);
  CHECK_THROWS_AS(LinkDiagram::make({{1, 2, 3, 4}}), Error);
  CHECK_THROWS_AS(LinkDiagram::make({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, {-1, -1}), Error);
  CHECK_THROWS_AS(LinkDiagram::make({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, {1, 1, 1}), Error);
  CHECK_THROWS_AS(LinkDiagram::make({}, {}, -1), Error);
  const LinkDiagram t = LinkDiagram::make({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}});
  CHECK(t.n_minus() == 3);
  CHECK(t.n_plus() == 0);
  CHECK(t.labels() == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(corpus::diagram("trefoil_right.json").n_plus() == 3);
  CHECK(corpus::diagram("figure_eight.json").n_plus() == 2);
  CHECK(corpus::diagram("figure_eight.json").n_minus() == 2);
  CHECK(corpus::diagram("hopf.json").n_minus() == 2);
  CHECK(LinkDiagram::make({}).loops() == 1);
}

TEST_CASE("Kauffman states") {
  CHECK(resolve(corpus::diagram("unknot.json"), 0).circles == 1);
  CHECK(resolve(corpus::diagram("unlink2.json"), 0).circles == 2);
  CHECK(resolve(corpus::diagram("hopf.json"), 0).circles == 2);
  const LinkDiagram t = corpus::diagram("trefoil_left.json");
  // subsets in lex order: {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}
  const std::uint64_t order[] = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  const std::size_t expect[] = {3, 2, 2, 2, 1, 1, 1, 2};
  for (int i = 0; i < 8; ++i) CHECK(resolve(t, order[i]).circles == expect[i]);
  CHECK_THROWS_AS(resolve(t, 0b1000), Error);
}

TEST_CASE("circle counts agree with walking the smoothed diagram") {
  for (const auto& name : kDiagrams) {
    INFO(name);
    const LinkDiagram d = corpus::diagram(name);
    const std::uint64_t n = d.crossings();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      CHECK(resolve(d, s).circles == oracle::circles(d, s));
      for (std::uint64_t i = 0; i < n; ++i) {
        if (s >> i & 1U) continue;
        const auto a = resolve(d, s).circles, b = resolve(d, s | std::uint64_t{1} << i).circles;
        CHECK((a == b + 1 || b == a + 1));
      }
    }
  }
}

TEST_CASE("Kauffman bracket") {
  const LaurentPoly v = LaurentPoly::quantum_two();
  CHECK(kauffman_bracket(corpus::diagram("unknot.json")) == v);
  CHECK(kauffman_bracket(corpus::diagram("unlink2.json")) == v * v);
  for (const auto& name : kDiagrams) {
    INFO(name);
    const LinkDiagram d = corpus::diagram(name);
    CHECK(oracle::as_map(shifted_bracket(d)) == oracle::jones_state_sum(d));
  }
}

TEST_CASE("cube functor objects") {
  const LinkDiagram t = corpus::diagram("trefoil_left.json");
  const FreeFunctor f = cube_functor(t);
  CHECK(f.poset.size() == 8);
  CHECK(check_functoriality(f).functorial);
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Element e = f.poset.at(subset_id(s));
    const auto circles = resolve(t, s).circles;
    CHECK(f.rank(e) == (std::size_t{1} << circles));
    CHECK(graded_rank(f, e) == LaurentPoly::quantum_two().pow(static_cast<unsigned>(circles)).shifted(std::popcount(s)));
  }
  for (const auto& name : kDiagrams) CHECK(check_functoriality(cube_functor(corpus::diagram(name))).functorial);
}

TEST_CASE("Khovanov homology of the unknot and unlink") {
  const auto r = khovanov_homology(corpus::diagram("unknot.json"));
  CHECK(free_table(r) == Table{{{0, -1}, 1}, {{0, 1}, 1}});
  CHECK(torsion_table(r).empty());
  const auto u = khovanov_homology(corpus::diagram("unlink2.json"));
  CHECK(free_table(u) == Table{{{0, -2}, 1}, {{0, 0}, 2}, {{0, 2}, 1}});
}

// Published Khovanov tables (external reference values).
TEST_CASE("Khovanov homology of small knots and links") {
  const auto hopf = khovanov_homology(corpus::diagram("hopf.json"));
  CHECK(free_table(hopf) == Table{{{-2, -6}, 1}, {{-2, -4}, 1}, {{0, -2}, 1}, {{0, 0}, 1}});
  CHECK(torsion_table(hopf).empty());

  const auto left = khovanov_homology(corpus::diagram("trefoil_left.json"));
  CHECK(free_table(left) == Table{{{-3, -9}, 1}, {{-2, -5}, 1}, {{0, -3}, 1}, {{0, -1}, 1}});
  CHECK(torsion_table(left) == TorsionTable{{{-2, -7}, {2}}});

  const auto right = khovanov_homology(corpus::diagram("trefoil_right.json"));
  CHECK(free_table(right) == Table{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}});
  CHECK(torsion_table(right) == TorsionTable{{{3, 7}, {2}}});

  const auto fig8 = khovanov_homology(corpus::diagram("figure_eight.json"));
  CHECK(free_table(fig8) == Table{{{-2, -5}, 1}, {{-1, -1}, 1}, {{0, -1}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 5}, 1}});
  CHECK(torsion_table(fig8) == TorsionTable{{{-1, -3}, {2}}, {{2, 3}, {2}}});
}

TEST_CASE("graded Euler characteristic is the unnormalized Jones polynomial") {
  for (const auto& name : kDiagrams) {
    INFO(name);
    const LinkDiagram d = corpus::diagram(name);
    const auto cx = khovanov_complex(d);
    CHECK(oracle::as_map(euler_characteristic(khovanov_homology(d))) == oracle::jones_state_sum(d));
    CHECK(euler_characteristic(cx) == euler_characteristic(khovanov_homology(d)));
  }
}

TEST_CASE("Khovanov homology does not depend on the balanced coloring") {
  for (const auto& name : {"trefoil_left.json", "figure_eight.json", "hopf.json"}) {
    INFO(name);
    const LinkDiagram d = corpus::diagram(name);
    const FreeFunctor f = cube_functor(d);
    const auto fam = balanced_coloring_family(f.poset, 4);
    REQUIRE(fam.size() == 4);
    const auto first = khovanov_homology(d, fam[0]);
    for (std::size_t i = 1; i < fam.size(); ++i) CHECK(khovanov_homology(d, fam[i]) == first);
  }
}
