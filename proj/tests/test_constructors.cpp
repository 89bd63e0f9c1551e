#include "catch_amalgamated.hpp"
#include "corpus.hpp"

using namespace thinposet;

namespace {

std::vector<std::size_t> rank_sizes(const Poset& p) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= p.length(); ++k) out.push_back(p.elements_of_rank(k).size());
  return out;
}

}  // namespace

TEST_CASE("boolean lattices") {
  for (int n = 0; n <= 6; ++n) {
    const Poset b = boolean_lattice(n);
    CHECK(b.size() == (std::size_t{1} << n));
    CHECK(b.covers().size() == static_cast<std::size_t>(n) * (std::size_t{1} << n) / 2);
    CHECK(b.length() == n);
  }
  const Poset b3 = boolean_lattice(3);
  CHECK(b3.id(*b3.bottom()) == "{}");
  CHECK(b3.id(*b3.top()) == "{1,2,3}");
  CHECK(b3.at(subset_id(std::uint64_t{0b101})) == b3.at("{1,3}"));
  CHECK_THROWS_AS(boolean_lattice(-1), Error);
}

TEST_CASE("Bruhat orders have Mahonian rank sizes") {
  CHECK(rank_sizes(bruhat_order(1)) == std::vector<std::size_t>{1});
  CHECK(rank_sizes(bruhat_order(3)) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(rank_sizes(bruhat_order(4)) == std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1});
  const Poset br3 = bruhat_order(3);
  CHECK(br3.id(*br3.bottom()) == "123");
  CHECK(br3.id(*br3.top()) == "321");
  CHECK(br3.is_cover(br3.at("123"), br3.at("213")));
  CHECK(br3.is_cover(br3.at("213"), br3.at("312")));
  CHECK(br3.is_cover(br3.at("213"), br3.at("231")));
  CHECK(br3.covers().size() == 8);
  CHECK_THROWS_AS(bruhat_order(0), Error);
}

TEST_CASE("simplicial face posets") {
  const Poset simplex = face_poset_simplicial({{3, 1, 2}}, true);
  CHECK(simplex.size() == 8);
  CHECK(simplex.covers().size() == 12);
  CHECK(simplex.id(*simplex.bottom()) == "{}");
  const Poset no_empty = face_poset_simplicial({{1, 2, 3}}, false);
  CHECK(no_empty.size() == 7);
  CHECK_FALSE(no_empty.bottom());
  CHECK(no_empty.rank(no_empty.at("{1}")) == 0);
  const Poset octa = face_poset_simplicial(corpus::facets("octahedron.json"), false);
  CHECK(rank_sizes(octa) == std::vector<std::size_t>{6, 12, 8});
  const Poset torus = face_poset_simplicial(corpus::facets("torus7.json"), false);
  CHECK(rank_sizes(torus) == std::vector<std::size_t>{7, 21, 14});
  CHECK_THROWS_AS(face_poset_simplicial({}, true), Error);
}

TEST_CASE("polygon face posets") {
  for (int k = 3; k <= 8; ++k) {
    const Poset p = polygon_face_poset(k);
    CHECK(p.size() == static_cast<std::size_t>(2 * k + 2));
    CHECK(p.covers().size() == static_cast<std::size_t>(4 * k));
    CHECK(p.length() == 3);
  }
  const Poset tri = polygon_face_poset(3), simplex = face_poset_simplicial({{1, 2, 3}}, true);
  auto sorted_ids = [](const Poset& p) {
    auto v = p.ids();
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted_ids(tri) == sorted_ids(simplex));
  CHECK(tri.cover_pairs() == simplex.cover_pairs());
  CHECK_THROWS_AS(polygon_face_poset(2), Error);
}

TEST_CASE("adjoining bounds") {
  const Poset circle = face_poset_simplicial(corpus::facets("hexagon_boundary.json"), true);
  const Poset disk = adjoin_top(circle);
  CHECK(disk.size() == circle.size() + 1);
  CHECK(disk.id(*disk.top()) == kTopId);
  CHECK(is_thin(disk).holds);
  const Poset cells = face_poset_simplicial(corpus::facets("hexagon_boundary.json"), false);
  const Poset with_bottom = adjoin_bottom(cells);
  CHECK(with_bottom.id(*with_bottom.bottom()) == kBottomId);
  CHECK(with_bottom.rank(with_bottom.at("{1}")) == 1);
  CHECK_THROWS_AS(adjoin_top(disk), Error);
}

TEST_CASE("pinch product of two Bruhat orders") {
  const Poset p = pinch_product(bruhat_order(3), bruhat_order(3));
  CHECK(p.size() == 10);
  CHECK(p.covers().size() == 16);
  CHECK(p.length() == 3);
  CHECK(p.find("L:213"));
  CHECK(p.find("R:312"));
  CHECK(p.id(*p.bottom()) == kBottomId);
  CHECK(p.id(*p.top()) == kTopId);
  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind([] { pinch_product(bruhat_order(3), boolean_lattice(4)); }) == ErrorKind::RankMismatch);
  CHECK(kind([] { pinch_product(boolean_lattice(2), boolean_lattice(2)); }) == ErrorKind::RankTooSmall);
  CHECK(kind([] {
          pinch_product(face_poset_simplicial({{1, 2, 3}}, false), boolean_lattice(2));
        }) == ErrorKind::MissingBounds);
}

TEST_CASE("disjoint union") {
  const Poset u = disjoint_union(boolean_lattice(2), boolean_lattice(3));
  CHECK(u.size() == 12);
  CHECK(u.covers().size() == 16);
  CHECK(u.minimal_elements().size() == 2);
  CHECK_FALSE(u.bottom());
  CHECK(u.find("L:{1}"));
  CHECK(u.find("R:{1,2,3}"));
}
