#include "catch_amalgamated.hpp"
#include "corpus.hpp"

using namespace thinposet;

namespace {

// c(S ⋖ S ∪ {i}) = (-1)^{#{j ∈ S : j < i}}
EdgeColoring sign_coloring(const Poset& b, int n) {
  EdgeColoring c = EdgeColoring::all_plus(b);
  for (std::size_t k = 0; k < b.covers().size(); ++k) {
    const auto lo = b.covers()[k].lower, hi = b.covers()[k].upper;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (b.at(subset_id(s)) != lo) continue;
      for (int i = 0; i < n; ++i)
        if (b.at(subset_id(s | std::uint64_t{1} << i)) == hi)
          c.values[k] = std::popcount(s & ((std::uint64_t{1} << i) - 1)) % 2 == 0 ? 1 : -1;
    }
  }
  return c;
}

std::size_t brute_central_count(const Poset& p) {
  const std::size_t e = p.covers().size();
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
    EdgeColoring c;
    for (std::size_t i = 0; i < e; ++i) c.values.push_back((m >> i & 1U) ? -1 : 1);
    count += is_central(p, c);
  }
  return count;
}

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

TEST_CASE("sign coloring of a Boolean lattice is balanced") {
  for (int n = 2; n <= 5; ++n) {
    const Poset b = boolean_lattice(n);
    CHECK(is_balanced(b, sign_coloring(b, n)));
    CHECK_FALSE(is_balanced(b, EdgeColoring::all_plus(b)));
    CHECK(is_central(b, EdgeColoring::all_plus(b)));
  }
}

TEST_CASE("solver finds balanced colorings on cell posets") {
  for (const auto& [name, p] : corpus::cw_posets()) {
    INFO(name);
    const auto c = find_balanced_coloring(p);
    REQUIRE(c);
    CHECK(is_balanced(p, *c));
  }
}

TEST_CASE("central basis spans exactly the central colorings") {
  for (const Poset& p : {boolean_lattice(2), bruhat_order(3), polygon_face_poset(3)}) {
    const auto basis = central_coloring_basis(p);
    for (const auto& b : basis) CHECK(is_central(p, b));
    CHECK((std::size_t{1} << basis.size()) == brute_central_count(p));
  }
  // with a bottom and diamond transitivity every central coloring is δf with f(0̂) = 1
  for (const auto& [name, p] : corpus::cw_posets()) {
    if (p.size() > 64) continue;
    INFO(name);
    CHECK(central_coloring_basis(p).size() == p.size() - 1);
  }
}

TEST_CASE("balanced family is distinct and balanced") {
  const Poset b3 = boolean_lattice(3);
  const auto fam = balanced_coloring_family(b3, 20);
  CHECK(fam.size() == 20);
  for (const auto& c : fam) CHECK(is_balanced(b3, c));
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) CHECK_FALSE(fam[i] == fam[j]);
  CHECK(balanced_coloring_family(boolean_lattice(1), 10).size() == 2);
}

TEST_CASE("coloring domain is checked") {
  const Poset b2 = boolean_lattice(2);
  CHECK(kind_of([&] { is_balanced(b2, EdgeColoring{{1, 1}}); }) == ErrorKind::DomainMismatch);
  CHECK_THROWS_AS(is_balanced(b2, EdgeColoring{{1, 1, 0, 1}}), Error);
  CHECK(kind_of([&] { coboundary(b2, Potential{{1}}); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("greedy potential matches the unique exhaustive solution") {
  std::mt19937_64 rng(3);
  for (const Poset& p : {boolean_lattice(3), bruhat_order(3), polygon_face_poset(5), boolean_lattice(4)}) {
    const auto basis = central_coloring_basis(p);
    for (int t = 0; t < 10; ++t) {
      const EdgeColoring c = corpus::random_central(p, basis, rng);
      const Potential g = greedy_potential(p, c);
      CHECK(coboundary(p, g) == c);
      CHECK(g.values[*p.bottom()] == 1);
      const auto all = oracle::potentials_with_coboundary(p, c);
      REQUIRE(all.size() == 1);
      CHECK(all[0] == g.values);
    }
  }
}

TEST_CASE("greedy potential ignores the processing order") {
  std::mt19937_64 rng(4);
  const Poset p = bruhat_order(4);
  const auto basis = central_coloring_basis(p);
  for (int t = 0; t < 5; ++t) {
    const EdgeColoring c = corpus::random_central(p, basis, rng);
    const Potential g = greedy_potential(p, c);
    std::vector<Element> order(p.by_id().begin(), p.by_id().end());
    for (int s = 0; s < 5; ++s) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(greedy_potential(p, c, order) == g);
    }
  }
}

TEST_CASE("greedy potential is multiplicative") {
  std::mt19937_64 rng(5);
  const Poset p = boolean_lattice(4);
  const auto basis = central_coloring_basis(p);
  for (int t = 0; t < 10; ++t) {
    const EdgeColoring b = corpus::random_central(p, basis, rng), b2 = corpus::random_central(p, basis, rng);
    CHECK(greedy_potential(p, b * b2) == greedy_potential(p, b) * greedy_potential(p, b2));
  }
}

TEST_CASE("greedy potential pulls back along a bottom-preserving embedding") {
  const Poset b3 = boolean_lattice(3), b4 = boolean_lattice(4);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (Element x : b3.by_id()) pairs.emplace_back(b3.id(x), b3.id(x));
  const CoverEmbedding phi = CoverEmbedding::by_ids(b3, b4, pairs);
  CHECK(phi.rank_offset() == 0);
  std::mt19937_64 rng(6);
  const auto basis = central_coloring_basis(b4);
  for (int t = 0; t < 10; ++t) {
    const EdgeColoring c = corpus::random_central(b4, basis, rng);
    const Potential big = greedy_potential(b4, c);
    const Potential small = greedy_potential(b3, transport(phi, c));
    for (Element x = 0; x < b3.size(); ++x) CHECK(small.values[x] == big.values[phi(x)]);
  }
}

TEST_CASE("greedy potential preconditions") {
  const Poset cells = face_poset_simplicial({{1, 2, 3}}, false);
  CHECK(kind_of([&] { greedy_potential(cells, EdgeColoring::all_plus(cells)); }) == ErrorKind::NoBottom);
  const Poset b3 = boolean_lattice(3);
  CHECK(kind_of([&] { greedy_potential(b3, sign_coloring(b3, 3)); }) == ErrorKind::NotCentral);
  const Poset pinch = pinch_product(bruhat_order(3), bruhat_order(3));
  CHECK(kind_of([&] { greedy_potential(pinch, EdgeColoring::all_plus(pinch)); }) == ErrorKind::NotDiamondTransitive);
  const Element partial[] = {0};
  CHECK(kind_of([&] { greedy_potential(b3, EdgeColoring::all_plus(b3), partial); }) == ErrorKind::InvalidInput);
}

TEST_CASE("cover embeddings") {
  const Poset b2 = boolean_lattice(2), b3 = boolean_lattice(3);
  const CoverEmbedding up = CoverEmbedding::by_ids(b2, b3, {{"{}", "{3}"}, {"{1}", "{1,3}"}, {"{2}", "{2,3}"}, {"{1,2}", "{1,2,3}"}});
  CHECK(up.rank_offset() == 1);
  const EdgeColoring c = sign_coloring(b3, 3);
  const EdgeColoring pulled = transport(up, c);
  CHECK(pulled.values.size() == 4);
  CHECK(is_balanced(b2, pulled));
  const auto pushed = push(up, pulled);
  CHECK(std::count(pushed.begin(), pushed.end(), 0) == 8);
  CHECK(CoverEmbedding::identity(b3).rank_offset() == 0);
  CHECK(kind_of([&] { CoverEmbedding::by_ids(b2, b3, {{"{}", "{}"}, {"{1}", "{1}"}, {"{2}", "{2}"}}); }) ==
        ErrorKind::NotEmbedding);
  CHECK(kind_of([&] {
          CoverEmbedding::by_ids(b2, b3, {{"{}", "{}"}, {"{1}", "{1}"}, {"{2}", "{1}"}, {"{1,2}", "{1,2}"}});
        }) == ErrorKind::NotEmbedding);
  CHECK(kind_of([&] {
          CoverEmbedding::by_ids(b2, b3, {{"{}", "{}"}, {"{1}", "{1}"}, {"{2}", "{2}"}, {"{1,2}", "{1,2,3}"}});
        }) == ErrorKind::NotEmbedding);
}

TEST_CASE("bottom-extendable colorings of cell posets") {
  const Poset torus = face_poset_simplicial(corpus::facets("torus7.json"), false);
  const auto fam = bottom_extendable_colorings(torus, 4);
  CHECK(fam.size() == 4);
  for (const auto& c : fam) CHECK(is_balanced(torus, c));
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) CHECK_FALSE(fam[i] == fam[j]);
  CHECK(bottom_extendable_colorings(boolean_lattice(3), 3) == balanced_coloring_family(boolean_lattice(3), 3));
}
