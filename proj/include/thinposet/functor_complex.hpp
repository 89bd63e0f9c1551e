#pragma once

// Functors from a thin poset to graded free modules, the signed cochain
// complex they define, its cohomology, and the chain maps between such
// complexes (recoloring, cover-preserving embeddings, ideal splittings).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thinposet/coloring.hpp"
#include "thinposet/diamonds.hpp"
#include "thinposet/integer_matrix.hpp"
#include "thinposet/laurent.hpp"
#include "thinposet/poset.hpp"

namespace thinposet {

enum class RingKind { Integers, Rationals, PrimeField };

struct BaseRing {
  RingKind kind = RingKind::Integers;
  std::uint64_t p = 0;

  static BaseRing integers() { return {}; }
  static BaseRing rationals() { return {RingKind::Rationals, 0}; }
  static BaseRing prime_field(std::uint64_t p) {
    if (!is_prime(p) || p >= (std::uint64_t{1} << 32))
      fail(ErrorKind::InvalidInput, "F_p needs a prime p below 2^32, got " + std::to_string(p));
    return {RingKind::PrimeField, p};
  }

  /// "Z", "Q" or "Fp:<p>".
  static BaseRing parse(std::string_view s) {
    if (s == "Z") return integers();
    if (s == "Q") return rationals();
    if (s.starts_with("Fp:")) {
      const std::string digits(s.substr(3));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
        fail(ErrorKind::InvalidInput, "bad prime in ring '" + std::string(s) + "'");
      return prime_field(std::stoull(digits));
    }
    fail(ErrorKind::InvalidInput, "unknown ring '" + std::string(s) + "' (expected Z, Q or Fp:p)");
  }

  std::string to_string() const {
    switch (kind) {
      case RingKind::Integers: return "Z";
      case RingKind::Rationals: return "Q";
      case RingKind::PrimeField: return "Fp:" + std::to_string(p);
    }
    return "Z";
  }

  bool is_field() const noexcept { return kind != RingKind::Integers; }
  IntMatrix reduce(const IntMatrix& m) const { return kind == RingKind::PrimeField ? m.mod(p) : m; }
  bool is_zero(const IntMatrix& m) const { return reduce(m).is_zero(); }
  bool equal(const IntMatrix& a, const IntMatrix& b) const {
    return a.rows() == b.rows() && a.cols() == b.cols() && reduce(a) == reduce(b);
  }
  IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) const { return reduce(reduce(a) * reduce(b)); }

  friend bool operator==(const BaseRing&, const BaseRing&) = default;
};

/// dims[e] lists the q-degree of every basis vector of F(e) (all 0 when
/// ungraded); maps[i] is F(x ⋖ y) for the i-th cover, of shape
/// |dims[y]| × |dims[x]|.
struct FreeFunctor {
  Poset poset;
  std::vector<std::vector<int>> dims;
  std::vector<IntMatrix> maps;
  BaseRing ring;

  std::size_t rank(Element e) const { return dims.at(e).size(); }
  const IntMatrix& map(Element x, Element y) const {
    auto i = poset.cover_index(x, y);
    if (!i) fail(ErrorKind::DomainMismatch, poset.id(x) + " is not covered by " + poset.id(y));
    return maps[*i];
  }
  bool graded() const {
    for (const auto& d : dims)
      for (int q : d)
        if (q != 0) return true;
    return false;
  }
};

inline void validate_functor(const FreeFunctor& f) {
  const Poset& p = f.poset;
  if (f.dims.size() != p.size()) fail(ErrorKind::ShapeMismatch, "dims must list every element");
  if (f.maps.size() != p.covers().size()) fail(ErrorKind::ShapeMismatch, "maps must list every cover");
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    const Cover& c = p.covers()[i];
    const IntMatrix& m = f.maps[i];
    const std::string edge = "(" + p.id(c.lower) + "," + p.id(c.upper) + ")";
    if (m.rows() != f.rank(c.upper) || m.cols() != f.rank(c.lower))
      fail(ErrorKind::ShapeMismatch, "map on " + edge + " has shape " + std::to_string(m.rows()) + "x" +
                                         std::to_string(m.cols()) + ", expected " + std::to_string(f.rank(c.upper)) +
                                         "x" + std::to_string(f.rank(c.lower)));
    const IntMatrix r = f.ring.reduce(m);
    for (std::size_t a = 0; a < r.rows(); ++a)
      for (std::size_t b = 0; b < r.cols(); ++b)
        if (r(a, b) != 0 && f.dims[c.upper][a] != f.dims[c.lower][b])
          fail(ErrorKind::NotDegreePreserving, "map on " + edge + " mixes q-degrees");
  }
}

/// All objects R^dim in q-degree 0, all maps identities.
inline FreeFunctor constant_functor(const Poset& p, std::size_t dim = 1, BaseRing ring = {}) {
  if (dim == 0) fail(ErrorKind::InvalidInput, "constant functor needs dim >= 1");
  FreeFunctor f{p, std::vector<std::vector<int>>(p.size(), std::vector<int>(dim, 0)), {}, ring};
  f.maps.assign(p.covers().size(), IntMatrix::identity(dim));
  return f;
}

/// Σ_j q^{dims[e][j]}
inline LaurentPoly graded_rank(const FreeFunctor& f, Element e) {
  LaurentPoly r;
  for (int q : f.dims.at(e)) r.add(q, 1);
  return r;
}

inline LaurentPoly rank_alternator(const Poset& p, const std::function<LaurentPoly(Element)>& value) {
  LaurentPoly s;
  for (Element e : p.by_id()) {
    const LaurentPoly v = value(e);
    s += p.rank(e) % 2 == 0 ? v : -v;
  }
  return s;
}

struct FunctorialityReport {
  bool functorial = true;
  std::optional<Element> bottom, top;
  SaturatedChain first, second;  // composites differ along these chains
  explicit operator bool() const noexcept { return functorial; }
};

/// F(x_{k-1} ⋖ x_k) ··· F(x_0 ⋖ x_1)
inline IntMatrix composite(const FreeFunctor& f, const SaturatedChain& chain) {
  const auto& c = chain.elements;
  IntMatrix m = IntMatrix::identity(f.rank(c.front()));
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = f.ring.multiply(f.map(c[i], c[i + 1]), m);
  return m;
}

/// Diamond commutation when the poset is thin and diamond transitive,
/// otherwise agreement of composites along all maximal chains of every
/// interval.
inline FunctorialityReport check_functoriality(const FreeFunctor& f) {
  validate_functor(f);
  const Poset& p = f.poset;
  FunctorialityReport rep;
  if (is_thin(p) && is_diamond_transitive(p)) {
    for (const Diamond& d : enumerate_diamonds(p)) {
      SaturatedChain a{{d.bottom, d.left, d.top}}, b{{d.bottom, d.right, d.top}};
      if (!f.ring.equal(composite(f, a), composite(f, b))) return {false, d.bottom, d.top, a, b};
    }
    return rep;
  }
  for (const auto& [x, y] : detail::long_intervals(p, 2)) {
    const auto chains = maximal_chains(p, x, y);
    const IntMatrix ref = composite(f, chains.front());
    for (std::size_t i = 1; i < chains.size(); ++i)
      if (!f.ring.equal(ref, composite(f, chains[i]))) return {false, x, y, chains.front(), chains[i]};
  }
  return rep;
}

enum class Direction { Cohomological, Homological };

inline std::string to_string(Direction d) { return d == Direction::Cohomological ? "cohomological" : "homological"; }
inline Direction parse_direction(std::string_view s) {
  if (s == "cohomological") return Direction::Cohomological;
  if (s == "homological") return Direction::Homological;
  fail(ErrorKind::InvalidInput, "direction must be 'cohomological' or 'homological'");
}

struct Block {
  std::string element;
  std::size_t offset = 0;
  std::size_t size = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Groups are indexed 0..n-1 and labelled first_degree + index.
/// Cohomological: maps[i] : C^i → C^{i+1} (shape dim(i+1) × dim(i)).
/// Homological:   maps[i] : C_{i+1} → C_i (shape dim(i) × dim(i+1)).
struct CochainComplex {
  Direction direction = Direction::Cohomological;
  BaseRing ring;
  int first_degree = 0;
  std::vector<std::vector<Block>> blocks;
  std::vector<std::vector<int>> qdegrees;
  std::vector<IntMatrix> maps;

  std::size_t size() const noexcept { return qdegrees.size(); }
  std::size_t dim(std::size_t i) const { return qdegrees.at(i).size(); }
  int degree(std::size_t i) const { return first_degree + static_cast<int>(i); }
  int step() const noexcept { return direction == Direction::Cohomological ? 1 : -1; }

  /// Differential leaving group i, or nothing at the end of the complex.
  std::optional<IntMatrix> differential_from(std::size_t i) const {
    if (direction == Direction::Cohomological) {
      if (i + 1 >= size()) return std::nullopt;
      return maps[i];
    }
    if (i == 0 || i >= size()) return std::nullopt;
    return maps[i - 1];
  }

  friend bool operator==(const CochainComplex&, const CochainComplex&) = default;
};

/// Shifts degree labels by dk and all q-degrees by dq.
inline CochainComplex shift(CochainComplex cx, int dk, int dq) {
  cx.first_degree += dk;
  for (auto& g : cx.qdegrees)
    for (int& q : g) q += dq;
  return cx;
}

inline bool d_squared_zero(const CochainComplex& cx) {
  for (std::size_t i = 0; i + 1 < cx.maps.size(); ++i) {
    const IntMatrix sq = cx.direction == Direction::Cohomological ? cx.ring.multiply(cx.maps[i + 1], cx.maps[i])
                                                                  : cx.ring.multiply(cx.maps[i], cx.maps[i + 1]);
    if (!sq.is_zero()) return false;
  }
  return true;
}

namespace detail {

struct Layout {
  std::vector<std::vector<Element>> members;     // per rank, id order
  std::vector<std::size_t> offset;               // per element
  std::vector<char> in;                          // membership mask
};

inline Layout layout(const FreeFunctor& f, const std::vector<char>& in) {
  const Poset& p = f.poset;
  Layout l;
  l.members.resize(static_cast<std::size_t>(p.length()) + 1);
  l.offset.assign(p.size(), 0);
  l.in = in;
  for (int k = 0; k <= p.length(); ++k) {
    std::size_t off = 0;
    for (Element e : p.elements_of_rank(k))
      if (in[e]) {
        l.members[static_cast<std::size_t>(k)].push_back(e);
        l.offset[e] = off;
        off += f.rank(e);
      }
  }
  return l;
}

// Complex on the elements marked in `in`, graded by ambient rank.
inline CochainComplex assemble_on(const FreeFunctor& f, const EdgeColoring& c, const std::vector<char>& in,
                                  Direction dir) {
  const Poset& p = f.poset;
  const Layout l = layout(f, in);
  CochainComplex cx;
  cx.direction = dir;
  cx.ring = f.ring;
  const std::size_t n = l.members.size();
  cx.blocks.resize(n);
  cx.qdegrees.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    for (Element e : l.members[k]) {
      cx.blocks[k].push_back({p.id(e), l.offset[e], f.rank(e)});
      cx.qdegrees[k].insert(cx.qdegrees[k].end(), f.dims[e].begin(), f.dims[e].end());
    }
  std::vector<IntMatrix> delta;
  for (std::size_t k = 0; k + 1 < n; ++k) delta.emplace_back(cx.qdegrees[k + 1].size(), cx.qdegrees[k].size());
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const Cover& cv = p.covers()[i];
    if (!in[cv.lower] || !in[cv.upper]) continue;
    delta[static_cast<std::size_t>(p.rank(cv.lower))].set_block(l.offset[cv.upper], l.offset[cv.lower], f.maps[i],
                                                                c.values[i]);
  }
  for (auto& m : delta) m = f.ring.reduce(m);
  if (dir == Direction::Homological)
    for (auto& m : delta) m = m.transposed();
  cx.maps = std::move(delta);
  return cx;
}

}  // namespace detail

/// C^k = ⊕_{rk x = k} F(x) with δ^k = Σ c(x ⋖ y) F(x ⋖ y). In the
/// homological direction every edge matrix is transposed.
inline CochainComplex assemble(const FreeFunctor& f, const EdgeColoring& c, Direction dir = Direction::Cohomological) {
  check_domain(f.poset, c);
  if (!is_balanced(f.poset, c)) fail(ErrorKind::NotBalanced, "coloring is not balanced");
  auto rep = check_functoriality(f);
  if (!rep)
    fail(ErrorKind::NotFunctorial,
         "composites disagree on [" + f.poset.id(*rep.bottom) + "," + f.poset.id(*rep.top) + "]");
  CochainComplex cx = detail::assemble_on(f, c, std::vector<char>(f.poset.size(), 1), dir);
  if (!d_squared_zero(cx)) fail(ErrorKind::DSquaredNonzero, "assembled differential does not square to zero");
  return cx;
}

struct GradedPiece {
  int q = 0;
  std::size_t betti = 0;
  std::vector<BigInt> torsion;
  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

struct CohomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<BigInt> torsion;        // invariant factors > 1
  std::vector<GradedPiece> graded;    // by ascending q; empty when ungraded
  friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

struct CohomologyResult {
  BaseRing ring;
  Direction direction = Direction::Cohomological;
  bool graded = false;
  std::vector<CohomologyGroup> groups;

  const CohomologyGroup* at(int degree) const {
    for (const auto& g : groups)
      if (g.degree == degree) return &g;
    return nullptr;
  }
  friend bool operator==(const CohomologyResult&, const CohomologyResult&) = default;
};

namespace detail {

struct MapInfo {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

inline MapInfo map_info(const IntMatrix& m, const BaseRing& ring) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  if (ring.kind == RingKind::PrimeField) return {rank_mod_p(m, ring.p), {}};
  const SmithInvariants s = smith_invariants(m);
  if (ring.kind == RingKind::Rationals) return {s.rank(), {}};
  return {s.rank(), s.torsion()};
}

inline std::vector<std::size_t> indices_with_q(const std::vector<int>& qs, int q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (qs[i] == q) out.push_back(i);
  return out;
}

// Betti and torsion of every group, restricted to q-degree q if given.
inline std::vector<GradedPiece> groups_at(const CochainComplex& cx, std::optional<int> q) {
  const std::size_t n = cx.size();
  std::vector<std::vector<std::size_t>> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (q) {
      idx[i] = indices_with_q(cx.qdegrees[i], *q);
    } else {
      idx[i].resize(cx.dim(i));
      for (std::size_t j = 0; j < cx.dim(i); ++j) idx[i][j] = j;
    }
  }
  // info[i] describes maps[i].
  std::vector<MapInfo> info(cx.maps.size());
  for (std::size_t i = 0; i < cx.maps.size(); ++i) {
    const bool cohom = cx.direction == Direction::Cohomological;
    const auto& rows = cohom ? idx[i + 1] : idx[i];
    const auto& cols = cohom ? idx[i] : idx[i + 1];
    info[i] = map_info(cx.maps[i].select(rows, cols), cx.ring);
  }
  std::vector<GradedPiece> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Cohomological: in = maps[i-1], out = maps[i]. Homological: in = maps[i], out = maps[i-1].
    const MapInfo* in = nullptr;
    const MapInfo* outgoing = nullptr;
    if (cx.direction == Direction::Cohomological) {
      if (i > 0) in = &info[i - 1];
      if (i < info.size()) outgoing = &info[i];
    } else {
      if (i < info.size()) in = &info[i];
      if (i > 0) outgoing = &info[i - 1];
    }
    std::size_t b = idx[i].size();
    if (in) b -= in->rank;
    if (outgoing) b -= outgoing->rank;
    out[i].q = q.value_or(0);
    out[i].betti = b;
    if (in) out[i].torsion = in->torsion;
  }
  return out;
}

}  // namespace detail

/// Betti numbers and torsion (over Z) of every group; with `graded` the
/// computation runs per q-degree block and the totals are block sums.
inline CohomologyResult cohomology(const CochainComplex& cx, bool graded = false) {
  CohomologyResult r;
  r.ring = cx.ring;
  r.direction = cx.direction;
  r.graded = graded;
  r.groups.resize(cx.size());
  for (std::size_t i = 0; i < cx.size(); ++i) r.groups[i].degree = cx.degree(i);
  if (!graded) {
    const auto pieces = detail::groups_at(cx, std::nullopt);
    for (std::size_t i = 0; i < cx.size(); ++i) {
      r.groups[i].betti = pieces[i].betti;
      r.groups[i].torsion = pieces[i].torsion;
    }
    return r;
  }
  std::set<int> qs;
  for (const auto& g : cx.qdegrees) qs.insert(g.begin(), g.end());
  std::vector<std::vector<BigInt>> all_torsion(cx.size());
  for (int q : qs) {
    const auto pieces = detail::groups_at(cx, q);
    for (std::size_t i = 0; i < cx.size(); ++i) {
      if (pieces[i].betti == 0 && pieces[i].torsion.empty()) continue;
      r.groups[i].graded.push_back(pieces[i]);
      r.groups[i].betti += pieces[i].betti;
      all_torsion[i].insert(all_torsion[i].end(), pieces[i].torsion.begin(), pieces[i].torsion.end());
    }
  }
  for (std::size_t i = 0; i < cx.size(); ++i) r.groups[i].torsion = normalize_invariant_factors(all_torsion[i]);
  for (auto& g : r.groups)
    g.torsion.erase(std::remove_if(g.torsion.begin(), g.torsion.end(), [](const BigInt& v) { return v == 1; }),
                    g.torsion.end());
  return r;
}

/// Σ_k (-1)^k Σ q^{q-degree} over the basis of C^k.
inline LaurentPoly euler_characteristic(const CochainComplex& cx) {
  LaurentPoly chi;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    const int sign = cx.degree(i) % 2 == 0 ? 1 : -1;
    for (int q : cx.qdegrees[i]) chi.add(q, sign);
  }
  return chi;
}

/// Σ_k (-1)^k [H^k]: q-graded ranks when the result is graded, plain ranks
/// otherwise.
inline LaurentPoly euler_characteristic(const CohomologyResult& r) {
  LaurentPoly chi;
  for (const auto& g : r.groups) {
    const int sign = g.degree % 2 == 0 ? 1 : -1;
    if (r.graded) {
      for (const auto& piece : g.graded) chi.add(piece.q, sign * static_cast<std::int64_t>(piece.betti));
    } else {
      chi.add(0, sign * static_cast<std::int64_t>(g.betti));
    }
  }
  return chi;
}

/// components[i] maps source group i to the target group labelled
/// source.degree(i) + degree_shift.
struct ChainMap {
  int degree_shift = 0;
  std::vector<IntMatrix> components;
};

namespace detail {

inline std::optional<std::size_t> group_index(const CochainComplex& cx, int degree) {
  const int i = degree - cx.first_degree;
  if (i < 0 || static_cast<std::size_t>(i) >= cx.size()) return std::nullopt;
  return static_cast<std::size_t>(i);
}

inline std::size_t dim_at(const CochainComplex& cx, int degree) {
  auto i = group_index(cx, degree);
  return i ? cx.dim(*i) : 0;
}

}  // namespace detail

/// d_tgt ∘ f = f ∘ d_src in every degree (terms outside either complex are 0).
inline bool is_chain_map(const CochainComplex& src, const CochainComplex& tgt, const ChainMap& m) {
  if (src.direction != tgt.direction || m.components.size() != src.size()) return false;
  const BaseRing& ring = tgt.ring;
  const int step = src.step();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int deg = src.degree(i) + m.degree_shift;
    if (m.components[i].rows() != detail::dim_at(tgt, deg) || m.components[i].cols() != src.dim(i)) return false;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int deg = src.degree(i) + m.degree_shift;
    const std::size_t rows = detail::dim_at(tgt, deg + step);
    IntMatrix lhs(rows, src.dim(i));
    IntMatrix rhs(rows, src.dim(i));
    if (auto j = detail::group_index(tgt, deg); j && detail::group_index(tgt, deg + step))
      lhs = ring.multiply(*tgt.differential_from(*j), m.components[i]);
    if (auto d = src.differential_from(i)) {
      const std::size_t next = static_cast<std::size_t>(static_cast<int>(i) + step);
      rhs = ring.multiply(m.components[next], *d);
    }
    if (!ring.equal(lhs, rhs)) return false;
  }
  return true;
}

namespace detail {

inline ChainMap diagonal_map(const CochainComplex& cx, const Poset& p, const Potential& g) {
  ChainMap m;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    IntMatrix d(cx.dim(i), cx.dim(i));
    for (const Block& b : cx.blocks[i]) {
      const int s = g.values[p.at(b.element)];
      for (std::size_t j = 0; j < b.size; ++j) d(b.offset + j, b.offset + j) = s;
    }
    m.components.push_back(std::move(d));
  }
  return m;
}

inline void require_transitive_with_bottom(const Poset& p) {
  if (!p.bottom()) fail(ErrorKind::NoBottom, "poset needs a unique minimal element");
  if (!is_diamond_transitive(p)) fail(ErrorKind::NotDiamondTransitive, "poset is not diamond transitive");
}

}  // namespace detail

/// The isomorphism C(F, c1) → C(F, c2) acting by gr^{c1 c2}(x) on F(x).
inline ChainMap recolor_map(const FreeFunctor& f, const EdgeColoring& c1, const EdgeColoring& c2,
                            Direction dir = Direction::Cohomological) {
  const Poset& p = f.poset;
  detail::require_transitive_with_bottom(p);
  const CochainComplex src = assemble(f, c1, dir);
  const CochainComplex tgt = assemble(f, c2, dir);
  ChainMap m = detail::diagonal_map(src, p, greedy_potential(p, c1 * c2));
  if (!is_chain_map(src, tgt, m)) throw std::logic_error("recoloring map failed the chain-map identity");
  return m;
}

/// Chain map C(P, F_src, c) → C(Q, F_tgt, d) sending a ∈ F_src(x) to
/// gr^b(x) η_x(a) ∈ F_tgt(φx). Requires a constant rank offset, natural η,
/// and d(φa ⋖ φb) = c(a ⋖ b) b(a ⋖ b).
inline ChainMap induced_chain_map(const CoverEmbedding& e, const FreeFunctor& f_src, const FreeFunctor& f_tgt,
                                  const std::vector<IntMatrix>& eta, const EdgeColoring& b, const EdgeColoring& c,
                                  const EdgeColoring& d) {
  const Poset& p = f_src.poset;
  const Poset& q = f_tgt.poset;
  if (!(e.source() == p) || !(e.target() == q)) fail(ErrorKind::DomainMismatch, "embedding does not match the functors");
  if (!(f_src.ring == f_tgt.ring)) fail(ErrorKind::DomainMismatch, "functors over different rings");
  const auto offset = e.rank_offset();
  if (!offset) fail(ErrorKind::NotDegreePreserving, "embedding does not shift ranks uniformly");
  if (eta.size() != p.size()) fail(ErrorKind::ShapeMismatch, "eta must give one matrix per source element");
  const BaseRing& ring = f_tgt.ring;
  for (Element x = 0; x < p.size(); ++x) {
    const IntMatrix& m = eta[x];
    if (m.rows() != f_tgt.rank(e(x)) || m.cols() != f_src.rank(x))
      fail(ErrorKind::ShapeMismatch, "eta at " + p.id(x) + " has the wrong shape");
    const IntMatrix r = ring.reduce(m);
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (r(i, j) != 0 && f_tgt.dims[e(x)][i] != f_src.dims[x][j])
          fail(ErrorKind::NotDegreePreserving, "eta at " + p.id(x) + " mixes q-degrees");
  }
  check_domain(p, b);
  check_domain(p, c);
  check_domain(q, d);
  const Potential g = greedy_potential(p, b);
  const CochainComplex src = assemble(f_src, c);
  const CochainComplex tgt = assemble(f_tgt, d);
  for (std::size_t i = 0; i < p.covers().size(); ++i)
    if (d.values[e.image_cover(i)] != c.values[i] * b.values[i])
      fail(ErrorKind::ColoringIncompatible, "target coloring differs from c·b on the image of (" +
                                                p.id(p.covers()[i].lower) + "," + p.id(p.covers()[i].upper) + ")");
  std::vector<char> in_image(q.size(), 0);
  for (Element x = 0; x < p.size(); ++x) in_image[e(x)] = 1;
  for (const Cover& cv : p.covers())
    if (!ring.equal(ring.multiply(eta[cv.upper], f_src.map(cv.lower, cv.upper)),
                    ring.multiply(f_tgt.map(e(cv.lower), e(cv.upper)), eta[cv.lower])))
      fail(ErrorKind::NaturalityViolated, "square at (" + p.id(cv.lower) + "," + p.id(cv.upper) + ") does not commute");
  for (Element x = 0; x < p.size(); ++x)
    for (Element w : q.up(e(x)))
      if (!in_image[w] && !ring.is_zero(ring.multiply(f_tgt.map(e(x), w), eta[x])))
        fail(ErrorKind::NaturalityViolated,
             "cover (" + q.id(e(x)) + "," + q.id(w) + ") leaves the image with a nonzero component");

  ChainMap m;
  m.degree_shift = *offset;
  for (std::size_t k = 0; k < src.size(); ++k) {
    const int deg = src.degree(k) + *offset;
    IntMatrix comp(detail::dim_at(tgt, deg), src.dim(k));
    const auto j = detail::group_index(tgt, deg);
    for (const Block& blk : src.blocks[k]) {
      const Element x = p.at(blk.element);
      const std::string& tid = q.id(e(x));
      const auto it = std::find_if(tgt.blocks[*j].begin(), tgt.blocks[*j].end(),
                                   [&](const Block& tb) { return tb.element == tid; });
      comp.set_block(it->offset, blk.offset, eta[x], g.values[x]);
    }
    m.components.push_back(ring.reduce(comp));
  }
  if (!is_chain_map(src, tgt, m)) fail(ErrorKind::NaturalityViolated, "induced map fails the chain-map identity");
  return m;
}

struct IdealSplit {
  CochainComplex sub, total, quotient;
  ChainMap inclusion, projection;
  bool short_exact = false;  // chain maps, injective, surjective, im = ker
  LaurentPoly chi_sub, chi_total, chi_quotient;
  bool chi_additive = false;
};

namespace detail {

// 0/1 matrix sending the basis of `from` into the basis of `to` by element.
inline IntMatrix coordinate_map(const std::vector<Block>& from, std::size_t from_dim, const std::vector<Block>& to,
                                std::size_t to_dim) {
  IntMatrix m(to_dim, from_dim);
  for (const Block& a : from)
    for (const Block& b : to)
      if (a.element == b.element)
        for (std::size_t j = 0; j < a.size; ++j) m(b.offset + j, a.offset + j) = 1;
  return m;
}

}  // namespace detail

/// The sequence 0 → C(I) → C(P) → C(P∖I) → 0 for an upper order ideal I.
inline IdealSplit ideal_split(const FreeFunctor& f, const EdgeColoring& c, std::span<const Element> ideal) {
  const Poset& p = f.poset;
  if (!is_upper_ideal(p, ideal)) fail(ErrorKind::NotUpperIdeal, "members do not form an upper order ideal");
  IdealSplit s;
  s.total = assemble(f, c);
  std::vector<char> in(p.size(), 0);
  for (Element e : ideal) in.at(e) = 1;
  std::vector<char> out(p.size());
  for (Element e = 0; e < p.size(); ++e) out[e] = !in[e];
  s.sub = detail::assemble_on(f, c, in, Direction::Cohomological);
  s.quotient = detail::assemble_on(f, c, out, Direction::Cohomological);
  bool exact = d_squared_zero(s.sub) && d_squared_zero(s.quotient);
  for (std::size_t k = 0; k < s.total.size(); ++k) {
    s.inclusion.components.push_back(
        detail::coordinate_map(s.sub.blocks[k], s.sub.dim(k), s.total.blocks[k], s.total.dim(k)));
    s.projection.components.push_back(
        detail::coordinate_map(s.total.blocks[k], s.total.dim(k), s.quotient.blocks[k], s.quotient.dim(k)));
    const IntMatrix& i = s.inclusion.components.back();
    const IntMatrix& pr = s.projection.components.back();
    exact = exact && s.total.dim(k) == s.sub.dim(k) + s.quotient.dim(k);
    exact = exact && (pr * i).is_zero();
    exact = exact && detail::map_info(i, BaseRing::rationals()).rank == s.sub.dim(k);
    exact = exact && detail::map_info(pr, BaseRing::rationals()).rank == s.quotient.dim(k);
  }
  exact = exact && is_chain_map(s.sub, s.total, s.inclusion) && is_chain_map(s.total, s.quotient, s.projection);
  s.short_exact = exact;
  s.chi_sub = euler_characteristic(s.sub);
  s.chi_total = euler_characteristic(s.total);
  s.chi_quotient = euler_characteristic(s.quotient);
  s.chi_additive = s.chi_total == s.chi_sub + s.chi_quotient;
  return s;
}

}  // namespace thinposet
