#pragma once

// {+1,-1} colorings of cover relations, vertex potentials, the greedy
// potential of a central coloring and transport along cover-preserving
// order embeddings.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thinposet/constructors.hpp"
#include "thinposet/diamonds.hpp"
#include "thinposet/gf2.hpp"
#include "thinposet/poset.hpp"

namespace thinposet {

/// values[i] is the color of the i-th cover of the ambient poset.
struct EdgeColoring {
  std::vector<int> values;

  static EdgeColoring all_plus(const Poset& p) { return {std::vector<int>(p.covers().size(), 1)}; }

  int operator()(const Poset& p, Element x, Element y) const {
    auto i = p.cover_index(x, y);
    if (!i) fail(ErrorKind::DomainMismatch, p.id(x) + " is not covered by " + p.id(y));
    return values[*i];
  }

  friend EdgeColoring operator*(const EdgeColoring& a, const EdgeColoring& b) {
    if (a.values.size() != b.values.size()) fail(ErrorKind::DomainMismatch, "colorings of different posets");
    EdgeColoring out{a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
  }
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// values[e] is the sign of element e.
struct Potential {
  std::vector<int> values;
  friend Potential operator*(const Potential& a, const Potential& b) {
    Potential out{a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values.at(i);
    return out;
  }
  friend bool operator==(const Potential&, const Potential&) = default;
};

inline void check_domain(const Poset& p, const EdgeColoring& c) {
  if (c.values.size() != p.covers().size())
    fail(ErrorKind::DomainMismatch, "coloring has " + std::to_string(c.values.size()) + " values for " +
                                        std::to_string(p.covers().size()) + " covers");
  for (int v : c.values)
    if (v != 1 && v != -1) fail(ErrorKind::DomainMismatch, "colors must be +1 or -1");
}

namespace detail {

inline int diamond_product(const Poset& p, const EdgeColoring& c, const Diamond& d) {
  return c(p, d.bottom, d.left) * c(p, d.left, d.top) * c(p, d.bottom, d.right) * c(p, d.right, d.top);
}

// Rows are diamonds, columns cover indices.
inline gf2::Matrix diamond_parity_matrix(const Poset& p, const std::vector<Diamond>& diamonds) {
  gf2::Matrix a(diamonds.size(), p.covers().size());
  for (std::size_t r = 0; r < diamonds.size(); ++r) {
    const Diamond& d = diamonds[r];
    a.set(r, *p.cover_index(d.bottom, d.left));
    a.set(r, *p.cover_index(d.left, d.top));
    a.set(r, *p.cover_index(d.bottom, d.right));
    a.set(r, *p.cover_index(d.right, d.top));
  }
  return a;
}

inline EdgeColoring from_bits(const gf2::Row& bits) {
  EdgeColoring c;
  c.values.resize(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) c.values[i] = bits[i] ? -1 : 1;
  return c;
}

}  // namespace detail

/// Odd number of -1 edges on every diamond.
inline bool is_balanced(const Poset& p, const EdgeColoring& c) {
  check_domain(p, c);
  for (const Diamond& d : enumerate_diamonds(p))
    if (detail::diamond_product(p, c, d) != -1) return false;
  return true;
}

/// Even number of -1 edges on every diamond.
inline bool is_central(const Poset& p, const EdgeColoring& c) {
  check_domain(p, c);
  for (const Diamond& d : enumerate_diamonds(p))
    if (detail::diamond_product(p, c, d) != 1) return false;
  return true;
}

/// Solves the diamond-parity system over GF(2) (+1 ↔ 0, -1 ↔ 1) with all
/// right-hand sides 1; free variables are set to +1.
inline std::optional<EdgeColoring> find_balanced_coloring(const Poset& p) {
  const auto diamonds = enumerate_diamonds(p);
  const auto a = detail::diamond_parity_matrix(p, diamonds);
  gf2::Row ones(diamonds.size());
  ones.set();
  auto x = gf2::solve(a, ones);
  if (!x) return std::nullopt;
  return detail::from_bits(*x);
}

/// A basis of the central colorings (kernel of the diamond-parity map).
inline std::vector<EdgeColoring> central_coloring_basis(const Poset& p) {
  const auto diamonds = enumerate_diamonds(p);
  std::vector<EdgeColoring> out;
  for (const auto& row : gf2::kernel_basis(detail::diamond_parity_matrix(p, diamonds)))
    out.push_back(detail::from_bits(row));
  return out;
}

/// Up to `limit` distinct balanced colorings: the solver's solution times
/// products of central basis members, enumerated by binary counting.
inline std::vector<EdgeColoring> balanced_coloring_family(const Poset& p, std::size_t limit) {
  std::vector<EdgeColoring> out;
  auto base = find_balanced_coloring(p);
  if (!base) return out;
  const auto basis = central_coloring_basis(p);
  for (std::uint64_t m = 0; out.size() < limit; ++m) {
    if (basis.size() < 64 && m >> basis.size()) break;
    EdgeColoring c = *base;
    for (std::size_t i = 0; i < basis.size() && i < 64; ++i)
      if (m >> i & 1U) c = c * basis[i];
    out.push_back(std::move(c));
  }
  return out;
}

/// (δf)(x ⋖ y) = f(x) f(y).
inline EdgeColoring coboundary(const Poset& p, const Potential& f) {
  if (f.values.size() != p.size()) fail(ErrorKind::DomainMismatch, "potential size differs from poset size");
  EdgeColoring c;
  c.values.reserve(p.covers().size());
  for (const Cover& cv : p.covers()) c.values.push_back(f.values[cv.lower] * f.values[cv.upper]);
  return c;
}

/// Rank-by-rank greedy potential of a central coloring: the bottom gets +1
/// and each later element gets +1 when that keeps every edge to the rank
/// below coherent (c = f(x) f(y)), -1 otherwise. `order` lists elements;
/// within a rank they are processed in that order (default: id order).
inline Potential greedy_potential(const Poset& p, const EdgeColoring& c, std::span<const Element> order = {}) {
  check_domain(p, c);
  if (!p.bottom()) fail(ErrorKind::NoBottom, "greedy potential needs a unique minimal element");
  if (!is_central(p, c)) fail(ErrorKind::NotCentral, "coloring is not central");
  if (!is_diamond_transitive(p)) fail(ErrorKind::NotDiamondTransitive, "greedy potential needs a diamond transitive poset");
  if (order.empty()) order = p.by_id();
  if (order.size() != p.size()) fail(ErrorKind::InvalidInput, "ordering must list every element once");
  std::vector<std::vector<Element>> ranks(static_cast<std::size_t>(p.length()) + 1);
  std::vector<char> listed(p.size(), 0);
  for (Element e : order) {
    if (listed.at(e)) fail(ErrorKind::InvalidInput, "ordering repeats " + p.id(e));
    listed[e] = 1;
    ranks[static_cast<std::size_t>(p.rank(e))].push_back(e);
  }
  Potential f{std::vector<int>(p.size(), 0)};
  for (Element e : ranks[0]) f.values[e] = 1;
  auto allowable = [&](Element u, int sign) {
    for (Element z : p.down(u))
      if (c(p, z, u) != f.values[z] * sign) return false;
    return true;
  };
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    for (Element u : ranks[k]) {
      if (allowable(u, 1)) {
        f.values[u] = 1;
      } else if (allowable(u, -1)) {
        f.values[u] = -1;
      } else {
        throw std::logic_error("greedy potential: no allowable sign for " + p.id(u));
      }
    }
  }
  return f;
}

/// An injective map source → target with x ≤ y ⇔ φx ≤ φy that sends covers
/// to covers. Holds non-owning pointers to both posets.
class CoverEmbedding {
 public:
  CoverEmbedding(const Poset& source, const Poset& target, std::vector<Element> map)
      : source_(&source), target_(&target), map_(std::move(map)) {
    validate();
  }

  static CoverEmbedding identity(const Poset& p) {
    std::vector<Element> m(p.size());
    for (Element e = 0; e < p.size(); ++e) m[e] = e;
    return CoverEmbedding(p, p, std::move(m));
  }

  /// Map given by ids.
  static CoverEmbedding by_ids(const Poset& source, const Poset& target,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<Element> m(source.size(), target.size());
    for (const auto& [a, b] : pairs) m.at(source.at(a)) = target.at(b);
    return CoverEmbedding(source, target, std::move(m));
  }

  const Poset& source() const noexcept { return *source_; }
  const Poset& target() const noexcept { return *target_; }
  Element operator()(Element x) const { return map_.at(x); }
  const std::vector<Element>& map() const noexcept { return map_; }

  /// Target cover index of the image of source cover i.
  std::size_t image_cover(std::size_t i) const {
    const Cover& c = source_->covers()[i];
    return *target_->cover_index(map_[c.lower], map_[c.upper]);
  }

  /// Constant rank offset rk(φx) - rk(x) if there is one.
  std::optional<int> rank_offset() const {
    std::optional<int> off;
    for (Element x = 0; x < map_.size(); ++x) {
      const int d = target_->rank(map_[x]) - source_->rank(x);
      if (off && *off != d) return std::nullopt;
      off = d;
    }
    return off;
  }

 private:
  void validate() const {
    const Poset& s = *source_;
    const Poset& t = *target_;
    if (map_.size() != s.size()) fail(ErrorKind::NotEmbedding, "map must be total on the source");
    std::vector<char> hit(t.size(), 0);
    for (Element x : map_) {
      if (x >= t.size()) fail(ErrorKind::NotEmbedding, "map is not total on the source");
      if (hit[x]) fail(ErrorKind::NotEmbedding, "map is not injective");
      hit[x] = 1;
    }
    for (const Cover& c : s.covers())
      if (!t.is_cover(map_[c.lower], map_[c.upper]))
        fail(ErrorKind::NotEmbedding, "cover (" + s.id(c.lower) + "," + s.id(c.upper) + ") is not sent to a cover");
    const Reachability src(s), tgt(t);
    for (Element x = 0; x < s.size(); ++x)
      for (Element y = 0; y < s.size(); ++y)
        if (src(x, y) != tgt(map_[x], map_[y]))
          fail(ErrorKind::NotEmbedding, "order is not reflected between " + s.id(x) + " and " + s.id(y));
  }

  const Poset* source_;
  const Poset* target_;
  std::vector<Element> map_;
};

/// φ⁻¹(d)(a ⋖ b) = d(φa ⋖ φb).
inline EdgeColoring transport(const CoverEmbedding& e, const EdgeColoring& d) {
  check_domain(e.target(), d);
  EdgeColoring out;
  out.values.reserve(e.source().covers().size());
  for (std::size_t i = 0; i < e.source().covers().size(); ++i) out.values.push_back(d.values[e.image_cover(i)]);
  return out;
}

/// φ(c) on the image covers; 0 marks target covers outside the image.
inline std::vector<int> push(const CoverEmbedding& e, const EdgeColoring& c) {
  check_domain(e.source(), c);
  std::vector<int> out(e.target().covers().size(), 0);
  for (std::size_t i = 0; i < c.values.size(); ++i) out[e.image_cover(i)] = c.values[i];
  return out;
}

/// Balanced colorings of p that are restrictions of balanced colorings of p
/// with a new bottom adjoined (of p itself when it has a 0̂). Without a 0̂
/// other balanced colorings can twist the complex by a nontrivial class, so
/// cellular computations use these. Empty if the extension is not thin or
/// not colorable.
inline std::vector<EdgeColoring> bottom_extendable_colorings(const Poset& p, std::size_t limit) {
  if (p.bottom()) return balanced_coloring_family(p, limit);
  const Poset q = adjoin_bottom(p);
  if (!is_thin(q)) return {};
  std::vector<Element> map(p.size());
  for (Element e = 0; e < p.size(); ++e) map[e] = q.at(p.id(e));
  const CoverEmbedding inclusion(p, q, std::move(map));
  auto base = find_balanced_coloring(q);
  if (!base) return {};
  // Restricted central basis, thinned to a GF(2)-independent subset.
  std::vector<EdgeColoring> basis;
  std::vector<gf2::Row> rows;
  for (const auto& b : central_coloring_basis(q)) {
    EdgeColoring r = transport(inclusion, b);
    gf2::Row bits(r.values.size());
    for (std::size_t i = 0; i < r.values.size(); ++i) bits[i] = r.values[i] == -1;
    gf2::Matrix m(rows.size() + 1, bits.size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i];
    m.row(rows.size()) = bits;
    if (gf2::rank(m) == rows.size()) continue;
    rows.push_back(bits);
    basis.push_back(std::move(r));
  }
  std::vector<EdgeColoring> out;
  const EdgeColoring start = transport(inclusion, *base);
  for (std::uint64_t m = 0; out.size() < limit; ++m) {
    if (basis.size() < 64 && m >> basis.size()) break;
    EdgeColoring c = start;
    for (std::size_t i = 0; i < basis.size() && i < 64; ++i)
      if (m >> i & 1U) c = c * basis[i];
    out.push_back(std::move(c));
  }
  return out;
}

inline std::optional<EdgeColoring> find_bottom_extendable_coloring(const Poset& p) {
  auto v = bottom_extendable_colorings(p, 1);
  if (v.empty()) return std::nullopt;
  return v.front();
}

}  // namespace thinposet
