#pragma once

// Builders for the standard families of thin posets.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "thinposet/poset.hpp"

namespace thinposet {

/// "{}", "{1}", "{1,3}" ... for a sorted vertex list.
inline std::string subset_id(const std::vector<int>& sorted_vertices) {
  std::string s = "{";
  for (std::size_t i = 0; i < sorted_vertices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sorted_vertices[i]);
  }
  return s + "}";
}

/// Subset id for a bitmask over {1..n}; bit i stands for i+1.
inline std::string subset_id(std::uint64_t mask) {
  std::vector<int> v;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1U) v.push_back(i + 1);
  return subset_id(v);
}

inline Poset boolean_lattice(int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "negative Boolean lattice rank");
  if (n > 20) fail(ErrorKind::TooLarge, "boolean_lattice supports n <= 20");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) ids.push_back(subset_id(m));
  std::vector<Poset::IdPair> covers;
  covers.reserve(static_cast<std::size_t>(n) * count / 2);
  for (std::uint64_t m = 0; m < count; ++m)
    for (int i = 0; i < n; ++i)
      if (!(m >> i & 1U)) covers.emplace_back(ids[m], ids[m | std::uint64_t{1} << i]);
  return Poset::from_cover_relations(std::move(ids), covers);
}

namespace detail {

inline int inversions(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

inline std::string one_line(const std::vector<int>& w) {
  std::string s;
  for (int v : w) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace detail

/// Bruhat order on S_n; elements are permutations in one-line notation.
/// u ⋖ v iff v = u·(i j) and v has exactly one more inversion.
inline Poset bruhat_order(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "bruhat_order needs n >= 1");
  if (n > 6) fail(ErrorKind::TooLarge, "bruhat_order supports n <= 6");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::string> ids;
  std::vector<Poset::IdPair> covers;
  do {
    ids.push_back(detail::one_line(w));
    const int len = detail::inversions(w);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] > w[j]) continue;
        auto v = w;
        std::swap(v[i], v[j]);
        if (detail::inversions(v) == len + 1) covers.emplace_back(ids.back(), detail::one_line(v));
      }
  } while (std::next_permutation(w.begin(), w.end()));
  return Poset::from_cover_relations(std::move(ids), covers);
}

/// Face poset of the simplicial complex generated by `facets`, ordered by
/// inclusion. The empty face is present iff `include_empty`.
inline Poset face_poset_simplicial(const std::vector<std::vector<int>>& facets, bool include_empty) {
  if (facets.empty()) fail(ErrorKind::InvalidInput, "face_poset_simplicial needs at least one facet");
  std::set<std::vector<int>> faces;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.empty()) fail(ErrorKind::InvalidInput, "empty facet");
    if (facet.size() > 20) fail(ErrorKind::TooLarge, "facets are limited to 20 vertices");
    const std::uint64_t count = std::uint64_t{1} << facet.size();
    for (std::uint64_t m = include_empty ? 0 : 1; m < count; ++m) {
      std::vector<int> face;
      for (std::size_t i = 0; i < facet.size(); ++i)
        if (m >> i & 1U) face.push_back(facet[i]);
      faces.insert(std::move(face));
    }
  }
  std::vector<std::string> ids;
  std::vector<Poset::IdPair> covers;
  for (const auto& face : faces) {
    ids.push_back(subset_id(face));
    if (face.size() <= 1 && !include_empty) continue;
    for (std::size_t i = 0; i < face.size(); ++i) {
      auto smaller = face;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      covers.emplace_back(subset_id(smaller), ids.back());
    }
  }
  return Poset::from_cover_relations(std::move(ids), covers);
}

/// Face poset of a k-gon (empty face, k vertices, k edges, one 2-cell).
/// Cells are named by their vertex sets, so k = 3 gives the 2-simplex.
inline Poset polygon_face_poset(int k) {
  if (k < 3) fail(ErrorKind::InvalidInput, "polygon_face_poset needs k >= 3");
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 1);
  const std::string empty = subset_id(std::vector<int>{});
  const std::string cell = subset_id(all);
  std::vector<std::string> ids{empty};
  std::vector<Poset::IdPair> covers;
  for (int v = 1; v <= k; ++v) {
    ids.push_back(subset_id(std::vector<int>{v}));
    covers.emplace_back(empty, ids.back());
  }
  for (int v = 1; v <= k; ++v) {
    const int w = v % k + 1;
    const std::string edge = subset_id(std::vector<int>{std::min(v, w), std::max(v, w)});
    ids.push_back(edge);
    covers.emplace_back(subset_id(std::vector<int>{v}), edge);
    covers.emplace_back(subset_id(std::vector<int>{w}), edge);
    covers.emplace_back(edge, cell);
  }
  ids.push_back(cell);
  return Poset::from_cover_relations(std::move(ids), covers);
}

inline constexpr const char* kTopId = "TOP";
inline constexpr const char* kBottomId = "BOT";

/// Adds a new element covering every maximal element.
inline Poset adjoin_top(const Poset& p) {
  if (p.find(kTopId)) fail(ErrorKind::InvalidInput, "id 'TOP' is reserved");
  auto ids = p.ids();
  auto covers = p.cover_pairs();
  const auto maxima = p.maximal_elements();
  for (Element m : maxima)
    if (p.rank(m) != p.rank(maxima.front())) fail(ErrorKind::NotGraded, "maximal elements have unequal ranks");
  for (Element m : maxima) covers.emplace_back(p.id(m), kTopId);
  ids.emplace_back(kTopId);
  return Poset::from_cover_relations(std::move(ids), covers);
}

/// Adds a new element covered by every minimal element.
inline Poset adjoin_bottom(const Poset& p) {
  if (p.find(kBottomId)) fail(ErrorKind::InvalidInput, "id 'BOT' is reserved");
  std::vector<std::string> ids{kBottomId};
  ids.insert(ids.end(), p.ids().begin(), p.ids().end());
  auto covers = p.cover_pairs();
  for (Element m : p.minimal_elements()) covers.emplace_back(kBottomId, p.id(m));
  return Poset::from_cover_relations(std::move(ids), covers);
}

/// Glues two bounded thin posets of equal rank n >= 3 along their bottoms
/// and tops. Interior ids get the prefixes "L:" and "R:".
inline Poset pinch_product(const Poset& p, const Poset& q) {
  const auto p0 = p.bottom(), p1 = p.top(), q0 = q.bottom(), q1 = q.top();
  if (!p0 || !p1 || !q0 || !q1) fail(ErrorKind::MissingBounds, "pinch product factors need a unique bottom and top");
  if (p.length() != q.length()) fail(ErrorKind::RankMismatch, "pinch product factors have different ranks");
  if (p.length() < 3) fail(ErrorKind::RankTooSmall, "pinch product needs rank >= 3");
  std::vector<std::string> ids{kBottomId};
  std::vector<Poset::IdPair> covers;
  auto add = [&](const Poset& f, Element lo, Element hi, const std::string& prefix) {
    auto name = [&](Element e) -> std::string {
      if (e == lo) return kBottomId;
      if (e == hi) return kTopId;
      return prefix + f.id(e);
    };
    for (Element e : f.by_id())
      if (e != lo && e != hi) ids.push_back(prefix + f.id(e));
    for (const Cover& c : f.covers()) covers.emplace_back(name(c.lower), name(c.upper));
  };
  add(p, *p0, *p1, "L:");
  add(q, *q0, *q1, "R:");
  ids.emplace_back(kTopId);
  return Poset::from_cover_relations(std::move(ids), covers);
}

/// Disjoint union; ids are prefixed "L:" and "R:".
inline Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<std::string> ids;
  std::vector<Poset::IdPair> covers;
  for (const auto& [f, prefix] : {std::pair{&p, "L:"}, std::pair{&q, "R:"}}) {
    for (const auto& id : f->ids()) ids.push_back(prefix + id);
    for (const auto& [a, b] : f->cover_pairs()) covers.emplace_back(prefix + a, prefix + b);
  }
  return Poset::from_cover_relations(std::move(ids), covers);
}

}  // namespace thinposet
