#pragma once

// Finite graded posets given by their Hasse diagrams.
//
// Elements carry opaque string ids. Internally every element is a dense
// index (`Element`), and every list the API hands back is ordered by id so
// that downstream matrices and JSON are reproducible.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "thinposet/error.hpp"

namespace thinposet {

using Element = std::size_t;

struct Cover {
  Element lower;
  Element upper;
  friend bool operator==(const Cover&, const Cover&) = default;
};

class Poset {
 public:
  using IdPair = std::pair<std::string, std::string>;

  /// Builds a poset from its cover relations. Ranks are the longest-path
  /// distance from a minimal element; the input must already be transitively
  /// reduced and graded with respect to those ranks.
  static Poset from_cover_relations(std::vector<std::string> elements, const std::vector<IdPair>& covers) {
    Poset p;
    if (elements.empty()) fail(ErrorKind::EmptyPoset, "a poset needs at least one element");
    p.ids_ = std::move(elements);
    const std::size_t n = p.ids_.size();
    p.index_.reserve(n * 2);
    for (Element e = 0; e < n; ++e) {
      if (!p.index_.emplace(p.ids_[e], e).second) fail(ErrorKind::InvalidInput, "duplicate element id '" + p.ids_[e] + "'");
    }
    p.up_.assign(n, {});
    p.down_.assign(n, {});
    p.cover_lookup_.reserve(covers.size() * 2);
    std::vector<Cover> raw;
    raw.reserve(covers.size());
    for (const auto& [lo, hi] : covers) {
      const Element x = p.at(lo);
      const Element y = p.at(hi);
      if (x == y) fail(ErrorKind::CycleError, "self-cover on '" + lo + "'");
      if (!p.cover_lookup_.emplace(p.key(x, y), 0).second) fail(ErrorKind::InvalidInput, "duplicate cover (" + lo + "," + hi + ")");
      raw.push_back({x, y});
      p.up_[x].push_back(y);
      p.down_[y].push_back(x);
    }
    p.compute_ranks();
    p.check_reduced_and_graded(raw);
    p.finish(std::move(raw));
    return p;
  }

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(Element e) const { return ids_.at(e); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  std::optional<Element> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element at(std::string_view id) const {
    auto e = find(id);
    if (!e) fail(ErrorKind::UnknownElement, "no element '" + std::string(id) + "'");
    return *e;
  }

  int rank(Element e) const { return rank_.at(e); }
  /// Largest rank occurring in the poset.
  int length() const noexcept { return static_cast<int>(by_rank_.size()) - 1; }

  std::span<const Element> up(Element e) const { return up_.at(e); }
  std::span<const Element> down(Element e) const { return down_.at(e); }

  /// Cover relations sorted lexicographically by (lower id, upper id).
  std::span<const Cover> covers() const noexcept { return covers_; }

  std::optional<std::size_t> cover_index(Element x, Element y) const {
    auto it = cover_lookup_.find(key(x, y));
    if (it == cover_lookup_.end()) return std::nullopt;
    return it->second;
  }
  bool is_cover(Element x, Element y) const { return cover_lookup_.count(key(x, y)) != 0; }

  std::span<const Element> elements_of_rank(int k) const {
    if (k < 0 || k > length()) return {};
    return by_rank_[static_cast<std::size_t>(k)];
  }

  /// All elements sorted by id.
  std::span<const Element> by_id() const noexcept { return id_order_; }

  std::vector<Element> minimal_elements() const {
    std::vector<Element> out;
    for (Element e : id_order_)
      if (down_[e].empty()) out.push_back(e);
    return out;
  }
  std::vector<Element> maximal_elements() const {
    std::vector<Element> out;
    for (Element e : id_order_)
      if (up_[e].empty()) out.push_back(e);
    return out;
  }
  std::optional<Element> bottom() const {
    auto m = minimal_elements();
    if (m.size() != 1) return std::nullopt;
    return m.front();
  }
  std::optional<Element> top() const {
    auto m = maximal_elements();
    if (m.size() != 1) return std::nullopt;
    return m.front();
  }

  bool id_less(Element a, Element b) const { return ids_[a] < ids_[b]; }

  /// Cover relations as id pairs, in canonical order.
  std::vector<IdPair> cover_pairs() const {
    std::vector<IdPair> out;
    out.reserve(covers_.size());
    for (const Cover& c : covers_) out.emplace_back(ids_[c.lower], ids_[c.upper]);
    return out;
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.ids_ == b.ids_ && a.cover_pairs() == b.cover_pairs();
  }

 private:
  Poset() = default;

  std::uint64_t key(Element x, Element y) const { return static_cast<std::uint64_t>(x) * ids_.size() + y; }

  void compute_ranks() {
    const std::size_t n = ids_.size();
    std::vector<std::size_t> indegree(n);
    std::deque<Element> queue;
    for (Element e = 0; e < n; ++e) {
      indegree[e] = down_[e].size();
      if (indegree[e] == 0) queue.push_back(e);
    }
    rank_.assign(n, 0);
    std::size_t seen = 0;
    while (!queue.empty()) {
      const Element e = queue.front();
      queue.pop_front();
      ++seen;
      for (Element u : up_[e]) {
        rank_[u] = std::max(rank_[u], rank_[e] + 1);
        if (--indegree[u] == 0) queue.push_back(u);
      }
    }
    if (seen != n) fail(ErrorKind::CycleError, "cover relations contain a directed cycle");
  }

  // A redundant cover (x,y) lies on a longer path, so it skips a rank under
  // longest-path ranking; only rank-skipping covers need the path test.
  void check_reduced_and_graded(const std::vector<Cover>& raw) const {
    std::vector<int> stamp(ids_.size(), -1);
    int round = 0;
    for (const Cover& c : raw) {
      if (rank_[c.upper] == rank_[c.lower] + 1) continue;
      ++round;
      bool redundant = false;
      std::vector<Element> stack;
      for (Element z : up_[c.lower])
        if (z != c.upper) stack.push_back(z);
      while (!stack.empty() && !redundant) {
        const Element z = stack.back();
        stack.pop_back();
        if (z == c.upper) {
          redundant = true;
          break;
        }
        if (stamp[z] == round || rank_[z] >= rank_[c.upper]) continue;
        stamp[z] = round;
        for (Element w : up_[z]) stack.push_back(w);
      }
      const std::string pair = "(" + ids_[c.lower] + "," + ids_[c.upper] + ")";
      if (redundant) fail(ErrorKind::NotReduced, "cover " + pair + " is implied by a longer path");
      fail(ErrorKind::NotGraded, "cover " + pair + " skips a rank");
    }
  }

  void finish(std::vector<Cover> raw) {
    const std::size_t n = ids_.size();
    auto by_id = [this](Element a, Element b) { return ids_[a] < ids_[b]; };
    for (Element e = 0; e < n; ++e) {
      std::sort(up_[e].begin(), up_[e].end(), by_id);
      std::sort(down_[e].begin(), down_[e].end(), by_id);
    }
    id_order_.resize(n);
    for (Element e = 0; e < n; ++e) id_order_[e] = e;
    std::sort(id_order_.begin(), id_order_.end(), by_id);
    int max_rank = 0;
    for (int r : rank_) max_rank = std::max(max_rank, r);
    by_rank_.assign(static_cast<std::size_t>(max_rank) + 1, {});
    for (Element e : id_order_) by_rank_[static_cast<std::size_t>(rank_[e])].push_back(e);
    std::sort(raw.begin(), raw.end(), [this](const Cover& a, const Cover& b) {
      if (ids_[a.lower] != ids_[b.lower]) return ids_[a.lower] < ids_[b.lower];
      return ids_[a.upper] < ids_[b.upper];
    });
    covers_ = std::move(raw);
    for (std::size_t i = 0; i < covers_.size(); ++i) cover_lookup_[key(covers_[i].lower, covers_[i].upper)] = i;
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Element> index_;
  std::vector<int> rank_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<Cover> covers_;
  std::unordered_map<std::uint64_t, std::size_t> cover_lookup_;
  std::vector<std::vector<Element>> by_rank_;
  std::vector<Element> id_order_;
};

/// A chain x0 ⋖ x1 ⋖ ... ⋖ xk. Ordering compares element indices, so use
/// `chain_id_less` when the id-lexicographic order matters.
struct SaturatedChain {
  std::vector<Element> elements;
  friend auto operator<=>(const SaturatedChain&, const SaturatedChain&) = default;
};

inline bool chain_id_less(const Poset& p, const SaturatedChain& a, const SaturatedChain& b) {
  return std::lexicographical_compare(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                                      [&p](Element x, Element y) { return p.id(x) < p.id(y); });
}

struct Interval {
  Element bottom;
  Element top;
  std::vector<Element> members;  // sorted by (rank, id)
};

/// x ≤ y queries. Below `index_threshold` elements every query is a fresh
/// rank-bounded search; above it an up-set bitset index is built once.
class Reachability {
 public:
  static constexpr std::size_t kIndexThreshold = 10000;

  explicit Reachability(const Poset& p, std::size_t index_threshold = kIndexThreshold) : poset_(&p) {
    if (p.size() >= index_threshold) build_index();
  }

  bool indexed() const noexcept { return !upsets_.empty(); }

  bool operator()(Element x, Element y) const {
    if (x == y) return true;
    const Poset& p = *poset_;
    if (p.rank(y) <= p.rank(x)) return false;
    if (indexed()) return upsets_[x].test(y);
    std::vector<char> seen(p.size(), 0);
    std::vector<Element> stack{x};
    while (!stack.empty()) {
      const Element z = stack.back();
      stack.pop_back();
      for (Element w : p.up(z)) {
        if (w == y) return true;
        if (seen[w] || p.rank(w) >= p.rank(y)) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

 private:
  void build_index() {
    const Poset& p = *poset_;
    upsets_.assign(p.size(), boost::dynamic_bitset<>(p.size()));
    for (int k = p.length(); k >= 0; --k) {
      for (Element e : p.elements_of_rank(k)) {
        upsets_[e].set(e);
        for (Element u : p.up(e)) upsets_[e] |= upsets_[u];
      }
    }
  }

  const Poset* poset_;
  std::vector<boost::dynamic_bitset<>> upsets_;
};

inline Reachability reachability(const Poset& p) { return Reachability(p); }

namespace detail {

inline void sort_by_id(const Poset& p, std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [&p](Element a, Element b) { return p.id(a) < p.id(b); });
}

inline void sort_by_rank_then_id(const Poset& p, std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [&p](Element a, Element b) {
    if (p.rank(a) != p.rank(b)) return p.rank(a) < p.rank(b);
    return p.id(a) < p.id(b);
  });
}

// Closure along `up` (upward = true) or `down`, optionally bounded by rank.
inline std::vector<char> closure_mask(const Poset& p, std::span<const Element> generators, bool upward) {
  std::vector<char> mask(p.size(), 0);
  std::vector<Element> stack(generators.begin(), generators.end());
  for (Element g : generators) mask.at(g) = 1;
  while (!stack.empty()) {
    const Element z = stack.back();
    stack.pop_back();
    for (Element w : upward ? p.up(z) : p.down(z)) {
      if (mask[w]) continue;
      mask[w] = 1;
      stack.push_back(w);
    }
  }
  return mask;
}

inline std::vector<Element> mask_to_sorted(const Poset& p, const std::vector<char>& mask) {
  std::vector<Element> out;
  for (Element e : p.by_id())
    if (mask[e]) out.push_back(e);
  return out;
}

}  // namespace detail

inline std::vector<Element> upper_ideal(const Poset& p, std::span<const Element> generators) {
  return detail::mask_to_sorted(p, detail::closure_mask(p, generators, true));
}

inline std::vector<Element> lower_ideal(const Poset& p, std::span<const Element> generators) {
  return detail::mask_to_sorted(p, detail::closure_mask(p, generators, false));
}

inline bool is_upper_ideal(const Poset& p, std::span<const Element> members) {
  std::vector<char> mask(p.size(), 0);
  for (Element e : members) mask.at(e) = 1;
  for (Element e : members)
    for (Element u : p.up(e))
      if (!mask[u]) return false;
  return true;
}

inline Interval interval(const Poset& p, Element x, Element y) {
  const Element xs[] = {x};
  const Element ys[] = {y};
  auto up = detail::closure_mask(p, xs, true);
  if (!up[y]) fail(ErrorKind::NotComparable, p.id(x) + " is not below " + p.id(y));
  auto down = detail::closure_mask(p, ys, false);
  Interval iv{x, y, {}};
  for (Element e = 0; e < p.size(); ++e)
    if (up[e] && down[e]) iv.members.push_back(e);
  detail::sort_by_rank_then_id(p, iv.members);
  return iv;
}

/// Every saturated chain from x to y, in id-lexicographic order.
inline std::vector<SaturatedChain> maximal_chains(const Poset& p, Element x, Element y) {
  const Interval iv = interval(p, x, y);
  std::vector<char> inside(p.size(), 0);
  for (Element e : iv.members) inside[e] = 1;
  std::vector<SaturatedChain> out;
  std::vector<Element> path{x};
  auto dfs = [&](auto&& self, Element z) -> void {
    if (z == y) {
      out.push_back({path});
      return;
    }
    for (Element w : p.up(z)) {
      if (!inside[w]) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  dfs(dfs, x);
  return out;
}

/// A predicate outcome with an optional violating pair (bottom, top).
struct Verdict {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

// For fixed x: every z two ranks above x, with the middle elements of [x,z].
inline std::vector<std::pair<Element, std::vector<Element>>> length_two_intervals(const Poset& p, Element x) {
  std::unordered_map<Element, std::vector<Element>> middles;
  for (Element a : p.up(x))
    for (Element z : p.up(a)) middles[z].push_back(a);
  std::vector<std::pair<Element, std::vector<Element>>> out(middles.begin(), middles.end());
  for (auto& [z, mids] : out) sort_by_id(p, mids);
  std::sort(out.begin(), out.end(), [&p](const auto& a, const auto& b) { return p.id(a.first) < p.id(b.first); });
  return out;
}

}  // namespace detail

inline Verdict is_thin(const Poset& p) {
  for (Element x : p.by_id())
    for (const auto& [z, mids] : detail::length_two_intervals(p, x))
      if (mids.size() != 2) return {false, std::make_pair(x, z)};
  return {};
}

inline long long mobius(const Poset& p, Element x, Element y) {
  const Interval iv = interval(p, x, y);
  const std::size_t m = iv.members.size();
  std::unordered_map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[iv.members[i]] = i;
  // below[i] = members of [x, members[i]]
  std::vector<boost::dynamic_bitset<>> below(m, boost::dynamic_bitset<>(m));
  std::vector<long long> mu(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    below[i].set(i);
    for (Element d : p.down(iv.members[i])) {
      auto it = pos.find(d);
      if (it != pos.end()) below[i] |= below[it->second];
    }
    if (i == 0) {
      mu[i] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t j = below[i].find_first(); j != boost::dynamic_bitset<>::npos; j = below[i].find_next(j))
      if (j != i) s += mu[j];
    mu[i] = -s;
  }
  return mu[m - 1];
}

/// Checks the Eulerian property twice: by even/odd rank counts on every
/// nontrivial interval, and by μ(x,y) = (-1)^(rk y - rk x). The two global
/// verdicts must agree; the witness comes from the parity criterion.
inline Verdict is_eulerian(const Poset& p) {
  Verdict parity{};
  bool mobius_ok = true;
  for (Element x : p.by_id()) {
    const Element xs[] = {x};
    std::vector<Element> members = upper_ideal(p, xs);
    detail::sort_by_rank_then_id(p, members);
    const std::size_t m = members.size();
    std::unordered_map<Element, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) pos[members[i]] = i;
    std::vector<boost::dynamic_bitset<>> below(m, boost::dynamic_bitset<>(m));
    std::vector<long long> mu(m, 0);
    std::vector<std::pair<Element, Element>> failures;
    for (std::size_t i = 0; i < m; ++i) {
      below[i].set(i);
      for (Element d : p.down(members[i])) {
        auto it = pos.find(d);
        if (it != pos.end()) below[i] |= below[it->second];
      }
      if (i == 0) {
        mu[0] = 1;
        continue;
      }
      long long s = 0;
      long long even = 0, odd = 0;
      for (std::size_t j = below[i].find_first(); j != boost::dynamic_bitset<>::npos; j = below[i].find_next(j)) {
        if (j != i) s += mu[j];
        (p.rank(members[j]) % 2 == 0 ? even : odd) += 1;
      }
      mu[i] = -s;
      const int len = p.rank(members[i]) - p.rank(x);
      if (mu[i] != (len % 2 == 0 ? 1 : -1)) mobius_ok = false;
      if (even != odd) failures.emplace_back(x, members[i]);
    }
    if (parity.holds && !failures.empty()) {
      std::sort(failures.begin(), failures.end(),
                [&p](const auto& a, const auto& b) { return p.id(a.second) < p.id(b.second); });
      parity = {false, failures.front()};
    }
  }
  if (parity.holds != mobius_ok) throw std::logic_error("Eulerian parity and Möbius criteria disagree");
  return parity;
}

/// The subposet on a convex subset (intervals, ideals, complements of
/// ideals). Ranks are recomputed inside the subposet.
inline Poset induced_subposet(const Poset& p, std::span<const Element> members) {
  std::vector<char> in(p.size(), 0);
  for (Element e : members) in.at(e) = 1;
  auto down = detail::closure_mask(p, members, false);
  auto up = detail::closure_mask(p, members, true);
  for (Element e = 0; e < p.size(); ++e)
    if (down[e] && up[e] && !in[e]) fail(ErrorKind::InvalidInput, "subset is not convex (misses " + p.id(e) + ")");
  std::vector<std::string> ids;
  for (Element e : p.by_id())
    if (in[e]) ids.push_back(p.id(e));
  std::vector<Poset::IdPair> covers;
  for (const Cover& c : p.covers())
    if (in[c.lower] && in[c.upper]) covers.emplace_back(p.id(c.lower), p.id(c.upper));
  return Poset::from_cover_relations(std::move(ids), covers);
}

inline std::vector<std::string> ids_of(const Poset& p, std::span<const Element> elements) {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (Element e : elements) out.push_back(p.id(e));
  return out;
}

}  // namespace thinposet
