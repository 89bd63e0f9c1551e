#pragma once

// Diamonds of a thin poset, diamond moves on saturated chains, diamond
// transitivity, the diamond space over Z/2 and pinch-product witnesses.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "thinposet/gf2.hpp"
#include "thinposet/poset.hpp"

namespace thinposet {

/// A length-2 interval bottom ⋖ {left, right} ⋖ top; left has the smaller id.
struct Diamond {
  Element bottom;
  Element left;
  Element right;
  Element top;
  friend bool operator==(const Diamond&, const Diamond&) = default;
};

inline void require_thin(const Poset& p) {
  if (auto v = is_thin(p); !v)
    fail(ErrorKind::NotThin, "interval [" + p.id(v.witness->first) + "," + p.id(v.witness->second) + "] is not a diamond");
}

/// One diamond per length-2 interval, ordered by (bottom id, top id).
inline std::vector<Diamond> enumerate_diamonds(const Poset& p) {
  std::vector<Diamond> out;
  for (Element x : p.by_id()) {
    for (const auto& [z, mids] : detail::length_two_intervals(p, x)) {
      if (mids.size() != 2)
        fail(ErrorKind::NotThin, "interval [" + p.id(x) + "," + p.id(z) + "] is not a diamond");
      out.push_back({x, mids[0], mids[1], z});
    }
  }
  return out;
}

/// Reroutes `chain` across the other side of `d` if it runs along one side.
inline SaturatedChain diamond_move(const Diamond& d, const SaturatedChain& chain) {
  SaturatedChain out = chain;
  auto& c = out.elements;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i - 1] != d.bottom || c[i + 1] != d.top) continue;
    if (c[i] == d.left) {
      c[i] = d.right;
      break;
    }
    if (c[i] == d.right) {
      c[i] = d.left;
      break;
    }
  }
  return out;
}

inline constexpr std::size_t kChainStepBudget = 1'000'000;

namespace detail {

// The other middle element of the diamond [lo, hi] that contains `mid`.
inline std::optional<Element> opposite_middle(const Poset& p, Element lo, Element mid, Element hi) {
  for (Element w : p.up(lo))
    if (w != mid && p.is_cover(w, hi)) return w;
  return std::nullopt;
}

}  // namespace detail

/// Orbits of the set of maximal chains of [x,y] under diamond moves. Each
/// orbit is id-lexicographically sorted; orbits are ordered by first chain.
inline std::vector<std::vector<SaturatedChain>> chain_orbits(const Poset& p, Element x, Element y,
                                                             std::size_t step_budget = kChainStepBudget) {
  auto chains = maximal_chains(p, x, y);
  if (chains.size() > step_budget) fail(ErrorKind::IntervalTooLarge, "too many chains in [" + p.id(x) + "," + p.id(y) + "]");
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < chains.size(); ++i) index.emplace(chains[i].elements, i);
  std::vector<int> orbit_of(chains.size(), -1);
  std::vector<std::vector<SaturatedChain>> orbits;
  std::size_t steps = 0;
  for (std::size_t start = 0; start < chains.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::vector<std::size_t> queue{start};
    orbit_of[start] = id;
    while (!queue.empty()) {
      const std::size_t cur = queue.back();
      queue.pop_back();
      orbits.back().push_back(chains[cur]);
      const auto& c = chains[cur].elements;
      for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        if (++steps > step_budget)
          fail(ErrorKind::IntervalTooLarge, "chain-move budget exceeded in [" + p.id(x) + "," + p.id(y) + "]");
        auto other = detail::opposite_middle(p, c[i - 1], c[i], c[i + 1]);
        if (!other) fail(ErrorKind::NotThin, "interval [" + p.id(c[i - 1]) + "," + p.id(c[i + 1]) + "] is not a diamond");
        auto moved = c;
        moved[i] = *other;
        const std::size_t next = index.at(moved);
        if (orbit_of[next] < 0) {
          orbit_of[next] = id;
          queue.push_back(next);
        }
      }
    }
    std::sort(orbits.back().begin(), orbits.back().end(),
              [&p](const SaturatedChain& a, const SaturatedChain& b) { return chain_id_less(p, a, b); });
  }
  return orbits;
}

/// Checks that every length-3 interval has a connected middle cover graph
/// (a single cycle through all middle elements).
inline Verdict interval_shape_check(const Poset& p) {
  require_thin(p);
  for (Element x : p.by_id()) {
    const Element xs[] = {x};
    std::vector<Element> above3;
    for (Element e : upper_ideal(p, xs))
      if (p.rank(e) == p.rank(x) + 3) above3.push_back(e);
    for (Element y : above3) {
      const Interval iv = interval(p, x, y);
      std::vector<Element> middle;
      for (Element e : iv.members)
        if (e != x && e != y) middle.push_back(e);
      std::vector<char> in(p.size(), 0), seen(p.size(), 0);
      for (Element e : middle) in[e] = 1;
      bool degrees_ok = true;
      for (Element e : middle) {
        std::size_t deg = 0;
        for (Element w : p.up(e)) deg += in[w];
        for (Element w : p.down(e)) deg += in[w];
        if (deg != 2) degrees_ok = false;
      }
      std::vector<Element> stack{middle.front()};
      seen[middle.front()] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const Element e = stack.back();
        stack.pop_back();
        auto visit = [&](Element w) {
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        };
        for (Element w : p.up(e)) visit(w);
        for (Element w : p.down(e)) visit(w);
      }
      if (!degrees_ok || reached != middle.size()) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

struct TransitivityWitness {
  Element bottom;
  Element top;
  SaturatedChain first;
  SaturatedChain second;
};

struct TransitivityReport {
  bool transitive = true;
  std::optional<TransitivityWitness> witness;
  explicit operator bool() const noexcept { return transitive; }
};

namespace detail {

// Pairs x < y with rk(y) - rk(x) >= min_length (exactly `exact` if set),
// ordered by (length, id x, id y).
inline std::vector<std::pair<Element, Element>> long_intervals(const Poset& p, int min_length,
                                                               std::optional<int> exact = std::nullopt) {
  std::vector<std::tuple<int, Element, Element>> pairs;
  for (Element x : p.by_id()) {
    const Element xs[] = {x};
    for (Element y : upper_ideal(p, xs)) {
      const int len = p.rank(y) - p.rank(x);
      if (len < min_length || (exact && len != *exact)) continue;
      pairs.emplace_back(len, x, y);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&p](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return p.id(std::get<1>(a)) < p.id(std::get<1>(b));
    return p.id(std::get<2>(a)) < p.id(std::get<2>(b));
  });
  std::vector<std::pair<Element, Element>> out;
  out.reserve(pairs.size());
  for (const auto& [len, x, y] : pairs) out.emplace_back(x, y);
  return out;
}

}  // namespace detail

/// Decides whether diamond moves act transitively on the maximal chains of
/// every interval. Intervals of length <= 2 are automatic. The witness is
/// taken from the first failing interval in (length, bottom id, top id)
/// order: the smallest chain and the smallest chain outside its orbit.
inline TransitivityReport is_diamond_transitive(const Poset& p, std::size_t step_budget = kChainStepBudget) {
  // Bad length-3 shapes mean a failure of length 3, the shortest possible.
  const bool shapes_ok = static_cast<bool>(interval_shape_check(p));
  const auto pairs = shapes_ok ? detail::long_intervals(p, 3) : detail::long_intervals(p, 3, 3);
  for (const auto& [x, y] : pairs) {
    auto orbits = chain_orbits(p, x, y, step_budget);
    if (orbits.size() <= 1) continue;
    return {false, TransitivityWitness{x, y, orbits[0].front(), orbits[1].front()}};
  }
  if (!shapes_ok) throw std::logic_error("interval shape check failed but every length-3 interval is transitive");
  return {};
}

/// The 2-complex with the elements as vertices, covers as edges and
/// diamonds as square 2-cells; boundary maps over Z/2.
struct DiamondSpace {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  gf2::Matrix boundary1{0, 0};  // vertices x edges
  gf2::Matrix boundary2{0, 0};  // edges x faces
};

inline DiamondSpace diamond_space(const Poset& p) {
  const auto diamonds = enumerate_diamonds(p);
  DiamondSpace ds;
  ds.vertices = p.size();
  ds.edges = p.covers().size();
  ds.faces = diamonds.size();
  ds.boundary1 = gf2::Matrix(ds.vertices, ds.edges);
  ds.boundary2 = gf2::Matrix(ds.edges, ds.faces);
  for (std::size_t e = 0; e < ds.edges; ++e) {
    ds.boundary1.set(p.covers()[e].lower, e);
    ds.boundary1.set(p.covers()[e].upper, e);
  }
  for (std::size_t f = 0; f < ds.faces; ++f) {
    const Diamond& d = diamonds[f];
    for (auto [a, b] : {std::pair{d.bottom, d.left}, std::pair{d.bottom, d.right}, std::pair{d.left, d.top},
                        std::pair{d.right, d.top}})
      ds.boundary2.set(*p.cover_index(a, b), f);
  }
  return ds;
}

inline std::size_t h0_z2(const DiamondSpace& ds) { return ds.vertices - gf2::rank(ds.boundary1); }
inline std::size_t h1_z2(const DiamondSpace& ds) {
  return ds.edges - gf2::rank(ds.boundary1) - gf2::rank(ds.boundary2);
}
inline std::size_t h2_z2(const DiamondSpace& ds) { return ds.faces - gf2::rank(ds.boundary2); }

/// Two chain-orbit closures P_C, P_D meeting exactly in {bottom, top}.
struct PinchWitness {
  Element bottom;
  Element top;
  SaturatedChain chain_c;
  SaturatedChain chain_d;
  std::vector<Element> part_c;  // sorted by id
  std::vector<Element> part_d;
};

namespace detail {

inline std::vector<Element> orbit_support(const Poset& p, const std::vector<SaturatedChain>& orbit) {
  std::vector<char> mask(p.size(), 0);
  for (const auto& c : orbit)
    for (Element e : c.elements) mask[e] = 1;
  return mask_to_sorted(p, mask);
}

}  // namespace detail

/// Finds a pinch-product obstruction, or nothing if `p` is diamond transitive.
inline std::optional<PinchWitness> pinch_witness(const Poset& p, std::size_t step_budget = kChainStepBudget) {
  require_thin(p);
  std::optional<TransitivityWitness> raw;
  for (const auto& [x, y] : detail::long_intervals(p, 3)) {
    auto orbits = chain_orbits(p, x, y, step_budget);
    if (orbits.size() <= 1) continue;
    if (!raw) raw = TransitivityWitness{x, y, orbits[0].front(), orbits[1].front()};
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (std::size_t j = i + 1; j < orbits.size(); ++j) {
        auto pc = detail::orbit_support(p, orbits[i]);
        auto pd = detail::orbit_support(p, orbits[j]);
        std::vector<Element> common;
        std::set_intersection(pc.begin(), pc.end(), pd.begin(), pd.end(), std::back_inserter(common),
                              [&p](Element a, Element b) { return p.id(a) < p.id(b); });
        if (common.size() == 2) return PinchWitness{x, y, orbits[i].front(), orbits[j].front(), pc, pd};
      }
    }
  }
  if (raw) {
    fail(ErrorKind::NotTransitiveNoCleanWitness,
         "chains from " + p.id(raw->bottom) + " to " + p.id(raw->top) + " lie in different orbits but no orbit pair meets cleanly");
  }
  return std::nullopt;
}

}  // namespace thinposet
