#pragma once

// Link diagrams in PD notation, Kauffman states, the Kauffman bracket, and
// the Khovanov cube as a functor on a Boolean lattice.
//
// Conventions: a crossing [a,b,c,d] lists arc labels counterclockwise
// starting from the incoming under-strand. The 0-smoothing joins a-b and
// c-d, the 1-smoothing joins a-d and b-c. A crossing is positive when the
// over-strand runs from d to b.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thinposet/coloring.hpp"
#include "thinposet/constructors.hpp"
#include "thinposet/functor_complex.hpp"
#include "thinposet/laurent.hpp"

namespace thinposet {

using Crossing = std::array<int, 4>;

class LinkDiagram {
 public:
  /// Validates the PD code. Signs may be empty when every crossing's
  /// orientation can be read off the code; supplied signs must agree with
  /// the inferable ones. `loops` counts crossingless components and
  /// defaults to 1 for an empty code, 0 otherwise.
  static LinkDiagram make(std::vector<Crossing> pd, std::vector<int> signs = {}, std::optional<int> loops = {}) {
    LinkDiagram d;
    d.pd_ = std::move(pd);
    d.loops_ = loops.value_or(d.pd_.empty() ? 1 : 0);
    if (d.loops_ < 0) fail(ErrorKind::MalformedPD, "loops must be non-negative");
    if (d.pd_.size() > 20) fail(ErrorKind::TooLarge, "at most 20 crossings are supported");
    std::map<int, std::vector<std::pair<std::size_t, int>>> where;
    for (std::size_t i = 0; i < d.pd_.size(); ++i)
      for (int pos = 0; pos < 4; ++pos) where[d.pd_[i][static_cast<std::size_t>(pos)]].emplace_back(i, pos);
    for (const auto& [label, occ] : where)
      if (occ.size() != 2)
        fail(ErrorKind::MalformedPD, "arc " + std::to_string(label) + " appears " + std::to_string(occ.size()) +
                                         " times (expected 2)");
    for (const auto& entry : where) d.labels_.push_back(entry.first);
    const auto inferred = infer_signs(d.pd_, where);
    if (!signs.empty() && signs.size() != d.pd_.size())
      fail(ErrorKind::MalformedPD, "sign list length differs from crossing count");
    d.signs_.resize(d.pd_.size());
    for (std::size_t i = 0; i < d.pd_.size(); ++i) {
      if (!signs.empty()) {
        if (signs[i] != 1 && signs[i] != -1) fail(ErrorKind::MalformedPD, "signs must be +1 or -1");
        if (inferred[i] && *inferred[i] != signs[i])
          fail(ErrorKind::MalformedPD, "sign of crossing " + std::to_string(i + 1) + " contradicts the PD orientation");
        d.signs_[i] = signs[i];
      } else {
        if (!inferred[i]) fail(ErrorKind::MalformedPD, "sign of crossing " + std::to_string(i + 1) + " must be supplied");
        d.signs_[i] = *inferred[i];
      }
    }
    return d;
  }

  const std::vector<Crossing>& pd() const noexcept { return pd_; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int loops() const noexcept { return loops_; }
  std::size_t crossings() const noexcept { return pd_.size(); }
  /// Distinct arc labels, ascending.
  const std::vector<int>& labels() const noexcept { return labels_; }
  int n_plus() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1)); }
  int n_minus() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1)); }

 private:
  using Occurrences = std::map<int, std::vector<std::pair<std::size_t, int>>>;

  // Propagates "arc enters / leaves crossing" along arcs. Position 0 is
  // incoming and 2 outgoing by convention; 1 and 3 are opposite.
  static std::vector<std::optional<int>> infer_signs(const std::vector<Crossing>& pd, const Occurrences& where) {
    std::vector<std::array<int, 4>> dir(pd.size(), {1, 0, -1, 0});  // +1 in, -1 out, 0 unknown
    bool changed = true;
    auto set = [&](std::size_t c, int pos, int v) {
      int& slot = dir[c][static_cast<std::size_t>(pos)];
      if (slot == v) return;
      if (slot != 0) fail(ErrorKind::MalformedPD, "inconsistent orientation at crossing " + std::to_string(c + 1));
      slot = v;
      changed = true;
    };
    while (changed) {
      changed = false;
      for (const auto& [label, occ] : where) {
        const auto [c0, p0] = occ[0];
        const auto [c1, p1] = occ[1];
        const int v0 = dir[c0][static_cast<std::size_t>(p0)];
        const int v1 = dir[c1][static_cast<std::size_t>(p1)];
        if (v0 != 0) set(c1, p1, -v0);
        if (v1 != 0) set(c0, p0, -v1);
      }
      for (std::size_t c = 0; c < pd.size(); ++c) {
        if (dir[c][1] != 0) set(c, 3, -dir[c][1]);
        if (dir[c][3] != 0) set(c, 1, -dir[c][3]);
      }
    }
    std::vector<std::optional<int>> out(pd.size());
    for (std::size_t c = 0; c < pd.size(); ++c)
      if (dir[c][1] != 0) out[c] = dir[c][1] == -1 ? 1 : -1;  // b outgoing: over runs d → b
    return out;
  }

  std::vector<Crossing> pd_;
  std::vector<int> signs_;
  std::vector<int> labels_;
  int loops_ = 0;
};

/// circle_of[i] is the circle through the i-th arc label of the diagram;
/// circles are numbered by their smallest arc label, then the free loops.
struct KauffmanState {
  std::uint64_t subset = 0;  // bit i set: crossing i+1 uses the 1-smoothing
  std::size_t circles = 0;
  std::vector<std::size_t> circle_of;
};

inline KauffmanState resolve(const LinkDiagram& d, std::uint64_t subset) {
  if (d.crossings() < 64 && subset >> d.crossings())
    fail(ErrorKind::MalformedPD, "subset mentions a crossing beyond the diagram");
  const auto& labels = d.labels();
  auto index = [&](int label) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<std::size_t> parent(labels.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto join = [&](int a, int b) {
    const std::size_t ra = root(index(a)), rb = root(index(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (std::size_t i = 0; i < d.crossings(); ++i) {
    const auto& [a, b, c, e] = d.pd()[i];
    if (subset >> i & 1U) {
      join(a, e);
      join(b, c);
    } else {
      join(a, b);
      join(c, e);
    }
  }
  KauffmanState s;
  s.subset = subset;
  s.circle_of.resize(labels.size());
  std::vector<std::size_t> number(labels.size(), SIZE_MAX);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t r = root(i);
    if (number[r] == SIZE_MAX) number[r] = s.circles++;
    s.circle_of[i] = number[r];
  }
  s.circles += static_cast<std::size_t>(d.loops());
  return s;
}

/// Σ_I (-1)^{|I|} q^{|I|} (q + q^{-1})^{|D(I)|}, summed state by state.
inline LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  LaurentPoly sum;
  const std::uint64_t states = std::uint64_t{1} << d.crossings();
  const LaurentPoly v = LaurentPoly::quantum_two();
  for (std::uint64_t m = 0; m < states; ++m) {
    const int k = std::popcount(m);
    const LaurentPoly term = v.pow(static_cast<unsigned>(resolve(d, m).circles)).shifted(k);
    sum += k % 2 == 0 ? term : -term;
  }
  return sum;
}

/// (-1)^{n_-} q^{n_+ - 2n_-} ⟨L⟩, the unnormalized Jones polynomial.
inline LaurentPoly shifted_bracket(const LinkDiagram& d) {
  LaurentPoly j = kauffman_bracket(d).shifted(d.n_plus() - 2 * d.n_minus());
  return d.n_minus() % 2 == 0 ? j : -j;
}

namespace detail {

// Basis vector t of V^{⊗k}: bit j clear is 1 (degree +1), set is x (degree -1).
inline std::vector<int> tensor_degrees(std::size_t circles, int shift) {
  std::vector<int> q(std::size_t{1} << circles);
  for (std::size_t t = 0; t < q.size(); ++t) q[t] = shift + static_cast<int>(circles) - 2 * std::popcount(t);
  return q;
}

// Merge m or split Δ between adjacent states, identity on other circles.
inline IntMatrix cube_edge_map(const KauffmanState& from, const KauffmanState& to) {
  const std::size_t ki = from.circles, kj = to.circles;
  // image[c] = circle of `to` containing circle c of `from` (any arc), loops map to loops.
  std::vector<std::vector<std::size_t>> touches(ki);
  std::size_t arc_i = 0, arc_j = 0;
  for (std::size_t a = 0; a < from.circle_of.size(); ++a) {
    touches[from.circle_of[a]].push_back(to.circle_of[a]);
    arc_i = std::max(arc_i, from.circle_of[a] + 1);
    arc_j = std::max(arc_j, to.circle_of[a] + 1);
  }
  for (std::size_t l = 0; arc_i + l < ki; ++l) touches[arc_i + l].push_back(arc_j + l);
  for (auto& t : touches) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  IntMatrix m(std::size_t{1} << kj, std::size_t{1} << ki);
  if (kj + 1 == ki) {
    std::size_t a = ki, b = ki;
    for (std::size_t c = 0; c < ki && b == ki; ++c)
      for (std::size_t e = c + 1; e < ki; ++e)
        if (touches[c][0] == touches[e][0]) {
          a = c;
          b = e;
          break;
        }
    for (std::size_t t = 0; t < (std::size_t{1} << ki); ++t) {
      const bool xa = t >> a & 1U, xb = t >> b & 1U;
      if (xa && xb) continue;
      std::size_t u = 0;
      for (std::size_t c = 0; c < ki; ++c)
        if (c != a && c != b && (t >> c & 1U)) u |= std::size_t{1} << touches[c][0];
      if (xa || xb) u |= std::size_t{1} << touches[a][0];
      m(u, t) = 1;
    }
  } else if (kj == ki + 1) {
    std::size_t s = 0;
    while (touches[s].size() != 2) ++s;
    const std::size_t lo = touches[s][0], hi = touches[s][1];
    for (std::size_t t = 0; t < (std::size_t{1} << ki); ++t) {
      std::size_t u = 0;
      for (std::size_t c = 0; c < ki; ++c)
        if (c != s && (t >> c & 1U)) u |= std::size_t{1} << touches[c][0];
      if (t >> s & 1U) {
        m(u | std::size_t{1} << lo | std::size_t{1} << hi, t) = 1;
      } else {
        m(u | std::size_t{1} << hi, t) = 1;
        m(u | std::size_t{1} << lo, t) = 1;
      }
    }
  } else {
    throw std::logic_error("adjacent Kauffman states must differ by one circle");
  }
  return m;
}

}  // namespace detail

/// The functor I ↦ V^{⊗|D(I)|}{|I|} on the Boolean lattice of crossing
/// subsets (crossing i is element i of the subsets).
inline FreeFunctor cube_functor(const LinkDiagram& d) {
  const int n = static_cast<int>(d.crossings());
  Poset p = boolean_lattice(n);
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<KauffmanState> resolved;
  resolved.reserve(states);
  std::vector<std::uint64_t> mask_of(p.size());
  for (std::uint64_t m = 0; m < states; ++m) {
    resolved.push_back(resolve(d, m));
    mask_of[p.at(subset_id(m))] = m;
  }
  FreeFunctor f{p, std::vector<std::vector<int>>(p.size()), {}, BaseRing::integers()};
  for (Element e = 0; e < p.size(); ++e) {
    const std::uint64_t m = mask_of[e];
    f.dims[e] = detail::tensor_degrees(resolved[m].circles, std::popcount(m));
  }
  for (const Cover& c : p.covers())
    f.maps.push_back(detail::cube_edge_map(resolved[mask_of[c.lower]], resolved[mask_of[c.upper]]));
  return f;
}

/// Cube complex shifted by [-n_-]{n_+ - 2n_-}.
inline CochainComplex khovanov_complex(const LinkDiagram& d, const std::optional<EdgeColoring>& coloring = {}) {
  const FreeFunctor f = cube_functor(d);
  EdgeColoring c;
  if (coloring) {
    c = *coloring;
  } else {
    auto found = find_balanced_coloring(f.poset);
    if (!found) throw std::logic_error("Boolean lattice without a balanced coloring");
    c = *found;
  }
  return shift(assemble(f, c), -d.n_minus(), d.n_plus() - 2 * d.n_minus());
}

/// q-graded integral Khovanov homology.
inline CohomologyResult khovanov_homology(const LinkDiagram& d, const std::optional<EdgeColoring>& coloring = {}) {
  return cohomology(khovanov_complex(d, coloring), true);
}

}  // namespace thinposet
