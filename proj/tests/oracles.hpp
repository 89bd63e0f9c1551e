#pragma once

// Brute-force reference computations used to check the library. None of
// these call the routines they are compared against.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "thinposet/thinposet.hpp"

namespace oracle {

using thinposet::Element;
using thinposet::IntMatrix;
using thinposet::Poset;

// leq[x][y] by Floyd-Warshall over the cover graph.
inline std::vector<std::vector<char>> order_matrix(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
  for (const auto& c : p.covers()) leq[c.lower][c.upper] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  return leq;
}

inline long long mobius(const Poset& p, const std::vector<std::vector<char>>& leq, Element x, Element y) {
  if (!leq[x][y]) return 0;
  std::map<Element, long long> mu;
  std::vector<Element> between;
  for (Element z = 0; z < p.size(); ++z)
    if (leq[x][z] && leq[z][y]) between.push_back(z);
  std::sort(between.begin(), between.end(), [&](Element a, Element b) { return p.rank(a) < p.rank(b); });
  for (Element z : between) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    for (Element w : between)
      if (w != z && leq[w][z]) s += mu[w];
    mu[z] = -s;
  }
  return mu[y];
}

inline bool thin(const Poset& p) {
  const auto leq = order_matrix(p);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (!leq[x][y] || p.rank(y) - p.rank(x) != 2) continue;
      int mids = 0;
      for (Element z = 0; z < p.size(); ++z) mids += z != x && z != y && leq[x][z] && leq[z][y];
      if (mids != 2) return false;
    }
  return true;
}

inline bool eulerian(const Poset& p) {
  const auto leq = order_matrix(p);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (leq[x][y] && mobius(p, leq, x, y) != ((p.rank(y) - p.rank(x)) % 2 == 0 ? 1 : -1)) return false;
  return true;
}

// All saturated chains x = c0 < c1 < ... < ck = y, built rank by rank from
// the order matrix.
inline std::vector<std::vector<Element>> chains(const Poset& p, const std::vector<std::vector<char>>& leq, Element x,
                                                Element y) {
  std::vector<std::vector<Element>> partial{{x}};
  for (int r = p.rank(x) + 1; r <= p.rank(y); ++r) {
    std::vector<std::vector<Element>> next;
    for (const auto& c : partial)
      for (Element z = 0; z < p.size(); ++z)
        if (p.rank(z) == r && leq[c.back()][z] && leq[z][y]) {
          auto d = c;
          d.push_back(z);
          next.push_back(std::move(d));
        }
    partial = std::move(next);
  }
  return partial;
}

// Connected components of the graph on chains joining chains that differ in
// exactly one position.
inline std::size_t chain_components(const std::vector<std::vector<Element>>& cs) {
  std::vector<std::size_t> parent(cs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      std::size_t diff = 0;
      for (std::size_t k = 0; k < cs[i].size(); ++k) diff += cs[i][k] != cs[j][k];
      if (diff == 1) parent[root(i)] = root(j);
    }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < cs.size(); ++i) roots.insert(root(i));
  return roots.size();
}

inline bool diamond_transitive(const Poset& p) {
  const auto leq = order_matrix(p);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (leq[x][y] && p.rank(y) - p.rank(x) >= 3 && chain_components(chains(p, leq, x, y)) != 1) return false;
  return true;
}

// Rank over Q by fraction Gaussian elimination.
inline std::size_t rank_q(const std::vector<std::vector<mpq_class>>& rows_in) {
  auto a = rows_in;
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_q(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = static_cast<long>(m(i, j));
  return rank_q(rows);
}

// dim H over Q of a complex, from ranks of its differentials.
inline std::vector<std::size_t> betti_q(const thinposet::CochainComplex& cx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    std::size_t b = cx.dim(i);
    if (auto d = cx.differential_from(i)) b -= rank_q(*d);
    // incoming map
    if (cx.direction == thinposet::Direction::Cohomological) {
      if (i > 0) b -= rank_q(cx.maps[i - 1]);
    } else if (i + 1 < cx.size()) {
      b -= rank_q(cx.maps[i]);
    }
    out.push_back(b);
  }
  return out;
}

// Simplicial Betti numbers over Q from oriented boundary matrices.
inline std::vector<std::size_t> simplicial_betti(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> faces;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t n = f.size();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1U) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  std::size_t top = 0;
  for (const auto& s : faces) top = std::max(top, s.size() - 1);
  std::vector<std::vector<std::vector<int>>> by_dim(top + 1);
  for (const auto& s : faces) by_dim[s.size() - 1].push_back(s);
  // ranks[k] = rank of boundary C_k -> C_{k-1}
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < by_dim[k - 1].size(); ++i) index[by_dim[k - 1][i]] = i;
    std::vector<std::vector<mpq_class>> m(by_dim[k - 1].size(), std::vector<mpq_class>(by_dim[k].size()));
    for (std::size_t j = 0; j < by_dim[k].size(); ++j) {
      const auto& s = by_dim[k][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto t = s;
        t.erase(t.begin() + static_cast<long>(i));
        m[index.at(t)][j] = i % 2 == 0 ? 1 : -1;
      }
    }
    ranks[k] = rank_q(m);
  }
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k <= top; ++k) betti.push_back(by_dim[k].size() - ranks[k] - ranks[k + 1]);
  return betti;
}

// Circles of a Kauffman state, counted by walking the smoothed diagram.
inline std::size_t circles(const thinposet::LinkDiagram& d, std::uint64_t subset) {
  const auto& pd = d.pd();
  std::map<int, std::vector<std::pair<std::size_t, int>>> ends;
  for (std::size_t i = 0; i < pd.size(); ++i)
    for (int j = 0; j < 4; ++j) ends[pd[i][static_cast<std::size_t>(j)]].emplace_back(i, j);
  auto partner = [&](std::size_t i, int j) {
    static constexpr int zero[4] = {1, 0, 3, 2};
    static constexpr int one[4] = {3, 2, 1, 0};
    return (subset >> i & 1U) ? one[j] : zero[j];
  };
  std::set<std::pair<std::size_t, int>> seen;
  std::size_t count = 0;
  for (std::size_t i = 0; i < pd.size(); ++i)
    for (int j = 0; j < 4; ++j) {
      if (seen.count({i, j})) continue;
      ++count;
      std::pair<std::size_t, int> at{i, j};
      while (!seen.count(at)) {
        seen.insert(at);
        const std::pair<std::size_t, int> across{at.first, partner(at.first, at.second)};
        seen.insert(across);
        const auto& e = ends.at(pd[across.first][static_cast<std::size_t>(across.second)]);
        at = e[0] == across ? e[1] : e[0];
      }
    }
  return count + static_cast<std::size_t>(d.loops());
}

// (-1)^{n-} q^{n+ - 2n-} Σ_I (-1)^{|I|} q^{|I|} (q + 1/q)^{circles}, as an
// exponent -> coefficient map.
inline std::map<int, long long> jones_state_sum(const thinposet::LinkDiagram& d) {
  std::map<int, long long> sum;
  const std::size_t n = d.crossings();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::map<int, long long> term{{0, 1}};
    for (std::size_t c = 0; c < circles(d, s); ++c) {
      std::map<int, long long> next;
      for (auto [e, v] : term) {
        next[e + 1] += v;
        next[e - 1] += v;
      }
      term = std::move(next);
    }
    const int k = std::popcount(s);
    for (auto [e, v] : term) sum[e + k + d.n_plus() - 2 * d.n_minus()] += (k + d.n_minus()) % 2 == 0 ? v : -v;
  }
  std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
  return sum;
}

inline std::map<int, long long> as_map(const thinposet::LaurentPoly& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

// Every potential f with f(bottom) = 1 and δf = c, by exhaustive search.
inline std::vector<std::vector<int>> potentials_with_coboundary(const Poset& p, const thinposet::EdgeColoring& c) {
  std::vector<std::vector<int>> out;
  const Element b = *p.bottom();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
    if (m >> b & 1U) continue;
    std::vector<int> f(p.size());
    for (Element e = 0; e < p.size(); ++e) f[e] = (m >> e & 1U) ? -1 : 1;
    bool ok = true;
    for (std::size_t i = 0; ok && i < p.covers().size(); ++i)
      ok = f[p.covers()[i].lower] * f[p.covers()[i].upper] == c.values[i];
    if (ok) out.push_back(f);
  }
  return out;
}

}  // namespace oracle
