#pragma once

// Dense integer matrices, Smith normal form invariants and ranks over Q and
// F_p. Elimination runs on checked int64 and restarts on GMP integers when
// an intermediate value overflows.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "thinposet/error.hpp"

namespace thinposet {

using BigInt = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorKind::ShapeMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  IntMatrix scaled(std::int64_t s) const {
    IntMatrix out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
  }

  /// Entries reduced into [0, p).
  IntMatrix mod(std::uint64_t p) const {
    IntMatrix out = *this;
    const auto m = static_cast<std::int64_t>(p);
    for (auto& v : out.data_) v = ((v % m) + m) % m;
    return out;
  }

  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b, std::int64_t scale = 1) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = scale * b(r, c);
  }

  /// Rows and columns picked by index lists.
  IntMatrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    IntMatrix out(rs.size(), cs.size());
    for (std::size_t r = 0; r < rs.size(); ++r)
      for (std::size_t c = 0; c < cs.size(); ++c) out(r, c) = (*this)(rs[r], cs[c]);
    return out;
  }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Product with overflow detection (TooLarge).
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::ShapeMismatch, "matrix product of incompatible shapes");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t s = a(i, k);
      if (s == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(s, b(k, j), &t) || __builtin_add_overflow(out(i, j), t, &out(i, j)))
          fail(ErrorKind::TooLarge, "integer overflow in matrix product");
      }
    }
  return out;
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::ShapeMismatch, "matrix sum of incompatible shapes");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (__builtin_add_overflow(a(i, j), b(i, j), &out(i, j))) fail(ErrorKind::TooLarge, "integer overflow in matrix sum");
  return out;
}

namespace detail {

struct Overflow {};

inline std::int64_t abs_of(std::int64_t v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}
inline BigInt abs_of(const BigInt& v) { return abs(v); }

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

inline std::int64_t quotient(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN && b == -1) throw Overflow{};
  return a / b;
}
inline BigInt quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a -= q * b
inline void sub_mul(std::int64_t& a, std::int64_t q, std::int64_t b) {
  std::int64_t t = 0;
  if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &a)) throw Overflow{};
}
inline void sub_mul(BigInt& a, const BigInt& q, const BigInt& b) { a -= q * b; }

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt to_big(const BigInt& v) { return v; }

// Diagonal entries (not yet a divisibility chain) of a Smith form of m.
template <class T>
std::vector<BigInt> smith_diagonal(std::vector<std::vector<T>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    T best{};
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!is_zero(m[i][j]) && (pr == rows || abs_of(m[i][j]) < best)) {
          best = abs_of(m[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(m[i][t])) continue;
        const T q = quotient(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) sub_mul(m[i][j], q, m[t][j]);
        if (!is_zero(m[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(m[t][j])) continue;
        const T q = quotient(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) sub_mul(m[i][j], q, m[i][t]);
        if (!is_zero(m[t][j])) clean = false;
      }
      if (clean) break;
      // Move the smallest leftover in row/column t onto the diagonal.
      std::size_t br = t, bc = t;
      T bv = abs_of(m[t][t]);
      for (std::size_t i = t + 1; i < rows; ++i)
        if (!is_zero(m[i][t]) && abs_of(m[i][t]) < bv) {
          bv = abs_of(m[i][t]);
          br = i;
          bc = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!is_zero(m[t][j]) && abs_of(m[t][j]) < bv) {
          bv = abs_of(m[t][j]);
          br = t;
          bc = j;
        }
      if (br != t) std::swap(m[t], m[br]);
      if (bc != t)
        for (auto& row : m) std::swap(row[t], row[bc]);
    }
    diag.push_back(abs(to_big(m[t][t])));
  }
  return diag;
}

}  // namespace detail

/// Turns a list of nonzero diagonal entries into invariant factors
/// d_1 | d_2 | ... (same abelian group, sorted ascending).
inline std::vector<BigInt> normalize_invariant_factors(std::vector<BigInt> d) {
  for (auto& v : d) v = abs(v);
  d.erase(std::remove_if(d.begin(), d.end(), [](const BigInt& v) { return sgn(v) == 0; }), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

struct SmithInvariants {
  std::vector<BigInt> factors;  // nonzero invariant factors, ascending divisibility chain
  bool promoted = false;        // true when the int64 path overflowed

  std::size_t rank() const noexcept { return factors.size(); }
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> t;
    for (const auto& f : factors)
      if (f > 1) t.push_back(f);
    return t;
  }
};

inline SmithInvariants smith_invariants(const IntMatrix& a) {
  std::vector<std::vector<std::int64_t>> m(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  try {
    return {normalize_invariant_factors(detail::smith_diagonal(std::move(m))), false};
  } catch (const detail::Overflow&) {
    std::vector<std::vector<BigInt>> big(a.rows(), std::vector<BigInt>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) big[i][j] = detail::to_big(a(i, j));
    return {normalize_invariant_factors(detail::smith_diagonal(std::move(big))), true};
  }
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Rank over F_p, p prime below 2^32.
inline std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 32)) fail(ErrorKind::InvalidInput, "modulus must be a prime below 2^32");
  IntMatrix m = a.mod(p);
  auto inverse = [p](std::uint64_t v) {
    std::uint64_t result = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const std::uint64_t inv = inverse(static_cast<std::uint64_t>(m(r, c)));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = static_cast<std::int64_t>(static_cast<std::uint64_t>(m(r, j)) * inv % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>(m(i, c));
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const std::uint64_t sub = f * static_cast<std::uint64_t>(m(r, j)) % p;
        m(i, j) = static_cast<std::int64_t>((static_cast<std::uint64_t>(m(i, j)) + p - sub) % p);
      }
    }
    ++r;
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace thinposet
