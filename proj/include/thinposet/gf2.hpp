#pragma once

// Dense GF(2) linear algebra on bitset rows.

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace thinposet::gf2 {

using Row = boost::dynamic_bitset<>;

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Row(cols)) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r][c] = v; }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
  bool get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Row& row(std::size_t r) const { return rows_[r]; }
  Row& row(std::size_t r) { return rows_[r]; }

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Reduced row echelon form, pivots chosen at the lowest available column.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[i] belongs to row i
  Row rhs;                              // transformed right-hand side (if any)
};

inline Echelon reduce(Matrix a, Row rhs = Row()) {
  const bool with_rhs = rhs.size() == a.rows();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && !a.get(sel, c)) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) {
      std::swap(a.row(sel), a.row(r));
      if (with_rhs) {
        const bool t = rhs[sel];
        rhs[sel] = rhs[r];
        rhs[r] = t;
      }
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a.get(i, c)) {
        a.row(i) ^= a.row(r);
        if (with_rhs && rhs[r]) rhs.flip(i);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), std::move(rhs)};
}

inline std::size_t rank(const Matrix& a) { return reduce(a).pivot_cols.size(); }

/// A solution of a·x = b with every free variable set to 0, or nothing if
/// the system is inconsistent.
inline std::optional<Row> solve(const Matrix& a, const Row& b) {
  Echelon e = reduce(a, b);
  for (std::size_t i = e.pivot_cols.size(); i < a.rows(); ++i)
    if (e.rhs[i]) return std::nullopt;
  Row x(a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.rhs[i];
  return x;
}

/// Basis of {x : a·x = 0}, one vector per free column in increasing order.
inline std::vector<Row> kernel_basis(const Matrix& a) {
  Echelon e = reduce(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Row x(a.cols());
    x[f] = true;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      if (e.reduced.get(i, f)) x[e.pivot_cols[i]] = true;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace thinposet::gf2
