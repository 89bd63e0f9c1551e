#pragma once

// Integer Laurent polynomials in q.

#include <cstdint>
#include <map>
#include <string>

namespace thinposet {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant) {  // NOLINT(google-explicit-constructor)
    add(0, constant);
  }

  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1) {
    LaurentPoly p;
    p.add(exponent, coefficient);
    return p;
  }
  /// q + q^{-1}
  static LaurentPoly quantum_two() { return monomial(1) + monomial(-1); }

  void add(int exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto& c = coeffs_[exponent];
    c += coefficient;
    if (c == 0) coeffs_.erase(exponent);
  }

  std::int64_t coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
  }
  const std::map<int, std::int64_t>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Value at q = 1.
  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  LaurentPoly shifted(int by) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + by] = c;
    return out;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly out(1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) out.add(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "q^-3 + 2q - q^5"; "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      std::int64_t m = c;
      if (first) {
        if (m < 0) s += "-";
      } else {
        s += m < 0 ? " - " : " + ";
      }
      first = false;
      if (m < 0) m = -m;
      if (e == 0) {
        s += std::to_string(m);
        continue;
      }
      if (m != 1) s += std::to_string(m);
      s += "q";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<int, std::int64_t> coeffs_;
};

}  // namespace thinposet
