#pragma once

// Univariate polynomials with integer coefficients, stored ascending by
// degree with no trailing zeros (the zero polynomial is the empty list).

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrinv/rational.hpp"

namespace arrinv {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0 alongside is_zero().
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  // Multiplication by t^k.
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "1 + 3t + 2t^2"; the zero polynomial prints as "0".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      BigInt c = coeffs_[k];
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      BigInt mag = big_abs(c);
      if (k == 0 || mag != 1) os << mag.str();
      if (k >= 1) os << "t";
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace arrinv
