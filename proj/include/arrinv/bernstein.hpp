#pragma once

// Desk-scale filtration calculus: dimension sequences of good filtrations,
// exact Hilbert-polynomial interpolation, dimension/multiplicity extraction,
// and the cumulative-sum identity that transfers multiplicity across the
// direct image dim_K G_k = Σ_{j<=k} dim_K F_j.
//
// Modules appear here only through their dimension counts; there is no
// operator algebra.

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrinv/errors.hpp"
#include "arrinv/rational.hpp"

namespace arrinv {

// h(T) with rational coefficients (ascending, trimmed) in the context of an
// ambient dimension n; a valid Hilbert polynomial has degree <= n.
class HilbertPolynomial {
 public:
  HilbertPolynomial() : ambient_dim_(0) {}
  HilbertPolynomial(std::vector<Rational> coeffs, std::size_t ambient_dim)
      : coeffs_(std::move(coeffs)), ambient_dim_(ambient_dim) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (!coeffs_.empty() && coeffs_.size() - 1 > ambient_dim_)
      throw std::invalid_argument("HilbertPolynomial: degree exceeds ambient dimension");
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading_coefficient() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      os << "(" << coeffs_[k] << ")";
      if (k >= 1) os << "T";
      if (k >= 2) os << "^" << k;
      if (k > 0) os << " + ";
    }
    return os.str();
  }

 private:
  std::vector<Rational> coeffs_;
  std::size_t ambient_dim_;
};

// dim_K F_k for k = 0, 1, 2, ...; filtration levels below zero are zero.
// The values must be nonnegative and nondecreasing (F_k ⊆ F_{k+1}), and are
// promised to follow a polynomial from level `eventually_polynomial_from`.
class DimensionSequence {
 public:
  explicit DimensionSequence(std::vector<BigInt> values,
                             std::size_t eventually_polynomial_from = 0)
      : values_(std::move(values)), polynomial_from_(eventually_polynomial_from) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (values_[k] < 0)
        throw std::invalid_argument("DimensionSequence: negative dimension at level " +
                                    std::to_string(k));
      if (k > 0 && values_[k] < values_[k - 1])
        throw std::invalid_argument("DimensionSequence: not nondecreasing at level " +
                                    std::to_string(k));
    }
    if (polynomial_from_ > values_.size())
      throw std::invalid_argument("DimensionSequence: threshold beyond data");
  }

  std::size_t size() const { return values_.size(); }
  const BigInt& value(std::size_t k) const { return values_.at(k); }
  const std::vector<BigInt>& values() const { return values_; }
  std::size_t eventually_polynomial_from() const { return polynomial_from_; }

  friend bool operator==(const DimensionSequence& a, const DimensionSequence& b) {
    return a.values_ == b.values_ && a.polynomial_from_ == b.polynomial_from_;
  }

 private:
  std::vector<BigInt> values_;
  std::size_t polynomial_from_;
};

// Unique interpolating polynomial of degree <= n through the tail values
// (Newton forward form, exact rational arithmetic).  Requires at least n+2
// tail values; every tail value beyond the first n+1 must land on the
// interpolant or the sequence is rejected.
inline HilbertPolynomial fit_hilbert(const DimensionSequence& seq, std::size_t ambient_dim) {
  const std::size_t k0 = seq.eventually_polynomial_from();
  const std::size_t tail = seq.size() - k0;
  if (tail < ambient_dim + 2)
    throw std::invalid_argument("fit_hilbert: need at least n+2 tail values");

  // Forward differences at k0 determine the Newton coefficients.
  std::vector<BigInt> diffs;
  {
    std::vector<BigInt> row(seq.values().begin() + static_cast<std::ptrdiff_t>(k0),
                            seq.values().end());
    for (std::size_t j = 0; j <= ambient_dim; ++j) {
      diffs.push_back(row.front());
      for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
      row.pop_back();
    }
  }

  // h(T) = Σ_j Δ^j · C(T - k0, j), expanded to monomial coefficients.
  std::vector<Rational> coeffs(ambient_dim + 1, Rational(0));
  std::vector<Rational> basis = {Rational(1)};  // C(T - k0, 0) = 1
  for (std::size_t j = 0; j <= ambient_dim; ++j) {
    Rational scale = Rational(diffs[j], factorial(static_cast<unsigned>(j)));
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += scale * basis[i];
    // basis *= (T - k0 - j) for the next round
    basis.insert(basis.begin(), Rational(0));
    Rational shift(-(BigInt(k0) + BigInt(j)));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) basis[i] += shift * basis[i + 1];
  }
  HilbertPolynomial h(std::move(coeffs), ambient_dim);

  for (std::size_t k = k0; k < seq.size(); ++k) {
    Rational expected = h.evaluate(Rational(BigInt(k)));
    if (!(expected == Rational(seq.value(k))))
      throw NotEventuallyPolynomialError(
          "fit_hilbert: value at level " + std::to_string(k) + " is " + seq.value(k).str() +
          ", interpolant predicts " + expected.to_string());
  }
  return h;
}

struct DimMult {
  std::size_t dim = 0;
  BigInt mult;
};

// dim M = deg h; mult M = d!·h_d, which must come out a positive integer for
// any genuine dimension sequence.
inline DimMult dim_and_mult(const HilbertPolynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("dim_and_mult: zero polynomial");
  const std::size_t d = h.degree();
  Rational m = h.leading_coefficient() * Rational(factorial(static_cast<unsigned>(d)));
  if (!m.is_integer() || m.sign() <= 0)
    throw NonIntegralMultiplicityError("dim_and_mult: d!·h_d = " + m.to_string() +
                                       " is not a positive integer");
  return {d, m.numerator()};
}

// The filtration induced on the direct image: G_k = Σ_{j=0}^{k} F_j
// (cumulative sums).  The polynomial threshold carries over.
inline DimensionSequence direct_image_dims(const DimensionSequence& seq) {
  std::vector<BigInt> sums(seq.size());
  BigInt acc = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    acc += seq.value(k);
    sums[k] = acc;
  }
  return DimensionSequence(std::move(sums), seq.eventually_polynomial_from());
}

struct TransferCheck {
  bool ok = false;
  std::size_t expected_dim = 0;
  BigInt expected_mult;
  std::size_t refit_dim = 0;
  BigInt refit_mult;
  std::vector<BigInt> synthesized;  // dimension sequence of the input
  std::vector<BigInt> cumulative;   // after the direct-image sums
  HilbertPolynomial refit;
  std::string note;  // diagnostics when ok is false
};

// Quantitative content of the multiplicity-transfer identity: a module of
// dimension n-1 and multiplicity m has a direct image of dimension n and the
// same multiplicity m.  Synthesizes the dimension sequence of h (polynomial
// from level 0), takes cumulative sums, refits in ambient dimension n, and
// compares.  Failure is a returned witness.
inline TransferCheck multiplicity_transfer_check(const HilbertPolynomial& h, std::size_t ambient_dim) {
  if (ambient_dim == 0) throw std::invalid_argument("multiplicity_transfer_check: ambient dim 0");
  if (h.is_zero() || h.degree() != ambient_dim - 1)
    throw std::invalid_argument("multiplicity_transfer_check: polynomial degree must be n-1");

  TransferCheck out;
  DimMult source = dim_and_mult(h);
  out.expected_dim = ambient_dim;
  out.expected_mult = source.mult;

  const std::size_t levels = ambient_dim + 6;
  std::vector<BigInt> values;
  values.reserve(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    Rational v = h.evaluate(Rational(BigInt(k)));
    if (!v.is_integer() || v.sign() < 0) {
      out.note = "h(" + std::to_string(k) + ") = " + v.to_string() +
                 " is not a valid dimension";
      return out;
    }
    values.push_back(v.numerator());
  }
  out.synthesized = values;

  try {
    DimensionSequence source_dims(std::move(values));
    DimensionSequence image_dims = direct_image_dims(source_dims);
    out.cumulative = image_dims.values();
    out.refit = fit_hilbert(image_dims, ambient_dim);
    DimMult target = dim_and_mult(out.refit);
    out.refit_dim = target.dim;
    out.refit_mult = target.mult;
  } catch (const Error& e) {
    out.note = e.what();
    return out;
  } catch (const std::invalid_argument& e) {
    out.note = e.what();
    return out;
  }

  out.ok = (out.refit_dim == out.expected_dim) && (out.refit_mult == out.expected_mult);
  if (!out.ok)
    out.note = "refit gave dim " + std::to_string(out.refit_dim) + ", mult " +
               out.refit_mult.str();
  return out;
}

}  // namespace arrinv
