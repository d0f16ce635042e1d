#pragma once

// Affine hyperplane arrangements: canonical hyperplanes a·x = b, distinctness
// validation, deletion, and the restriction arrangement living inside a
// chosen hyperplane.

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrinv/errors.hpp"
#include "arrinv/matrix.hpp"
#include "arrinv/rational.hpp"

namespace arrinv {

// A hyperplane a·x = b stored in its unique scaled form: all coefficients
// (including b) are coprime integers and the first nonzero coordinate of the
// normal is positive.  (a, b) and (λa, λb) canonicalize identically, so
// hyperplane equality is field equality.
class Hyperplane {
 public:
  static Hyperplane canonical(std::vector<Rational> normal, Rational offset) {
    bool nonzero = false;
    for (const auto& c : normal) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw ZeroNormalError("hyperplane normal is zero");

    // Clear denominators jointly, then divide out the common content.
    BigInt lcm = 1;
    auto fold_lcm = [&lcm](const Rational& r) {
      const BigInt& d = r.denominator();
      lcm = lcm / big_gcd(lcm, d) * d;
    };
    for (const auto& c : normal) fold_lcm(c);
    fold_lcm(offset);

    std::vector<BigInt> ints;
    ints.reserve(normal.size() + 1);
    for (const auto& c : normal) ints.push_back(c.numerator() * (lcm / c.denominator()));
    ints.push_back(offset.numerator() * (lcm / offset.denominator()));

    BigInt content = 0;
    for (const auto& v : ints) content = big_gcd(content, big_abs(v));
    for (auto& v : ints) v /= content;

    for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
      if (ints[i] == 0) continue;
      if (ints[i] < 0)
        for (auto& v : ints) v = -v;
      break;
    }

    Hyperplane h;
    h.normal_.reserve(normal.size());
    for (std::size_t i = 0; i + 1 < ints.size(); ++i) h.normal_.emplace_back(ints[i]);
    h.offset_ = Rational(ints.back());
    return h;
  }

  std::size_t dim() const { return normal_.size(); }
  const std::vector<Rational>& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }

  // The equation as one augmented row (a_1 ... a_n | b).
  std::vector<Rational> augmented_row() const {
    std::vector<Rational> row = normal_;
    row.push_back(offset_);
    return row;
  }

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }

  // "a1 a2 ... an = b" with canonical integer tokens.
  std::string to_string() const {
    std::ostringstream os;
    for (const auto& c : normal_) os << c << ' ';
    os << "= " << offset_;
    return os.str();
  }

 private:
  Hyperplane() = default;
  std::vector<Rational> normal_;
  Rational offset_;
};

// An ordered list of pairwise distinct canonical hyperplanes in K^n.  The
// empty arrangement is legal everywhere; it is the recursion base.
class Arrangement {
 public:
  static Arrangement empty(std::size_t ambient_dim) { return Arrangement(ambient_dim, {}); }

  // Canonicalizes every raw (normal, offset) pair, preserving order.  Two raw
  // forms that canonicalize equal are an error, not a dedupe: the defining
  // polynomial must be squarefree.
  static Arrangement build(std::size_t ambient_dim,
                           const std::vector<std::pair<std::vector<Rational>, Rational>>& raw) {
    std::vector<Hyperplane> hyps;
    hyps.reserve(raw.size());
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].first.size() != ambient_dim)
        throw std::invalid_argument("Arrangement::build: normal has wrong dimension");
      Hyperplane h = Hyperplane::canonical(raw[i].first, raw[i].second);
      auto [it, inserted] = seen.emplace(h.to_string(), i);
      if (!inserted) throw DuplicateHyperplaneError(it->second, i);
      hyps.push_back(std::move(h));
    }
    return Arrangement(ambient_dim, std::move(hyps));
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return hyps_.size(); }
  const Hyperplane& hyperplane(std::size_t i) const {
    if (i >= hyps_.size()) throw IndexError("hyperplane index out of range");
    return hyps_[i];
  }
  const std::vector<Hyperplane>& hyperplanes() const { return hyps_; }

  friend Arrangement deletion(const Arrangement&, std::size_t);
  friend Arrangement restriction(const Arrangement&, std::size_t);

 private:
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyps)
      : dim_(dim), hyps_(std::move(hyps)) {}

  std::size_t dim_;
  std::vector<Hyperplane> hyps_;
};

// A \ {H_i}: same ambient space, one hyperplane removed.
inline Arrangement deletion(const Arrangement& a, std::size_t h0) {
  if (h0 >= a.size()) throw IndexError("deletion: index out of range");
  std::vector<Hyperplane> hyps;
  hyps.reserve(a.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != h0) hyps.push_back(a.hyperplane(i));
  return Arrangement(a.ambient_dim(), std::move(hyps));
}

// The traces of the other hyperplanes on H_0, viewed as an arrangement in an
// (n-1)-dimensional space.  H_0 is parametrized by dropping its first
// nonzero-normal coordinate x_i = (b_0 - Σ_{j≠i} a_j x_j) / a_i; hyperplanes
// parallel to H_0 leave no trace, and distinct hyperplanes may cut H_0 in the
// same flat, so the result is deduped (set semantics).
inline Arrangement restriction(const Arrangement& a, std::size_t h0) {
  if (h0 >= a.size()) throw IndexError("restriction: index out of range");
  const std::size_t n = a.ambient_dim();
  const Hyperplane& pivot_plane = a.hyperplane(h0);

  std::size_t pivot = 0;
  while (pivot_plane.normal()[pivot].is_zero()) ++pivot;
  const Rational& a_pivot = pivot_plane.normal()[pivot];
  const Rational& b0 = pivot_plane.offset();

  std::vector<Hyperplane> traces;
  std::map<std::string, bool> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h0) continue;
    const Hyperplane& h = a.hyperplane(i);
    Rational scale = h.normal()[pivot] / a_pivot;

    std::vector<Rational> coeffs;
    coeffs.reserve(n - 1);
    bool all_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot) continue;
      Rational c = h.normal()[j] - scale * pivot_plane.normal()[j];
      all_zero = all_zero && c.is_zero();
      coeffs.push_back(std::move(c));
    }
    if (all_zero) continue;  // parallel to H_0 (or H_0 itself): no trace
    Rational rhs = h.offset() - scale * b0;

    Hyperplane trace = Hyperplane::canonical(std::move(coeffs), std::move(rhs));
    auto [it, inserted] = seen.emplace(trace.to_string(), true);
    if (inserted) traces.push_back(std::move(trace));
  }
  return Arrangement(n - 1, std::move(traces));
}

}  // namespace arrinv
