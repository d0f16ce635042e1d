#pragma once

// Shared fixtures for the unit and acceptance suites: terse arrangement
// builders, closed families, and the seeded random corpus.

#include <cstdint>
#include <utility>
#include <vector>

#include "arrinv/arrinv.hpp"

namespace testsupport {

using arrinv::Arrangement;
using arrinv::Rational;

inline Arrangement make_arrangement(std::size_t dim,
                                    const std::vector<std::pair<std::vector<long long>, long long>>& rows) {
  std::vector<std::pair<std::vector<Rational>, Rational>> raw;
  raw.reserve(rows.size());
  for (const auto& [coeffs, rhs] : rows) {
    std::vector<Rational> v(coeffs.begin(), coeffs.end());
    raw.emplace_back(std::move(v), Rational(rhs));
  }
  return Arrangement::build(dim, raw);
}

// {x_1 = 0, ..., x_n = 0}
inline Arrangement boolean_arrangement(std::size_t n) {
  std::vector<std::pair<std::vector<long long>, long long>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    rows.emplace_back(std::move(e), 0);
  }
  return make_arrangement(n, rows);
}

// m lines y = i·x + i² (i = 1..m): pairwise non-parallel with all crossing
// points distinct, i.e. in general position.
inline Arrangement generic_lines(std::size_t m) {
  std::vector<std::pair<std::vector<long long>, long long>> rows;
  for (std::size_t i = 1; i <= m; ++i) {
    long long s = static_cast<long long>(i);
    rows.push_back({{-s, 1}, s * s});
  }
  return make_arrangement(2, rows);
}

inline Arrangement three_concurrent_lines() {
  return make_arrangement(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}});
}

inline Arrangement two_parallel_lines() { return make_arrangement(2, {{{1, 0}, 0}, {{1, 0}, 1}}); }

// x = y, y = z, x = z in K^3; all three planes share the line x = y = z.
inline Arrangement braid3() {
  return make_arrangement(3, {{{1, -1, 0}, 0}, {{0, 1, -1}, 0}, {{1, 0, -1}, 0}});
}

// Σ_j c_j · C(T, j): the integer-valued polynomials are exactly the integer
// combinations of binomial coefficients, so this is the natural generator
// for synthetic Hilbert data.  The multiplicity of the result is c_{deg}.
inline arrinv::HilbertPolynomial binomial_combination(const std::vector<long long>& c,
                                                      std::size_t ambient) {
  std::vector<Rational> coeffs(c.size(), Rational(0));
  std::vector<Rational> basis = {Rational(1)};
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rational scale(arrinv::BigInt(c[j]), arrinv::factorial(static_cast<unsigned>(j)));
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += scale * basis[i];
    basis.insert(basis.begin(), Rational(0));
    Rational shift(-static_cast<long long>(j));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) basis[i] += shift * basis[i + 1];
  }
  return arrinv::HilbertPolynomial(std::move(coeffs), ambient);
}

// The deletion-restriction recursion with a random pivot at every level.
// The result must match the library's pivot-0 recursion and the closed form
// no matter which pivots get drawn.
inline arrinv::BigInt length_recursion_random_pivots(const Arrangement& a,
                                                     arrinv::SplitMix64& rng) {
  if (a.size() == 0) return 0;
  std::size_t h0 = rng.below(a.size());
  return length_recursion_random_pivots(arrinv::deletion(a, h0), rng) +
         length_recursion_random_pivots(arrinv::restriction(a, h0), rng) + 1;
}

struct SuiteEntry {
  arrinv::RandomSpec spec;
  arrinv::ArrangementInput input;
  Arrangement arrangement;
  bool forced_degenerate;
};

// Deterministic random corpus sweeping dimensions 1..4 and 0..7 hyperplanes,
// with roughly 45% of the entries containing forced degeneracies.
inline std::vector<SuiteEntry> random_suite(std::size_t count, std::uint64_t seed_base = 1000) {
  std::vector<SuiteEntry> suite;
  suite.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    arrinv::RandomSpec spec;
    spec.seed = seed_base + i;
    spec.dim = 1 + i % 4;
    spec.count = (i * 5 + 3) % 8;
    spec.degenerate_fraction = (i % 3 == 0) ? 0.6 : (i % 3 == 1 ? 0.34 : 0.0);
    arrinv::ArrangementInput input = arrinv::random_arrangement(spec);
    Arrangement a = arrinv::to_arrangement(input);
    bool forced = spec.count >= 2 &&
                  static_cast<std::size_t>(spec.degenerate_fraction *
                                           static_cast<double>(spec.count)) >= 1;
    suite.push_back(SuiteEntry{spec, std::move(input), std::move(a), forced});
  }
  return suite;
}

}  // namespace testsupport
