#pragma once

// The arrangement invariants: Poincaré polynomial, the closed-form and
// recursive computations of the length/multiplicity of the first local
// cohomology module H^1_(f)(R), and the deletion-restriction consistency
// check tying them together.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/errors.hpp"
#include "arrinv/lattice.hpp"
#include "arrinv/polynomial.hpp"
#include "arrinv/rational.hpp"

namespace arrinv {

// π(A, t) = Σ_{X ∈ L(A)} μ(X)·(-t)^codim X.  The codim-0 term contributes
// the constant 1; the sign condition on μ makes every coefficient
// nonnegative.
inline IntPolynomial poincare_polynomial(const IntersectionPoset& p) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < p.size(); ++i) top = std::max(top, p.codim(i));
  std::vector<BigInt> coeffs(top + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t c = p.codim(i);
    coeffs[c] += (c % 2 == 0) ? p.mobius(i) : BigInt(-p.mobius(i));
  }
  return IntPolynomial(std::move(coeffs));
}

// length H^1_(f)(R) = π(A, 1) - 1, cross-checked against the equivalent
// expression Σ_{X ≠ V} |μ(X)|.  A mismatch means the Möbius computation is
// broken, never that the input is bad.
inline BigInt length_closed_form(const IntersectionPoset& p) {
  IntPolynomial pi = poincare_polynomial(p);
  BigInt at_one = pi.evaluate(1);
  BigInt closed = at_one - 1;

  BigInt mu_sum = 0;
  for (std::size_t i = 1; i < p.size(); ++i) mu_sum += big_abs(p.mobius(i));
  if (closed != mu_sum)
    throw InternalInconsistencyError(
        "length_closed_form: pi(A,1)-1 = " + closed.str() +
        " but sum of |mu| over proper flats = " + mu_sum.str());
  return closed;
}

// Deletion-restriction recursion: length(A) = length(A') + length(A'') + 1,
// with the empty arrangement contributing 0.  Both branches strictly shrink
// the arrangement, so the recursion terminates.
inline BigInt length_by_recursion(const Arrangement& a) {
  if (a.size() == 0) return 0;
  return length_by_recursion(deletion(a, 0)) + length_by_recursion(restriction(a, 0)) + 1;
}

// Same recursion with an arbitrary pivot for the first step; the result is
// independent of the choice.
inline BigInt length_by_recursion(const Arrangement& a, std::size_t root_pivot) {
  if (root_pivot >= a.size()) throw IndexError("length_by_recursion: pivot out of range");
  return length_by_recursion(deletion(a, root_pivot)) +
         length_by_recursion(restriction(a, root_pivot)) + 1;
}

// One node of the recursion tree, for report traces.
struct RecursionTrace {
  std::size_t hyperplane_count = 0;
  std::size_t ambient_dim = 0;
  BigInt length;
  std::unique_ptr<RecursionTrace> deleted;     // null at leaves
  std::unique_ptr<RecursionTrace> restricted;  // null at leaves
};

inline RecursionTrace length_by_recursion_traced(const Arrangement& a) {
  RecursionTrace node;
  node.hyperplane_count = a.size();
  node.ambient_dim = a.ambient_dim();
  if (a.size() == 0) {
    node.length = 0;
    return node;
  }
  node.deleted = std::make_unique<RecursionTrace>(length_by_recursion_traced(deletion(a, 0)));
  node.restricted =
      std::make_unique<RecursionTrace>(length_by_recursion_traced(restriction(a, 0)));
  node.length = node.deleted->length + node.restricted->length + 1;
  return node;
}

struct DeletionRestrictionCheck {
  bool ok = false;
  IntPolynomial full;        // π(A, t)
  IntPolynomial deleted;     // π(A', t)
  IntPolynomial restricted;  // π(A'', t)
};

// Verifies π(A,t) = π(A',t) + t·π(A'',t) coefficientwise, computing all
// three polynomials from scratch through their own posets.  Failure is a
// returned witness, not an error.
inline DeletionRestrictionCheck check_deletion_restriction(const Arrangement& a,
                                                           std::size_t h0) {
  if (h0 >= a.size()) throw IndexError("check_deletion_restriction: pivot out of range");
  DeletionRestrictionCheck out;
  out.full = poincare_polynomial(build_poset(a));
  out.deleted = poincare_polynomial(build_poset(deletion(a, h0)));
  out.restricted = poincare_polynomial(build_poset(restriction(a, h0)));
  out.ok = (out.full == out.deleted + out.restricted.shifted(1));
  return out;
}

// Everything the analysis pipeline produces for one arrangement.  length and
// mult are reported separately even though they provably coincide here; the
// pair mirrors the two module invariants.
struct InvariantReport {
  IntPolynomial poincare;
  BigInt length;
  BigInt mult;
  BigInt length_recursive;
  IntersectionPoset poset;  // flats with codims and Möbius values
};

// Runs both routes (closed form through the poset, deletion-restriction
// recursion) and insists they agree, turning the main identity into a
// perpetual self-test.
inline InvariantReport analyze(const Arrangement& a) {
  InvariantReport report;
  report.poset = build_poset(a);
  report.poincare = poincare_polynomial(report.poset);
  report.length = length_closed_form(report.poset);
  report.mult = report.length;
  report.length_recursive = length_by_recursion(a);
  if (report.length_recursive != report.length)
    throw InternalInconsistencyError(
        "analyze: closed form gives " + report.length.str() +
        " but deletion-restriction recursion gives " + report.length_recursive.str());
  return report;
}

}  // namespace arrinv
