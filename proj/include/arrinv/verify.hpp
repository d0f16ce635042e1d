#pragma once

// Self-verification driver: runs every structural identity the library
// promises against a single arrangement and reports one line per check.
// Used by the CLI `verify` subcommand and the test suites.

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/errors.hpp"
#include "arrinv/invariants.hpp"
#include "arrinv/lattice.hpp"

namespace arrinv {

struct VerificationReport {
  std::vector<std::string> lines;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void record(bool ok, const std::string& description) {
    ++checks;
    if (!ok) ++failures;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + description);
  }

  std::string text() const {
    std::ostringstream os;
    for (const auto& l : lines) os << l << "\n";
    os << "summary: " << checks << " checks, " << failures << " failure"
       << (failures == 1 ? "" : "s") << "\n";
    return os.str();
  }
};

inline VerificationReport run_verification(const Arrangement& a) {
  VerificationReport report;
  IntersectionPoset poset = build_poset(a);

  // Deletion-restriction identity for every pivot.
  for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
    DeletionRestrictionCheck c = check_deletion_restriction(a, h0);
    std::string desc = "deletion-restriction identity, pivot " + std::to_string(h0);
    if (!c.ok)
      desc += ": pi(A)=" + c.full.to_string() + ", pi(A')=" + c.deleted.to_string() +
              ", pi(A'')=" + c.restricted.to_string();
    report.record(c.ok, desc);
  }

  // Möbius via recursion vs. explicit chain counting, plus the sign
  // condition (-1)^codim mu(X) >= 1, on every flat.
  {
    bool oracle_ok = true, sign_ok = true;
    std::string detail;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      BigInt chain = mobius_chain_oracle(poset, i);
      if (chain != poset.mobius(i)) {
        oracle_ok = false;
        detail = ": flat " + std::to_string(i) + " recursion " + poset.mobius(i).str() +
                 " vs chains " + chain.str();
        break;
      }
      BigInt signed_mu = (poset.codim(i) % 2 == 0) ? poset.mobius(i) : BigInt(-poset.mobius(i));
      if (signed_mu < 1) {
        sign_ok = false;
        break;
      }
    }
    report.record(oracle_ok, "mobius chain-count oracle agrees on " +
                                 std::to_string(poset.size()) + " flats" + detail);
    report.record(sign_ok, "mobius sign condition (-1)^codim mu >= 1");
  }

  // Every codim-1 flat is exactly one input hyperplane.
  {
    std::set<std::string> inputs;
    for (const auto& h : a.hyperplanes()) inputs.insert(h.to_string());
    std::size_t codim1 = 0;
    bool matched = true;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (poset.codim(i) != 1) continue;
      ++codim1;
      const Matrix& m = poset.flat(i).system.matrix();
      std::vector<Rational> coeffs;
      for (std::size_t c = 0; c + 1 < m.cols(); ++c) coeffs.push_back(m(0, c));
      Hyperplane h = Hyperplane::canonical(coeffs, m(0, m.cols() - 1));
      matched = matched && inputs.count(h.to_string()) > 0;
    }
    report.record(matched && codim1 == a.size(),
                  "codim-1 flats recover the " + std::to_string(a.size()) + " hyperplanes");
  }

  // The two length routes.
  {
    bool ok = true;
    std::string desc = "closed form equals deletion-restriction recursion";
    try {
      BigInt closed = length_closed_form(poset);
      BigInt recursive = length_by_recursion(a);
      ok = (closed == recursive);
      if (ok)
        desc += " (length " + closed.str() + ")";
      else
        desc += ": " + closed.str() + " vs " + recursive.str();
    } catch (const InternalInconsistencyError& e) {
      ok = false;
      desc += std::string(": ") + e.what();
    }
    report.record(ok, desc);
  }

  return report;
}

}  // namespace arrinv
