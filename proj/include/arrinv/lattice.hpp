#pragma once

// The intersection poset L(A): every nonempty intersection of hyperplanes,
// ordered by reverse inclusion (X <= Y iff X ⊇ Y), with the ambient space V
// as bottom element, plus the Möbius function computed two independent ways.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/errors.hpp"
#include "arrinv/matrix.hpp"
#include "arrinv/rational.hpp"

namespace arrinv {

// A nonempty affine subspace arising as an intersection of hyperplanes.
// codim equals the number of rows of the canonical system.
struct Flat {
  RrefSystem system;
  std::size_t codim() const { return system.rows(); }
};

class IntersectionPoset {
 public:
  std::size_t size() const { return flats_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const Flat& flat(std::size_t i) const { return flats_.at(i); }
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t codim(std::size_t i) const { return flats_.at(i).codim(); }

  // X <= Y in the poset order (X contains Y as a subspace).
  bool leq(std::size_t x, std::size_t y) const { return leq_.at(x).at(y); }

  const BigInt& mobius(std::size_t i) const { return mobius_.at(i); }
  const std::vector<BigInt>& mobius_values() const { return mobius_; }

  // The order relation as explicit index pairs (x, y) with x <= y.
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y)
        if (leq_[x][y]) pairs.emplace_back(x, y);
    return pairs;
  }

  friend IntersectionPoset build_poset(const Arrangement& a);
  friend std::vector<BigInt> mobius_recursive(const IntersectionPoset& p);

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Flat> flats_;             // index 0 = V, nondecreasing codim
  std::vector<std::vector<bool>> leq_;  // leq_[x][y]: flat x <= flat y
  std::vector<BigInt> mobius_;          // mu(V, X) per flat
};

// mu(V) = 1; for X > V, mu(X) = -Σ_{V <= Z < X} mu(Z).  Flats are stored in
// a linear extension of the order (sorted by codim), so one forward pass
// suffices.
inline std::vector<BigInt> mobius_recursive(const IntersectionPoset& p) {
  std::vector<BigInt> mu(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (x == 0) {
      mu[0] = 1;
      continue;
    }
    BigInt acc = 0;
    for (std::size_t z = 0; z < p.size(); ++z)
      if (z != x && p.leq(z, x)) acc += mu[z];
    mu[x] = -acc;
  }
  return mu;
}

// Closure of {V} under intersection with the hyperplanes, breadth-first by
// codimension with global dedupe.  Each new flat is an old flat cut by one
// hyperplane, so level k+1 is reachable from level k and the walk is
// complete without enumerating the 2^|A| subsets.
//
// Order by containment: X <= Y iff every defining equation of X lies in the
// row space of Y's system.  For flats of one arrangement that is the same as
// inclusion of hyperplane-membership sets (every flat is the intersection of
// the hyperplanes containing it), which the cut step computes as it goes;
// the row-space formulation stays around as the test oracle.
inline IntersectionPoset build_poset(const Arrangement& a) {
  IntersectionPoset poset;
  poset.ambient_dim_ = a.ambient_dim();

  const std::size_t words = (a.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> members;  // hyperplanes containing each flat

  RrefSystem space = RrefSystem::whole_space(a.ambient_dim());
  std::map<std::string, std::size_t> index_of;
  index_of.emplace(space.canonical_key(), 0);
  poset.flats_.push_back(Flat{std::move(space)});
  members.emplace_back(words, 0);

  std::vector<std::size_t> level = {0};
  while (!level.empty()) {
    // Keyed map keeps each level deduped and in a canonical order, making
    // the flat list independent of hyperplane input order.
    std::map<std::string, RrefSystem> next;
    for (std::size_t idx : level) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto cut = poset.flats_[idx].system.extend_with(a.hyperplane(i).augmented_row());
        switch (cut.outcome) {
          case ExtendOutcome::implied:
            members[idx][i / 64] |= std::uint64_t(1) << (i % 64);
            break;
          case ExtendOutcome::inconsistent:
            break;
          case ExtendOutcome::extended:
            next.emplace(cut.system->canonical_key(), std::move(*cut.system));
            break;
        }
      }
    }
    level.clear();
    for (auto& [key, sys] : next) {
      if (index_of.contains(key)) continue;
      index_of.emplace(key, poset.flats_.size());
      level.push_back(poset.flats_.size());
      poset.flats_.push_back(Flat{std::move(sys)});
      members.emplace_back(words, 0);
    }
  }

  const std::size_t n = poset.flats_.size();
  poset.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool subset = true;
      for (std::size_t w = 0; w < words && subset; ++w)
        subset = (members[x][w] & ~members[y][w]) == 0;
      poset.leq_[x][y] = subset;
    }
  }

  poset.mobius_ = mobius_recursive(poset);
  return poset;
}

// Philip Hall's alternating chain count: Σ_k (-1)^k · #{strict chains
// V = Z_0 < Z_1 < ... < Z_k = X}, enumerated explicitly.  Must equal
// mobius_recursive at X; kept free of the recursion so the two routes are
// independent.
inline BigInt mobius_chain_oracle(const IntersectionPoset& p, std::size_t x) {
  if (x >= p.size()) throw IndexError("mobius_chain_oracle: flat index out of range");
  // Chains never leave the interval [V, x].
  std::vector<std::size_t> interval;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(z, x)) interval.push_back(z);

  BigInt total = 0;
  auto walk = [&](auto&& self, std::size_t cur, bool odd_length) -> void {
    if (cur == x) {
      total += odd_length ? -1 : 1;
      return;
    }
    for (std::size_t z : interval)
      if (z != cur && p.leq(cur, z)) self(self, z, !odd_length);
  };
  walk(walk, 0, false);
  return total;
}

}  // namespace arrinv
