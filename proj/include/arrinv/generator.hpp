#pragma once

// Deterministic pseudo-random arrangement generator for test corpora.  The
// same spec always produces the byte-identical file; a degenerate fraction
// forces hyperplanes through already-present flats (or parallel to existing
// hyperplanes) to exercise non-generic Möbius values.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arrinv/arrangement.hpp"
#include "arrinv/io.hpp"
#include "arrinv/matrix.hpp"
#include "arrinv/rational.hpp"

namespace arrinv {

// splitmix64: tiny, fully specified, platform-independent.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

struct RandomSpec {
  std::uint64_t seed = 1;
  std::size_t dim = 2;
  std::size_t count = 0;
  double degenerate_fraction = 0.0;  // in [0, 1]
};

namespace detail {

// A particular solution of the joint system of `subset`, with free
// coordinates drawn small.  Returns false when the subset is inconsistent
// (e.g. parallel hyperplanes were picked).
inline bool random_point_on(const std::vector<Hyperplane>& hyps,
                            const std::vector<std::size_t>& subset, std::size_t dim,
                            SplitMix64& rng, std::vector<Rational>& point) {
  Matrix aug(subset.size(), dim + 1);
  for (std::size_t r = 0; r < subset.size(); ++r) {
    auto row = hyps[subset[r]].augmented_row();
    for (std::size_t c = 0; c <= dim; ++c) aug(r, c) = row[c];
  }
  auto sys = RrefSystem::from_equations(aug);
  if (!sys) return false;

  point.assign(dim, Rational(0));
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t p : sys->pivot_cols()) is_pivot[p] = true;
  for (std::size_t c = 0; c < dim; ++c)
    if (!is_pivot[c]) point[c] = Rational(rng.int_in(-2, 2));
  const Matrix& m = sys->matrix();
  for (std::size_t r = 0; r < sys->rows(); ++r) {
    std::size_t pc = sys->pivot_cols()[r];
    Rational v = m(r, dim);
    for (std::size_t c = 0; c < dim; ++c)
      if (c != pc) v -= m(r, c) * point[c];
    point[pc] = std::move(v);
  }
  return true;
}

}  // namespace detail

inline ArrangementInput random_arrangement(const RandomSpec& spec) {
  SplitMix64 rng(spec.seed);
  const std::size_t degenerate_target =
      static_cast<std::size_t>(spec.degenerate_fraction * static_cast<double>(spec.count));

  ArrangementInput out;
  out.name = "random-s" + std::to_string(spec.seed) + "-d" + std::to_string(spec.dim) + "-m" +
             std::to_string(spec.count);
  out.dimension = spec.dim;

  std::vector<Hyperplane> chosen;
  std::vector<std::string> keys;
  auto is_new = [&keys](const Hyperplane& h) {
    for (const auto& k : keys)
      if (k == h.to_string()) return false;
    return true;
  };

  for (std::size_t i = 0; i < spec.count; ++i) {
    const bool degenerate_slot = i + degenerate_target >= spec.count;
    for (std::size_t attempt = 0;; ++attempt) {
      const long long range = 3 + static_cast<long long>(attempt);
      std::vector<Rational> normal(spec.dim, Rational(0));
      Rational offset;
      // Degenerate modes need something to be degenerate against; after a
      // few collisions fall back to generic draws so the loop terminates.
      bool degenerate = degenerate_slot && !chosen.empty() && attempt < 8;

      if (degenerate && (spec.dim < 2 || rng.below(2) == 0)) {
        // Parallel to an existing hyperplane.
        const Hyperplane& base = chosen[rng.below(chosen.size())];
        normal = base.normal();
        offset = Rational(rng.int_in(-4 - static_cast<long long>(attempt),
                                     4 + static_cast<long long>(attempt)));
      } else if (degenerate) {
        // Through a point on an existing flat.
        std::vector<std::size_t> pool(chosen.size());
        for (std::size_t k = 0; k < pool.size(); ++k) pool[k] = k;
        std::size_t take = 1 + rng.below(std::min(spec.dim, pool.size()));
        for (std::size_t k = 0; k < take; ++k)
          std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);
        pool.resize(take);

        std::vector<Rational> point;
        if (!detail::random_point_on(chosen, pool, spec.dim, rng, point)) continue;
        bool nonzero = false;
        for (auto& c : normal) {
          c = Rational(rng.int_in(-range, range));
          nonzero = nonzero || !c.is_zero();
        }
        if (!nonzero) continue;
        offset = Rational(0);
        for (std::size_t j = 0; j < spec.dim; ++j) offset += normal[j] * point[j];
      } else {
        bool nonzero = false;
        for (auto& c : normal) {
          c = Rational(rng.int_in(-range, range));
          nonzero = nonzero || !c.is_zero();
        }
        if (!nonzero) continue;
        offset = Rational(rng.int_in(-range - 1, range + 1));
      }

      Hyperplane h = Hyperplane::canonical(std::move(normal), std::move(offset));
      if (!is_new(h)) continue;
      keys.push_back(h.to_string());
      chosen.push_back(std::move(h));
      break;
    }
  }

  out.hyperplanes.reserve(chosen.size());
  for (const auto& h : chosen) out.hyperplanes.push_back(RawHyperplane{h.normal(), h.offset()});
  return out;
}

}  // namespace arrinv
