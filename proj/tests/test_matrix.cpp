#include "doctest.h"

#include <vector>

#include "arrinv/generator.hpp"
#include "arrinv/matrix.hpp"

using arrinv::Consistency;
using arrinv::Matrix;
using arrinv::Rational;
using arrinv::RrefSystem;
using arrinv::SplitMix64;

namespace {

Matrix mat(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return Matrix::from_rows(q);
}

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.int_in(-9, 9));
  return m;
}

// A few random elementary row operations (invertible by construction).
Matrix random_row_ops(SplitMix64& rng, Matrix m) {
  for (int step = 0; step < 12; ++step) {
    if (m.rows() < 1) break;
    std::size_t i = rng.below(m.rows());
    std::size_t k = rng.below(m.rows());
    switch (rng.below(3)) {
      case 0:  // swap
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(k, j));
        break;
      case 1: {  // scale by nonzero rational
        Rational s(rng.int_in(1, 5), 1 + static_cast<long long>(rng.below(4)));
        if (rng.below(2)) s = -s;
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
        break;
      }
      default:  // add multiple of another row
        if (i == k) break;
        Rational s(rng.int_in(-3, 3));
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += s * m(k, j);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rref collapses dependent rows") {
  CHECK(arrinv::rref(mat({{2, 4}, {1, 2}})) == mat({{1, 2}}));
}

TEST_CASE("rref fixes the identity") {
  Matrix id = Matrix::identity(4);
  CHECK(arrinv::rref(id) == id);
}

TEST_CASE("rref orders pivots") {
  CHECK(arrinv::rref(mat({{0, 1, 3}, {1, 0, 2}})) == mat({{1, 0, 2}, {0, 1, 3}}));
}

TEST_CASE("rank basics") {
  CHECK(arrinv::rank(Matrix(3, 3)) == 0);
  CHECK(arrinv::rank(Matrix::identity(5)) == 5);
  CHECK(arrinv::rank(mat({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("solve_consistency") {
  CHECK(arrinv::solve_consistency(mat({{1, 0}, {1, 1}})) == Consistency::inconsistent);
  CHECK(arrinv::solve_consistency(mat({{1, 1, 1}})) == Consistency::consistent);
  CHECK(arrinv::solve_consistency(mat({{1, 0, 1}, {0, 1, 2}, {1, 1, 3}})) ==
        Consistency::consistent);
}

TEST_CASE("rref is idempotent on random matrices") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(6));
    Matrix once = arrinv::rref(m);
    CHECK(arrinv::rref(once) == once);
  }
}

TEST_CASE("row rank equals column rank up to 8x8") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = random_matrix(rng, 1 + rng.below(8), 1 + rng.below(8));
    CHECK(arrinv::rank(m) == arrinv::rank(m.transpose()));
  }
}

TEST_CASE("rref is invariant under invertible row operations") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = random_matrix(rng, 1 + rng.below(5), 1 + rng.below(5));
    Matrix scrambled = random_row_ops(rng, m);
    CHECK(arrinv::rref(scrambled) == arrinv::rref(m));
  }
}

TEST_CASE("RrefSystem rejects inconsistent systems and is canonical") {
  CHECK_FALSE(RrefSystem::from_equations(mat({{1, 0}, {1, 1}})).has_value());

  auto a = RrefSystem::from_equations(mat({{1, 1, 1}, {2, 2, 2}}));
  auto b = RrefSystem::from_equations(mat({{3, 3, 3}}));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
  CHECK(a->canonical_key() == b->canonical_key());
  CHECK(a->rows() == 1);
  CHECK(a->n_vars() == 2);
}

TEST_CASE("RrefSystem::implied_by matches the rank test") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + rng.below(3);
    Matrix stronger_raw = random_matrix(rng, 1 + rng.below(n), n + 1);
    Matrix weaker_raw = random_matrix(rng, 1 + rng.below(n), n + 1);
    auto stronger = RrefSystem::from_equations(stronger_raw);
    auto weaker = RrefSystem::from_equations(weaker_raw);
    if (!stronger || !weaker) continue;
    bool via_reduction = weaker->implied_by(*stronger);
    bool via_rank = arrinv::rank(stronger->matrix().stacked(weaker->matrix())) ==
                    stronger->rows();
    CHECK(via_reduction == via_rank);
  }
}

TEST_CASE("extend_with matches a from-scratch elimination") {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng.below(5);
    Matrix base_raw = random_matrix(rng, 1 + rng.below(n), n + 1);
    auto base = RrefSystem::from_equations(base_raw);
    if (!base) continue;

    std::vector<arrinv::Rational> row(n + 1);
    for (auto& c : row) c = arrinv::Rational(rng.int_in(-4, 4));
    auto incremental = base->extend_with(row);
    auto scratch = RrefSystem::from_equations(base->matrix().stacked_row(row));

    switch (incremental.outcome) {
      case arrinv::ExtendOutcome::inconsistent:
        CHECK_FALSE(scratch.has_value());
        break;
      case arrinv::ExtendOutcome::implied:
        REQUIRE(scratch.has_value());
        CHECK(*scratch == *base);
        break;
      case arrinv::ExtendOutcome::extended:
        REQUIRE(scratch.has_value());
        REQUIRE(incremental.system.has_value());
        CHECK(*scratch == *incremental.system);
        CHECK(incremental.system->rows() == base->rows() + 1);
        break;
    }
  }
}

TEST_CASE("whole space has no equations") {
  RrefSystem v = RrefSystem::whole_space(3);
  CHECK(v.rows() == 0);
  CHECK(v.n_vars() == 3);
  auto point = RrefSystem::from_equations(mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  REQUIRE(point.has_value());
  CHECK(v.implied_by(*point));        // V's (empty) equations hold everywhere
  CHECK_FALSE(point->implied_by(v));  // the origin is not all of K^3
}
