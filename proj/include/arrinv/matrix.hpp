#pragma once

// Dense rational matrices and the reduced-row-echelon machinery that gives
// affine subspaces a canonical, directly comparable representation.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrinv/rational.hpp"

namespace arrinv {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), n_cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n_cols)
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < n_cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Rational> row(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  // New matrix with `extra` appended below; column counts must agree.
  Matrix stacked(const Matrix& extra) const {
    if (extra.cols_ != cols_)
      throw std::invalid_argument("Matrix::stacked: column mismatch");
    Matrix m(rows_ + extra.rows_, cols_);
    m.data_ = data_;
    m.data_.insert(m.data_.end(), extra.data_.begin(), extra.data_.end());
    return m;
  }

  Matrix stacked_row(const std::vector<Rational>& extra) const {
    if (extra.size() != cols_)
      throw std::invalid_argument("Matrix::stacked_row: column mismatch");
    Matrix m(rows_ + 1, cols_);
    m.data_ = data_;
    m.data_.insert(m.data_.end(), extra.begin(), extra.end());
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    return os.str();
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix: index out of range");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix matrix;                        // RREF, zero rows removed
  std::vector<std::size_t> pivot_cols;  // one per remaining row, increasing
};

// Gauss-Jordan over the rationals.  The result is the unique reduced row
// echelon form: pivots are 1, pivot columns are otherwise zero, zero rows
// are dropped.
inline RrefResult rref_with_pivots(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

inline Matrix rref(const Matrix& m) { return rref_with_pivots(m).matrix; }

inline std::size_t rank(const Matrix& m) { return rref_with_pivots(m).matrix.rows(); }

enum class Consistency { consistent, inconsistent };

// `aug` is an augmented system [A | b]; inconsistent iff the RREF has a
// pivot in the last column.
inline Consistency solve_consistency(const Matrix& aug) {
  if (aug.cols() == 0) throw std::invalid_argument("solve_consistency: no columns");
  auto res = rref_with_pivots(aug);
  for (std::size_t p : res.pivot_cols)
    if (p + 1 == aug.cols()) return Consistency::inconsistent;
  return Consistency::consistent;
}

enum class ExtendOutcome { implied, inconsistent, extended };
struct RrefExtendResult;

// Canonical representation of a nonempty affine subspace of K^n as a reduced
// linear system over the augmented columns [A | b].  Two RrefSystems describe
// the same subspace iff they are field-by-field equal.
class RrefSystem {
 public:
  // Builds from an augmented matrix with n_vars + 1 columns; returns nullopt
  // when the system has no solution.
  static std::optional<RrefSystem> from_equations(const Matrix& aug) {
    if (aug.cols() == 0)
      throw std::invalid_argument("RrefSystem: augmented matrix needs >= 1 column");
    auto res = rref_with_pivots(aug);
    for (std::size_t p : res.pivot_cols)
      if (p + 1 == aug.cols()) return std::nullopt;
    return RrefSystem(std::move(res.matrix), std::move(res.pivot_cols), aug.cols() - 1);
  }

  // The full space: zero equations in n variables.
  static RrefSystem whole_space(std::size_t n_vars) {
    return RrefSystem(Matrix(0, n_vars + 1), {}, n_vars);
  }

  std::size_t rows() const { return matrix_.rows(); }
  std::size_t n_vars() const { return n_vars_; }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

  // Adds one equation (an augmented row) to the system without redoing the
  // full elimination.  The row either reduces to zero (it already holds on
  // the subspace), reduces to 0 = c (the cut is empty), or yields the
  // canonical system of the subspace one dimension down.
  RrefExtendResult extend_with(const std::vector<Rational>& aug_row) const;

  // True when every equation of this system already holds on the subspace
  // cut out by `other`, i.e. each row lies in the row space of other's
  // system.  Equivalent to rank(other ∪ this) == rank(other).
  bool implied_by(const RrefSystem& other) const {
    if (other.n_vars_ != n_vars_)
      throw std::invalid_argument("RrefSystem::implied_by: ambient mismatch");
    const std::size_t width = n_vars_ + 1;
    for (std::size_t i = 0; i < rows(); ++i) {
      std::vector<Rational> row = matrix_.row(i);
      for (std::size_t k = 0; k < other.rows(); ++k) {
        const Rational& lead = row[other.pivot_cols_[k]];
        if (lead.is_zero()) continue;
        Rational factor = lead;  // other's pivot entry is 1
        for (std::size_t j = 0; j < width; ++j)
          row[j] -= factor * other.matrix_(k, j);
      }
      for (std::size_t j = 0; j < width; ++j)
        if (!row[j].is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const RrefSystem& a, const RrefSystem& b) {
    return a.n_vars_ == b.n_vars_ && a.matrix_ == b.matrix_;
  }

  // Stable dedupe key; equal keys iff equal systems.
  std::string canonical_key() const {
    return std::to_string(n_vars_) + "|" + matrix_.to_string();
  }

 private:
  RrefSystem(Matrix m, std::vector<std::size_t> pivots, std::size_t n_vars)
      : matrix_(std::move(m)), pivot_cols_(std::move(pivots)), n_vars_(n_vars) {}

  Matrix matrix_;
  std::vector<std::size_t> pivot_cols_;
  std::size_t n_vars_;
};

struct RrefExtendResult {
  ExtendOutcome outcome;
  std::optional<RrefSystem> system;  // set only when outcome == extended
};

inline RrefExtendResult RrefSystem::extend_with(const std::vector<Rational>& aug_row) const {
  const std::size_t width = n_vars_ + 1;
  if (aug_row.size() != width)
    throw std::invalid_argument("RrefSystem::extend_with: row width mismatch");

  std::vector<Rational> row = aug_row;
  for (std::size_t k = 0; k < rows(); ++k) {
    const Rational& lead = row[pivot_cols_[k]];
    if (lead.is_zero()) continue;
    Rational factor = lead;  // pivot entries are 1
    for (std::size_t j = 0; j < width; ++j) row[j] -= factor * matrix_(k, j);
  }
  std::size_t lead_col = width;
  for (std::size_t j = 0; j < width; ++j)
    if (!row[j].is_zero()) {
      lead_col = j;
      break;
    }
  if (lead_col == width) return {ExtendOutcome::implied, std::nullopt};
  if (lead_col + 1 == width) return {ExtendOutcome::inconsistent, std::nullopt};

  Rational inv = Rational(1) / row[lead_col];
  for (std::size_t j = lead_col; j < width; ++j) row[j] *= inv;

  std::size_t insert_pos = 0;
  while (insert_pos < pivot_cols_.size() && pivot_cols_[insert_pos] < lead_col) ++insert_pos;

  Matrix m(rows() + 1, width);
  for (std::size_t r = 0; r < rows(); ++r) {
    std::size_t dst = r < insert_pos ? r : r + 1;
    Rational factor = matrix_(r, lead_col);
    for (std::size_t j = 0; j < width; ++j) m(dst, j) = matrix_(r, j) - factor * row[j];
  }
  for (std::size_t j = 0; j < width; ++j) m(insert_pos, j) = row[j];

  std::vector<std::size_t> pivots = pivot_cols_;
  pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(insert_pos), lead_col);
  return {ExtendOutcome::extended, RrefSystem(std::move(m), std::move(pivots), n_vars_)};
}

}  // namespace arrinv
