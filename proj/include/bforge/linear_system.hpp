#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bforge/rational.hpp"

namespace bforge {

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct LinearSystem {
  Matrix matrix;
  std::optional<std::vector<Rational>> rhs;
};

struct Solution {
  std::size_t rank = 0;
  /// Set when a right-hand side was given; free variables are zero.
  std::optional<std::vector<Rational>> particular;
  /// Basis of the null space, one vector per free column.
  std::vector<std::vector<Rational>> null_space;

  std::size_t nullity() const { return null_space.size(); }
};

/// Exact solve by fraction-free (Bareiss) elimination on an integer-scaled
/// copy of the system. Throws Inconsistent when the right-hand side lies
/// outside the column space, std::invalid_argument on a dimension mismatch.
Solution solve_linear(const LinearSystem& sys);

}  // namespace bforge
