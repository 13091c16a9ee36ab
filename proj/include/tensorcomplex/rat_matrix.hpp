#pragma once

#include <cstddef>
#include <vector>

#include "tensorcomplex/rational.hpp"

namespace tensorcomplex {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return entries_; }

  RatVector apply(const RatVector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
Echelon rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// One basis vector per free column, in increasing column order.
std::vector<RatVector> nullspace(const RatMatrix& m);

}  // namespace tensorcomplex
