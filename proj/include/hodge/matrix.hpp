#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static RatMatrix identity(std::size_t n);
  RatMatrix transpose() const;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix scaled(const Rational& c) const;
  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Rank via fraction-free Bareiss elimination (rows are cleared to integers
// first; pivots are the first nonzero entry in column order).
std::size_t rank(const RatMatrix& m);

// Determinant via Bareiss with exact divisions. Errors on non-square input.
Rational determinant(const RatMatrix& m);

// Basis of {v : v * m = 0}, each vector of length m.rows(). The basis is
// produced from the reduced row echelon form of m^T with free coordinates
// in ascending order, so output is deterministic. Size = rows - rank.
std::vector<std::vector<Rational>> left_kernel_basis(const RatMatrix& m);

// In-place reduced row echelon form over Q. Returns the pivot column of
// each nonzero row, in order.
std::vector<std::size_t> rref(RatMatrix& m);

}  // namespace hodge
