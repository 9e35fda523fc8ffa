#include "hodge/matrix.hpp"

#include <utility>

namespace hodge {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    check(r.size() == cols_, "ragged matrix initializer");
    for (long v : r) a_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch in +");
  RatMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  check(a.cols_ == b.rows_, "matrix shape mismatch in *");
  RatMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

namespace {

// Clears each row to integers; scales[i] is the factor row i was
// multiplied by (a positive integer). Row scaling preserves rank and
// multiplies the determinant by the product of the scales.
std::vector<mpz_class> to_integer_rows(const RatMatrix& m, std::vector<mpz_class>& scales) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  scales.assign(rows, mpz_class(1));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().raw().get_mpz_t());
    scales[i] = l;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).raw();
      mpz_class scaled = q.get_num() * (l / q.get_den());
      a[i * cols + j] = std::move(scaled);
    }
  }
  return a;
}

// Fraction-free Bareiss on an integer matrix. Returns rank; fills
// `corner` with the last pivot and `sign` with the permutation sign.
std::size_t bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols,
                    mpz_class& corner, int& sign) {
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  mpz_class prev(1);
  sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      sign = -sign;
    }
    const mpz_class piv = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class head = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = piv * at(i, j) - head * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  corner = prev;
  return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<mpz_class> scales;
  std::vector<mpz_class> a = to_integer_rows(m, scales);
  mpz_class corner;
  int sign;
  return bareiss(a, m.rows(), m.cols(), corner, sign);
}

Rational determinant(const RatMatrix& m) {
  check(m.rows() == m.cols(), "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<mpz_class> scales;
  std::vector<mpz_class> a = to_integer_rows(m, scales);
  mpz_class corner;
  int sign;
  std::size_t r = bareiss(a, n, n, corner, sign);
  if (r < n) return Rational(0);
  mpz_class denom(1);
  for (const auto& s : scales) denom *= s;
  Rational d(BigInt::from_raw(corner), BigInt::from_raw(denom));
  return sign < 0 ? -d : d;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> left_kernel_basis(const RatMatrix& m) {
  RatMatrix t = m.transpose();
  std::vector<std::size_t> pivots = rref(t);
  std::vector<bool> is_pivot(m.rows(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.rows(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.rows());
    v[f] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -t.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hodge
