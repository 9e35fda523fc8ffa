#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hodge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

// Arbitrary-precision signed integer. The representation (GMP) is
// sign + limb magnitude; sign() and limb accessors are exposed so the
// invariants (sign is 0 iff there are no limbs, top limb of a nonzero
// value is nonzero) stay observable.
class BigInt {
 public:
  BigInt() : v_(0) {}
  BigInt(long n) : v_(n) {}
  explicit BigInt(const std::string& decimal) : v_(decimal, 10) {}
  static BigInt from_raw(mpz_class z) {
    BigInt b;
    b.v_ = std::move(z);
    return b;
  }

  int sign() const { return sgn(v_); }
  std::size_t limb_count() const { return mpz_size(v_.get_mpz_t()); }
  bool top_limb_nonzero() const {
    std::size_t n = limb_count();
    return n == 0 || mpz_getlimbn(v_.get_mpz_t(), n - 1) != 0;
  }
  bool is_zero() const { return sign() == 0; }

  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const {
    check(fits_long(), "BigInt does not fit in a machine long");
    return v_.get_si();
  }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  friend BigInt operator+(const BigInt& a, const BigInt& b) { return from_raw(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return from_raw(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator-(const BigInt& a) { return from_raw(mpz_class(-a.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return from_raw(mpz_class(a.v_ * b.v_)); }
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.v_ >= b.v_; }

  // Exact division; errors if the divisor does not divide exactly.
  static BigInt div_exact(const BigInt& a, const BigInt& b) {
    check(!b.is_zero(), "division by zero");
    check(mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t()) != 0, "inexact integer division");
    BigInt r;
    mpz_divexact(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
  }
  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
  }
  static BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
  }
  static BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.v_.get_mpz_t(), base.v_.get_mpz_t(), e);
    return r;
  }
  BigInt abs() const {
    BigInt r;
    mpz_abs(r.v_.get_mpz_t(), v_.get_mpz_t());
    return r;
  }
  bool divisible_by(const BigInt& b) const {
    return !b.is_zero() && mpz_divisible_p(v_.get_mpz_t(), b.v_.get_mpz_t()) != 0;
  }

  std::string str() const { return v_.get_str(); }
  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

// Exact rational, always stored reduced with positive denominator;
// zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    check(den != 0, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(const BigInt& num, const BigInt& den) {
    check(!den.is_zero(), "rational with zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
  }
  static Rational from_raw_canonical(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    r.v_.canonicalize();
    return r;
  }

  BigInt num() const { return BigInt::from_raw(v_.get_num()); }
  BigInt den() const { return BigInt::from_raw(v_.get_den()); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    check(!o.is_zero(), "division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(const Rational& a, const Rational& b) { Rational r; r.v_ = a.v_ + b.v_; return r; }
  friend Rational operator-(const Rational& a, const Rational& b) { Rational r; r.v_ = a.v_ - b.v_; return r; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }
  friend Rational operator*(const Rational& a, const Rational& b) { Rational r; r.v_ = a.v_ * b.v_; return r; }
  friend Rational operator/(const Rational& a, const Rational& b) {
    check(!b.is_zero(), "division by zero");
    Rational r;
    r.v_ = a.v_ / b.v_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    check(!is_zero(), "inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }
  Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
  static Rational pow(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    unsigned long k = e;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace hodge
