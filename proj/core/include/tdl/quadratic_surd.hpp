#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tdl {

// Floor of sqrt(v) together with a perfect-square flag; exact.
std::pair<mpz_class, bool> integer_sqrt(const mpz_class& v);

// Exact number a + b*sqrt(d) with rational a, b and a non-negative integer
// radicand d. Normalization removes small square factors from d and collapses
// perfect-square radicands to rationals, so d is never a perfect square when
// b != 0. Arithmetic between two irrational surds requires equal radicands
// (same-family values always share one by construction); comparisons work
// across radicands via sign-preserving squaring.
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), d_(0) {}
  QuadraticSurd(const mpq_class& rational) : a_(rational), b_(0), d_(0) {}  // NOLINT
  QuadraticSurd(long value) : a_(value), b_(0), d_(0) {}                    // NOLINT
  QuadraticSurd(mpq_class a, mpq_class b, mpz_class d);

  // sqrt of a non-negative rational: sqrt(p/q) = sqrt(p*q)/q.
  static QuadraticSurd sqrt_of(const mpq_class& v);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_coeff() const { return b_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }
  // Exact rational value; throws when irrational.
  mpq_class to_rational() const;

  QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, d_, nullptr); }
  QuadraticSurd conjugate() const { return QuadraticSurd(a_, -b_, d_, nullptr); }

  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd operator/(const QuadraticSurd& o) const;
  QuadraticSurd inverse() const;

  int sign() const;
  // Exact three-way comparison, valid for arbitrary radicand combinations.
  int compare(const QuadraticSurd& o) const;
  bool operator==(const QuadraticSurd& o) const { return compare(o) == 0; }
  bool operator!=(const QuadraticSurd& o) const { return compare(o) != 0; }
  bool operator<(const QuadraticSurd& o) const { return compare(o) < 0; }
  bool operator<=(const QuadraticSurd& o) const { return compare(o) <= 0; }
  bool operator>(const QuadraticSurd& o) const { return compare(o) > 0; }
  bool operator>=(const QuadraticSurd& o) const { return compare(o) >= 0; }

  mpf_class to_mpf(mp_bitcnt_t precision = 256) const;
  double to_double() const { return to_mpf(128).get_d(); }
  std::string str() const;

 private:
  // Trusted constructor: skips normalization.
  QuadraticSurd(mpq_class a, mpq_class b, mpz_class d, std::nullptr_t)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (sgn(b_) == 0) d_ = 0;
  }
  void normalize();
  mpq_class a_, b_;
  mpz_class d_;
};

inline QuadraticSurd operator+(const mpq_class& q, const QuadraticSurd& s) {
  return QuadraticSurd(q) + s;
}
inline QuadraticSurd operator-(const mpq_class& q, const QuadraticSurd& s) {
  return QuadraticSurd(q) - s;
}
inline QuadraticSurd operator*(const mpq_class& q, const QuadraticSurd& s) {
  return QuadraticSurd(q) * s;
}

}  // namespace tdl
