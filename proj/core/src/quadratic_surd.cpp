#include "tdl/quadratic_surd.hpp"

#include <array>
#include <vector>

namespace tdl {

std::pair<mpz_class, bool> integer_sqrt(const mpz_class& v) {
  if (sgn(v) < 0) throw std::domain_error("integer_sqrt of a negative value");
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  return {root, sgn(rem) == 0};
}

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> ps;
    std::array<bool, 1001> sieve{};
    for (unsigned long i = 2; i <= 1000; ++i) {
      if (sieve[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= 1000; j += i) sieve[j] = true;
    }
    return ps;
  }();
  return primes;
}

}  // namespace

QuadraticSurd::QuadraticSurd(mpq_class a, mpq_class b, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw std::domain_error("negative radicand");
  // Callers may hand over rationals built with the non-canonicalizing
  // two-argument constructor.
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

void QuadraticSurd::normalize() {
  if (sgn(b_) == 0 || sgn(d_) == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  // Pull small square factors out of d. Complete for any radicand whose
  // non-smooth cofactor is below 10^9; perfect squares of any size collapse.
  mpz_class square_part(1);
  for (unsigned long p : small_primes()) {
    mpz_class p2 = mpz_class(p) * p;
    while (mpz_divisible_p(d_.get_mpz_t(), p2.get_mpz_t())) {
      d_ /= p2;
      square_part *= p;
    }
    if (d_ < p2) break;
  }
  auto [root, perfect] = integer_sqrt(d_);
  if (perfect) {
    a_ += b_ * square_part * root;
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= square_part;
}

QuadraticSurd QuadraticSurd::sqrt_of(const mpq_class& v) {
  if (sgn(v) < 0) throw std::domain_error("sqrt of a negative rational");
  return QuadraticSurd(0, mpq_class(1, v.get_den()), v.get_num() * v.get_den());
}

mpq_class QuadraticSurd::to_rational() const {
  if (!is_rational()) throw std::domain_error("value is irrational");
  return a_;
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  if (is_rational()) return QuadraticSurd(a_ + o.a_, o.b_, o.d_, nullptr);
  if (o.is_rational()) return QuadraticSurd(a_ + o.a_, b_, d_, nullptr);
  if (d_ != o.d_) throw std::domain_error("incompatible radicands in surd addition");
  return QuadraticSurd(a_ + o.a_, b_ + o.b_, d_, nullptr);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const { return *this + (-o); }

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  if (is_rational()) return QuadraticSurd(a_ * o.a_, a_ * o.b_, o.d_, nullptr);
  if (o.is_rational()) return QuadraticSurd(a_ * o.a_, b_ * o.a_, d_, nullptr);
  if (d_ != o.d_) throw std::domain_error("incompatible radicands in surd multiplication");
  return QuadraticSurd(a_ * o.a_ + b_ * o.b_ * mpq_class(d_), a_ * o.b_ + b_ * o.a_, d_, nullptr);
}

QuadraticSurd QuadraticSurd::inverse() const {
  if (is_rational()) {
    if (sgn(a_) == 0) throw std::domain_error("division by zero");
    return QuadraticSurd(1 / a_, 0, 0, nullptr);
  }
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d)
  mpq_class den = a_ * a_ - b_ * b_ * mpq_class(d_);
  if (sgn(den) == 0) throw std::domain_error("division by zero");  // impossible for non-square d
  return QuadraticSurd(a_ / den, -b_ / den, d_, nullptr);
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero");
    return QuadraticSurd(a_ / o.a_, b_ / o.a_, d_, nullptr);
  }
  return *this * o.inverse();
}

namespace {

// Sign of A + B*sqrt(d) with d a non-square positive integer.
int sign_single(const mpq_class& A, const mpq_class& B, const mpz_class& d) {
  const int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |A| vs |B| sqrt(d) decides.
  int cmp_sq = cmp(A * A, B * B * mpq_class(d));  // sign(|A|^2 - |B|^2 d)
  if (cmp_sq == 0) return 0;                      // cannot happen for non-square d, kept for safety
  return cmp_sq > 0 ? sa : sb;
}

}  // namespace

int QuadraticSurd::sign() const { return sign_single(a_, b_, d_); }

int QuadraticSurd::compare(const QuadraticSurd& o) const {
  if (o.is_rational() || is_rational() || d_ == o.d_) {
    // Difference lives in a single radical family.
    mpq_class A = a_ - o.a_;
    mpq_class B;
    mpz_class d;
    if (is_rational()) {
      B = -o.b_;
      d = o.d_;
    } else if (o.is_rational()) {
      B = b_;
      d = d_;
    } else {
      B = b_ - o.b_;
      d = d_;
    }
    return sign_single(A, B, d);
  }
  // Two distinct radicands: sign of A + B sqrt(d1) + C sqrt(d2).
  const mpq_class A = a_ - o.a_;
  const mpq_class& B = b_;
  const mpq_class C = -o.b_;
  const int sp = sign_single(A, B, d_);  // P = A + B sqrt(d1)
  const int sq = sgn(C);                 // Q = C sqrt(d2)
  if (sp == 0) return sq;
  if (sq == 0) return sp;
  if (sp == sq) return sp;
  // Opposite signs: compare P^2 vs Q^2, one radical each.
  // P^2 = A^2 + B^2 d1 + 2AB sqrt(d1), Q^2 = C^2 d2.
  mpq_class A2 = A * A + B * B * mpq_class(d_) - C * C * mpq_class(o.d_);
  int cmp_sq = sign_single(A2, 2 * A * B, d_);
  if (cmp_sq == 0) return 0;
  return cmp_sq > 0 ? sp : sq;
}

mpf_class QuadraticSurd::to_mpf(mp_bitcnt_t precision) const {
  mpf_class a(a_, precision);
  if (sgn(b_) == 0) return a;
  mpf_class b(b_, precision);
  mpf_class d(d_, precision);
  return a + b * sqrt(d);
}

std::string QuadraticSurd::str() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out += a_.get_str() + (sgn(b_) >= 0 ? " + " : " - ");
  else if (sgn(b_) < 0) out += "-";
  mpq_class ab = abs(b_);
  if (ab != 1) out += ab.get_str() + "*";
  out += "sqrt(" + d_.get_str() + ")";
  return out;
}

}  // namespace tdl
