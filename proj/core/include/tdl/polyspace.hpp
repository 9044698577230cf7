#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdl/scalar.hpp"

namespace tdl {

// Exponent vector of a monomial x1^a1 ... xn^an.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  unsigned dimension() const { return static_cast<unsigned>(exps_.size()); }
  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
  }
  const std::vector<unsigned>& exponents() const { return exps_; }
  bool any_odd_exponent() const {
    for (unsigned e : exps_)
      if (e % 2 != 0) return true;
    return false;
  }

  template <typename R>
  R eval(std::span<const R> point) const {
    if (point.size() != exps_.size()) throw std::invalid_argument("monomial/point arity mismatch");
    R acc(1);
    for (size_t i = 0; i < exps_.size(); ++i)
      for (unsigned k = 0; k < exps_[i]; ++k) acc *= point[i];
    return acc;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  std::string str() const;

 private:
  std::vector<unsigned> exps_;
};

// Sparse polynomial in n variables with exact rational coefficients.
class Polynomial {
 public:
  explicit Polynomial(unsigned dimension) : dim_(dimension) {}

  unsigned dimension() const { return dim_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const mpq_class& coeff) {
    if (m.dimension() != dim_) throw std::invalid_argument("term arity mismatch");
    if (sgn(coeff) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, coeff);
    } else {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Polynomial scaled(const mpq_class& s) const {
    Polynomial r(dim_);
    if (sgn(s) == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  mpq_class eval(std::span<const mpq_class> point) const {
    if (point.size() != dim_) throw std::invalid_argument("polynomial/point arity mismatch");
    mpq_class acc(0);
    for (const auto& [m, c] : terms_) acc += c * m.eval(point);
    return acc;
  }

  double eval(std::span<const double> point) const {
    if (point.size() != dim_) throw std::invalid_argument("polynomial/point arity mismatch");
    double acc = 0;
    for (const auto& [m, c] : terms_) acc += c.get_d() * m.eval(point);
    return acc;
  }

 private:
  unsigned dim_;
  std::map<Monomial, mpq_class> terms_;
};

// Dense univariate polynomial, rational coefficients in ascending degree.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UnivariatePoly constant(const mpq_class& c) { return UnivariatePoly({c}); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpq_class(0); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool parity_even() const;
  bool parity_odd() const;

  mpq_class operator()(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  double operator()(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  // Exact value at any x with x^2 = x_sq; defined only for even polynomials.
  mpq_class eval_at_sq(const mpq_class& x_sq) const;

  UnivariatePoly operator+(const UnivariatePoly& o) const;
  UnivariatePoly operator-(const UnivariatePoly& o) const;
  UnivariatePoly scaled(const mpq_class& s) const;
  UnivariatePoly times_x() const;

  bool operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }
  std::vector<mpq_class> coeffs_;
};

// dim Hom_l(R^n) = C(n+l-1, l)
mpz_class hom_dim(unsigned n, unsigned l);

// dim Harm_l(R^n) = hom_dim(n, l) - hom_dim(n, l-2)
mpz_class harm_dim(unsigned n, unsigned l);

// Gegenbauer polynomial for S^{n-1}, normalized so that the value at 1 equals
// harm_dim(n, l). Built from the three-term ultraspherical recurrence with
// lambda = (n-2)/2, Chebyshev limit at n = 2.
UnivariatePoly gegenbauer(unsigned n, unsigned l);

// Enumerates every monomial in n variables of exact degree `degree`.
void for_each_monomial(unsigned n, unsigned degree, const std::function<void(const Monomial&)>& fn);

mpz_class count_monomials(unsigned n, unsigned degree);

}  // namespace tdl
