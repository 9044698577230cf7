#include "tdl/polyspace.hpp"

#include <sstream>

namespace tdl {

std::string Monomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (any) os << "*";
    os << "x" << (i + 1);
    if (exps_[i] > 1) os << "^" << exps_[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

bool UnivariatePoly::parity_even() const {
  for (size_t k = 1; k < coeffs_.size(); k += 2)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

bool UnivariatePoly::parity_odd() const {
  for (size_t k = 0; k < coeffs_.size(); k += 2)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

mpq_class UnivariatePoly::eval_at_sq(const mpq_class& x_sq) const {
  if (!parity_even()) throw std::domain_error("eval_at_sq requires an even polynomial");
  mpq_class acc(0);
  for (size_t k = coeffs_.size(); k-- > 0;) {
    if (k % 2 != 0) continue;
    acc = acc * x_sq + coeffs_[k];
  }
  return acc;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
  std::vector<mpq_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpq_class(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
  std::vector<mpq_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpq_class(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> c(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k] * s;
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::times_x() const {
  if (coeffs_.empty()) return UnivariatePoly();
  std::vector<mpq_class> c(coeffs_.size() + 1, mpq_class(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k + 1] = coeffs_[k];
  return UnivariatePoly(std::move(c));
}

std::string UnivariatePoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    mpq_class c = coeffs_[k];
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    mpq_class a = abs(c);
    bool unit = (a == 1);
    if (k == 0 || !unit) os << a.get_str();
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

mpz_class hom_dim(unsigned n, unsigned l) {
  if (n < 1) throw std::invalid_argument("hom_dim requires n >= 1");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n + l - 1, l);
  return r;
}

mpz_class harm_dim(unsigned n, unsigned l) {
  if (l < 2) return hom_dim(n, l);
  return hom_dim(n, l) - hom_dim(n, l - 2);
}

UnivariatePoly gegenbauer(unsigned n, unsigned l) {
  if (n < 2) throw std::invalid_argument("gegenbauer requires n >= 2");
  UnivariatePoly prev2 = UnivariatePoly::constant(1);
  if (l == 0) return prev2;

  UnivariatePoly prev1;
  mpq_class value_at_one;
  if (n == 2) {
    // Chebyshev limit: T_k, T_k(1) = 1.
    prev1 = UnivariatePoly({0, 1});
    for (unsigned k = 2; k <= l; ++k) {
      UnivariatePoly cur = prev1.times_x().scaled(2) - prev2;
      prev2 = std::move(prev1);
      prev1 = std::move(cur);
    }
    value_at_one = 1;
  } else {
    const mpq_class lam = make_rational(n - 2, 2);
    prev1 = UnivariatePoly({0, 2 * lam});
    for (unsigned k = 2; k <= l; ++k) {
      mpq_class ak = 2 * (k + lam - 1) / k;
      mpq_class bk = (k + 2 * lam - 2) / k;
      UnivariatePoly cur = prev1.times_x().scaled(ak) - prev2.scaled(bk);
      prev2 = std::move(prev1);
      prev1 = std::move(cur);
    }
    // C_l^lambda(1) = C(l + n - 3, l)
    mpz_class c1;
    mpz_bin_uiui(c1.get_mpz_t(), l + n - 3, l);
    value_at_one = mpq_class(c1);
  }
  mpq_class target(harm_dim(n, l));
  return prev1.scaled(target / value_at_one);
}

void for_each_monomial(unsigned n, unsigned degree,
                       const std::function<void(const Monomial&)>& fn) {
  if (n == 0) {
    if (degree == 0) fn(Monomial(std::vector<unsigned>{}));
    return;
  }
  std::vector<unsigned> exps(n, 0);
  // Odometer over compositions of `degree` into n parts.
  exps[0] = degree;
  for (;;) {
    fn(Monomial(exps));
    // Find the rightmost position before the last with a nonzero entry.
    size_t i = n - 1;
    while (i > 0 && exps[i - 1] == 0) --i;
    if (i == 0) break;
    --i;
    unsigned tail = 0;
    for (size_t j = i + 1; j < n; ++j) {
      tail += exps[j];
      exps[j] = 0;
    }
    exps[i] -= 1;
    exps[i + 1] = tail + 1;
  }
}

mpz_class count_monomials(unsigned n, unsigned degree) { return hom_dim(n, degree); }

}  // namespace tdl
