#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <vector>

#include "tdl/polyspace.hpp"
#include "tdl/scalar.hpp"

namespace tdl {

// One concentric sphere of the measure side: total shell mass w(X_i) at a
// given radius. Only the squared radius is stored; every surface average of
// an odd-degree monomial vanishes, so radii enter through even powers only
// and the measure side stays rational for rational inputs.
template <typename R>
struct ShellMeasure {
  R radius_sq;
  R mass;
};

// Surface average (1/|S^{n-1}|) * integral of x^a over the unit sphere:
// 0 when any exponent is odd, otherwise
//   prod_i (a_i - 1)!!  /  prod_{j=1..k} (n + 2j - 2),   2k = sum a_i,
// with (-1)!! = 1.
mpq_class sphere_monomial_average(unsigned n, const Monomial& m);

namespace detail {
inline mpq_class to_scalar(const mpq_class& q, const mpq_class*) { return q; }
inline double to_scalar(const mpq_class& q, const double*) { return q.get_d(); }
}  // namespace detail

// Measure-side value of a single monomial: sum_i mass_i * r_i^deg * average.
template <typename R>
R measure_side_monomial(std::span<const ShellMeasure<R>> shells, unsigned n, const Monomial& m) {
  if (m.dimension() != n) throw std::invalid_argument("monomial arity mismatch");
  if (m.any_odd_exponent()) return R(0);
  const R avg = detail::to_scalar(sphere_monomial_average(n, m), static_cast<const R*>(nullptr));
  const unsigned half_deg = m.degree() / 2;
  R acc(0);
  for (const auto& shell : shells) {
    R pw(1);
    for (unsigned k = 0; k < half_deg; ++k) pw *= shell.radius_sq;
    acc += shell.mass * pw * avg;
  }
  return acc;
}

// Left-hand side of the design identity:
//   sum_i w(X_i)/|S_i| * integral_{S_i} f dsigma_i
template <typename R>
R measure_side(std::span<const ShellMeasure<R>> shells, const Polynomial& f) {
  if (shells.empty()) throw std::invalid_argument("measure_side requires at least one shell");
  R acc(0);
  for (const auto& [mono, coeff] : f.terms()) {
    if (mono.any_odd_exponent()) continue;
    R c = detail::to_scalar(coeff, static_cast<const R*>(nullptr));
    acc += c * measure_side_monomial(shells, f.dimension(), mono);
  }
  return acc;
}

}  // namespace tdl
