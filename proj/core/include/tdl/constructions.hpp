#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tdl/configspace.hpp"

namespace tdl {

// Two concentric regular 8-gons in R^2, offset by pi/8: shell 1 at angles
// 2k*pi/8, shell 2 at angles (2k+1)*pi/8, weights w1 and (r1/r2)^8 * w1.
// The unique tight Euclidean 9-design on 2 spheres (up to similarity).
WeightedPointSet<double> two_octagons(double r1, double r2, double w1,
                                      double eps = kDefaultTolerance);

// Regular m-gon of radius r with equal weights; a spherical (m-1)-design on S^1.
WeightedPointSet<double> regular_polygon(unsigned m, double r, double w,
                                         double eps = kDefaultTolerance);

// The 2n points +-r*e_i with equal weights; antipodal, strength 3.
WeightedPointSet<mpq_class> cross_polytope(unsigned n, const mpq_class& r, const mpq_class& w);

// The 240 roots of E8 at squared radius 2 (112 of type (+-1,+-1,0^6), 128 of
// type (+-1/2,...,+-1/2) with an even number of minus signs), equal weights.
// Exact rational coordinates; a tight spherical 7-design.
WeightedPointSet<mpq_class> e8_roots();

inline WeightedPointSet<double> two_octagons(double r1, double r2, double w1, double eps) {
  if (!(r1 > 0) || !(r2 > 0)) throw std::invalid_argument("radii must be positive");
  if (!(w1 > 0)) throw std::invalid_argument("w1 must be positive");
  if (r1 == r2) throw std::invalid_argument("two_octagons requires r1 != r2");
  WeightedPointSet<double> cfg(2, eps);
  const double w2 = std::pow(r1 / r2, 8) * w1;
  for (unsigned k = 0; k < 8; ++k) {
    double theta = 2.0 * k * std::numbers::pi / 8.0;
    cfg.add({r1 * std::cos(theta), r1 * std::sin(theta)}, w1);
  }
  for (unsigned k = 0; k < 8; ++k) {
    double theta = (2.0 * k + 1.0) * std::numbers::pi / 8.0;
    cfg.add({r2 * std::cos(theta), r2 * std::sin(theta)}, w2);
  }
  return cfg;
}

inline WeightedPointSet<double> regular_polygon(unsigned m, double r, double w, double eps) {
  if (m < 3) throw std::invalid_argument("regular_polygon requires m >= 3");
  if (!(r > 0) || !(w > 0)) throw std::invalid_argument("radius and weight must be positive");
  WeightedPointSet<double> cfg(2, eps);
  for (unsigned k = 0; k < m; ++k) {
    double theta = 2.0 * std::numbers::pi * k / m;
    cfg.add({r * std::cos(theta), r * std::sin(theta)}, w);
  }
  return cfg;
}

inline WeightedPointSet<mpq_class> cross_polytope(unsigned n, const mpq_class& r,
                                                  const mpq_class& w) {
  if (n < 2) throw std::invalid_argument("cross_polytope requires n >= 2");
  if (sgn(r) <= 0 || sgn(w) <= 0) throw std::invalid_argument("radius and weight must be positive");
  WeightedPointSet<mpq_class> cfg(n);
  for (unsigned i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<mpq_class> coords(n, mpq_class(0));
      coords[i] = s * r;
      cfg.add(std::move(coords), w);
    }
  }
  return cfg;
}

inline WeightedPointSet<mpq_class> e8_roots() {
  WeightedPointSet<mpq_class> cfg(8);
  const mpq_class w(1);
  // (+-1, +-1, 0^6), all coordinate pairs.
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = i + 1; j < 8; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          std::vector<mpq_class> coords(8, mpq_class(0));
          coords[i] = si;
          coords[j] = sj;
          cfg.add(std::move(coords), w);
        }
      }
    }
  }
  // (+-1/2)^8 with an even number of minus signs.
  const mpq_class half(1, 2);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<mpq_class> coords(8);
    for (unsigned i = 0; i < 8; ++i) coords[i] = (mask >> i) & 1 ? -half : half;
    cfg.add(std::move(coords), w);
  }
  return cfg;
}

}  // namespace tdl
