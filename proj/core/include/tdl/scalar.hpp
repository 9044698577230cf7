#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace tdl {

// Two scalar backends share the geometry and verification code paths:
//  - mpq_class : exact rationals, equality is exact, tolerance arguments ignored
//  - double    : floats compared with an absolute tolerance
inline constexpr double kDefaultTolerance = 1e-9;

template <typename R>
inline constexpr bool kExactBackend = std::is_same_v<R, mpq_class>;

template <typename R>
const char* backend_name() {
  if constexpr (kExactBackend<R>)
    return "rational";
  else
    return "float";
}

inline double to_double(const mpq_class& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline mpq_class scalar_abs(const mpq_class& q) { return abs(q); }
inline double scalar_abs(double x) { return std::fabs(x); }

inline bool scalar_eq(const mpq_class& a, const mpq_class& b, double) { return a == b; }
inline bool scalar_eq(double a, double b, double eps) { return std::fabs(a - b) <= eps; }

inline bool scalar_is_zero(const mpq_class& a, double) { return sgn(a) == 0; }
inline bool scalar_is_zero(double a, double eps) { return std::fabs(a) <= eps; }

// GMP's two-argument mpq_class constructor does not canonicalize; every
// rational built from a separate numerator and denominator must go through
// here or exact comparisons misbehave.
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or a plain integer string into a canonical rational.
// Decimal or exponent notation is rejected (those parse as floats).
std::optional<mpq_class> parse_rational(std::string_view text);

// Parses any finite decimal/exponent literal.
std::optional<double> parse_double(std::string_view text);

// Shortest representation that round-trips to the identical double.
std::string format_double(double value);

std::string format_rational(const mpq_class& value);

}  // namespace tdl
