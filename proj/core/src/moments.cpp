#include "tdl/moments.hpp"

namespace tdl {

mpq_class sphere_monomial_average(unsigned n, const Monomial& m) {
  if (m.dimension() != n) throw std::invalid_argument("monomial arity mismatch");
  if (m.any_odd_exponent()) return mpq_class(0);

  mpz_class num(1);
  for (unsigned a : m.exponents()) {
    // (a-1)!! for even a, empty product for a = 0.
    for (unsigned f = a > 0 ? a - 1 : 0; f > 1; f -= 2) num *= f;
  }
  const unsigned k = m.degree() / 2;
  mpz_class den(1);
  for (unsigned j = 1; j <= k; ++j) den *= mpz_class(n + 2 * j - 2);

  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tdl
