#include "tdl/verify.hpp"

namespace tdl {

mpz_class dim_P_e_S(unsigned n, unsigned p, unsigned e) {
  if (n < 1 || p < 1) throw std::invalid_argument("dim_P_e_S requires n >= 1, p >= 1");
  mpz_class total(0);
  const unsigned jmax = std::min(p - 1, e / 2);
  for (unsigned j = 0; j <= jmax; ++j)
    for (unsigned l = 0; l + 2 * j <= e; ++l) total += harm_dim(n, l);
  return total;
}

mpz_class dim_P_star_e_S(unsigned n, unsigned p, unsigned e) {
  if (n < 1 || p < 1) throw std::invalid_argument("dim_P_star_e_S requires n >= 1, p >= 1");
  mpz_class total(0);
  const unsigned jmax = std::min(p - 1, e / 2);
  for (unsigned j = 0; j <= jmax; ++j)
    for (unsigned l = e % 2; l + 2 * j <= e; l += 2) total += harm_dim(n, l);
  return total;
}

mpz_class moeller_bound(unsigned n, unsigned p, unsigned t, bool origin_in_x) {
  const unsigned e = t / 2;
  if (t % 2 == 0) return dim_P_e_S(n, p, e);
  mpz_class bound = 2 * dim_P_star_e_S(n, p, e);
  if (e % 2 == 0 && origin_in_x) bound -= 1;
  return bound;
}

}  // namespace tdl
