#pragma once

#include <gmpxx.h>

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tdl/configspace.hpp"
#include "tdl/moments.hpp"
#include "tdl/polyspace.hpp"

namespace tdl {

// ---------------------------------------------------------------------------
// Dimension formulas and the Moeller lower bound
// ---------------------------------------------------------------------------

// dim P_e(S) for S a union of p concentric spheres of positive radii:
//   sum_{j=0}^{min(p-1, floor(e/2))} sum_{l=0}^{e-2j} harm_dim(n, l)
mpz_class dim_P_e_S(unsigned n, unsigned p, unsigned e);

// dim P*_e(S): same with l restricted to l == e (mod 2).
mpz_class dim_P_star_e_S(unsigned n, unsigned p, unsigned e);

// Fisher-type lower bound on |X| for a Euclidean t-design on p spheres:
//   t = 2e   : dim P_e(S)
//   t = 2e+1 : 2 dim P*_e(S), minus 1 when e is even and the origin is in X
mpz_class moeller_bound(unsigned n, unsigned p, unsigned t, bool origin_in_x);

// ---------------------------------------------------------------------------
// Design strength
// ---------------------------------------------------------------------------

struct DegreeResidual {
  unsigned degree = 0;
  double max_residual = 0;
  std::string worst_monomial;
  bool pass = true;
};

struct DesignReport {
  unsigned degree = 0;  // t tested
  double max_residual = 0;
  std::string worst_monomial;
  std::vector<DegreeResidual> per_degree;
  bool pass = false;
  bool exact = false;  // residuals compared exactly (rational backend)
  double tolerance = kDefaultTolerance;
};

// Checks the design identity for every monomial of degree <= t.
// Exact backend: pass means every residual is exactly zero; the float backend
// compares the maximum residual against `tol`. Origin points contribute the
// same value to both sides and cancel from every residual.
template <typename R>
DesignReport design_residuals(const WeightedPointSet<R>& cfg, unsigned t,
                              double tol = kDefaultTolerance);

// Largest t <= t_max at which the design identity holds.
template <typename R>
int design_strength(const WeightedPointSet<R>& cfg, unsigned t_max,
                    double tol = kDefaultTolerance);

enum class Tightness { kNotADesign, kDesign, kTightDesign };

struct TightnessReport {
  Tightness kind = Tightness::kNotADesign;
  unsigned p = 0;
  bool origin_in_x = false;
  mpz_class size;
  mpz_class bound;
  DesignReport design;
};

template <typename R>
TightnessReport classify_tightness(const WeightedPointSet<R>& cfg, unsigned t,
                                   double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Radial bases and the dual identity
// ---------------------------------------------------------------------------

template <typename R>
struct ShellStat {
  R radius_sq;
  R point_weight;  // w_nu, constant on the shell
  unsigned long count = 0;  // N_nu
};

// Orthonormal basis {g_{l,j}} of the radial polynomials span{1, s, ...,
// s^{p-1}}, s = ||x||^2, under <f,g>_l = sum_nu N_nu w_nu r_nu^{2l} f g.
// Stored unnormalized: g_{l,j} = gtilde_j / sqrt(norm_sq_j), so every pair
// product g_{l,j}(r_nu) g_{l,j}(r_mu) is rational on the exact backend.
template <typename R>
class RadialBasis {
 public:
  RadialBasis(std::vector<ShellStat<R>> shells, unsigned l);

  size_t p() const { return shells_.size(); }
  unsigned l() const { return l_; }
  const std::vector<ShellStat<R>>& shells() const { return shells_; }
  // Coefficients of gtilde_j in powers of s; coeff(j) has degree exactly j.
  const std::vector<std::vector<R>>& coefficients() const { return coeff_; }
  const std::vector<R>& norm_sq() const { return norm_sq_; }

  R value_unnormalized(size_t j, size_t nu) const;
  // g_{l,j}(r_nu) * g_{l,j}(r_mu), exactly.
  R pair_value(size_t j, size_t nu, size_t mu) const {
    return value_unnormalized(j, nu) * value_unnormalized(j, mu) / norm_sq_[j];
  }
  // Normalized Gram entry <g_{l,j1}, g_{l,j2}>_l; the identity matrix up to
  // backend tolerance.
  R gram_entry(size_t j1, size_t j2) const;

 private:
  std::vector<ShellStat<R>> shells_;
  unsigned l_;
  std::vector<std::vector<R>> coeff_;
  std::vector<R> norm_sq_;
  std::vector<R> lweight_;  // N_nu w_nu r_nu^{2l}
};

template <typename R>
std::vector<ShellStat<R>> shell_stats(const WeightedPointSet<R>& cfg);

template <typename R>
RadialBasis<R> radial_basis(const WeightedPointSet<R>& cfg, unsigned l);

// max over (nu, mu) of | sum_j g_{l,j}(r_nu) g_{l,j}(r_mu)
//                        - delta_{nu,mu} / (N_nu w_nu r_nu^{2l}) |
template <typename R>
R dual_identity_residual(const std::vector<ShellStat<R>>& shells, unsigned l);

template <typename R>
R dual_identity_residual(const WeightedPointSet<R>& cfg, unsigned l);

// ---------------------------------------------------------------------------
// Cross-shell zero condition and the two-shell identities
// ---------------------------------------------------------------------------

struct CrossShellReport {
  std::vector<double> gamma;      // A(X_1, X_2), normalized
  std::vector<double> q4_values;  // Q_{4,n-1} at each gamma
  double max_q4_abs = 0;
  // Residuals of the five two-shell identities, evaluated over an antipodal
  // half: [0] x in X1*, [1] x in X2*, [2] pairs in X1*, [3] pairs in X2*,
  // [4] cross pairs. Skipped (flag false) when the set is not antipodal.
  bool identities_evaluated = false;
  std::array<double, 5> equation_residuals{};
  double max_identity_residual = 0;
};

template <typename R>
CrossShellReport cross_shell_zero_check(const WeightedPointSet<R>& cfg);

// Variant used by the property tests: evaluates the identities over a caller-
// supplied antipodal half instead of the deterministic one.
template <typename R>
CrossShellReport cross_shell_zero_check(const WeightedPointSet<R>& cfg,
                                        const WeightedPointSet<R>& half);

// ---------------------------------------------------------------------------
// Intersection numbers
// ---------------------------------------------------------------------------

template <typename R>
struct IntersectionTable {
  size_t base_shell = 0;
  size_t target_shell = 0;
  InnerProductSet<R> classes;
  // counts[b][c] = number of target points in inner-product class c seen from
  // base point b (the base point itself excluded when the shells coincide).
  std::vector<std::vector<unsigned long>> counts;
  std::vector<unsigned long> class_counts;  // meaningful when regular
  bool regular = false;
};

template <typename R>
IntersectionTable<R> intersection_numbers(const WeightedPointSet<R>& cfg, size_t base_shell,
                                          size_t target_shell);

// ---------------------------------------------------------------------------
// Implementation (templates)
// ---------------------------------------------------------------------------

namespace detail {

template <typename R>
std::vector<std::vector<std::vector<R>>> power_tables(const WeightedPointSet<R>& cfg,
                                                      unsigned max_exp) {
  std::vector<std::vector<std::vector<R>>> tables(cfg.size());
  for (size_t i = 0; i < cfg.size(); ++i) {
    tables[i].resize(cfg.dimension());
    for (unsigned c = 0; c < cfg.dimension(); ++c) {
      auto& col = tables[i][c];
      col.resize(max_exp + 1);
      col[0] = R(1);
      for (unsigned e = 1; e <= max_exp; ++e) col[e] = col[e - 1] * cfg[i].coords[c];
    }
  }
  return tables;
}

}  // namespace detail

template <typename R>
DesignReport design_residuals(const WeightedPointSet<R>& cfg, unsigned t, double tol) {
  if (cfg.empty()) throw std::invalid_argument("design_residuals requires a non-empty set");
  const unsigned n = cfg.dimension();
  const auto part = partition_shells(cfg);
  const auto measures = part.measures();
  const auto tables = detail::power_tables(cfg, t);

  DesignReport report;
  report.degree = t;
  report.exact = kExactBackend<R>;
  report.tolerance = tol;
  report.pass = true;

  R worst(0);
  for (unsigned d = 0; d <= t; ++d) {
    DegreeResidual deg;
    deg.degree = d;
    R deg_worst(0);
    Monomial deg_worst_mono;
    for_each_monomial(n, d, [&](const Monomial& m) {
      R point_side(0);
      const auto& exps = m.exponents();
      for (size_t i = 0; i < cfg.size(); ++i) {
        bool nonzero = true;
        R val(1);
        for (unsigned c = 0; c < n; ++c) {
          if (exps[c] == 0) continue;
          const R& pw = tables[i][c][exps[c]];
          if constexpr (kExactBackend<R>) {
            if (sgn(pw) == 0) {
              nonzero = false;
              break;
            }
          }
          val *= pw;
        }
        if (nonzero) point_side += cfg[i].weight * val;
      }
      R measure = measure_side_monomial<R>(measures, n, m);
      R resid = scalar_abs(point_side - measure);
      if (resid > deg_worst) {
        deg_worst = resid;
        deg_worst_mono = m;
      }
    });
    deg.max_residual = to_double(deg_worst);
    deg.worst_monomial = deg_worst_mono.str();
    if constexpr (kExactBackend<R>)
      deg.pass = sgn(deg_worst) == 0;
    else
      deg.pass = deg_worst <= tol;
    if (!deg.pass) report.pass = false;
    if (deg_worst > worst) {
      worst = deg_worst;
      report.worst_monomial = deg.worst_monomial;
    }
    report.per_degree.push_back(std::move(deg));
  }
  report.max_residual = to_double(worst);
  return report;
}

template <typename R>
int design_strength(const WeightedPointSet<R>& cfg, unsigned t_max, double tol) {
  DesignReport full = design_residuals(cfg, t_max, tol);
  for (const auto& deg : full.per_degree)
    if (!deg.pass) return static_cast<int>(deg.degree) - 1;
  return static_cast<int>(t_max);
}

template <typename R>
TightnessReport classify_tightness(const WeightedPointSet<R>& cfg, unsigned t, double tol) {
  TightnessReport out;
  const auto part = partition_shells(cfg);
  out.p = static_cast<unsigned>(part.p());
  out.origin_in_x = part.has_origin();
  out.size = mpz_class(static_cast<unsigned long>(cfg.size()));
  out.bound = moeller_bound(cfg.dimension(), out.p, t, out.origin_in_x);
  out.design = design_residuals(cfg, t, tol);
  if (!out.design.pass)
    out.kind = Tightness::kNotADesign;
  else
    out.kind = (out.size == out.bound) ? Tightness::kTightDesign : Tightness::kDesign;
  return out;
}

template <typename R>
RadialBasis<R>::RadialBasis(std::vector<ShellStat<R>> shells, unsigned l)
    : shells_(std::move(shells)), l_(l) {
  const size_t p = shells_.size();
  if (p == 0) throw std::invalid_argument("radial basis requires at least one shell");
  lweight_.resize(p);
  for (size_t nu = 0; nu < p; ++nu) {
    const auto& s = shells_[nu];
    if (s.count == 0) throw std::invalid_argument("empty shell");
    R r2l(1);
    for (unsigned k = 0; k < l; ++k) r2l *= s.radius_sq;
    lweight_[nu] = R(static_cast<unsigned long>(s.count)) * s.point_weight * r2l;
  }

  // Values of s^i on the shells.
  std::vector<std::vector<R>> pw(p, std::vector<R>(p));
  for (size_t nu = 0; nu < p; ++nu) {
    pw[nu][0] = R(1);
    for (size_t i = 1; i < p; ++i) pw[nu][i] = pw[nu][i - 1] * shells_[nu].radius_sq;
  }
  auto ip = [&](const std::vector<R>& f, const std::vector<R>& g) {
    R acc(0);
    for (size_t nu = 0; nu < p; ++nu) {
      R fv(0), gv(0);
      for (size_t i = 0; i < f.size(); ++i) fv += f[i] * pw[nu][i];
      for (size_t i = 0; i < g.size(); ++i) gv += g[i] * pw[nu][i];
      acc += lweight_[nu] * fv * gv;
    }
    return acc;
  };

  // Gram-Schmidt over {1, s, ..., s^{p-1}}, pivot order = ascending degree.
  for (size_t j = 0; j < p; ++j) {
    std::vector<R> raw(j + 1, R(0));
    raw[j] = R(1);
    const R raw_norm = ip(raw, raw);
    std::vector<R> g = raw;
    for (size_t i = 0; i < j; ++i) {
      R c = ip(g, coeff_[i]) / norm_sq_[i];
      for (size_t k = 0; k < coeff_[i].size(); ++k) g[k] -= c * coeff_[i][k];
    }
    R ns = ip(g, g);
    bool degenerate;
    if constexpr (kExactBackend<R>)
      degenerate = sgn(ns) <= 0;
    else
      degenerate = !(ns > raw_norm * 1e-24);
    if (degenerate)
      throw std::domain_error("degenerate Gram matrix: fewer distinct radii than shells");
    coeff_.push_back(std::move(g));
    norm_sq_.push_back(std::move(ns));
  }
}

template <typename R>
R RadialBasis<R>::value_unnormalized(size_t j, size_t nu) const {
  R acc(0);
  R pw(1);
  for (size_t i = 0; i < coeff_[j].size(); ++i) {
    acc += coeff_[j][i] * pw;
    pw *= shells_[nu].radius_sq;
  }
  return acc;
}

template <typename R>
R RadialBasis<R>::gram_entry(size_t j1, size_t j2) const {
  R acc(0);
  for (size_t nu = 0; nu < shells_.size(); ++nu)
    acc += lweight_[nu] * value_unnormalized(j1, nu) * value_unnormalized(j2, nu);
  if (j1 == j2) return acc / norm_sq_[j1];
  if constexpr (kExactBackend<R>) {
    // Off-diagonal entries are tested against zero, so the sqrt normalization
    // can be skipped without losing exactness.
    return acc;
  } else {
    return acc / std::sqrt(norm_sq_[j1] * norm_sq_[j2]);
  }
}

template <typename R>
std::vector<ShellStat<R>> shell_stats(const WeightedPointSet<R>& cfg) {
  const auto part = partition_shells(cfg);
  if (part.has_origin())
    throw std::invalid_argument("radial basis requires the origin to be absent");
  std::vector<ShellStat<R>> out;
  out.reserve(part.p());
  for (const auto& s : part.shells) {
    if (!s.constant_weight(cfg.tolerance()))
      throw std::invalid_argument("radial basis requires shell-constant weights");
    out.push_back({s.radius_sq, s.min_weight, static_cast<unsigned long>(s.count())});
  }
  return out;
}

template <typename R>
RadialBasis<R> radial_basis(const WeightedPointSet<R>& cfg, unsigned l) {
  return RadialBasis<R>(shell_stats(cfg), l);
}

template <typename R>
R dual_identity_residual(const std::vector<ShellStat<R>>& shells, unsigned l) {
  RadialBasis<R> basis(shells, l);
  const size_t p = basis.p();
  R worst(0);
  for (size_t nu = 0; nu < p; ++nu) {
    for (size_t mu = 0; mu < p; ++mu) {
      R lhs(0);
      for (size_t j = 0; j < p; ++j) lhs += basis.pair_value(j, nu, mu);
      if (nu == mu) {
        const auto& s = shells[nu];
        R r2l(1);
        for (unsigned k = 0; k < l; ++k) r2l *= s.radius_sq;
        lhs -= R(1) / (R(static_cast<unsigned long>(s.count)) * s.point_weight * r2l);
      }
      R resid = scalar_abs(lhs);
      if (resid > worst) worst = resid;
    }
  }
  return worst;
}

template <typename R>
R dual_identity_residual(const WeightedPointSet<R>& cfg, unsigned l) {
  return dual_identity_residual(shell_stats(cfg), l);
}

namespace detail {

template <typename R>
CrossShellReport cross_shell_gamma_part(const WeightedPointSet<R>& cfg,
                                        const ShellPartition<R>& part) {
  CrossShellReport report;
  const UnivariatePoly q4 = gegenbauer(cfg.dimension(), 4);
  const auto prof = inner_product_profile(cfg, part);
  const auto& cross = prof.cross_set(0, 1);
  for (size_t k = 0; k < cross.size(); ++k) {
    report.gamma.push_back(cross.normalized(k));
    double q4v;
    if constexpr (kExactBackend<R>) {
      // Q4 is even, so its value at gamma is exact through gamma^2.
      q4v = to_double(q4.eval_at_sq(cross.normalized_sq(k)));
    } else {
      q4v = q4(cross.normalized(k));
    }
    report.q4_values.push_back(q4v);
    report.max_q4_abs = std::max(report.max_q4_abs, std::fabs(q4v));
  }
  return report;
}

}  // namespace detail

template <typename R>
CrossShellReport cross_shell_zero_check(const WeightedPointSet<R>& cfg,
                                        const WeightedPointSet<R>& half) {
  const unsigned n = cfg.dimension();
  const auto part = partition_shells(cfg);
  if (part.p() != 2) throw std::invalid_argument("cross_shell_zero_check requires p = 2");

  CrossShellReport report = detail::cross_shell_gamma_part(cfg, part);
  const UnivariatePoly q4 = gegenbauer(n, 4);
  const UnivariatePoly q2 = gegenbauer(n, 2);
  report.identities_evaluated = true;

  // Identities over the antipodal half. The radial bases are defined for the
  // half, so shell masses are halved relative to X.
  const auto half_part = partition_shells(half);
  if (half_part.p() != 2) throw std::invalid_argument("antipodal half must keep both shells");
  auto stats = shell_stats(half);
  RadialBasis<R> b0(stats, 0), b2(stats, 2), b4(stats, 4);

  const R rsq1 = stats[0].radius_sq;
  const R rsq2 = stats[1].radius_sq;
  auto sum_pairs = [&](const RadialBasis<R>& b, size_t nu, size_t mu) {
    R acc(0);
    for (size_t j = 0; j < b.p(); ++j) acc += b.pair_value(j, nu, mu);
    return acc;
  };
  const R s0_11 = sum_pairs(b0, 0, 0), s0_22 = sum_pairs(b0, 1, 1), s0_12 = sum_pairs(b0, 0, 1);
  const R s2_11 = sum_pairs(b2, 0, 0), s2_22 = sum_pairs(b2, 1, 1), s2_12 = sum_pairs(b2, 0, 1);
  const R t4_11 = b4.pair_value(0, 0, 0), t4_22 = b4.pair_value(0, 1, 1),
          t4_12 = b4.pair_value(0, 0, 1);

  const mpq_class q4_at_1 = q4(mpq_class(1));
  const mpq_class q2_at_1 = q2(mpq_class(1));
  auto to_r = [](const mpq_class& q) {
    if constexpr (kExactBackend<R>)
      return q;
    else
      return q.get_d();
  };

  auto pow4 = [](const R& x) { return x * x * x * x; };
  auto pow2 = [](const R& x) { return x * x; };

  // residuals [0], [1]: the point normalization rows.
  {
    R lhs1 = pow4(rsq1) * t4_11 * to_r(q4_at_1) + pow2(rsq1) * to_r(q2_at_1) * s2_11 + s0_11 -
             R(1) / stats[0].point_weight;
    R lhs2 = pow4(rsq2) * t4_22 * to_r(q4_at_1) + pow2(rsq2) * to_r(q2_at_1) * s2_22 + s0_22 -
             R(1) / stats[1].point_weight;
    report.equation_residuals[0] = to_double(scalar_abs(lhs1));
    report.equation_residuals[1] = to_double(scalar_abs(lhs2));
  }

  // residuals [2], [3]: pairs within one half-shell.
  for (size_t shell = 0; shell < 2; ++shell) {
    const auto& members = half_part.shells[shell].members;
    const R rsq = shell == 0 ? rsq1 : rsq2;
    const R t4 = shell == 0 ? t4_11 : t4_22;
    const R s2 = shell == 0 ? s2_11 : s2_22;
    const R s0 = shell == 0 ? s0_11 : s0_22;
    double worst = 0;
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        R u = detail::dot_product(half[members[a]].coords, half[members[b]].coords) / rsq;
        R lhs = pow4(rsq) * t4 * q4(u) + pow2(rsq) * q2(u) * s2 + s0;
        worst = std::max(worst, to_double(scalar_abs(lhs)));
      }
    }
    report.equation_residuals[2 + shell] = worst;
  }

  // residual [4]: cross pairs; Q4 and Q2 are even, so gamma enters through gamma^2.
  {
    const auto& m1 = half_part.shells[0].members;
    const auto& m2 = half_part.shells[1].members;
    const R scale = rsq1 * rsq2;
    double worst = 0;
    for (size_t ia : m1) {
      for (size_t ib : m2) {
        R dot = detail::dot_product(half[ia].coords, half[ib].coords);
        R q4g, q2g;
        if constexpr (kExactBackend<R>) {
          mpq_class gsq = dot * dot / scale;
          q4g = q4.eval_at_sq(gsq);
          q2g = q2.eval_at_sq(gsq);
        } else {
          double g = dot / std::sqrt(scale);
          q4g = q4(g);
          q2g = q2(g);
        }
        R lhs = pow2(scale) * t4_12 * q4g + scale * q2g * s2_12 + s0_12;
        worst = std::max(worst, to_double(scalar_abs(lhs)));
      }
    }
    report.equation_residuals[4] = worst;
  }

  for (double r : report.equation_residuals)
    report.max_identity_residual = std::max(report.max_identity_residual, r);
  return report;
}

template <typename R>
CrossShellReport cross_shell_zero_check(const WeightedPointSet<R>& cfg) {
  if (is_antipodal(cfg)) return cross_shell_zero_check(cfg, antipodal_half(cfg));
  const auto part = partition_shells(cfg);
  if (part.p() != 2) throw std::invalid_argument("cross_shell_zero_check requires p = 2");
  return detail::cross_shell_gamma_part(cfg, part);
}

template <typename R>
IntersectionTable<R> intersection_numbers(const WeightedPointSet<R>& cfg, size_t base_shell,
                                          size_t target_shell) {
  const auto part = partition_shells(cfg);
  if (base_shell >= part.p() || target_shell >= part.p())
    throw std::out_of_range("shell index out of range");
  const auto prof = inner_product_profile(cfg, part);

  IntersectionTable<R> table;
  table.base_shell = base_shell;
  table.target_shell = target_shell;
  table.classes = base_shell == target_shell ? prof.within[base_shell]
                                             : prof.cross_set(base_shell, target_shell);

  const auto& base = part.shells[base_shell];
  const auto& target = part.shells[target_shell];
  const bool same = base_shell == target_shell;

  auto classify = [&](const R& dot) -> size_t {
    if constexpr (kExactBackend<R>) {
      R key = same ? R(dot / base.radius_sq) : dot;
      for (size_t c = 0; c < table.classes.values.size(); ++c)
        if (table.classes.values[c] == key) return c;
      throw std::logic_error("inner product missing from profile");
    } else {
      double key = dot / std::sqrt(base.radius_sq * target.radius_sq);
      size_t best = 0;
      double best_gap = std::numeric_limits<double>::infinity();
      for (size_t c = 0; c < table.classes.values.size(); ++c) {
        double gap = std::fabs(table.classes.values[c] - key);
        if (gap < best_gap) {
          best_gap = gap;
          best = c;
        }
      }
      return best;
    }
  };

  for (size_t bi : base.members) {
    std::vector<unsigned long> row(table.classes.size(), 0);
    for (size_t ti : target.members) {
      if (same && ti == bi) continue;
      ++row[classify(detail::dot_product(cfg[bi].coords, cfg[ti].coords))];
    }
    table.counts.push_back(std::move(row));
  }
  table.regular = true;
  for (const auto& row : table.counts)
    if (row != table.counts.front()) table.regular = false;
  if (table.regular && !table.counts.empty()) table.class_counts = table.counts.front();
  return table;
}

}  // namespace tdl
