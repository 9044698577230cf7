// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "tdl/constructions.hpp"
#include "tdl/nonexistence.hpp"
#include "tdl/polyspace.hpp"
#include "tdl/quadratic_surd.hpp"
#include "tdl/verify.hpp"

using namespace tdl;
namespace ne = tdl::nonexistence;

namespace {

int g_failures = 0;

struct Criterion {
  std::string label;
  bool ok = true;
  std::vector<std::string> notes;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string l) : label(std::move(l)) {}
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  ~Criterion() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.2fs)\n", ok ? "PASS" : "FAIL", label.c_str(), secs);
    for (const auto& n : notes) std::printf("     - %s\n", n.c_str());
    if (!ok) ++g_failures;
    std::fflush(stdout);
  }
};

mpq_class q(long num, long den = 1) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

void criterion1_tight9_reproduction() {
  Criterion c("criterion 1: two_octagons(1,2,1) is a tight 9-design, residual <= 1e-12, fails at 10");
  const auto cfg = two_octagons(1, 2, 1);
  const auto rep9 = design_residuals(cfg, 9);
  c.require(rep9.pass && rep9.max_residual <= 1e-12,
            "degree-9 residual " + std::to_string(rep9.max_residual));
  const auto rep10 = design_residuals(cfg, 10);
  c.require(!rep10.per_degree[10].pass && rep10.per_degree[10].max_residual > 1e-3,
            "degree-10 residual " + std::to_string(rep10.per_degree[10].max_residual));
  const auto cls = classify_tightness(cfg, 9);
  c.require(cls.kind == Tightness::kTightDesign, "not classified tight");
  c.require(cls.bound == 16 && cls.size == 16, "bound/size mismatch");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
  c.require(secs < 1.0, "runtime over 1s");
}

void criterion2_gegenbauer_zero_condition() {
  Criterion c("criterion 2: Q_{4,1} vanishes on A(X1,X2); closed form matches for n in [2,50]");
  const auto rep = cross_shell_zero_check(two_octagons(1, 2, 1));
  c.require(rep.gamma.size() == 4, "expected 4 cross inner products");
  c.require(rep.max_q4_abs <= 1e-12, "max |Q4(gamma)| = " + std::to_string(rep.max_q4_abs));
  for (unsigned n = 2; n <= 50; ++n) {
    mpq_class pre = q(static_cast<long>(n) * (n + 6), 24);
    const UnivariatePoly closed({pre * 3, 0, pre * q(-6) * q(n + 2), 0,
                                 pre * q(n + 4) * q(n + 2)});
    if (!(gegenbauer(n, 4) == closed)) {
      c.require(false, "closed form mismatch at n = " + std::to_string(n));
      break;
    }
  }
}

void criterion3_e8_fixture() {
  Criterion c("criterion 3: e8_roots has strength exactly 7, |X| = 240 = bound, A(X) = {0,+-1/2,-1}");
  const auto cfg = e8_roots();
  c.require(cfg.size() == 240, "|X| != 240");
  const int strength = design_strength(cfg, 8);
  c.require(strength == 7, "strength " + std::to_string(strength));
  c.require(moeller_bound(8, 1, 7, false) == 240, "bound != 240");
  const auto prof = inner_product_profile(cfg);
  const auto& a = prof.within[0];
  bool ips = a.size() == 4 && a.values[0] == -1 && a.values[1] == q(-1, 2) &&
             a.values[2] == 0 && a.values[3] == q(1, 2);
  c.require(ips, "inner-product set mismatch");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
  c.require(secs < 30.0, "runtime over 30s");
}

void criterion4_dual_identity() {
  Criterion c("criterion 4: dual identity exact on 100 random rational shells, <= 1e-12 on octagons");
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> pick(1, 30);
  int exact_zero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const size_t p = 2 + trial % 2;
    std::vector<ShellStat<mpq_class>> shells;
    while (shells.size() < p) {
      mpq_class r2 = q(pick(rng), pick(rng));
      bool fresh = true;
      for (const auto& s : shells)
        if (s.radius_sq == r2) fresh = false;
      if (!fresh) continue;
      shells.push_back({r2, q(pick(rng), pick(rng)), static_cast<unsigned long>(pick(rng))});
    }
    bool all_zero = true;
    for (unsigned l : {0u, 1u, 2u})
      all_zero = all_zero && sgn(dual_identity_residual(shells, l)) == 0;
    if (all_zero) ++exact_zero;
  }
  c.require(exact_zero == 100, std::to_string(exact_zero) + "/100 exactly zero");
  const auto cfg = two_octagons(1, 2, 1);
  for (unsigned l : {0u, 2u, 4u}) {
    const double resid = dual_identity_residual(cfg, l);
    c.require(resid <= 1e-12, "octagon residual at l=" + std::to_string(l));
  }
}

void criterion5_nonexistence_certificate() {
  Criterion c("criterion 5: certify_range(3, 300000) and (3, 10^6) fully excluded, admissible {23, 2399, 235223}");
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  const auto t0 = std::chrono::steady_clock::now();
  const auto cert = ne::certify_range(3, 300000, workers);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(cert.excluded, "range [3, 300000] not fully excluded");
  const std::vector<mpz_class> expect{23, 2399, 235223};
  c.require(cert.admissible == expect, "admissible set mismatch");
  for (const auto& rep : cert.detailed_case1) {
    if (rep.k_even) {
      c.require(rep.excluded && rep.step == "no-integral-N2",
                "n=" + rep.n.get_str() + " step=" + rep.step);
    }
  }
  for (const auto& rep : cert.detailed_case2)
    c.require(rep.excluded && (rep.step == "sqrt-n4-3-not-integer" || rep.step == "divisibility"),
              "case2 n=" + rep.n.get_str() + " step=" + rep.step);
  c.require(secs < 300.0, "runtime " + std::to_string(secs) + "s over the 5-minute target");
  c.notes.push_back("[3,300000] with " + std::to_string(workers) + " workers: " +
                    std::to_string(secs) + "s");

  const auto ext = ne::certify_range(3, 1000000, workers);
  c.require(ext.excluded, "extended range [3, 10^6] not fully excluded");
}

void criterion6_case2_arithmetic() {
  Criterion c("criterion 6: case II excluded on [3,1000]; 0 < 48(n-1)/(n^2-n+4) < 1 for n >= 48");
  for (long n = 3; n <= 1000; ++n) {
    const auto rep = ne::case2_certify(n);
    if (!rep.excluded) {
      c.require(false, "case II not excluded at n = " + std::to_string(n));
      break;
    }
  }
  for (long n = 48; n <= 1000000; ++n) {
    const mpz_class num = 48 * (mpz_class(n) - 1);
    const mpz_class den = mpz_class(n) * n - n + 4;
    if (!(num > 0 && num < den)) {
      c.require(false, "quotient left (0,1) at n = " + std::to_string(n));
      break;
    }
  }
}

void criterion7_F_properties() {
  Criterion c("criterion 7: F monotone decrease, exact endpoint bounds, exact ratio identity");
  std::mt19937_64 rng(7);
  for (const long nv : {5L, 23L, 100L}) {
    const mpz_class n(nv);
    const mpz_class lo = n * (n + 1) * (n + 3) / 4;
    std::uniform_int_distribution<long> step(1, 2000000);
    for (int pair = 0; pair < 100; ++pair) {
      const mpz_class x1 = lo + step(rng);
      const mpz_class x2 = x1 + step(rng);
      if (!(ne::F_value(n, mpq_class(x1)).compare(ne::F_value(n, mpq_class(x2))) > 0)) {
        c.require(false, "monotonicity failed at n = " + std::to_string(nv));
        break;
      }
    }
  }
  for (long nv = 3; nv <= 1000; ++nv) {
    const mpz_class n(nv);
    const mpz_class e6 = 6 * (n + 1) * (n + 2);
    const mpq_class lower = q(1, 24) * mpq_class(n * (n + 1) * (n * n + 5 * n + 18));
    const mpq_class upper = q(1, 12) * mpq_class(n * (n + 1) * (n * n + n + 10));
    const bool upper_ok = ne::F_value(n, upper) > QuadraticSurd(0, q(1, 12), e6);
    const bool lower_ok = ne::F_value(n, lower) < QuadraticSurd(1, q(1, 12), e6);
    if (!upper_ok || !lower_ok) {
      c.require(false, "endpoint bound failed at n = " + std::to_string(nv));
      break;
    }
  }
  std::uniform_int_distribution<long> pick_n(3, 150);
  for (int trial = 0; trial < 100; ++trial) {
    const mpz_class n(pick_n(rng));
    std::uniform_int_distribution<long> pick_N((n.get_si() + 1) * n.get_si() + 1, 4000000);
    const mpz_class N(pick_N(rng));
    const auto ann = ne::annihilator(n, N, ne::AnnihilatorKind::kA);
    const QuadraticSurd lhs =
        (QuadraticSurd(1) - ann.root_plus_sq) / (ann.root_plus_sq - ann.root_minus_sq);
    const QuadraticSurd rhs = QuadraticSurd(q(-1, 2)) + ne::F_value(n, mpq_class(N));
    if (!(lhs == rhs)) {
      c.require(false, "ratio identity failed at n=" + n.get_str() + " N=" + N.get_str());
      break;
    }
  }
}

void criterion8_asymptotic_cross_check() {
  Criterion c("criterion 8: brace expressions / n^6 within 5% of 2(30-11 sqrt6) and 4(4 sqrt6 - 9) at n = 10^7");
  const mpz_class n(10000000);
  const auto cand = ne::candidate_N2_N1(n, 1);
  const auto th = ne::thresholds_K_G(n);
  const mpf_class n6(mpz_class(n * n * n * n * n * n), 256);
  const mpf_class nf(n, 256), n1f(n - 1, 256);

  mpf_class brace_k(0, 256);
  brace_k = (cand.N1 - th.K_plus) *
            mpf_class(180 * (2 * n * n + 6 * n + 1) * (2 * n * n + 6 * n - 71), 256) / (nf * n1f);
  const double rk = mpf_class(brace_k / n6).get_d() / (2 * (30 - 11 * std::sqrt(6.0)));
  c.require(std::fabs(rk - 1) < 0.05, "K brace ratio " + std::to_string(rk));

  mpf_class brace_g(0, 256);
  brace_g = (th.G_plus - cand.N1) *
            mpf_class(108 * (2 * n * n + 6 * n + 1) * (2 * n * n + 6 * n - 23), 256) / (nf * n1f);
  const double rg = mpf_class(brace_g / n6).get_d() / (4 * (4 * std::sqrt(6.0) - 9));
  c.require(std::fabs(rg - 1) < 0.05, "G brace ratio " + std::to_string(rg));
}

void criterion9_moment_oracle() {
  Criterion c("criterion 9: sphere averages match Monte Carlo (10^6 samples, 3 sigma) and x_i^2 = 1/n");
  for (unsigned n = 1; n <= 16; ++n) {
    std::vector<unsigned> e(n, 0);
    e[0] = 2;
    if (!(sphere_monomial_average(n, Monomial(e)) == q(1, n))) {
      c.require(false, "x1^2 average != 1/n at n = " + std::to_string(n));
    }
  }
  std::mt19937_64 rng(9);
  std::normal_distribution<double> gauss;
  const size_t samples = 1000000;
  for (unsigned n : {2u, 3u, 4u}) {
    std::vector<Monomial> monos;
    for (unsigned d = 0; d <= 8; d += 2)
      for_each_monomial(n, d, [&](const Monomial& m) {
        if (!m.any_odd_exponent()) monos.push_back(m);
      });
    std::vector<double> sum(monos.size(), 0), sumsq(monos.size(), 0);
    std::vector<double> x(n);
    for (size_t s = 0; s < samples; ++s) {
      double norm = 0;
      for (auto& v : x) {
        v = gauss(rng);
        norm += v * v;
      }
      norm = std::sqrt(norm);
      for (auto& v : x) v /= norm;
      for (size_t k = 0; k < monos.size(); ++k) {
        const double val = monos[k].eval(std::span<const double>(x));
        sum[k] += val;
        sumsq[k] += val * val;
      }
    }
    for (size_t k = 0; k < monos.size(); ++k) {
      const double mean = sum[k] / samples;
      const double var = sumsq[k] / samples - mean * mean;
      const double bar = 3 * std::sqrt(std::max(var, 0.0) / samples) + 1e-12;
      const double exact = sphere_monomial_average(n, monos[k]).get_d();
      if (std::fabs(mean - exact) > bar) {
        c.require(false, "monomial " + monos[k].str() + " off by " +
                             std::to_string(std::fabs(mean - exact)) + " (3 sigma = " +
                             std::to_string(bar) + ") at n = " + std::to_string(n));
      }
    }
  }
}

}  // namespace

int main() {
  criterion1_tight9_reproduction();
  criterion2_gegenbauer_zero_condition();
  criterion3_e8_fixture();
  criterion4_dual_identity();
  criterion5_nonexistence_certificate();
  criterion6_case2_arithmetic();
  criterion7_F_properties();
  criterion8_asymptotic_cross_check();
  criterion9_moment_oracle();
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
