#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdl/polyspace.hpp"
#include "tdl/quadratic_surd.hpp"

namespace tdl::nonexistence {

inline constexpr mp_bitcnt_t kCrossCheckPrecision = 256;  // >= 200-bit cross checks

// ---------------------------------------------------------------------------
// Arithmetic building blocks
// ---------------------------------------------------------------------------

struct PellData {
  mpz_class k;  // sqrt(6(n+1)(n+2)) = 6k
  bool k_even;
};

// Present iff 6(n+1)(n+2) is a perfect square (necessarily 36 k^2).
std::optional<PellData> pell_admissible(const mpz_class& n);

// All n in [lo, hi] with 6(n+1)(n+2) = 36k^2 and k even: the dimensions that
// reach the N2-integrality equation. Direct perfect-square scan.
std::vector<mpz_class> enumerate_admissible(const mpz_class& lo, const mpz_class& hi);

// Same set via the Pell recurrence for u^2 - 6v^2 = 1, u = 2n+3, v = 2k.
std::vector<mpz_class> enumerate_admissible_pell(const mpz_class& lo, const mpz_class& hi);

// |X| = n(n+1)(n^2+5n+18)/12 for a tight 9-design on two spheres.
mpz_class tight9_cardinality(const mpz_class& n);

// gamma_1^2, gamma_3^2: the squared zeros of the degree-4 Gegenbauer
// polynomial, (3n+6 +- sqrt(6(n+1)(n+2))) / ((n+4)(n+2)).
std::pair<QuadraticSurd, QuadraticSurd> gamma_squared(const mpz_class& n);

// Q_{4,n-1} evaluated at x^2 = 1/n; nonzero, which closes the |A(X1,X2)| = 2
// branch (that branch forces a Gegenbauer zero at 1/n).
mpq_class two_value_exclusion(const mpz_class& n);

// Closed-form cross intersection numbers p^{alpha_0}_{gamma_1,gamma_1} and
// p^{alpha_0}_{gamma_3,gamma_3}; integrality of the first forces the Pell
// condition.
struct CrossIntersection {
  QuadraticSurd p_gamma1;
  QuadraticSurd p_gamma3;
};
CrossIntersection cross_intersection_counts(const mpz_class& n, const mpz_class& N2);

// D(n, x) = 24x^2 - 8n(n+1)(n+5)x + n^2(n+1)(n+2)(n+3)^2; positive for n >= 2.
mpz_class annihilator_discriminant(const mpz_class& n, const mpz_class& N);
mpq_class annihilator_discriminant_q(const mpz_class& n, const mpq_class& x);

enum class AnnihilatorKind { kA, kB };  // alpha roots (N = N1) or beta roots (N = N2)

struct AnnihilatorResult {
  UnivariatePoly quartic;       // (n+4)(n+2)(N-n^2-n) x^4 + ... ; even
  QuadraticSurd root_plus_sq;   // alpha_2^2 (resp. beta_2^2)
  QuadraticSurd root_minus_sq;  // alpha_4^2 (resp. beta_4^2)
  mpz_class discriminant;       // D(n, N)
};

// Annihilator polynomial of the within-shell inner products and its squared
// roots via the quadratic formula in x^2.
AnnihilatorResult annihilator(const mpz_class& n, const mpz_class& N, AnnihilatorKind kind);

// F(n, x) = (2x - n^2 - 3n) sqrt((n+1)(n+2) D(n,x)) / (2 D(n,x)).
// (1 - alpha_2^2)/(alpha_2^2 - alpha_4^2) = -1/2 + F(n, N1), and the same for
// beta with N2.
QuadraticSurd F_value(const mpz_class& n, const mpq_class& x);

// Sign of F(n, x) - q, by exact sign-preserving squaring.
int F_compare(const mpz_class& n, const mpq_class& x, const mpq_class& q);

// Integer solutions N of  -1/2 + F(n, N) = m, rationalized to
//   (2m+1)^2 D(n,N) = (2N - n^2 - 3n)^2 (n+1)(n+2),   2N > n^2 + 3n.
struct IntegralityScan {
  mpz_class m;
  bool degenerate_linear = false;     // quadratic coefficient vanished
  std::array<mpz_class, 3> quad{};    // A N^2 + B N + C = 0
  bool disc_square = false;
  std::vector<mpz_class> solutions;   // integer roots passing the range sign condition
};
IntegralityScan integrality_solutions(const mpz_class& n, const mpz_class& m);

// True iff -1/2 + F(n, N) is a non-negative integer (the exact divisibility /
// perfect-square test used for the partner cardinality).
bool F_half_integer_shifted(const mpz_class& n, const mpz_class& N, mpz_class* m_out = nullptr);

// 200-bit evaluations of the closed forms for the candidate pair (N2, N1),
// eps in {+1, -1}. Cross-check values only, never certificate inputs.
struct CandidatePair {
  // Members carry their own precision: assigning into a default-constructed
  // mpf_class would silently round to the 64-bit default.
  mpf_class N2{0, kCrossCheckPrecision};
  mpf_class N1{0, kCrossCheckPrecision};
};
CandidatePair candidate_N2_N1(const mpz_class& n, int eps);

// 200-bit K_+ and G_+ (the x with -1/2 + F(n,x) = k/2 + 2 resp. k/2 + 1).
struct Thresholds {
  mpf_class K_plus{0, kCrossCheckPrecision};
  mpf_class G_plus{0, kCrossCheckPrecision};
};
Thresholds thresholds_K_G(const mpz_class& n);

// Exact sign of x - K_+ (resp. x - G_+) by iterated squaring of the defining
// radicals; integer and rational arithmetic only.
int compare_with_K_plus(const mpz_class& n, const mpq_class& x);
int compare_with_G_plus(const mpz_class& n, const mpq_class& x);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct CaseIReport {
  mpz_class n;
  mpz_class design_size;  // |X|
  bool radicand_square = false;
  mpz_class k;            // valid when radicand_square
  bool k_even = false;
  mpz_class N2_lo, N2_hi;
  long m_lo = 0, m_hi = -1;
  std::vector<IntegralityScan> scans;

  struct PairCheck {
    mpz_class N2, N1;
    bool N1_above_tight = false;  // N1 > n(n+1)(n+2)/3
    bool N1_integral_F = false;   // -1/2 + F(n, N1) integral
    bool survives = false;
  };
  std::vector<PairCheck> pairs;

  bool excluded = false;
  std::string step;  // failing condition: "radicand-not-square", "k-odd",
                     // "no-integral-N2", "no-surviving-pair", or "" if not excluded
};

CaseIReport case1_certify(const mpz_class& n);

struct CaseIIReport {
  mpz_class n;
  mpz_class N1, N2;
  bool sqrt_n4_3_integer = false;  // sqrt((n+4)/3)
  mpz_class sqrt_n4_3;
  bool disc_square = false;        // 6n^2 - 6n + 24 a perfect square
  mpz_class divis_num;             // 48(n-1)
  mpz_class divis_den;             // n^2 - n + 4
  mpz_class divis_rem;
  bool quotient_integral = false;
  bool quotient_strictly_inside_unit = false;  // 0 < 48(n-1)/(n^2-n+4) < 1, asserted for n >= 48
  bool excluded = false;
  std::string step;
};

CaseIIReport case2_certify(const mpz_class& n);

struct RangeCertificate {
  mpz_class n_lo, n_hi;
  bool excluded = false;  // global verdict
  std::vector<mpz_class> admissible;  // Pell-admissible n (square and k even)
  // Full reports are kept for every n where 6(n+1)(n+2) is a perfect square
  // and for any non-excluded n; the rest contribute to the step counters.
  std::vector<CaseIReport> detailed_case1;
  std::vector<CaseIIReport> detailed_case2;
  std::map<std::string, unsigned long> case1_steps;
  std::map<std::string, unsigned long> case2_steps;
  std::vector<mpz_class> counterexample_candidates;
  std::string engine_version;
};

// Runs both case certificates for every n in [lo, hi]. Deterministic result
// independent of the worker count.
RangeCertificate certify_range(const mpz_class& lo, const mpz_class& hi, unsigned workers = 1);

}  // namespace tdl::nonexistence
