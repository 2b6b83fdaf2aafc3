#pragma once

// Special functions used by every other module: log-gamma, Pochhammer symbols,
// Bessel J of real order, half-integer-order modified Bessel K, and generalized
// hypergeometric pFq series.
//
// Series are summed in binary128 (`__float128`) and rounded once at the end,
// so the only accuracy loss is the final double rounding plus ~1e-33 of the
// largest term. All functions are pure and reentrant.

#include <vector>

namespace sgcs::specfun {

// Largest Bessel argument the direct power series is trusted for.
inline constexpr double kZMax = 24.0;
inline constexpr int kMaxSeriesTerms = 500;

struct SeriesEval {
    double value = 0.0;
    int terms_used = 0;
    double est_abs_error = 0.0;
};

struct HypParams {
    std::vector<double> numerator;    // a_1 ... a_p
    std::vector<double> denominator;  // b_1 ... b_q
    double z = 0.0;
};

// ln|x| together with the sign of x, so products of Gamma values can be
// formed without overflow.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;  // +1, -1, or 0 for an exact zero

    double value() const;
    SignedLog operator*(const SignedLog& o) const { return {log_abs + o.log_abs, sign * o.sign}; }
    SignedLog operator/(const SignedLog& o) const { return {log_abs - o.log_abs, sign * o.sign}; }
};

bool is_nonpositive_integer(double x);

// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double gamma_ln(double x);

// ln|Gamma(x)| with sign, for any real x off the poles. Throws PoleError on a pole.
SignedLog gamma_ln_signed(double x);

// 1/Gamma(x) as a signed log; exact zero (sign 0) on the poles.
SignedLog rgamma_ln_signed(double x);

// Rising factorial (a)_n, exact product form; negative n gives 1/((a-1)...(a-|n|)).
double pochhammer(double a, int n);

// (a)_nu = Gamma(a+nu)/Gamma(a). Integer-valued nu uses the product form;
// otherwise a log-gamma ratio with sign tracking.
double pochhammer(double a, double nu);
SignedLog pochhammer_ln(double a, double nu);

// ln C(n, k) for real n >= k >= 0 (Gamma-function form).
double binomial_ln(double n, double k);

// Bessel J_nu(z), nu >= 0, 0 <= z <= kZMax, from the defining power series.
SeriesEval bessel_j(double nu, double z);

// Gamma(nu+1) * J_nu(2r) / r^nu = 0F1(; nu+1; -r^2). Regular at r = 0, so the
// state constructors use it to avoid the 0/0 of J_nu(2r)/r^nu. Not bound by
// kZMax: for large nu the series has no cancellation, and an AccuracyError is
// raised whenever the error estimate exceeds 1e-12 relative.
SeriesEval bessel_j_kernel(double nu, double r);

// ln 1F1(-m; -2m | x) for integer m >= 0, x >= 0 (every term is positive).
double terminating_1f1_ln(int m, double x);

// K_{L+1/2}(z) for integer L >= 0 and z > 0 from its terminating 1F1 form.
double bessel_k_half(int order_floor, double z);
double bessel_k_half_ln(int order_floor, double z);

// Generalized hypergeometric series pFq(a; b | z). 2F1 at z = 1 is routed to
// the Gauss closed form unless the series terminates.
SeriesEval hyp_pfq(const HypParams& params);

// Gauss summation Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); requires c-a-b > 0.
double hyp2f1_gauss(double a, double b, double c);

}  // namespace sgcs::specfun
