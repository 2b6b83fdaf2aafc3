#pragma once

// One-dimensional radial integrals behind every identity-resolution and
// quantization check, each with an independent closed form:
//
//   jj    int_0^inf t^-lambda J_nu(a t) J_mu(a t) dt
//   kk    int_0^inf t^-lambda K_mu(a t) K_nu(a t) dt
//   disk  int_0^1 u^{p/2} (1-u)^q du          (= B(p/2 + 1, q + 1))
//
// The numerical path evaluates the Bessel functions with Boost.Math, not with
// specfun, so the two paths share no code.

namespace sgcs {

enum class RadialKind { jj_halfline, kk_halfline, disk };

struct RadialIntegralSpec {
    RadialKind kind = RadialKind::jj_halfline;
    double nu = 0.0;
    double mu = 0.0;
    double lambda = 0.0;
    double a = 1.0;
    double p = 0.0;
    double q = 0.0;

    static RadialIntegralSpec jj(double nu, double mu, double lambda, double a);
    static RadialIntegralSpec kk(double mu, double nu, double lambda, double a);
    static RadialIntegralSpec disk(double p, double q);
};

// Convergence cones. jj: nu + mu + 1 > lambda and either lambda > 0, or
// lambda > -1 with mu - nu an odd integer (the non-oscillatory tail then
// vanishes). kk: lambda < 1 - |mu| - |nu|, a > 0. disk: p/2 > -1, q > -1.
bool in_cone(const RadialIntegralSpec& spec);
void require_cone(const RadialIntegralSpec& spec);  // throws ConeError

double closed_jj(double nu, double mu, double lambda, double a);
double closed_kk(double mu, double nu, double lambda, double a);
double closed_disk(double p, double q);
double closed_form(const RadialIntegralSpec& spec);

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    int panels = 0;
};

// Adaptive Gauss-Kronrod panels. Endpoint singularities are removed by a power
// substitution; the oscillatory jj tail beyond R is integrated term by term
// from the Hankel asymptotic expansions. Throws ConvergenceError when the
// accumulated error estimate exceeds tol * |value| (tol when the value is 0).
QuadratureResult radial_quadrature_detailed(const RadialIntegralSpec& spec, double tol);
double radial_quadrature(const RadialIntegralSpec& spec, double tol);

}  // namespace sgcs
