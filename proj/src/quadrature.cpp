#include "sgcs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "sgcs/error.hpp"
#include "sgcs/specfun.hpp"

namespace sgcs {

namespace {

using specfun::gamma_ln_signed;
using specfun::rgamma_ln_signed;
using specfun::SignedLog;
using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr double kPanelTol = 1e-13;
constexpr unsigned kMaxDepth = 10;
constexpr int kHankelTerms = 30;

bool is_odd_integer(double x) {
    if (std::floor(x) != x) return false;
    return std::fmod(std::abs(x), 2.0) == 1.0;
}

double gk(const std::function<double(double)>& f, double lo, double hi, double& err_acc) {
    double err = 0.0;
    const double v = GK::integrate(f, lo, hi, kMaxDepth, kPanelTol, &err);
    if (!std::isfinite(v)) throw ConvergenceError("radial_quadrature: non-finite panel value");
    err_acc += err;
    return v;
}

// Exponent m of the substitution t = c s^m that turns an integrand ~ t^e
// (e > -1) into one vanishing linearly at s = 0.
double substitution_power(double e) { return e + 1.0 < 2.0 ? 2.0 / (e + 1.0) : 1.0; }

double head_integral(const std::function<double(double)>& f, double c, double e, double& err_acc) {
    const double m = substitution_power(e);
    auto g = [&](double s) {
        if (s <= 0.0) return 0.0;
        const double t = c * std::pow(s, m);
        if (t <= 0.0) return 0.0;
        return f(t) * c * m * std::pow(s, m - 1.0);
    };
    return gk(g, 0.0, 1.0, err_acc);
}

// ln J_nu(x) for tiny x > 0 from the first five series terms (x < 1e-2).
double log_j_small(double nu, double x) {
    const double w = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 4; ++k) {
        term *= w / (k * (nu + k));
        sum += term;
    }
    return nu * std::log(0.5 * x) - boost::math::lgamma(nu + 1.0) + std::log(sum);
}

double jj_integrand(double nu, double mu, double lambda, double a, double t) {
    const double x = a * t;
    if (x < 1e-2) return std::exp(-lambda * std::log(t) + log_j_small(nu, x) + log_j_small(mu, x));
    return std::pow(t, -lambda) * boost::math::cyl_bessel_j(nu, x) * boost::math::cyl_bessel_j(mu, x);
}

double log_k_small(double nu, double x) {
    const double v = std::abs(nu);
    if (v == 0.0) return std::log(-std::log(0.5 * x) - std::numbers::egamma);
    return std::log(0.5) + boost::math::lgamma(v) - v * std::log(0.5 * x);
}

double kk_integrand(double mu, double nu, double lambda, double a, double t) {
    const double x = a * t;
    if (x < 1e-8) return std::exp(-lambda * std::log(t) + log_k_small(mu, x) + log_k_small(nu, x));
    return std::pow(t, -lambda) * boost::math::cyl_bessel_k(std::abs(mu), x) * boost::math::cyl_bessel_k(std::abs(nu), x);
}

// Hankel expansion J_nu(x) = sqrt(2/(pi x)) [P cos chi - Q sin chi], with P and Q
// returned as coefficient arrays in powers of 1/x.
void hankel_pq(double nu, std::vector<double>& p, std::vector<double>& q) {
    p.assign(kHankelTerms + 1, 0.0);
    q.assign(kHankelTerms + 1, 0.0);
    double ak = 1.0;
    const double four_nu2 = 4.0 * nu * nu;
    for (int k = 0; k <= kHankelTerms; ++k) {
        if (k > 0) ak *= (four_nu2 - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k);
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            p[static_cast<std::size_t>(k)] = sign * ak;
        } else {
            q[static_cast<std::size_t>(k)] = sign * ak;
        }
    }
}

std::vector<double> poly_mul(const std::vector<double>& u, const std::vector<double>& v) {
    std::vector<double> out(u.size(), 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += u[i] * v[j];
    }
    return out;
}

// int_R^inf t^-s e^{i w t} dt by repeated integration by parts.
std::complex<double> oscillatory_tail(double s, double w, double r, double& err_acc) {
    const std::complex<double> iwr(0.0, w * r);
    std::complex<double> term = 1.0, sum = 1.0;
    double prev = 1.0;
    for (int k = 0; k < 200; ++k) {
        term *= (s + k) / iwr;
        const double mag = std::abs(term);
        if (mag > prev) break;
        sum += term;
        prev = mag;
        if (mag < 1e-18) break;
    }
    err_acc += prev * std::pow(r, -s) / w;
    const std::complex<double> pref = -std::exp(std::complex<double>(0.0, w * r)) * std::pow(r, -s) /
                                      std::complex<double>(0.0, w);
    return pref * sum;
}

// Tail of the jj integral beyond R from the asymptotic expansions of both factors.
double jj_tail(double nu, double mu, double lambda, double a, double r, double& err_acc) {
    std::vector<double> pn, qn, pm, qm;
    hankel_pq(nu, pn, qn);
    hankel_pq(mu, pm, qm);
    const std::vector<double> pp = poly_mul(pn, pm);
    const std::vector<double> qq = poly_mul(qn, qm);
    const std::vector<double> pq = poly_mul(pn, qm);
    const std::vector<double> qp = poly_mul(qn, pm);

    const double delta = (mu - nu) * std::numbers::pi / 2.0;
    double cos_d = std::cos(delta), sin_d = std::sin(delta);
    const double diff = mu - nu;
    if (std::floor(diff) == diff) {
        const long long k = static_cast<long long>(std::abs(diff)) % 4;
        const double sgn = diff >= 0 ? 1.0 : -1.0;
        cos_d = (k == 0) ? 1.0 : (k == 2 ? -1.0 : 0.0);
        sin_d = sgn * ((k == 1) ? 1.0 : (k == 3 ? -1.0 : 0.0));
    }
    const double theta = (nu + mu) * std::numbers::pi / 2.0 + std::numbers::pi / 2.0;
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -theta));
    const double w = 2.0 * a;

    double total = 0.0;
    double last = 0.0;
    for (int j = 0; j <= kHankelTerms; ++j) {
        const std::size_t jj = static_cast<std::size_t>(j);
        // t^-lambda * 2/(pi a t) * (a t)^-j = (2/(pi a)) a^-j t^-(lambda + 1 + j)
        const double scale = 2.0 / (std::numbers::pi * a) * std::pow(a, -j);
        const double s = lambda + 1.0 + j;
        const double non_osc = 0.5 * ((pp[jj] + qq[jj]) * cos_d + (pq[jj] - qp[jj]) * sin_d);
        const double osc_c = 0.5 * (pp[jj] - qq[jj]);
        const double osc_s = -0.5 * (pq[jj] + qp[jj]);
        double piece = 0.0;
        if (non_osc != 0.0) {
            if (!(s > 1.0)) throw ConeError("radial_quadrature: non-oscillatory tail diverges");
            piece += non_osc * std::pow(r, 1.0 - s) / (s - 1.0);
        }
        if (osc_c != 0.0 || osc_s != 0.0) {
            const std::complex<double> i_s = phase * oscillatory_tail(s, w, r, err_acc);
            piece += osc_c * i_s.real() + osc_s * i_s.imag();
        }
        total += scale * piece;
        last = std::abs(scale * piece);
    }
    err_acc += last;
    return total;
}

QuadratureResult quad_jj(const RadialIntegralSpec& sp) {
    const double a = sp.a;
    const double e = sp.nu + sp.mu - sp.lambda;
    auto f = [&](double t) { return jj_integrand(sp.nu, sp.mu, sp.lambda, a, t); };
    QuadratureResult out;
    double err = 0.0;
    const double width = std::numbers::pi / (2.0 * a);
    double sum = head_integral(f, width, e, err);
    double abs_sum = std::abs(sum);
    const double vmax = std::max(std::abs(sp.nu), std::abs(sp.mu));
    const double x_min = std::max(40.0, vmax * vmax + 10.0);
    const int panels = static_cast<int>(std::ceil((x_min / a - width) / width));
    double lo = width;
    for (int k = 0; k < panels; ++k) {
        const double piece = gk(f, lo, lo + width, err);
        sum += piece;
        abs_sum += std::abs(piece);
        lo += width;
    }
    const double tail = jj_tail(sp.nu, sp.mu, sp.lambda, a, lo, err);
    out.value = sum + tail;
    out.est_error = err + 1e-16 * (abs_sum + std::abs(tail)) * std::sqrt(panels + 2.0);
    out.panels = panels + 1;
    return out;
}

QuadratureResult quad_kk(const RadialIntegralSpec& sp) {
    const double a = sp.a;
    const double e = -sp.lambda - std::abs(sp.mu) - std::abs(sp.nu);
    auto f = [&](double t) { return kk_integrand(sp.mu, sp.nu, sp.lambda, a, t); };
    QuadratureResult out;
    double err = 0.0;
    const double width = 1.0 / a;
    double sum = head_integral(f, width, e, err);
    double lo = width;
    int panels = 1;
    for (; panels < 4000; ++panels) {
        const double piece = gk(f, lo, lo + width, err);
        sum += piece;
        lo += width;
        // Remaining mass is bounded by a geometric series with ratio <= e^{-1}
        // once the integrand is in its exponentially decaying regime.
        if (a * lo > 4.0 + std::abs(sp.lambda) + std::abs(sp.mu) + std::abs(sp.nu) &&
            std::abs(piece) < 1e-18 * std::abs(sum)) {
            err += 2.0 * std::abs(piece);
            break;
        }
    }
    if (panels >= 4000) throw ConvergenceError("radial_quadrature: kk integrand did not decay");
    out.value = sum;
    out.est_error = err + 1e-16 * std::abs(sum);
    out.panels = panels;
    return out;
}

QuadratureResult quad_disk(const RadialIntegralSpec& sp) {
    const double ep = 0.5 * sp.p;
    const double q = sp.q;
    auto f = [ep, q](double u, double one_minus_u) { return std::pow(u, ep) * std::pow(one_minus_u, q); };
    double err = 0.0;
    const double m0 = substitution_power(ep);
    const double m1 = substitution_power(q);
    auto left = [&](double s) {
        if (s <= 0.0) return 0.0;
        const double u = 0.5 * std::pow(s, m0);
        if (u <= 0.0) return 0.0;
        return f(u, 1.0 - u) * 0.5 * m0 * std::pow(s, m0 - 1.0);
    };
    auto right = [&](double s) {
        if (s <= 0.0) return 0.0;
        const double v = 0.5 * std::pow(s, m1);
        if (v <= 0.0) return 0.0;
        return f(1.0 - v, v) * 0.5 * m1 * std::pow(s, m1 - 1.0);
    };
    QuadratureResult out;
    out.value = gk(left, 0.0, 1.0, err) + gk(right, 0.0, 1.0, err);
    out.est_error = err + 1e-16 * std::abs(out.value);
    out.panels = 2;
    return out;
}

std::string describe(const RadialIntegralSpec& s) {
    switch (s.kind) {
        case RadialKind::jj_halfline:
            return "jj(nu=" + std::to_string(s.nu) + ", mu=" + std::to_string(s.mu) +
                   ", lambda=" + std::to_string(s.lambda) + ")";
        case RadialKind::kk_halfline:
            return "kk(mu=" + std::to_string(s.mu) + ", nu=" + std::to_string(s.nu) +
                   ", lambda=" + std::to_string(s.lambda) + ")";
        case RadialKind::disk:
            return "disk(p=" + std::to_string(s.p) + ", q=" + std::to_string(s.q) + ")";
    }
    return "?";
}

}  // namespace

RadialIntegralSpec RadialIntegralSpec::jj(double nu, double mu, double lambda, double a) {
    RadialIntegralSpec s;
    s.kind = RadialKind::jj_halfline;
    s.nu = nu;
    s.mu = mu;
    s.lambda = lambda;
    s.a = a;
    return s;
}

RadialIntegralSpec RadialIntegralSpec::kk(double mu, double nu, double lambda, double a) {
    RadialIntegralSpec s;
    s.kind = RadialKind::kk_halfline;
    s.nu = nu;
    s.mu = mu;
    s.lambda = lambda;
    s.a = a;
    return s;
}

RadialIntegralSpec RadialIntegralSpec::disk(double p, double q) {
    RadialIntegralSpec s;
    s.kind = RadialKind::disk;
    s.p = p;
    s.q = q;
    return s;
}

bool in_cone(const RadialIntegralSpec& s) {
    switch (s.kind) {
        case RadialKind::jj_halfline: {
            if (!(s.a > 0.0) || s.nu < 0.0 || s.mu < 0.0) return false;
            if (!(s.nu + s.mu + 1.0 > s.lambda)) return false;
            if (s.lambda > 0.0) return true;
            return s.lambda > -1.0 && is_odd_integer(s.mu - s.nu);
        }
        case RadialKind::kk_halfline:
            return s.a > 0.0 && s.lambda < 1.0 - std::abs(s.mu) - std::abs(s.nu);
        case RadialKind::disk:
            return 0.5 * s.p > -1.0 && s.q > -1.0;
    }
    return false;
}

void require_cone(const RadialIntegralSpec& s) {
    if (!in_cone(s)) throw ConeError("integral " + describe(s) + " is outside its convergence cone");
}

double closed_jj(double nu, double mu, double lambda, double a) {
    require_cone(RadialIntegralSpec::jj(nu, mu, lambda, a));
    const double b1 = (-nu + mu + lambda + 1.0) / 2.0;
    const double b2 = (nu - mu + lambda + 1.0) / 2.0;
    const double top = (nu + mu - lambda + 1.0) / 2.0;
    const double b3 = (nu + mu + lambda + 1.0) / 2.0;
    if (lambda == 0.0) {
        // Gamma(lambda) / Gamma(lambda/2 - m) -> (-1)^m m!/2 for the odd-difference case
        const double m = std::max(-b1, -b2) + 0.5 * lambda;
        const double lim = (static_cast<long long>(m) % 2 == 0 ? 0.5 : -0.5) * std::exp(boost::math::lgamma(m + 1.0));
        const double other = (-b1 > -b2) ? b2 : b1;
        SignedLog rest = gamma_ln_signed(top) * rgamma_ln_signed(other) * rgamma_ln_signed(b3);
        return lim * rest.value() / a;
    }
    SignedLog v = gamma_ln_signed(lambda) * gamma_ln_signed(top) * rgamma_ln_signed(b1) * rgamma_ln_signed(b2) *
                  rgamma_ln_signed(b3);
    return std::pow(a, lambda - 1.0) * std::pow(2.0, -lambda) * v.value();
}

double closed_kk(double mu, double nu, double lambda, double a) {
    require_cone(RadialIntegralSpec::kk(mu, nu, lambda, a));
    const double h = 1.0 - lambda;
    SignedLog v = rgamma_ln_signed(h) * gamma_ln_signed((h + mu + nu) / 2.0) * gamma_ln_signed((h - mu + nu) / 2.0) *
                  gamma_ln_signed((h + mu - nu) / 2.0) * gamma_ln_signed((h - mu - nu) / 2.0);
    return std::pow(2.0, -2.0 - lambda) * std::pow(a, lambda - 1.0) * v.value();
}

double closed_disk(double p, double q) {
    require_cone(RadialIntegralSpec::disk(p, q));
    const double x = 0.5 * p + 1.0, y = q + 1.0;
    return std::exp(boost::math::lgamma(x) + boost::math::lgamma(y) - boost::math::lgamma(x + y));
}

double closed_form(const RadialIntegralSpec& s) {
    switch (s.kind) {
        case RadialKind::jj_halfline: return closed_jj(s.nu, s.mu, s.lambda, s.a);
        case RadialKind::kk_halfline: return closed_kk(s.mu, s.nu, s.lambda, s.a);
        case RadialKind::disk: return closed_disk(s.p, s.q);
    }
    throw DomainError("unknown integral kind");
}

QuadratureResult radial_quadrature_detailed(const RadialIntegralSpec& spec, double tol) {
    require_cone(spec);
    if (!(tol > 0.0)) throw DomainError("radial_quadrature: tolerance must be positive");
    QuadratureResult out;
    switch (spec.kind) {
        case RadialKind::jj_halfline: out = quad_jj(spec); break;
        case RadialKind::kk_halfline: out = quad_kk(spec); break;
        case RadialKind::disk: out = quad_disk(spec); break;
    }
    const double scale = std::abs(out.value) > 0.0 ? std::abs(out.value) : 1.0;
    if (!(out.est_error <= tol * scale)) {
        throw ConvergenceError("radial_quadrature: " + describe(spec) + " error estimate " +
                               std::to_string(out.est_error) + " exceeds tolerance");
    }
    return out;
}

double radial_quadrature(const RadialIntegralSpec& spec, double tol) {
    return radial_quadrature_detailed(spec, tol).value;
}

}  // namespace sgcs
