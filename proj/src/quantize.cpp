#include "sgcs/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "sgcs/error.hpp"
#include "sgcs/quadrature.hpp"
#include "sgcs/specfun.hpp"

namespace sgcs {

namespace {

using specfun::binomial_ln;
using specfun::gamma_ln;

using RadialFn = std::function<double(int)>;

bool is_odd_twice(double kappa) {
    const double two_k = 2.0 * kappa;
    return two_k >= 1.0 && std::floor(two_k) == two_k && std::fmod(two_k, 2.0) == 1.0;
}

void require_sgii_kappa(double kappa) {
    if (!is_odd_twice(kappa)) throw DomainError("sgii quantization: 2*kappa must be an odd positive integer");
}

void require_rows(int n_max) {
    if (n_max < 0) throw DimensionError("quantization: n_max must be >= 0");
}

// ln D_k with D_k = G(k)^2 / G(2k-1); ln of (n+1)_{2k-1}.
double sgi_log_weight(double kappa) { return 2.0 * gamma_ln(kappa) - gamma_ln(2.0 * kappa - 1.0); }
double sgi_log_c(double kappa, int n) { return gamma_ln(n + 2.0 * kappa) - gamma_ln(n + 1.0); }

// ln of 2 D'_k, D'_k = 4(2k+1)/G(k+1)^2.
double sgii_log_weight(double kappa) { return std::log(8.0 * (2.0 * kappa + 1.0)) - 2.0 * gamma_ln(kappa + 1.0); }

// ln (2k)_n / n!
double su11_log_c(double kappa, int n) {
    return gamma_ln(2.0 * kappa + n) - gamma_ln(2.0 * kappa) - gamma_ln(n + 1.0);
}

double radial(const RadialIntegralSpec& s, double tol, bool numeric) {
    return numeric ? radial_quadrature(s, tol) : closed_form(s);
}

// Places `count` values on the diagonal (shift 0), superdiagonal (+1) or subdiagonal (-1).
FockOperator place(int dim, int shift, const std::vector<double>& vals) {
    CMatrix m = CMatrix::Zero(dim, dim);
    for (int n = 0; n < static_cast<int>(vals.size()); ++n) {
        if (shift == 0) m(n, n) = vals[static_cast<std::size_t>(n)];
        if (shift == 1) m(n, n + 1) = vals[static_cast<std::size_t>(n)];
        if (shift == -1) m(n + 1, n) = vals[static_cast<std::size_t>(n)];
    }
    const Band band = shift == 0 ? Band{0, 0} : (shift == 1 ? Band{0, 1} : Band{1, 0});
    return FockOperator(std::move(m), band);
}

std::vector<double> evaluate(int count, const RadialFn& fn, Execution exec) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for_each_index(out.size(), exec, [&](std::size_t i) { out[i] = fn(static_cast<int>(i)); });
    return out;
}

QuantizedOperator assemble(int dim, int shift, int count, const RadialFn& closed, const RadialFn& quad,
                           const QuantizeOptions& opts) {
    const std::vector<double> c = evaluate(count, closed, Execution::serial);
    if (!opts.run_quadrature) return {place(dim, shift, c), QuantMethod::closed_form, std::nullopt};
    const std::vector<double> q = evaluate(count, quad, opts.exec);
    double gap = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double scale = c[i] != 0.0 ? std::abs(c[i]) : 1.0;
        gap = std::max(gap, std::abs(q[i] - c[i]) / scale);
    }
    return {place(dim, shift, q), QuantMethod::quadrature, gap};
}

// Diagonal of the resolution of the identity: numeric (quadrature) or Gamma-product route.
RadialFn identity_element(const StateFamily& s, double tol, bool numeric) {
    const double k = s.kappa;
    switch (s.family) {
        case Family::msg:
        case Family::sgi: {
            const double kk = s.family == Family::msg ? 1.0 : k;
            return [kk, tol, numeric](int n) {
                const double pref = 2.0 * std::exp(sgi_log_weight(kk) + sgi_log_c(kk, n));
                return pref * radial(RadialIntegralSpec::jj(n + kk, n + kk, 2.0 * kk - 1.0, 2.0), tol, numeric);
            };
        }
        case Family::sgii:
            return [k, tol, numeric](int n) {
                const double pref = std::exp(sgii_log_weight(k) + binomial_ln(2.0 * k, n));
                return pref * radial(RadialIntegralSpec::kk(n - k, n - k, -(1.0 + 2.0 * k), 2.0), tol, numeric);
            };
        case Family::su11:
            return [k, tol, numeric](int n) {
                const double pref = (2.0 * k - 1.0) * std::exp(su11_log_c(k, n));
                return pref * radial(RadialIntegralSpec::disk(2.0 * n, 2.0 * k - 2.0), tol, numeric);
            };
        default:
            break;
    }
    throw DomainError("identity_resolution_check: family " + std::string(family_name(s.family)) +
                      " has no weight function");
}

double sgi_linear_element(double kappa, int n, double tol, bool numeric) {
    const double pref = 2.0 * std::exp(sgi_log_weight(kappa) + 0.5 * (sgi_log_c(kappa, n) + sgi_log_c(kappa, n + 1)));
    return pref * radial(RadialIntegralSpec::jj(n + kappa, n + kappa + 1.0, 2.0 * kappa - 2.0, 2.0), tol, numeric);
}

double sgi_modulus_element(double kappa, double gamma, int n, double tol) {
    const double pref = 2.0 * std::exp(sgi_log_weight(kappa) + sgi_log_c(kappa, n));
    return pref * radial_quadrature(RadialIntegralSpec::jj(n + kappa, n + kappa, 2.0 * kappa - 1.0 - gamma, 2.0), tol);
}

double disk_b_element(double kappa, int n, double tol) {
    const double pref = (2.0 * kappa - 1.0) * std::exp(0.5 * (su11_log_c(kappa, n) + su11_log_c(kappa, n + 1)));
    return pref * radial_quadrature(RadialIntegralSpec::disk(2.0 * n + 2.0, 2.0 * kappa - 3.0), tol);
}

double disk_big_b_element(double kappa, double gamma, int n, double tol) {
    const double pref = (2.0 * kappa - 1.0) * std::exp(su11_log_c(kappa, n));
    return pref * radial_quadrature(RadialIntegralSpec::disk(2.0 * n + 2.0 * gamma, 2.0 * kappa - 3.0), tol);
}

}  // namespace

IdentityResolution identity_resolution_check(const StateFamily& family, int n_max, Execution exec, double tol) {
    require_rows(n_max);
    StateFamily s = family;
    s.coherence = Coherence{};
    s.dim = 0;
    if (s.family == Family::sgii) {
        require_sgii_kappa(s.kappa);
        n_max = std::min(n_max, static_cast<int>(2.0 * s.kappa));
    } else if (s.family == Family::sgi && !(s.kappa > 0.5)) {
        throw ConeError("identity_resolution_check: sgi requires kappa > 1/2");
    }
    validate(s);
    const RadialFn quad = identity_element(s, tol, true);
    const RadialFn closed = identity_element(s, tol, false);
    const int count = n_max + 1;
    std::vector<double> diagonal = evaluate(count, quad, exec);
    FockOperator op = place(count, 0, diagonal);
    IdentityResolution out{std::move(diagonal), evaluate(count, closed, Execution::serial), std::move(op), 0.0};
    for (double d : out.diagonal) out.max_gap = std::max(out.max_gap, std::abs(d - 1.0));
    return out;
}

LadderPair quantize_linear_sgi(double kappa, const QuantizeOptions& opts) {
    require_rows(opts.n_max);
    if (!(kappa >= 1.0)) throw DomainError("quantize_linear_sgi: requires kappa >= 1");
    if (opts.run_quadrature && !(kappa > 1.0)) {
        throw ConeError("quantize_linear_sgi: the radial integral needs kappa > 1");
    }
    const int count = opts.n_max + 1;
    const int dim = count + 1;
    RadialFn closed = [kappa](int n) { return 0.5 * su11_ladder_element(kappa, n); };
    RadialFn quad = [kappa, &opts](int n) { return sgi_linear_element(kappa, n, opts.tol, true); };
    // conj(alpha) selects the subdiagonal; the radial integral is the same real number.
    return {assemble(dim, 1, count, closed, quad, opts), assemble(dim, -1, count, closed, quad, opts)};
}

double modulus_sgi_prefactor(double kappa, double gamma) {
    auto half_pochhammer_ln = [](double x) { return gamma_ln(x + 0.5) - gamma_ln(x); };
    const double ratio = std::exp(half_pochhammer_ln(kappa - gamma / 2.0) - half_pochhammer_ln(kappa));
    return std::pow(2.0, -gamma) * (2.0 * kappa - 1.0) / (2.0 * kappa - gamma - 1.0) * ratio;
}

double modulus_sgi_closed(double kappa, double gamma, int n) {
    const double ratio = gamma_ln(n + 2.0 * kappa) - gamma_ln(n + 1.0) - gamma_ln(n + 2.0 * kappa - gamma / 2.0) +
                         gamma_ln(n + 1.0 + gamma / 2.0);
    return modulus_sgi_prefactor(kappa, gamma) * std::exp(ratio);
}

QuantizedOperator quantize_modulus_sgi(double kappa, double gamma, const QuantizeOptions& opts) {
    require_rows(opts.n_max);
    if (!(kappa > 0.5)) throw DomainError("quantize_modulus_sgi: requires kappa > 1/2");
    if (!(gamma > -2.0 && gamma < 2.0 * kappa - 1.0)) {
        throw ConeError("quantize_modulus_sgi: requires -2 < gamma < 2 kappa - 1");
    }
    const int count = opts.n_max + 1;
    RadialFn closed = [kappa, gamma](int n) { return modulus_sgi_closed(kappa, gamma, n); };
    RadialFn quad = [kappa, gamma, &opts](int n) { return sgi_modulus_element(kappa, gamma, n, opts.tol); };
    return assemble(count, 0, count, closed, quad, opts);
}

double disk_b_closed(double kappa, int n) { return su11_ladder_element(kappa, n) / (2.0 * (kappa - 1.0)); }

double disk_big_b_closed(double kappa, double gamma, int n) {
    const double lg = gamma_ln(n + 1.0 + gamma) - gamma_ln(n + 1.0) - gamma_ln(n + 2.0 * kappa + gamma - 1.0) +
                      gamma_ln(n + 2.0 * kappa);
    return std::exp(lg) / (2.0 * (kappa - 1.0));
}

DiskQuantization quantize_disk_su11(double kappa, double gamma, const QuantizeOptions& opts) {
    require_rows(opts.n_max);
    if (!(kappa > 1.0)) throw DomainError("quantize_disk_su11: the disk map is undefined for kappa <= 1");
    if (!(gamma > -1.0)) throw ConeError("quantize_disk_su11: requires gamma > -1");
    const int count = opts.n_max + 1;
    RadialFn b_closed = [kappa](int n) { return disk_b_closed(kappa, n); };
    RadialFn b_quad = [kappa, &opts](int n) { return disk_b_element(kappa, n, opts.tol); };
    RadialFn bb_closed = [kappa, gamma](int n) { return disk_big_b_closed(kappa, gamma, n); };
    RadialFn bb_quad = [kappa, gamma, &opts](int n) { return disk_big_b_element(kappa, gamma, n, opts.tol); };
    return {assemble(count + 1, 1, count, b_closed, b_quad, opts), assemble(count + 1, -1, count, b_closed, b_quad, opts),
            assemble(count, 0, count, bb_closed, bb_quad, opts)};
}

double sgii_raw_element(double kappa, int n, double tol) {
    require_sgii_kappa(kappa);
    if (n < 0 || n + 1 > 2.0 * kappa) throw DimensionError("sgii_raw_element: n outside [0, 2k-1]");
    const double pref = std::exp(sgii_log_weight(kappa) + 0.5 * (binomial_ln(2.0 * kappa, n) + binomial_ln(2.0 * kappa, n + 1)));
    return pref * radial_quadrature(RadialIntegralSpec::kk(n - kappa, n + 1.0 - kappa, -(2.0 * kappa + 2.0), 2.0), tol);
}

LadderPair quantize_sgii(double kappa, const QuantizeOptions& opts) {
    require_sgii_kappa(kappa);
    const int dim = static_cast<int>(2.0 * kappa) + 1;
    const int count = dim - 1;
    RadialFn closed = [kappa](int n) { return su2_ladder_element(kappa, n); };
    RadialFn quad = [kappa, &opts](int n) { return 2.0 * sgii_raw_element(kappa, n, opts.tol); };
    return {assemble(dim, 1, count, closed, quad, opts), assemble(dim, -1, count, closed, quad, opts)};
}

}  // namespace sgcs
