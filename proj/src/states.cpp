#include "sgcs/states.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "sgcs/error.hpp"
#include "sgcs/specfun.hpp"

namespace sgcs {

namespace {

using specfun::bessel_j_kernel;
using specfun::gamma_ln;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kMaxAutoDim = 4000;

// n * ln r with the convention 0 * ln 0 = 0.
double n_log_r(int n, double r) { return n == 0 ? 0.0 : n * std::log(r); }

double log_sum_exp(const std::vector<double>& logs) {
    double m = kNegInf;
    for (double l : logs) m = std::max(m, l);
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (double l : logs) s += std::exp(l - m);
    return m + std::log(s);
}

Complex from_log(double log_abs, int sign, int n, double phi) {
    if (sign == 0 || log_abs == kNegInf) return Complex(0.0);
    return std::polar(sign * std::exp(log_abs), n * phi);
}

void require_dim(int dim) {
    if (dim < 1) throw DimensionError("state dimension must be >= 1");
}

void require_tail(const CVector& c, const char* family) {
    const double tail = 1.0 - c.squaredNorm();
    if (tail > kTailTol) {
        throw TruncationError(std::string(family) + ": truncation at D=" + std::to_string(c.size()) +
                              " leaves mass " + std::to_string(tail) + " outside the basis");
    }
}

bool is_half_odd(double kappa) {
    const double two_k = 2.0 * kappa;
    return two_k >= 1.0 && std::floor(two_k) == two_k && static_cast<long long>(two_k) % 2 == 1;
}

bool is_positive_half_integer(double kappa) {
    const double two_k = 2.0 * kappa;
    return two_k >= 1.0 && std::floor(two_k) == two_k;
}

int sgii_order(double kappa) { return static_cast<int>(kappa - 0.5); }

double sgi_f(double kappa, double r) {
    return specfun::hyp_pfq({{0.5}, {kappa + 1.0, kappa + 1.0}, -4.0 * r * r}).value;
}

LogCoeff sgi_log_coeff_given_f(double kappa, double r, int n, double log_f) {
    const double k = bessel_j_kernel(n + kappa, r).value;
    if (k == 0.0 || (r == 0.0 && n > 0)) return {kNegInf, 0};
    const double log_abs = 0.5 * (gamma_ln(2.0 * kappa + n) - gamma_ln(2.0 * kappa) - gamma_ln(n + 1.0)) +
                           gamma_ln(kappa + 1.0) - 0.5 * log_f + n_log_r(n, r) + std::log(std::abs(k)) -
                           gamma_ln(n + kappa + 1.0);
    return {log_abs, k > 0 ? 1 : -1};
}

LogCoeff sg_log_coeff(double r, int n) {
    const double k = bessel_j_kernel(n + 1.0, r).value;
    if (k == 0.0 || (r == 0.0 && n > 0)) return {kNegInf, 0};
    return {n_log_r(n, r) + std::log(std::abs(k)) - gamma_ln(n + 1.0), k > 0 ? 1 : -1};
}

double su11_log_coeff(double kappa, double r, int n) {
    if (r == 0.0 && n > 0) return kNegInf;
    return kappa * std::log1p(-r * r) + n_log_r(n, r) +
           0.5 * (gamma_ln(2.0 * kappa + n) - gamma_ln(2.0 * kappa) - gamma_ln(n + 1.0));
}

double gs_log_coeff(double r, int n) {
    if (r == 0.0 && n > 0) return kNegInf;
    return -0.5 * r * r + n_log_r(n, r) - 0.5 * gamma_ln(n + 1.0);
}

// ln of the unnormalized unfolded weight sqrt(C(2k,n)) r^k K_{n-k}(2r), n = 0..2L+1.
std::vector<double> sgii_direct_logs(int L, double r) {
    const double kappa = L + 0.5;
    std::vector<double> logs(static_cast<std::size_t>(2 * L + 2));
    for (int n = 0; n <= 2 * L + 1; ++n) {
        const int order_floor = n <= L ? L - n : n - L - 1;
        logs[static_cast<std::size_t>(n)] = 0.5 * specfun::binomial_ln(2.0 * L + 1.0, n) + kappa * std::log(r) +
                                            specfun::bessel_k_half_ln(order_floor, 2.0 * r);
    }
    return logs;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::sg: return "sg";
        case Family::msg: return "msg";
        case Family::sgi: return "sgi";
        case Family::sgii: return "sgii";
        case Family::su11: return "su11";
        case Family::su2: return "su2";
        case Family::gs: return "gs";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : {Family::sg, Family::msg, Family::sgi, Family::sgii, Family::su11, Family::su2, Family::gs}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

Coherence Coherence::polar(double r, double phi) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("coherence modulus must be finite and >= 0");
    if (!std::isfinite(phi)) throw DomainError("coherence phase must be finite");
    double p = std::remainder(phi, 2.0 * std::numbers::pi);
    if (p <= -std::numbers::pi) p += 2.0 * std::numbers::pi;
    return {r, p};
}

Coherence Coherence::from_complex(Complex z) { return polar(std::abs(z), std::arg(z)); }

FockVector sg_coeffs(Coherence alpha, int dim) {
    require_dim(dim);
    CVector c(dim);
    for (int n = 0; n < dim; ++n) {
        LogCoeff lc = sg_log_coeff(alpha.r, n);
        c(n) = from_log(lc.log_abs, lc.sign, n, alpha.phi);
    }
    require_tail(c, "sg");
    return FockVector(std::move(c));
}

FockVector msg_coeffs(Coherence alpha, int dim) {
    require_dim(dim);
    const double log_n = std::log(msg_norm(alpha.r).closed_form);
    CVector c(dim);
    for (int n = 0; n < dim; ++n) {
        LogCoeff lc = sg_log_coeff(alpha.r, n);
        const double log_abs = lc.log_abs + 0.5 * std::log(n + 1.0) - std::log(n + 1.0) - 0.5 * log_n;
        c(n) = from_log(log_abs, lc.sign, n, alpha.phi);
    }
    require_tail(c, "msg");
    return FockVector(std::move(c));
}

LogCoeff sgi_log_coeff(double kappa, double r, int n) {
    if (!(kappa > 0.5)) throw DomainError("sgi: requires kappa > 1/2");
    if (!(r >= 0.0)) throw DomainError("sgi: requires r >= 0");
    if (n < 0) throw DimensionError("sgi: n must be >= 0");
    return sgi_log_coeff_given_f(kappa, r, n, std::log(sgi_f(kappa, r)));
}

FockVector sgi_coeffs(Coherence alpha, double kappa, int dim) {
    require_dim(dim);
    if (!(kappa > 0.5)) throw DomainError("sgi: requires kappa > 1/2");
    const double log_f = std::log(sgi_f(kappa, alpha.r));
    CVector c(dim);
    for (int n = 0; n < dim; ++n) {
        LogCoeff lc = sgi_log_coeff_given_f(kappa, alpha.r, n, log_f);
        c(n) = from_log(lc.log_abs, lc.sign, n, alpha.phi);
    }
    require_tail(c, "sgi");
    return FockVector(std::move(c));
}

FockVector gs_coeffs(Coherence alpha, int dim) {
    require_dim(dim);
    CVector c(dim);
    for (int n = 0; n < dim; ++n) c(n) = from_log(gs_log_coeff(alpha.r, n), 1, n, alpha.phi);
    require_tail(c, "gs");
    return FockVector(std::move(c));
}

FockVector su11_coeffs(Coherence tau, double kappa, int dim) {
    require_dim(dim);
    if (!(tau.r < 1.0)) throw DomainError("su11: requires |tau| < 1");
    if (!(kappa >= 1.0)) throw DomainError("su11: requires kappa >= 1");
    CVector c(dim);
    for (int n = 0; n < dim; ++n) c(n) = from_log(su11_log_coeff(kappa, tau.r, n), 1, n, tau.phi);
    require_tail(c, "su11");
    return FockVector(std::move(c));
}

FockVector su2_coeffs(Coherence xi, double kappa) {
    if (!is_positive_half_integer(kappa)) throw DomainError("su2: 2*kappa must be a positive integer");
    const int dim = static_cast<int>(2.0 * kappa) + 1;
    CVector c(dim);
    const double log_den = kappa * std::log1p(xi.r * xi.r);
    for (int n = 0; n < dim; ++n) {
        const double l = 0.5 * specfun::binomial_ln(2.0 * kappa, n) + n_log_r(n, xi.r) - log_den;
        c(n) = from_log(xi.r == 0.0 && n > 0 ? kNegInf : l, 1, n, xi.phi);
    }
    return FockVector(std::move(c));
}

double sgii_log_cn(int L, int n, double r) {
    if (L < 0 || n < 0 || n > L) throw DomainError("sgii: requires 0 <= n <= L");
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("sgii: requires r >= 0");
    if (r == 0.0 && n > 0) return kNegInf;
    return 0.5 * specfun::binomial_ln(2.0 * L + 1.0, n) + gamma_ln(L - n + 0.5) + n_log_r(n, r) +
           specfun::terminating_1f1_ln(L - n, 4.0 * r);
}

double sgii_log_norm(int L, double r) {
    std::vector<double> logs;
    for (int n = 0; n <= L; ++n) logs.push_back(2.0 * sgii_log_cn(L, n, r));
    return std::log(2.0) + log_sum_exp(logs);
}

FockVector sgii_coeffs(Coherence z, int L) {
    if (L < 0) throw DomainError("sgii: L must be >= 0");
    const double half_log_norm = 0.5 * sgii_log_norm(L, z.r);
    const int dim = 2 * L + 2;
    CVector c = CVector::Zero(dim);
    for (int n = 0; n <= L; ++n) {
        const double l = sgii_log_cn(L, n, z.r) - half_log_norm;
        c(n) = from_log(l, 1, n, z.phi);
        c(dim - 1 - n) = from_log(l, 1, dim - 1 - n, z.phi);
    }
    return FockVector(std::move(c));
}

FockVector sgii_coeffs_direct(Coherence z, int L) {
    if (L < 0) throw DomainError("sgii: L must be >= 0");
    if (!(z.r > 0.0)) throw DomainError("sgii direct form: requires r > 0 (K has a branch point at 0)");
    std::vector<double> logs = sgii_direct_logs(L, z.r);
    std::vector<double> sq(logs.size());
    for (std::size_t i = 0; i < logs.size(); ++i) sq[i] = 2.0 * logs[i];
    const double half_log_norm = 0.5 * log_sum_exp(sq);
    CVector c(static_cast<int>(logs.size()));
    for (int n = 0; n < c.size(); ++n) c(n) = from_log(logs[static_cast<std::size_t>(n)] - half_log_norm, 1, n, z.phi);
    return FockVector(std::move(c));
}

NormEval msg_norm(double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("msg_norm: requires r >= 0");
    NormEval out;
    out.closed_form = sgi_f(1.0, r);
    if (r > 0.0) {
        double sum = 0.0;
        for (int n = 1; n < 100000; ++n) {
            const double j = std::cyl_bessel_j(static_cast<double>(n), 2.0 * r);
            const double term = n * j * j;
            sum += term;
            if (n > 2.0 * r + 10 && term < 1e-20 * sum) break;
        }
        out.oracle = sum / (r * r);
        out.rel_gap = std::abs(out.closed_form - *out.oracle) / out.closed_form;
    }
    return out;
}

NormEval sgi_norm(double kappa, double r, bool with_oracle) {
    if (!(kappa > 0.5)) throw DomainError("sgi_norm: requires kappa > 1/2");
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("sgi_norm: requires r >= 0");
    NormEval out;
    out.closed_form = std::exp(gamma_ln(2.0 * kappa) - 2.0 * gamma_ln(kappa + 1.0)) * sgi_f(kappa, r);
    if (with_oracle && r > 0.0) {
        double sum = 0.0;
        for (int n = 0; n < 100000; ++n) {
            const double j = std::cyl_bessel_j(n + kappa, 2.0 * r) / std::pow(r, kappa);
            const double term = std::exp(gamma_ln(n + 2.0 * kappa) - gamma_ln(n + 1.0)) * j * j;
            sum += term;
            if (n > 2.0 * r + 10 && term < 1e-20 * sum) break;
        }
        out.oracle = sum;
        out.rel_gap = std::abs(out.closed_form - sum) / out.closed_form;
    }
    return out;
}

NormEval sgii_norm(int L, double r, bool with_oracle) {
    if (L < 0) throw DomainError("sgii_norm: L must be >= 0");
    NormEval out;
    const double log_closed = sgii_log_norm(L, r);
    out.closed_form = std::exp(log_closed);
    if (!std::isfinite(out.closed_form)) throw NumericalError("sgii_norm: normalization overflows double");
    if (with_oracle && r > 0.0) {
        // The folded c_{n;L} equal 2 e^{2r} r^k K_{n-k}(2r) sqrt(C(2k,n)).
        std::vector<double> logs = sgii_direct_logs(L, r);
        std::vector<double> sq(logs.size());
        for (std::size_t i = 0; i < logs.size(); ++i) sq[i] = 2.0 * (logs[i] + std::log(2.0) + 2.0 * r);
        out.oracle = std::exp(log_sum_exp(sq));
        out.rel_gap = std::abs(out.closed_form - *out.oracle) / out.closed_form;
    }
    return out;
}

Complex su11_overlap(Coherence tau1, Coherence tau2, double kappa) {
    if (!(tau1.r < 1.0) || !(tau2.r < 1.0)) throw DomainError("su11_overlap: requires |tau| < 1");
    if (!(kappa >= 1.0)) throw DomainError("su11_overlap: requires kappa >= 1");
    const Complex t1 = tau1.value();
    const Complex t2 = tau2.value();
    const double num = std::pow((1.0 - tau1.r * tau1.r) * (1.0 - tau2.r * tau2.r), kappa);
    return num / std::pow(1.0 - t1 * std::conj(t2), 2.0 * kappa);
}

void validate(const StateFamily& s) {
    if (!(s.coherence.r >= 0.0) || !std::isfinite(s.coherence.r)) throw DomainError("coherence modulus must be >= 0");
    if (s.dim < 0) throw DimensionError("dimension must be >= 0 (0 = automatic)");
    switch (s.family) {
        case Family::sg:
        case Family::msg:
        case Family::gs:
            return;
        case Family::sgi:
            if (!(s.kappa > 0.5)) throw DomainError("sgi: requires kappa > 1/2");
            return;
        case Family::su11:
            if (!(s.coherence.r < 1.0)) throw DomainError("su11: requires |tau| < 1");
            if (!(s.kappa >= 1.0)) throw DomainError("su11: requires kappa >= 1");
            return;
        case Family::sgii:
            if (!is_half_odd(s.kappa)) throw DomainError("sgii: 2*kappa must be an odd positive integer");
            break;
        case Family::su2:
            if (!is_positive_half_integer(s.kappa)) throw DomainError("su2: 2*kappa must be a positive integer");
            break;
    }
    const int fixed = static_cast<int>(2.0 * s.kappa) + 1;
    if (s.dim != 0 && s.dim != fixed) {
        throw DimensionError(std::string(family_name(s.family)) + ": dimension must be 2*kappa+1 = " +
                             std::to_string(fixed));
    }
}

StateFamily canonical(const StateFamily& s) {
    if (s.family == Family::sgi && s.kappa == 1.0) {
        StateFamily c = s;
        c.family = Family::msg;
        return c;
    }
    return s;
}

int recommended_dim(const StateFamily& s) {
    validate(s);
    const double r = s.coherence.r;
    std::function<double(int)> log_w;
    switch (s.family) {
        case Family::sgii:
        case Family::su2:
            return static_cast<int>(2.0 * s.kappa) + 1;
        case Family::sg:
            log_w = [r](int n) { return 2.0 * sg_log_coeff(r, n).log_abs; };
            break;
        case Family::msg:
        case Family::sgi: {
            const double kappa = s.family == Family::msg ? 1.0 : s.kappa;
            const double log_f = std::log(sgi_f(kappa, r));
            log_w = [kappa, r, log_f](int n) { return 2.0 * sgi_log_coeff_given_f(kappa, r, n, log_f).log_abs; };
            break;
        }
        case Family::su11:
            log_w = [kappa = s.kappa, r](int n) { return 2.0 * su11_log_coeff(kappa, r, n); };
            break;
        case Family::gs:
            log_w = [r](int n) { return 2.0 * gs_log_coeff(r, n); };
            break;
    }
    return std::max(2, truncation_dim(log_w, 1e-14, kMaxAutoDim) + 2);
}

FockVector build_state(const StateFamily& s) {
    validate(s);
    const int dim = s.dim > 0 ? s.dim : recommended_dim(s);
    switch (s.family) {
        case Family::sg: return sg_coeffs(s.coherence, dim);
        case Family::msg: return msg_coeffs(s.coherence, dim);
        case Family::sgi: return sgi_coeffs(s.coherence, s.kappa, dim);
        case Family::sgii: return sgii_coeffs(s.coherence, sgii_order(s.kappa));
        case Family::su11: return su11_coeffs(s.coherence, s.kappa, dim);
        case Family::su2: return su2_coeffs(s.coherence, s.kappa);
        case Family::gs: return gs_coeffs(s.coherence, dim);
    }
    throw DomainError("unknown family");
}

}  // namespace sgcs
