#include "sgcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "sgcs/error.hpp"

namespace sgcs::specfun {

namespace {

using wide = __float128;

constexpr double kWideEps = 1.93e-34;  // 2^-112
constexpr double kDoubleEps = std::numeric_limits<double>::epsilon();
constexpr double kRelStop = 1e-16;
constexpr double kAbsStop = 1e-300;

wide wabs(wide x) { return x < 0 ? -x : x; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// Smallest m >= 0 with a_i = -m for some numerator parameter, or -1.
int termination_index(const std::vector<double>& numerator) {
    int best = -1;
    for (double a : numerator) {
        if (is_nonpositive_integer(a)) {
            int m = static_cast<int>(-a);
            if (best < 0 || m < best) best = m;
        }
    }
    return best;
}

struct RawSum {
    double value;
    int terms;
    double est_abs_error;
};

// Direct summation of the pFq series in binary128. Parameters are validated
// by the caller.
RawSum sum_series(const std::vector<double>& a, const std::vector<double>& b, double z) {
    wide term = 1;
    wide sum = 1;
    wide sum_abs = 1;
    int small_run = 0;
    int terms = 1;
    double tail = 0.0;
    bool done = false;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        wide ratio = static_cast<wide>(z) / static_cast<wide>(k + 1);
        bool hit_zero = false;
        for (double ai : a) {
            wide num = static_cast<wide>(ai) + static_cast<wide>(k);
            if (num == 0) {
                hit_zero = true;
                break;
            }
            ratio *= num;
        }
        if (hit_zero) {
            done = true;
            break;
        }
        for (double bj : b) ratio /= static_cast<wide>(bj) + static_cast<wide>(k);

        term *= ratio;
        sum += term;
        sum_abs += wabs(term);
        ++terms;

        const wide mag = wabs(term);
        const bool small = mag <= static_cast<wide>(kRelStop) * wabs(sum) || mag < static_cast<wide>(kAbsStop);
        const double rmag = static_cast<double>(wabs(ratio));
        if (small && rmag < 1.0) {
            if (++small_run >= 3) {
                // Geometric bound on the remainder, doubled.
                tail = 2.0 * static_cast<double>(mag) * rmag / (1.0 - rmag);
                done = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    if (!done) {
        throw AccuracyError("hypergeometric series did not converge within " +
                            std::to_string(kMaxSeriesTerms) + " terms (z=" + fmt(z) + ")");
    }
    const double value = static_cast<double>(sum);
    if (!std::isfinite(value)) throw NumericalError("hypergeometric series overflowed (z=" + fmt(z) + ")");
    const double rounding = static_cast<double>(sum_abs) * kWideEps * 2.0 * terms;
    const double est = rounding + tail + 0.5 * kDoubleEps * std::abs(value);
    return {value, terms, est};
}

}  // namespace

double SignedLog::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

double gamma_ln(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_ln: requires x > 0, got " + fmt(x));
    int sign = 1;
    return ::lgamma_r(x, &sign);
}

SignedLog gamma_ln_signed(double x) {
    if (is_nonpositive_integer(x)) throw PoleError("Gamma pole at " + fmt(x));
    int sign = 1;
    double l = ::lgamma_r(x, &sign);
    return {l, sign};
}

SignedLog rgamma_ln_signed(double x) {
    if (is_nonpositive_integer(x)) return {0.0, 0};
    SignedLog g = gamma_ln_signed(x);
    return {-g.log_abs, g.sign};
}

double pochhammer(double a, int n) {
    double p = 1.0;
    if (n >= 0) {
        for (int j = 0; j < n; ++j) p *= a + j;
        return p;
    }
    for (int j = 1; j <= -n; ++j) {
        const double f = a - j;
        if (f == 0.0) throw PoleError("pochhammer: (" + fmt(a) + ")_" + std::to_string(n) + " has a zero factor");
        p *= f;
    }
    return 1.0 / p;
}

SignedLog pochhammer_ln(double a, double nu) {
    if (std::floor(nu) == nu && std::abs(nu) < 1e6) {
        double p = pochhammer(a, static_cast<int>(nu));
        if (p == 0.0) return {0.0, 0};
        return {std::log(std::abs(p)), p > 0 ? 1 : -1};
    }
    if (is_nonpositive_integer(a) || is_nonpositive_integer(a + nu)) {
        throw PoleError("pochhammer: (" + fmt(a) + ")_" + fmt(nu) + " touches a Gamma pole");
    }
    return gamma_ln_signed(a + nu) / gamma_ln_signed(a);
}

double pochhammer(double a, double nu) {
    if (std::floor(nu) == nu && std::abs(nu) < 1e6) return pochhammer(a, static_cast<int>(nu));
    return pochhammer_ln(a, nu).value();
}

double binomial_ln(double n, double k) {
    if (k < 0.0 || k > n) throw DomainError("binomial_ln: need 0 <= k <= n");
    return gamma_ln(n + 1.0) - gamma_ln(k + 1.0) - gamma_ln(n - k + 1.0);
}

SeriesEval hyp_pfq(const HypParams& params) {
    const auto& a = params.numerator;
    const auto& b = params.denominator;
    const double z = params.z;
    const std::size_t p = a.size();
    const std::size_t q = b.size();
    if (!std::isfinite(z)) throw DomainError("hyp_pfq: non-finite argument");
    for (double x : a) {
        if (!std::isfinite(x)) throw DomainError("hyp_pfq: non-finite numerator parameter");
    }
    if (z == 0.0) return {1.0, 1, 0.0};

    const int stop = termination_index(a);
    for (double bj : b) {
        if (!std::isfinite(bj)) throw DomainError("hyp_pfq: non-finite denominator parameter");
        if (is_nonpositive_integer(bj)) {
            const int pole = static_cast<int>(-bj);
            if (stop < 0 || stop > pole) {
                throw PoleError("hyp_pfq: denominator parameter " + fmt(bj) +
                                " is a pole not cut off by a terminating numerator");
            }
        }
    }

    const bool terminating = stop >= 0;
    if (!terminating) {
        if (p > q + 1) throw DivergenceError("hyp_pfq: p > q+1 series diverges for z != 0");
        if (p == q + 1) {
            if (p == 2 && z == 1.0) {
                const double excess = b[0] - a[0] - a[1];
                if (excess > 0.1) {
                    const double v = hyp2f1_gauss(a[0], a[1], b[0]);
                    return {v, 1, 4.0 * kDoubleEps * std::abs(v) * 16.0};
                }
                throw DivergenceError("hyp_pfq: 2F1 at z=1 needs c-a-b > 0.1 or a terminating series");
            }
            if (std::abs(z) >= 1.0) {
                throw DivergenceError("hyp_pfq: p = q+1 series needs |z| < 1, got z=" + fmt(z));
            }
        }
    }

    RawSum raw = sum_series(a, b, z);
    SeriesEval out{raw.value, raw.terms, raw.est_abs_error};
    if (out.est_abs_error > 1e-9 * std::abs(out.value)) {
        throw AccuracyError("hyp_pfq: cancellation, estimated error " + fmt(out.est_abs_error) +
                            " exceeds 1e-9 of value " + fmt(out.value));
    }
    return out;
}

double hyp2f1_gauss(double a, double b, double c) {
    const double excess = c - a - b;
    if (!(excess > 0.0)) throw DivergenceError("hyp2f1_gauss: requires c-a-b > 0");
    SignedLog num = gamma_ln_signed(c) * gamma_ln_signed(excess);
    SignedLog den_inv = rgamma_ln_signed(c - a) * rgamma_ln_signed(c - b);
    SignedLog v = num * den_inv;
    return v.value();
}

SeriesEval bessel_j_kernel(double nu, double r) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("bessel_j: order must be >= 0, got " + fmt(nu));
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("bessel_j: argument must be >= 0, got " + fmt(2 * r));
    if (r == 0.0) return {1.0, 1, 0.0};
    RawSum raw = sum_series({}, {nu + 1.0}, -r * r);
    SeriesEval out{raw.value, raw.terms, raw.est_abs_error};
    if (out.est_abs_error > std::max(1e-12 * std::abs(out.value), 1e-14)) {
        throw AccuracyError("bessel_j: cancellation estimate " + fmt(out.est_abs_error) + " too large");
    }
    return out;
}

SeriesEval bessel_j(double nu, double z) {
    if (!(z >= 0.0)) throw DomainError("bessel_j: argument must be >= 0, got " + fmt(z));
    if (z == 0.0) {
        if (!(nu >= 0.0)) throw DomainError("bessel_j: order must be >= 0, got " + fmt(nu));
        return {nu == 0.0 ? 1.0 : 0.0, 1, 0.0};
    }
    if (z > kZMax) {
        throw AccuracyError("bessel_j: argument " + fmt(z) + " exceeds the direct-series limit " + fmt(kZMax));
    }
    SeriesEval kernel = bessel_j_kernel(nu, 0.5 * z);
    const double log_power = nu * std::log(0.5 * z);
    const double log_gamma = gamma_ln(nu + 1.0);
    const double prefactor = std::exp(log_power - log_gamma);
    SeriesEval out;
    out.value = prefactor * kernel.value;
    out.terms_used = kernel.terms_used;
    // exp() amplifies the absolute rounding of its argument into relative error.
    const double exponent_err = 2.0 * kDoubleEps * (std::abs(log_power) + std::abs(log_gamma) + 1.0);
    out.est_abs_error = prefactor * kernel.est_abs_error + (exponent_err + 2.0 * kDoubleEps) * std::abs(out.value);
    if (!std::isfinite(out.value)) throw NumericalError("bessel_j: non-finite result");
    return out;
}

double terminating_1f1_ln(int m, double x) {
    if (m < 0) throw DomainError("terminating_1f1_ln: m must be >= 0");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("terminating_1f1_ln: requires x >= 0");
    if (m == 0 || x == 0.0) return 0.0;
    // Terms (-m)_k / ((-2m)_k k!) x^k are all positive; log-sum-exp over k = 0..m.
    std::vector<double> logs(static_cast<std::size_t>(m) + 1);
    double lt = 0.0;
    double log_max = 0.0;
    const double lx = std::log(x);
    for (int k = 1; k <= m; ++k) {
        const double num = m - (k - 1);
        const double den = 2.0 * m - (k - 1);
        lt += std::log(num / den) + lx - std::log(static_cast<double>(k));
        logs[static_cast<std::size_t>(k)] = lt;
        log_max = std::max(log_max, lt);
    }
    double s = 0.0;
    for (double l : logs) s += std::exp(l - log_max);
    return log_max + std::log(s);
}

double bessel_k_half_ln(int order_floor, double z) {
    if (order_floor < 0) throw DomainError("bessel_k_half: L must be >= 0");
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("bessel_k_half: requires z > 0, got " + fmt(z));
    const int L = order_floor;
    return -z - 0.5 * std::log(2.0 * z) + gamma_ln(L + 0.5) - L * std::log(0.5 * z) + terminating_1f1_ln(L, 2.0 * z);
}

double bessel_k_half(int order_floor, double z) {
    if (order_floor < 0) throw DomainError("bessel_k_half: L must be >= 0");
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("bessel_k_half: requires z > 0, got " + fmt(z));
    const int L = order_floor;
    const double poly = hyp_pfq({{-static_cast<double>(L)}, {-2.0 * L}, 2.0 * z}).value;
    const double log_pref = -z - 0.5 * std::log(2.0 * z) + gamma_ln(L + 0.5) - L * std::log(0.5 * z);
    return std::exp(log_pref) * poly;
}

}  // namespace sgcs::specfun
