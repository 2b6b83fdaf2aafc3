#include "sgcs/stats.hpp"

#include <cmath>
#include <string>

#include "sgcs/error.hpp"
#include "sgcs/specfun.hpp"

namespace sgcs {

namespace {

// Above this the dense operator route costs more than it checks.
constexpr int kOperatorDimLimit = 512;

void require_normalized(const FockVector& v) {
    if (!v.is_normalized()) throw DomainError("stats_of: state is not normalized");
}

StatsRecord finish(double r, double n_bar, double n2, double mean_x, double x2, double mean_p, double p2) {
    StatsRecord s;
    s.r = r;
    s.n_bar = n_bar;
    s.n2 = n2;
    s.mandel_q = n_bar > 0.0 ? (n2 - n_bar * n_bar) / n_bar - 1.0 : 0.0;
    s.var_x = x2 - mean_x * mean_x;
    s.var_p = p2 - mean_p * mean_p;
    s.uncertainty_product = std::sqrt(s.var_x * s.var_p);
    return s;
}

double hyp(std::vector<double> num, std::vector<double> den, double z) {
    return specfun::hyp_pfq({std::move(num), std::move(den), z}).value;
}

}  // namespace

StatsRecord stats_of(const FockVector& state, double r) {
    require_normalized(state);
    const int d = state.dim() + 2;
    if (d > kOperatorDimLimit) return stats_of_banded(state, r);
    const FockVector v = state.resized(d);
    const BosonOps b = build_boson(d);
    const Quadratures q = build_quadratures(d);
    const FockVector nv = b.n.apply(v);
    const FockVector xv = q.x.apply(v);
    const FockVector pv = q.p.apply(v);
    return finish(r, inner(v, nv).real(), nv.norm_squared(), inner(v, xv).real(), xv.norm_squared(),
                  inner(v, pv).real(), pv.norm_squared());
}

StatsRecord stats_of_banded(const FockVector& state, double r) {
    require_normalized(state);
    const CVector& c = state.coeffs();
    const int d = state.dim();
    double n_bar = 0.0, n2 = 0.0;
    Complex a1 = 0.0, a2 = 0.0;
    for (int n = 0; n < d; ++n) {
        const double w = std::norm(c(n));
        n_bar += n * w;
        n2 += static_cast<double>(n) * n * w;
        if (n + 1 < d) a1 += std::sqrt(n + 1.0) * std::conj(c(n)) * c(n + 1);
        if (n + 2 < d) a2 += std::sqrt((n + 1.0) * (n + 2.0)) * std::conj(c(n)) * c(n + 2);
    }
    const double s2 = std::sqrt(2.0);
    return finish(r, n_bar, n2, s2 * a1.real(), a2.real() + n_bar + 0.5, s2 * a1.imag(), -a2.real() + n_bar + 0.5);
}

SgiMoments sgi_moments_closed(double kappa, double r) {
    if (!(kappa > 0.5)) throw DomainError("sgi_moments_closed: requires kappa > 1/2");
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("sgi_moments_closed: requires finite r >= 0");
    const double z = -4.0 * r * r;
    const double f = hyp({0.5}, {kappa + 1.0, kappa + 1.0}, z);
    const double h1 = hyp({1.5, 1.0}, {kappa + 2.0, kappa + 2.0, 2.0}, z);
    const double h2 = hyp({1.5, 2.0}, {kappa + 3.0, kappa + 3.0, 3.0}, z);
    // Gamma(2k+1)/Gamma(k+2)^2 / N_k = 2k/(k+1)^2 / F, and likewise for the n^2 term.
    const double r2 = r * r;
    SgiMoments m;
    m.n_bar = 2.0 * kappa * r2 / ((kappa + 1.0) * (kappa + 1.0)) * h1 / f;
    m.n_bar_reduced = kappa / f - kappa;
    m.n2 = m.n_bar + 2.0 * kappa * (2.0 * kappa + 1.0) * r2 * r2 /
                         ((kappa + 1.0) * (kappa + 1.0) * (kappa + 2.0) * (kappa + 2.0)) * h2 / f;
    return m;
}

double mean_photon_number(Family family, double kappa, double r) {
    switch (family) {
        case Family::gs: return r * r;
        case Family::msg: return sgi_moments_closed(1.0, r).n_bar;
        case Family::sgi: return sgi_moments_closed(kappa, r).n_bar;
        case Family::su11:
            if (!(r >= 0.0 && r < 1.0)) throw DomainError("mean_photon_number: su11 requires 0 <= r < 1");
            return 2.0 * kappa * r * r / (1.0 - r * r);
        default: break;
    }
    throw DomainError("mean_photon_number: family " + std::string(family_name(family)) +
                      " has no r-monotone closed-form mean");
}

double invert_nbar(Family family, double kappa, double target) {
    if (family == Family::sgii) throw DomainError("invert_nbar: the sgii mean photon number is constant");
    if (!(target >= 0.0) || !std::isfinite(target)) throw DomainError("invert_nbar: target must be finite and >= 0");
    auto f = [&](double r) { return mean_photon_number(family, kappa, r) - target; };
    if (target == 0.0) {
        f(0.0);  // family check
        return 0.0;
    }
    double lo = 0.0, hi = 1.0;
    if (family != Family::su11) {
        int doublings = 0;
        while (f(hi) < 0.0) {
            lo = hi;
            hi *= 2.0;
            if (++doublings > 60) throw ConvergenceError("invert_nbar: bracket failure");
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (family == Family::su11) return lo;
    return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

double probability_density(const StateFamily& s, int n) {
    if (n < 0) throw DimensionError("probability_density: n must be >= 0");
    const FockVector v = build_state(s);
    if (n >= v.dim()) return 0.0;
    return std::norm(v[n]);
}

AsymptoticStats sgii_asymptotic_stats(double kappa) {
    const double two_k = 2.0 * kappa;
    if (!(two_k >= 1.0) || std::floor(two_k) != two_k || std::fmod(two_k, 2.0) != 1.0) {
        throw DomainError("sgii_asymptotic_stats: 2*kappa must be an odd positive integer");
    }
    return {kappa, kappa * (kappa + 0.5), -0.5};
}

std::vector<StatsRecord> stats_sweep(const StateFamily& base, const std::vector<double>& radii, Execution exec) {
    std::vector<StatsRecord> out(radii.size());
    for_each_index(radii.size(), exec, [&](std::size_t i) {
        StateFamily s = base;
        s.coherence = Coherence::polar(radii[i], base.coherence.phi);
        out[i] = stats_of(build_state(s), radii[i]);
    });
    return out;
}

}  // namespace sgcs
