#include "sgcs/limits.hpp"

#include <algorithm>
#include <cmath>

#include "sgcs/error.hpp"
#include "sgcs/fockspace.hpp"
#include "sgcs/specfun.hpp"
#include "sgcs/states.hpp"

namespace sgcs {

namespace {

double gs_magnitude(double r, int n) {
    if (n == 0) return std::exp(-0.5 * r * r);
    if (r == 0.0) return 0.0;
    return std::exp(-0.5 * r * r + n * std::log(r) - 0.5 * specfun::gamma_ln(n + 1.0));
}

double signed_exp(double log_abs, int sign) {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

}  // namespace

double sgi_contraction_gap(double kappa, Complex z, int n_max) {
    if (!(kappa >= 2.0) || !std::isfinite(kappa)) throw DomainError("sgi_contraction_gap: requires kappa >= 2");
    const double mod = std::abs(z);
    if (!(mod <= 2.0)) throw DomainError("sgi_contraction_gap: requires |z| <= 2");
    if (n_max < 0) throw DimensionError("sgi_contraction_gap: n_max must be >= 0");
    const double r = std::sqrt(0.5 * kappa) * mod;
    double gap = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const LogCoeff c = sgi_log_coeff(kappa, r, n);
        gap = std::max(gap, std::abs(signed_exp(c.log_abs, c.sign) - gs_magnitude(mod, n)));
    }
    return gap;
}

double sgii_contraction_gap(int L, Complex z, int n_max, const SgiiContractionOptions& opts) {
    if (L < 2) throw DomainError("sgii_contraction_gap: requires L >= 2");
    if (n_max < 0 || n_max > 2 * L + 1) throw DimensionError("sgii_contraction_gap: requires 0 <= n_max <= 2L+1");
    const double mod = std::abs(z);
    if (!std::isfinite(mod)) throw DomainError("sgii_contraction_gap: z must be finite");
    const double r = opts.radius == SgiiRadius::sqrt_half_l ? std::sqrt(0.5 * L) * mod : 0.5 * L * mod;
    double log_norm = sgii_log_norm(L, r);
    if (opts.norm == SgiiNorm::lower_fold) log_norm -= std::log(2.0);
    double gap = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const int fold = n <= L ? n : 2 * L + 1 - n;
        const double c = std::exp(sgii_log_cn(L, fold, r) - 0.5 * log_norm);
        gap = std::max(gap, std::abs(c - gs_magnitude(mod, n)));
    }
    return gap;
}

double operator_contraction_gap(Algebra algebra, double kappa, int dim) {
    if (dim < 1) throw DimensionError("operator_contraction_gap: dim must be >= 1");
    if (algebra == Algebra::su11) {
        if (!(kappa >= 1.0) || !std::isfinite(kappa)) throw DomainError("operator_contraction_gap: su11 needs kappa >= 1");
    } else {
        if (!(kappa > 0.0) || std::floor(2.0 * kappa) != 2.0 * kappa) {
            throw DomainError("operator_contraction_gap: su2 needs 2*kappa a positive integer");
        }
        if (dim > 2.0 * kappa) throw DimensionError("operator_contraction_gap: su2 block must satisfy D <= 2*kappa");
    }
    const double scale = 1.0 / std::sqrt(2.0 * kappa);
    double gap = 0.0;
    for (int n = 0; n + 1 < dim; ++n) {
        const double e = algebra == Algebra::su11 ? su11_ladder_element(kappa, n) : su2_ladder_element(kappa, n);
        gap = std::max(gap, std::abs(e * scale - std::sqrt(n + 1.0)));
    }
    return gap;
}

bool ContractionReport::strictly_decreasing() const {
    for (std::size_t i = 1; i < sup_coeff_gap.size(); ++i) {
        if (!(sup_coeff_gap[i] < sup_coeff_gap[i - 1])) return false;
        if (!(op_gap[i] < op_gap[i - 1])) return false;
    }
    return true;
}

ContractionReport contraction_report(ContractionFamily family, const std::vector<double>& grid, Complex z,
                                     int n_max, Execution exec, const SgiiContractionOptions& opts) {
    ContractionReport rep;
    rep.kappa_grid = grid;
    rep.sup_coeff_gap.assign(grid.size(), 0.0);
    rep.op_gap.assign(grid.size(), 0.0);
    for_each_index(grid.size(), exec, [&](std::size_t i) {
        if (family == ContractionFamily::sgi) {
            rep.sup_coeff_gap[i] = sgi_contraction_gap(grid[i], z, n_max);
            rep.op_gap[i] = operator_contraction_gap(Algebra::su11, grid[i], n_max + 1);
        } else {
            const double l = grid[i];
            if (std::floor(l) != l) throw DomainError("contraction_report: sgii grid entries must be integers L");
            const int L = static_cast<int>(l);
            rep.sup_coeff_gap[i] = sgii_contraction_gap(L, z, n_max, opts);
            rep.op_gap[i] = operator_contraction_gap(Algebra::su2, L + 0.5, n_max + 1);
        }
    });
    return rep;
}

}  // namespace sgcs
