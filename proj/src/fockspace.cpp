#include "sgcs/fockspace.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sgcs/error.hpp"

namespace sgcs {

namespace {

void require_finite(const CMatrix& m, const char* what) {
    if (!m.allFinite()) throw DomainError(std::string(what) + ": non-finite entry");
}

void require_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a) + " vs " +
                             std::to_string(b));
    }
}

std::optional<Band> merge_band(const std::optional<Band>& a, const std::optional<Band>& b, bool product) {
    if (!a || !b) return std::nullopt;
    if (product) return Band{a->lower + b->lower, a->upper + b->upper};
    return Band{std::max(a->lower, b->lower), std::max(a->upper, b->upper)};
}

FockOperator superdiagonal(int dim, const std::function<double(int)>& elem) {
    CMatrix m = CMatrix::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) m(n, n + 1) = elem(n);
    return FockOperator(std::move(m), Band{0, 1});
}

FockOperator diagonal(int dim, const std::function<double(int)>& elem) {
    CMatrix m = CMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) m(n, n) = elem(n);
    return FockOperator(std::move(m), Band{0, 0});
}

}  // namespace

FockVector::FockVector(CVector coeffs) : c_(std::move(coeffs)) {
    if (c_.size() < 1) throw DimensionError("FockVector: dimension must be >= 1");
    if (!c_.allFinite()) throw DomainError("FockVector: non-finite coefficient");
}

FockVector FockVector::basis(int dim, int n) {
    if (n < 0 || n >= dim) throw DimensionError("FockVector::basis: index outside [0, dim)");
    CVector c = CVector::Zero(dim);
    c(n) = 1.0;
    return FockVector(std::move(c));
}

bool FockVector::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

FockVector FockVector::normalized() const {
    const double nrm = c_.norm();
    if (!(nrm > 0.0)) throw DomainError("FockVector::normalized: zero vector");
    return FockVector(c_ / nrm);
}

FockVector FockVector::resized(int dim) const {
    if (dim < 1) throw DimensionError("FockVector::resized: dimension must be >= 1");
    CVector c = CVector::Zero(dim);
    const int keep = std::min(dim, this->dim());
    c.head(keep) = c_.head(keep);
    for (int n = keep; n < this->dim(); ++n) {
        if (c_(n) != Complex(0.0)) throw TruncationError("FockVector::resized: would drop a non-zero coefficient");
    }
    return FockVector(std::move(c));
}

FockOperator::FockOperator(CMatrix m, std::optional<Band> band) : m_(std::move(m)), band_(band) {
    if (m_.rows() != m_.cols()) throw DimensionError("FockOperator: matrix must be square");
    if (m_.rows() < 1) throw DimensionError("FockOperator: dimension must be >= 1");
    require_finite(m_, "FockOperator");
    if (band_) {
        for (int j = 0; j < m_.cols(); ++j) {
            for (int i = 0; i < m_.rows(); ++i) {
                const int off = j - i;
                if ((off > band_->upper || off < -band_->lower) && m_(i, j) != Complex(0.0)) {
                    throw DomainError("FockOperator: entry outside declared band");
                }
            }
        }
    }
}

FockOperator FockOperator::adjoint() const {
    std::optional<Band> b;
    if (band_) b = Band{band_->upper, band_->lower};
    return FockOperator(m_.adjoint(), b);
}

FockVector FockOperator::apply(const FockVector& v) const {
    require_same_dim(dim(), v.dim(), "FockOperator::apply");
    return FockVector(m_ * v.coeffs());
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    require_same_dim(a.dim(), b.dim(), "operator*");
    return FockOperator(a.m_ * b.m_, merge_band(a.band_, b.band_, true));
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    require_same_dim(a.dim(), b.dim(), "operator+");
    return FockOperator(a.m_ + b.m_, merge_band(a.band_, b.band_, false));
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    require_same_dim(a.dim(), b.dim(), "operator-");
    return FockOperator(a.m_ - b.m_, merge_band(a.band_, b.band_, false));
}

FockOperator operator*(Complex s, const FockOperator& a) { return FockOperator(s * a.m_, a.band_); }

double su11_ladder_element(double kappa, int n) { return std::sqrt((n + 1.0) * (n + 2.0 * kappa)); }

double su2_ladder_element(double kappa, int n) { return std::sqrt((n + 1.0) * (2.0 * kappa - n)); }

BosonOps build_boson(int dim) {
    if (dim < 2) throw DimensionError("build_boson: D must be >= 2");
    FockOperator a = superdiagonal(dim, [](int n) { return std::sqrt(n + 1.0); });
    FockOperator n = diagonal(dim, [](int k) { return static_cast<double>(k); });
    return {a, a.adjoint(), n};
}

PhaseOps build_v(int dim) {
    if (dim < 2) throw DimensionError("build_v: D must be >= 2");
    FockOperator v = superdiagonal(dim, [](int) { return 1.0; });
    return {v, v.adjoint()};
}

Su11Ladder build_su11_ladder(double kappa, int dim) {
    if (!(kappa >= 1.0)) throw DomainError("build_su11_ladder: requires kappa >= 1");
    if (dim < 3) throw DimensionError("build_su11_ladder: D must be >= 3");
    FockOperator lower = superdiagonal(dim, [kappa](int n) { return su11_ladder_element(kappa, n); });
    FockOperator number = diagonal(dim, [kappa](int n) { return n + kappa; });
    return {lower, lower.adjoint(), number};
}

FockOperator build_su11_casimir(double kappa, int dim) {
    Su11Ladder l = build_su11_ladder(kappa, dim);
    return l.number * l.number - Complex(0.5) * (l.raise * l.lower + l.lower * l.raise);
}

Su2Ladder build_su2_ladder(double kappa) {
    const double two_k = 2.0 * kappa;
    if (!(two_k >= 1.0) || std::floor(two_k) != two_k) {
        throw DomainError("build_su2_ladder: 2*kappa must be a positive integer");
    }
    const int dim = static_cast<int>(two_k) + 1;
    FockOperator lower = superdiagonal(dim, [kappa](int n) { return su2_ladder_element(kappa, n); });
    FockOperator c0 = diagonal(dim, [kappa](int n) { return n - kappa; });
    return {lower, lower.adjoint(), c0};
}

Quadratures build_quadratures(int dim) {
    BosonOps b = build_boson(dim);
    const double s = 1.0 / std::sqrt(2.0);
    return {Complex(s) * (b.a + b.a_dag), Complex(0.0, -s) * (b.a - b.a_dag)};
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return a * b - b * a;
}

FockOperator identity(int dim) { return diagonal(dim, [](int) { return 1.0; }); }

FockOperator projector(int dim, int n) {
    if (n < 0 || n >= dim) throw DimensionError("projector: index outside [0, dim)");
    return diagonal(dim, [n](int k) { return k == n ? 1.0 : 0.0; });
}

FockVector matexp_apply(const FockOperator& g, const FockVector& v, double t) {
    require_same_dim(g.dim(), v.dim(), "matexp_apply");
    if (!v.is_normalized()) throw DomainError("matexp_apply: input vector must be normalized");
    if (!std::isfinite(t)) throw DomainError("matexp_apply: non-finite scale");
    if (t == 0.0) return v;

    const double norm1 = std::abs(t) * g.matrix().cwiseAbs().colwise().sum().maxCoeff();
    const double steps_real = std::max(1.0, std::ceil(norm1 / 0.5));
    if (steps_real > 1e6) throw ConvergenceError("matexp_apply: ||tG|| too large for scaling");
    const int steps = static_cast<int>(steps_real);
    const CMatrix h = (t / steps) * g.matrix();

    CVector x = v.coeffs();
    for (int s = 0; s < steps; ++s) {
        CVector term = x;
        CVector sum = x;
        bool converged = false;
        for (int k = 1; k <= 60; ++k) {
            term = h * term / static_cast<double>(k);
            sum += term;
            if (term.norm() <= 1e-17 * sum.norm()) {
                converged = true;
                break;
            }
        }
        if (!converged) throw ConvergenceError("matexp_apply: Taylor series did not converge");
        x = std::move(sum);
    }
    return FockVector(std::move(x));
}

Complex expectation(const FockOperator& a, const FockVector& v) {
    require_same_dim(a.dim(), v.dim(), "expectation");
    return v.coeffs().dot(a.matrix() * v.coeffs());
}

Complex inner(const FockVector& u, const FockVector& v) {
    require_same_dim(u.dim(), v.dim(), "inner");
    return u.coeffs().dot(v.coeffs());
}

double max_abs_diff(const FockOperator& a, const FockOperator& b, int limit) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    const int k = std::min(limit, a.dim());
    if (k <= 0) return 0.0;
    return (a.matrix().topLeftCorner(k, k) - b.matrix().topLeftCorner(k, k)).cwiseAbs().maxCoeff();
}

int truncation_dim(const std::function<double(int)>& log_weight, double tail_tol, int max_dim) {
    const double log_tol = std::log(tail_tol);
    const double ninf = -std::numeric_limits<double>::infinity();
    double l0 = log_weight(0);
    double l1 = log_weight(1);
    for (int n = 0; n < max_dim; ++n) {
        const double l2 = log_weight(n + 2);
        if (l0 == ninf && l1 == ninf && l2 == ninf) return std::max(n, 1);
        if (l0 != ninf && l1 != ninf && l2 != ninf) {
            const double rho = std::exp(l1 - l0);
            const double rho_next = std::exp(l2 - l1);
            if (rho < 1.0 && rho_next <= rho * (1.0 + 1e-12) && l0 - std::log1p(-rho) < log_tol) return std::max(n, 1);
        }
        l0 = l1;
        l1 = l2;
    }
    throw TruncationError("truncation_dim: tail not below " + std::to_string(tail_tol) + " within D=" +
                          std::to_string(max_dim));
}

}  // namespace sgcs
