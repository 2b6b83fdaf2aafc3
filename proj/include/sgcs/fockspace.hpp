#pragma once

// Truncated Fock space: coefficient vectors over |0>..|D-1>, dense operator
// matrices, and the ladder-operator realizations (boson, Susskind-Glogower
// phase operators, su(1,1) and su(2)).
//
// Truncated ladder operators drop out-of-range transitions, so commutation
// relations hold exactly only on rows/columns 0..D-3.

#include <complex>
#include <functional>
#include <optional>

#include <Eigen/Dense>

namespace sgcs {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kNormTol = 1e-10;

class FockVector {
public:
    explicit FockVector(CVector coeffs);

    static FockVector basis(int dim, int n);

    int dim() const { return static_cast<int>(c_.size()); }
    const CVector& coeffs() const { return c_; }
    Complex operator[](int n) const { return c_(n); }

    double norm_squared() const { return c_.squaredNorm(); }
    bool is_normalized(double tol = kNormTol) const;
    FockVector normalized() const;
    // Zero-extends (or truncates, if every dropped entry is zero) to `dim`.
    FockVector resized(int dim) const;

private:
    CVector c_;
};

// Lower/upper bandwidth: entry (i, j) may be non-zero only if -lower <= j - i <= upper.
struct Band {
    int lower = 0;
    int upper = 0;
};

class FockOperator {
public:
    explicit FockOperator(CMatrix m, std::optional<Band> band = std::nullopt);

    int dim() const { return static_cast<int>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }
    std::optional<Band> band() const { return band_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

    FockOperator adjoint() const;
    FockVector apply(const FockVector& v) const;

    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(Complex s, const FockOperator& a);

private:
    CMatrix m_;
    std::optional<Band> band_;
};

struct BosonOps {
    FockOperator a, a_dag, n;
};

struct PhaseOps {
    FockOperator v, v_dag;
};

struct Su11Ladder {
    FockOperator lower, raise, number;  // a_-^(k), a_+^(k), n^(k)
};

struct Su2Ladder {
    FockOperator lower, raise, c0;
};

struct Quadratures {
    FockOperator x, p;
};

// Matrix elements above the diagonal: <n| lower |n+1>.
double su11_ladder_element(double kappa, int n);  // sqrt((n+1)(n+2k))
double su2_ladder_element(double kappa, int n);   // sqrt((n+1)(2k-n))

BosonOps build_boson(int dim);
PhaseOps build_v(int dim);
Su11Ladder build_su11_ladder(double kappa, int dim);
FockOperator build_su11_casimir(double kappa, int dim);
// Dimension 2k+1. c0 is diagonal n - k, so that [c0, c+-] = +-c+- and [c-, c+] = -2 c0.
Su2Ladder build_su2_ladder(double kappa);
// x = (a + a^dag)/sqrt2, p = -i(a - a^dag)/sqrt2.
Quadratures build_quadratures(int dim);

FockOperator commutator(const FockOperator& a, const FockOperator& b);
FockOperator identity(int dim);
FockOperator projector(int dim, int n);

// e^{tG} v by Taylor series with scaling: the step count s is chosen so that
// ||tG/s||_1 <= 0.5 and the propagator is applied s times. v must be normalized.
FockVector matexp_apply(const FockOperator& g, const FockVector& v, double t);

Complex expectation(const FockOperator& a, const FockVector& v);
Complex inner(const FockVector& u, const FockVector& v);

// Largest |entry| difference restricted to rows/columns [0, limit).
double max_abs_diff(const FockOperator& a, const FockOperator& b, int limit);

// Smallest D with sum_{n>=D} w(n) < tail_tol, where log_weight(n) = ln w(n)
// must eventually decay faster than geometrically. The tail is bounded by
// w(D) / (1 - rho) with rho the (non-increasing) successive ratio.
int truncation_dim(const std::function<double(int)>& log_weight, double tail_tol, int max_dim);

}  // namespace sgcs
