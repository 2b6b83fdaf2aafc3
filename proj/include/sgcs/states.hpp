#pragma once

// Coefficient vectors for the seven coherent-state families.
//
//   sg    Susskind-Glogower             c_n = a^n (n+1) J_{n+1}(2r) / r^{n+1}
//   msg   modified SG                   c_n = a^n sqrt((n+1)/N(r)) J_{n+1}(2r) / r^{n+1}
//   sgi   SG type I, index k > 1/2      c_n = sqrt((2k)_n/n!) G(k+1) F_k(r)^{-1/2} e^{in phi} J_{n+k}(2r)/r^k
//   sgii  SG type II, k = L + 1/2       finite, 2L+2 components, modified Bessel K
//   su11  Perelomov SU(1,1), |t| < 1    c_n = (1-|t|^2)^k t^n sqrt((2k)_n/n!)
//   su2   SU(2), 2k integer             c_n = sqrt(C(2k,n)) x^n / (1+|x|^2)^k
//   gs    Glauber-Sudarshan             c_n = e^{-|a|^2/2} a^n / sqrt(n!)
//
// with F_k(r) = 1F2(1/2; k+1, k+1 | -4r^2) and N(r) = F_1(r). The J_nu(2r)/r^nu
// factors are evaluated through the regular kernel 0F1(; nu+1; -r^2), so every
// family is defined at r = 0 without special cases. Magnitudes are assembled in
// log space and stay finite for k in the thousands.

#include <optional>
#include <string>
#include <string_view>

#include "sgcs/fockspace.hpp"

namespace sgcs {

enum class Family { sg, msg, sgi, sgii, su11, su2, gs };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Coherence parameter stored in polar form, phi in (-pi, pi]; powers are r^n e^{i n phi}.
struct Coherence {
    double r = 0.0;
    double phi = 0.0;

    static Coherence polar(double r, double phi);
    static Coherence from_complex(Complex z);
    Complex value() const { return std::polar(r, phi); }
};

struct StateFamily {
    Family family = Family::gs;
    Coherence coherence;
    double kappa = 1.0;  // L + 1/2 for sgii; ignored by sg, msg, gs
    int dim = 0;         // 0 selects recommended_dim()
};

struct NormEval {
    double closed_form = 0.0;
    std::optional<double> oracle;
    std::optional<double> rel_gap;
};

inline constexpr double kTailTol = 1e-12;

// Infinite families throw TruncationError when the mass beyond `dim` exceeds kTailTol.
FockVector sg_coeffs(Coherence alpha, int dim);
FockVector msg_coeffs(Coherence alpha, int dim);
FockVector sgi_coeffs(Coherence alpha, double kappa, int dim);
FockVector gs_coeffs(Coherence alpha, int dim);
FockVector su11_coeffs(Coherence tau, double kappa, int dim);
FockVector su2_coeffs(Coherence xi, double kappa);
// Folded form: pairs |n> and |2L+1-n> share the coefficient c_{n;L}(r).
FockVector sgii_coeffs(Coherence z, int L);
// Unfolded form sum_{n<=2k} z^n sqrt(C(2k,n)) K_{n-k}(2r)/r^{n-k}, normalized. Requires r > 0.
FockVector sgii_coeffs_direct(Coherence z, int L);

// N(r) = 1F2(1/2; 2, 2 | -4r^2); oracle (1/r^2) sum_n n J_n(2r)^2.
NormEval msg_norm(double r);
// N_k(r) = G(2k)/G(k+1)^2 1F2(1/2; k+1, k+1 | -4r^2);
// oracle sum_n (n+1)_{2k-1} J_{n+k}(2r)^2 / r^{2k}.
NormEval sgi_norm(double kappa, double r, bool with_oracle = true);
// 2 sum_{n<=L} c_{n;L}(r)^2; oracle from the unfolded K-Bessel coefficients.
NormEval sgii_norm(int L, double r, bool with_oracle = true);

// ln|c_n| of the normalized SGI state and its sign (phase e^{in phi} excluded).
struct LogCoeff {
    double log_abs;
    int sign;
};
LogCoeff sgi_log_coeff(double kappa, double r, int n);
// ln c_{n;L}(r) for 0 <= n <= L (always positive), and ln of 2 sum_n c^2.
double sgii_log_cn(int L, int n, double r);
double sgii_log_norm(int L, double r);

// <t2|t1> = (1-|t1|^2)^k (1-|t2|^2)^k / (1 - t1 conj(t2))^{2k}.
Complex su11_overlap(Coherence tau1, Coherence tau2, double kappa);

// Throws DomainError when the family's parameter constraints are violated.
void validate(const StateFamily& s);
// sgi at k = 1 is the msg family; every other descriptor is returned unchanged.
StateFamily canonical(const StateFamily& s);
int recommended_dim(const StateFamily& s);
FockVector build_state(const StateFamily& s);

}  // namespace sgcs
