#pragma once

// Coherent-state quantization f(alpha) -> int d^2a/pi w(r) f(alpha) |alpha><alpha|.
//
// The angular integral is done analytically: for f = r^g e^{i s phi} only the
// band m = n + s survives, so every matrix element is one radial integral
// (see quadrature.hpp). Each operator is built twice, from the closed-form
// entries and from radial quadrature, and the largest relative disagreement
// is recorded.
//
//   family  weight                               functions
//   msg     1 * N(r)                             identity
//   sgi     D_k N_k(r),  D_k = G(k)^2/G(2k-1)    identity, alpha, conj(alpha), |alpha|^g
//   sgii    D_k' = 4(2k+1)/G(k+1)^2 (direct K)   identity, z, conj(z)
//   su11    (2k-1)/(1-r^2)^2 on the unit disk    identity, t/(1-|t|^2), |t|^{2g}/(1-|t|^2)

#include <optional>
#include <vector>

#include "sgcs/execution.hpp"
#include "sgcs/fockspace.hpp"
#include "sgcs/states.hpp"

namespace sgcs {

enum class QuantMethod { closed_form, quadrature };

struct QuantizeOptions {
    int n_max = 10;          // rows 0..n_max are computed (infinite families)
    double tol = 1e-10;      // relative tolerance handed to each radial integral
    bool run_quadrature = true;
    Execution exec = Execution::parallel;
};

struct QuantizedOperator {
    FockOperator op;
    QuantMethod method = QuantMethod::closed_form;
    std::optional<double> max_elem_gap;  // max relative |quadrature - closed|
};

struct LadderPair {
    QuantizedOperator lower;
    QuantizedOperator raise;
};

struct IdentityResolution {
    std::vector<double> diagonal;  // radial quadrature
    std::vector<double> closed;    // same element from the Gamma-product closed form
    FockOperator op;               // assembled resolution; off-diagonals are exact zeros
    double max_gap = 0.0;          // max_n |diagonal_n - 1|
};

// Families msg, sgi (k > 1/2), sgii (2k odd), su11 (k > 1). The coherence
// parameter and dim of `family` are ignored.
IdentityResolution identity_resolution_check(const StateFamily& family, int n_max,
                                             Execution exec = Execution::parallel, double tol = 1e-10);

// alpha -> a^(k) with entries sqrt((n+1)(n+2k))/2 on the superdiagonal. The
// quadrature path needs k > 1; the closed form is available for k >= 1.
LadderPair quantize_linear_sgi(double kappa, const QuantizeOptions& opts = {});

// |alpha|^g -> diagonal A^(k;g), -2 < g < 2k-1.
QuantizedOperator quantize_modulus_sgi(double kappa, double gamma, const QuantizeOptions& opts = {});
double modulus_sgi_closed(double kappa, double gamma, int n);
double modulus_sgi_prefactor(double kappa, double gamma);

struct DiskQuantization {
    QuantizedOperator b;
    QuantizedOperator b_dag;
    QuantizedOperator big_b;  // B^(k;g)
};

// SU(1,1) disk map, k > 1, g > -1.
DiskQuantization quantize_disk_su11(double kappa, double gamma, const QuantizeOptions& opts = {});
double disk_b_closed(double kappa, int n);
double disk_big_b_closed(double kappa, double gamma, int n);

// z -> c_-, conj(z) -> c_+ on the (2k+1)-dimensional space, rescaled so the
// entries are sqrt((n+1)(2k-n)). 2k must be an odd positive integer.
LadderPair quantize_sgii(double kappa, const QuantizeOptions& opts = {});
// The unscaled radial element; equals sqrt((n+1)(2k-n))/2.
double sgii_raw_element(double kappa, int n, double tol = 1e-10);

}  // namespace sgcs
