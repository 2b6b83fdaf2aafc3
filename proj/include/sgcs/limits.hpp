#pragma once

// Contraction limits to the Glauber-Sudarshan states and the boson algebra.
//
//   sgi:   c^(I)_{n;k}(sqrt(k/2)|z|)          -> e^{-|z|^2/2} z^n / sqrt(n!)    as k -> inf
//   sgii:  c^(II)_{n;L}(r) / sqrt(N_L(r))     -> same                           as L -> inf
//   su11:  a_-^(k) / sqrt(2k)                 -> a
//   su2:   c_-^(k) / sqrt(2k)                 -> a
//
// N_L is the sum of c_{n;L}^2 over the lower fold n <= L, i.e. half the norm of
// the folded state.

#include <vector>

#include "sgcs/execution.hpp"
#include "sgcs/fockspace.hpp"

namespace sgcs {

// max_{n <= n_max} |c^(I)_{n;k}(sqrt(k/2)|z|) e^{in arg z} - c^GS_n(z)|.
// Requires k >= 2, |z| <= 2, n_max >= 0.
double sgi_contraction_gap(double kappa, Complex z, int n_max);

enum class SgiiRadius {
    sqrt_half_l,  // r = sqrt(L/2)|z|
    half_l,       // r = (L/2)|z|
};

enum class SgiiNorm {
    lower_fold,  // divide by sqrt(N_L)
    full,        // the normalized folded state as is
};

struct SgiiContractionOptions {
    SgiiRadius radius = SgiiRadius::sqrt_half_l;
    SgiiNorm norm = SgiiNorm::lower_fold;
};

// Requires L >= 2 and n_max <= 2L+1.
double sgii_contraction_gap(int L, Complex z, int n_max, const SgiiContractionOptions& opts = {});

enum class Algebra { su11, su2 };

// Largest entry gap between the scaled lowering operator and a on the leading
// D x D block. su11 needs k >= 1; su2 needs D <= 2k.
double operator_contraction_gap(Algebra algebra, double kappa, int dim);

struct ContractionReport {
    std::vector<double> kappa_grid;  // L for sgii
    std::vector<double> sup_coeff_gap;
    std::vector<double> op_gap;

    bool strictly_decreasing() const;
};

enum class ContractionFamily { sgi, sgii };

// One grid point per entry. The operator gap uses su11 at k (sgi) or su2 at
// k = L + 1/2 (sgii) on a block of size n_max + 1.
ContractionReport contraction_report(ContractionFamily family, const std::vector<double>& grid, Complex z,
                                     int n_max, Execution exec = Execution::parallel,
                                     const SgiiContractionOptions& opts = {});

}  // namespace sgcs
