#pragma once

// Photon statistics and quadrature variances.
//
//   Q = (<n^2> - <n>^2)/<n> - 1          (0 for the vacuum)
//   x = (a + a^dag)/sqrt(2),  p = -i(a - a^dag)/sqrt(2)
//
// Moments are taken on the state zero-padded by two levels so the a^dag^2
// terms of <x^2> see no truncation edge.

#include <vector>

#include "sgcs/execution.hpp"
#include "sgcs/fockspace.hpp"
#include "sgcs/states.hpp"

namespace sgcs {

struct StatsRecord {
    double r = 0.0;
    double n_bar = 0.0;
    double n2 = 0.0;
    double mandel_q = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double uncertainty_product = 0.0;
};

// Throws DomainError for an unnormalized state.
StatsRecord stats_of(const FockVector& state, double r = 0.0);

// Same moments from explicit band sums, without forming operators.
StatsRecord stats_of_banded(const FockVector& state, double r = 0.0);

struct SgiMoments {
    double n_bar = 0.0;          // 2F3 form
    double n_bar_reduced = 0.0;  // k/F_k(r) - k
    double n2 = 0.0;
};

// Closed-form SGI moments, F_k(r) = 1F2(1/2; k+1, k+1 | -4r^2).
SgiMoments sgi_moments_closed(double kappa, double r);

// <n> as a function of r for families with an r-monotone mean: gs, msg, sgi, su11.
double mean_photon_number(Family family, double kappa, double r);

// Root of <n>(r) = target by bracket doubling from r = 1 and bisection.
// SGII (and the other families without a monotone closed mean) throw DomainError.
double invert_nbar(Family family, double kappa, double target);

// |c_n|^2 of the state; 0 beyond its support.
double probability_density(const StateFamily& s, int n);

struct AsymptoticStats {
    double n_bar;
    double n2;
    double mandel_q;
};

// r -> infinity limit of SGII: (k, k(k+1/2), -1/2).
AsymptoticStats sgii_asymptotic_stats(double kappa);

// One record per radius, in input order; the phase and kappa of `base` are kept.
std::vector<StatsRecord> stats_sweep(const StateFamily& base, const std::vector<double>& radii,
                                     Execution exec = Execution::parallel);

}  // namespace sgcs
