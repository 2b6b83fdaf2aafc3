#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sgcs/error.hpp"
#include "sgcs/stats.hpp"

using namespace sgcs;

namespace {

StateFamily at(Family f, double r, double kappa = 1.0, double phi = 0.0) {
    return {f, Coherence::polar(r, phi), kappa, 0};
}

StatsRecord stats(Family f, double r, double kappa = 1.0, double phi = 0.0) {
    return stats_of(build_state(at(f, r, kappa, phi)), r);
}

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (int i = 0; lo + i * step <= hi + 1e-12; ++i) g.push_back(lo + i * step);
    return g;
}

}  // namespace

TEST(StatsOf, GlauberSudarshanIsPoissonianMinimumUncertainty) {
    for (double phi : {0.0, 0.9, -2.0}) {
        StatsRecord s = stats(Family::gs, 1.5, 1.0, phi);
        EXPECT_NEAR(s.n_bar, 2.25, 1e-10);
        EXPECT_NEAR(s.mandel_q, 0.0, 1e-10);
        EXPECT_NEAR(s.var_x, 0.5, 1e-10);
        EXPECT_NEAR(s.var_p, 0.5, 1e-10);
        EXPECT_NEAR(s.uncertainty_product, 0.5, 1e-10);
    }
}

TEST(StatsOf, FockAndVacuum) {
    StatsRecord f = stats_of(FockVector::basis(8, 4));
    EXPECT_EQ(f.mandel_q, -1.0);
    EXPECT_NEAR(f.var_x, 4.5, 1e-14);
    StatsRecord v = stats_of(FockVector::basis(3, 0));
    EXPECT_EQ(v.n_bar, 0.0);
    EXPECT_EQ(v.mandel_q, 0.0);
    EXPECT_NEAR(v.uncertainty_product, 0.5, 1e-15);
    EXPECT_THROW(stats_of(FockVector(CVector::Constant(3, 1.0))), DomainError);
}

TEST(StatsOf, OperatorAndBandedRoutesAgree) {
    for (Family f : {Family::sg, Family::sgi, Family::sgii, Family::su11, Family::gs}) {
        const double kappa = f == Family::sgii ? 2.5 : 2.0;
        const double r = f == Family::su11 ? 0.6 : 1.7;
        FockVector v = build_state(at(f, r, kappa, 0.4));
        StatsRecord a = stats_of(v), b = stats_of_banded(v);
        EXPECT_NEAR(a.n_bar, b.n_bar, 1e-12);
        EXPECT_NEAR(a.n2, b.n2, 1e-10);
        EXPECT_NEAR(a.var_x, b.var_x, 1e-12);
        EXPECT_NEAR(a.var_p, b.var_p, 1e-12);
    }
}

TEST(SgiMoments, ClosedFormsAgainstCoefficientSums) {
    SgiMoments zero = sgi_moments_closed(2.0, 0.0);
    EXPECT_EQ(zero.n_bar, 0.0);
    EXPECT_EQ(zero.n_bar_reduced, 0.0);
    for (double kappa : {0.75, 1.0, 2.0, 3.0, 5.0}) {
        for (double r : {0.1, 0.5, 1.0, 2.0, 5.0, 8.0}) {
            SgiMoments m = sgi_moments_closed(kappa, r);
            StatsRecord s = stats(Family::sgi, r, kappa);
            EXPECT_NEAR(m.n_bar, s.n_bar, 1e-9 * std::max(1.0, s.n_bar)) << kappa << " " << r;
            EXPECT_NEAR(m.n2, s.n2, 1e-8 * std::max(1.0, s.n2)) << kappa << " " << r;
            EXPECT_NEAR(m.n_bar, m.n_bar_reduced, 1e-9 * std::max(1.0, m.n_bar)) << kappa << " " << r;
        }
    }
}

TEST(InvertNbar, KnownInversesAndRoundTrip) {
    EXPECT_NEAR(invert_nbar(Family::gs, 1.0, 4.0), 2.0, 1e-12);
    EXPECT_NEAR(invert_nbar(Family::su11, 1.0, 2.0), std::sqrt(0.5), 1e-12);
    for (double x : {0.5, 1.0, 5.0}) {
        const double r = invert_nbar(Family::sgi, 2.0, x);
        EXPECT_NEAR(sgi_moments_closed(2.0, r).n_bar, x, 1e-9) << x;
    }
    EXPECT_EQ(invert_nbar(Family::gs, 1.0, 0.0), 0.0);
    EXPECT_THROW(invert_nbar(Family::sgii, 2.5, 1.0), DomainError);
    EXPECT_THROW(invert_nbar(Family::gs, 1.0, -1.0), DomainError);
}

TEST(ProbabilityDensity, PoissonAndSgiiPlateau) {
    const double nbar = 1.7;
    StateFamily gs = at(Family::gs, std::sqrt(nbar));
    double total = 0.0;
    for (int n = 0; n < 40; ++n) {
        const double p = probability_density(gs, n);
        EXPECT_NEAR(p, std::exp(-nbar + n * std::log(nbar) - std::lgamma(n + 1.0)), 1e-14);
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);

    const double kappa = 2.5;
    StateFamily s = at(Family::sgii, 500.0, kappa);
    for (int n = 0; n <= 5; ++n) {
        const double binom = std::exp(std::lgamma(2 * kappa + 1) - std::lgamma(n + 1.0) - std::lgamma(2 * kappa - n + 1));
        EXPECT_NEAR(probability_density(s, n), binom / std::pow(2.0, 2 * kappa), 2e-3) << n;
    }
    EXPECT_EQ(probability_density(s, 6), 0.0);
}

TEST(ProbabilityDensity, SgiApproachesPoissonAtFixedMean) {
    const double nbar = 2.0;
    auto gap = [&](double kappa) {
        const double r = invert_nbar(Family::sgi, kappa, nbar);
        StateFamily s = at(Family::sgi, r, kappa);
        double g = 0.0;
        for (int n = 0; n < 20; ++n) {
            const double poisson = std::exp(-nbar + n * std::log(nbar) - std::lgamma(n + 1.0));
            g = std::max(g, std::abs(probability_density(s, n) - poisson));
        }
        return g;
    };
    EXPECT_GT(gap(5.0), gap(40.0));
}

TEST(SgiiStats, AsymptoticsAndConstantMean) {
    AsymptoticStats a = sgii_asymptotic_stats(2.5);
    EXPECT_EQ(a.n_bar, 2.5);
    EXPECT_EQ(a.n2, 7.5);
    EXPECT_EQ(a.mandel_q, -0.5);
    EXPECT_THROW(sgii_asymptotic_stats(2.0), DomainError);
    // Q = -1/2 + (k - 1/2)/(4r) + O(r^-2); reference values from mpmath at r = 50
    const double ref[] = {-0.5, -0.49500012437501556, -0.4899000125423075, -0.4793868733990645};
    const double kappas[] = {0.5, 1.5, 2.5, 4.5};
    for (int i = 0; i < 4; ++i) {
        StatsRecord s = stats(Family::sgii, 50.0, kappas[i]);
        EXPECT_NEAR(s.n_bar, kappas[i], 1e-8);
        EXPECT_NEAR(s.mandel_q, ref[i], 1e-10) << kappas[i];
        const double r = 2000.0;
        EXPECT_NEAR(r * (stats(Family::sgii, r, kappas[i]).mandel_q + 0.5), (kappas[i] - 0.5) / 4.0, 2e-3);
    }
    for (int L = 0; L <= 4; ++L) {
        for (double r : {0.1, 1.0, 5.0, 20.0}) EXPECT_NEAR(stats(Family::sgii, r, L + 0.5).n_bar, L + 0.5, 1e-8);
    }
}

TEST(SgiStats, MeanIsStrictlyIncreasing) {
    for (double kappa : {1.0, 2.0, 5.0}) {
        double prev = 0.0;
        for (double r : grid(0.05, 10.0, 0.05)) {
            const double n = sgi_moments_closed(kappa, r).n_bar;
            EXPECT_GT(n, prev) << kappa << " " << r;
            prev = n;
        }
    }
}

TEST(Floors, UncertaintyAndMandel) {
    for (Family f : {Family::sg, Family::msg, Family::sgi, Family::sgii, Family::su11, Family::su2, Family::gs}) {
        for (double r : {0.0, 0.2, 0.7, 0.95}) {
            for (double phi : {0.0, 1.1}) {
                const double kappa = f == Family::sgii ? 1.5 : (f == Family::su2 ? 2.0 : 2.0);
                const double rr = f == Family::su11 ? r * 0.99 : r * 3.0;
                StatsRecord s = stats(f, rr, kappa, phi);
                EXPECT_GE(s.uncertainty_product, 0.5 - 1e-9) << family_name(f) << " " << rr;
                EXPECT_GE(s.mandel_q, -1.0 - 1e-9) << family_name(f) << " " << rr;
                EXPECT_GE(s.n2, s.n_bar * s.n_bar - 1e-12);
            }
        }
    }
}

TEST(Squeezing, SgiKappaFiveSqueezesAndStaysSubPoissonian) {
    // 200-term brute-force sums at 30 digits (mpmath)
    EXPECT_NEAR(stats(Family::sgi, 1.0, 5.0).mandel_q, -0.05194248246877048, 1e-10);
    EXPECT_NEAR(stats(Family::sgi, 3.0, 5.0).mandel_q, -0.35902349486372764, 1e-10);
    EXPECT_NEAR(stats(Family::sgi, 5.0, 5.0).mandel_q, -0.5938817675296441, 1e-10);
    bool squeezed = false;
    for (double r : grid(0.05, 5.0, 0.05)) {
        StatsRecord s = stats(Family::sgi, r, 5.0);
        squeezed = squeezed || s.var_x < 0.5;
        EXPECT_LT(s.mandel_q, 0.0) << r;
    }
    EXPECT_TRUE(squeezed);
}

TEST(Squeezing, MsgMandelChangesSign) {
    EXPECT_NEAR(stats(Family::msg, 7.0).mandel_q, -0.010887827588446341, 1e-10);
    EXPECT_NEAR(stats(Family::msg, 7.2).mandel_q, 0.025519994551153474, 1e-10);
    bool sub = false, super = false;
    for (double r : grid(0.1, 10.0, 0.1)) {
        const double q = stats(Family::sgi, r, 1.0).mandel_q;
        sub = sub || q < 0.0;
        super = super || q > 0.0;
    }
    EXPECT_TRUE(sub && super);
}

TEST(Squeezing, SgiiSqueezesAtLargeRadius) {
    for (double kappa : {2.5, 4.5, 5.5}) {
        bool squeezed = false;
        for (double r : grid(5.0, 50.0, 0.5)) squeezed = squeezed || stats(Family::sgii, r, kappa).var_x < 0.5;
        EXPECT_TRUE(squeezed) << kappa;
    }
}

TEST(Sweep, SerialAndParallelAgreeBitwise) {
    const std::vector<double> radii = grid(0.1, 6.0, 0.1);
    StateFamily base = at(Family::sgi, 0.0, 3.0, 0.2);
    std::vector<StatsRecord> a = stats_sweep(base, radii, Execution::serial);
    std::vector<StatsRecord> b = stats_sweep(base, radii, Execution::parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].r, radii[i]);
        EXPECT_EQ(a[i].n_bar, b[i].n_bar);
        EXPECT_EQ(a[i].var_x, b[i].var_x);
        EXPECT_EQ(a[i].mandel_q, b[i].mandel_q);
    }
}
