// Acceptance gate: one PASS/FAIL line per criterion, with wall time.
// Exit status is non-zero if any criterion fails.

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sgcs/fockspace.hpp"
#include "sgcs/limits.hpp"
#include "sgcs/quantize.hpp"
#include "sgcs/states.hpp"
#include "sgcs/stats.hpp"

using namespace sgcs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

double max_gap(const FockVector& a, const FockVector& b) {
    const int d = std::max(a.dim(), b.dim());
    return (a.resized(d).coeffs() - b.resized(d).coeffs()).cwiseAbs().maxCoeff();
}

double lgam(double x) { return boost::math::lgamma(x); }

// (x)_a = Gamma(x+a)/Gamma(x) for real a
double poch(double x, double a) { return std::exp(lgam(x + a) - lgam(x)); }

Outcome normalization_oracle() {
    Outcome o;
    double worst = 0.0;
    for (double k : {0.75, 1.0, 1.5, 2.0, 5.0}) {
        for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            const NormEval e = sgi_norm(k, r);
            const double gap = e.rel_gap.value_or(INFINITY);
            worst = std::max(worst, gap);
            o.require(gap <= 1e-9, "k=" + num(k) + " r=" + num(r) + " rel_gap=" + sci(gap));
        }
    }
    o.detail = "max_rel_gap=" + sci(worst) + (o.detail.empty() ? "" : " " + o.detail);
    return o;
}

Outcome identity_resolution() {
    Outcome o;
    struct Case {
        Family f;
        double k;
    };
    const Case cases[] = {{Family::msg, 1.0},  {Family::sgi, 1.5},  {Family::sgi, 2.0},  {Family::sgi, 4.0},
                          {Family::sgii, 0.5}, {Family::sgii, 1.5}, {Family::sgii, 2.5}, {Family::su11, 1.5},
                          {Family::su11, 2.0}};
    double worst = 0.0;
    for (const Case& c : cases) {
        const IdentityResolution res = identity_resolution_check({c.f, {}, c.k, 0}, 10);
        worst = std::max(worst, res.max_gap);
        const std::string tag = std::string(family_name(c.f)) + " k=" + num(c.k);
        o.require(res.max_gap <= 1e-6, tag + " gap=" + sci(res.max_gap));
        const CMatrix& m = res.op.matrix();
        bool zeros = true;
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) zeros = zeros && (i == j || m(i, j) == Complex(0.0));
        }
        o.require(zeros, tag + " off-diagonal not zero");
    }
    o.detail = "max_diag_gap=" + sci(worst) + (o.detail.empty() ? "" : " " + o.detail);
    return o;
}

Outcome quantization_closed_forms() {
    Outcome o;
    QuantizeOptions opts;
    opts.n_max = 8;
    double worst = 0.0;
    auto check = [&](const std::string& tag, double got, double want) {
        const double rel = std::abs(got - want) / std::abs(want);
        worst = std::max(worst, rel);
        o.require(rel <= 1e-6, tag + " rel=" + sci(rel));
    };
    for (double k : {1.5, 2.0, 3.0}) {
        const FockOperator a = quantize_linear_sgi(k, opts).lower.op;
        for (int n = 0; n <= 8; ++n) check("a k=" + num(k), a(n, n + 1).real(), std::sqrt((n + 1) * (n + 2 * k)) / 2);
    }
    const double ag[][2] = {{2.0, 0.5}, {3.0, 1.0}, {4.0, -0.5}, {2.5, 2.0}};
    for (const auto& p : ag) {
        const double k = p[0], g = p[1];
        const FockOperator big_a = quantize_modulus_sgi(k, g, opts).op;
        const double d = std::pow(2.0, -g) * (2 * k - 1) / (2 * k - g - 1) * poch(k - g / 2, 0.5) / poch(k, 0.5);
        for (int n = 0; n <= 8; ++n) {
            check("A k=" + num(k) + " g=" + num(g), big_a(n, n).real(),
                  d * poch(n + 1, 2 * k - 1) / poch(n + 1 + g / 2, 2 * k - g - 1));
        }
    }
    for (double k : {1.5, 2.0, 3.0}) {
        const FockOperator b = quantize_disk_su11(k, 0.0, opts).b.op;
        for (int n = 0; n <= 8; ++n) {
            check("b k=" + num(k), b(n, n + 1).real(), std::sqrt((n + 1) * (n + 2 * k)) / (2 * (k - 1)));
        }
    }
    for (double k : {1.5, 2.5, 4.5}) {
        const FockOperator c = quantize_sgii(k, opts).lower.op;
        for (int n = 0; n <= 8 && n + 1 < c.dim(); ++n) {
            check("c k=" + num(k), c(n, n + 1).real(), std::sqrt((n + 1) * (2 * k - n)));
        }
    }
    o.detail = "max_rel_gap=" + sci(worst) + (o.detail.empty() ? "" : " " + o.detail);
    return o;
}

Outcome algebra_suites() {
    Outcome o;
    double worst = 0.0;
    auto check = [&](const std::string& tag, double gap, double tol) {
        worst = std::max(worst, gap);
        o.require(gap <= tol, tag + " gap=" + sci(gap));
    };
    const int d = 40;
    for (double k : {1.0, 2.0, 5.0}) {
        const Su11Ladder l = build_su11_ladder(k, d);
        const int in = d - 2;
        const std::string tag = "su11 k=" + num(k);
        check(tag + " [a-,a+]=2n", max_abs_diff(commutator(l.lower, l.raise), Complex(2.0) * l.number, in), 1e-12);
        check(tag + " [n,a+]", max_abs_diff(commutator(l.number, l.raise), l.raise, in), 1e-12);
        check(tag + " [n,a-]", max_abs_diff(commutator(l.number, l.lower), Complex(-1.0) * l.lower, in), 1e-12);
        const FockOperator c = build_su11_casimir(k, d);
        double cg = 0.0;
        for (int n = 0; n < in; ++n) cg = std::max(cg, std::abs(c(n, n) - Complex(k * (k - 1))));
        check(tag + " casimir", cg, 1e-10);
    }
    for (double k : {0.5, 2.0, 3.5}) {
        const Su2Ladder s = build_su2_ladder(k);
        const int n = s.lower.dim();
        const std::string tag = "su2 k=" + num(k);
        check(tag + " [c-,c+]", max_abs_diff(commutator(s.lower, s.raise), Complex(-2.0) * s.c0, n), 1e-12);
        check(tag + " [c0,c+]", max_abs_diff(commutator(s.c0, s.raise), s.raise, n), 1e-12);
        check(tag + " [c0,c-]", max_abs_diff(commutator(s.c0, s.lower), Complex(-1.0) * s.lower, n), 1e-12);
    }
    for (int dim : {2, 10, 40}) {
        const PhaseOps v = build_v(dim);
        const double gap = max_abs_diff(commutator(v.v, v.v_dag), projector(dim, 0) - projector(dim, dim - 1), dim);
        o.require(gap == 0.0, "[V,V+] D=" + std::to_string(dim) + " gap=" + sci(gap));
    }
    o.detail = "max_gap=" + sci(worst) + (o.detail.empty() ? "" : " " + o.detail);
    return o;
}

Outcome displacement_equivalence() {
    Outcome o;
    const PhaseOps v = build_v(40);
    const FockVector sg = matexp_apply(v.v_dag - v.v, FockVector::basis(40, 0), 0.8);
    const double g1 = max_gap(sg, sg_coeffs(Coherence::polar(0.8, 0.0), 40));
    o.require(g1 <= 1e-8, "sg gap=" + sci(g1));
    const double k = 2.0, t = 0.6;
    const Su11Ladder l = build_su11_ladder(k, 60);
    const FockVector su = matexp_apply(Complex(0.5) * (l.raise - l.lower), FockVector::basis(60, 0), 2.0 * t);
    const double g2 = max_gap(su, su11_coeffs(Coherence::polar(std::tanh(t), 0.0), k, 60));
    o.require(g2 <= 1e-8, "su11 gap=" + sci(g2));
    o.detail = "sg_gap=" + sci(g1) + " su11_gap=" + sci(g2) + (o.detail.empty() ? "" : " " + o.detail);
    return o;
}

Outcome statistics_pins() {
    Outcome o;
    auto stats = [](Family f, double r, double k) { return stats_of(build_state({f, Coherence::polar(r, 0.3), k, 0}), r); };
    for (double r : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        const StatsRecord s = stats(Family::gs, r, 1.0);
        o.require(std::abs(s.mandel_q) <= 1e-10, "gs Q=" + sci(s.mandel_q) + " at r=" + num(r));
        o.require(std::abs(s.uncertainty_product - 0.5) <= 1e-10, "gs dxdp at r=" + num(r));
    }
    const StatsRecord fock = stats_of(FockVector::basis(8, 4));
    o.require(std::abs(fock.mandel_q + 1.0) <= 1e-12, "fock |4> Q=" + num(fock.mandel_q));

    std::string q_at_50;
    for (double k : {0.5, 1.5, 2.5, 4.5, 5.5}) {
        for (double r : {0.1, 1.0, 5.0, 20.0, 50.0}) {
            const StatsRecord s = stats(Family::sgii, r, k);
            o.require(std::abs(s.n_bar - k) <= 1e-8, "sgii nbar k=" + num(k) + " r=" + num(r));
            if (r == 50.0) {
                const double gap = std::abs(s.mandel_q + 0.5);
                q_at_50 += (q_at_50.empty() ? "" : ",") + num(k) + ":" + sci(gap);
                o.require(gap <= 1e-2, "sgii k=" + num(k) + " |Q(50)+1/2|=" + sci(gap));
            }
        }
    }
    for (double k : {0.75, 1.0, 2.0, 5.0, 40.0}) {
        double prev = -1.0;
        for (int i = 0; i <= 200; ++i) {
            const double nb = mean_photon_number(Family::sgi, k, 0.05 * i);
            if (i > 0) o.require(nb > prev, "sgi nbar not increasing k=" + num(k) + " r=" + num(0.05 * i));
            prev = nb;
        }
        for (double r : {0.1, 1.0, 3.0, 7.0}) {
            const SgiMoments m = sgi_moments_closed(k, r);
            const double gap = std::abs(m.n_bar - m.n_bar_reduced) / std::max(1.0, std::abs(m.n_bar));
            o.require(gap <= 1e-9, "n1 forms k=" + num(k) + " r=" + num(r) + " gap=" + sci(gap));
        }
    }
    o.detail = "sgii |Q(50)+1/2| by k {" + q_at_50 + "}" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome contraction() {
    Outcome o;
    const ContractionReport sgi = contraction_report(ContractionFamily::sgi, {10, 20, 40, 80, 160}, 1.0, 8);
    const ContractionReport sgii = contraction_report(ContractionFamily::sgii, {5, 10, 20, 40, 80}, 1.0, 8);
    o.require(sgi.strictly_decreasing(), "sgi gaps not strictly decreasing");
    o.require(sgii.strictly_decreasing(), "sgii gaps not strictly decreasing");
    for (Algebra alg : {Algebra::su11, Algebra::su2}) {
        for (double k : {10.0, 100.0, 1000.0}) {
            o.require(operator_contraction_gap(alg, 2 * k, 10) < operator_contraction_gap(alg, k, 10),
                      "ladder gap not decreasing at k=" + num(k));
        }
    }
    o.detail = "sgi " + sci(sgi.sup_coeff_gap.front()) + "->" + sci(sgi.sup_coeff_gap.back()) + ", sgii " +
               sci(sgii.sup_coeff_gap.front()) + "->" + sci(sgii.sup_coeff_gap.back()) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome reduction_chain() {
    Outcome o;
    double worst = 0.0;
    for (double r : {0.0, 0.3, 1.0, 2.5, 4.0}) {
        for (double phi : {0.0, 1.1}) {
            const Coherence a = Coherence::polar(r, phi);
            const FockVector msg = msg_coeffs(a, 60);
            const double g1 = max_gap(sgi_coeffs(a, 1.0, 60), msg);
            const FockVector sg = sg_coeffs(a, 60);
            CVector w(60);
            for (int n = 0; n < 60; ++n) w(n) = sg[n] / std::sqrt(n + 1.0);
            const double g2 = max_gap(FockVector(w).normalized(), msg);
            worst = std::max({worst, g1, g2});
            o.require(g1 <= 1e-10, "sgi(1) vs msg r=" + num(r) + " gap=" + sci(g1));
            o.require(g2 <= 1e-10, "(n+1)^-1/2 sg vs msg r=" + num(r) + " gap=" + sci(g2));
        }
    }
    o.detail = "max_gap=" + sci(worst) + (o.detail.empty() ? "" : " " + o.detail);
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome cli_determinism() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "sgcs_acceptance";
    std::filesystem::create_directories(dir);
    const std::filesystem::path cfg = dir / "run.cfg";
    {
        std::ofstream f(cfg);
        f << "family=sgi\nkappa=1.5,5\ngrid=0:6:61\n";
    }
    const std::vector<std::string> runs{
        "coeffs --family sgi --kappa 3 --alpha-r 2.2 --alpha-phi 0.4",
        "stats-sweep --config " + cfg.string(),
        "stats-sweep --family sgii --kappa 0.5,2.5,5.5 --grid 0:50:51",
        "stats-sweep --family su11 --kappa 2 --grid 1:20:20 --by-nbar",
        "contract --family sgi",
    };
    int idx = 0;
    for (const std::string& args : runs) {
        std::string first;
        for (const char* env : {"", "OMP_NUM_THREADS=1 ", "OMP_NUM_THREADS=3 "}) {
            const auto out = dir / ("out" + std::to_string(idx) + ".csv");
            const std::string cmd = std::string(env) + "\"" SGCS_CLI_PATH "\" " + args + " --out " + out.string();
            const int rc = std::system(cmd.c_str());
            o.require(rc == 0, "'" + args + "' exited with " + std::to_string(rc));
            const std::string text = slurp(out);
            o.require(!text.empty(), "'" + args + "' wrote nothing");
            if (first.empty()) {
                first = text;
            } else {
                o.require(text == first, "'" + args + "' differs between runs");
            }
        }
        ++idx;
    }
    std::filesystem::remove_all(dir);
    o.detail = std::to_string(runs.size()) + " configs x 3 runs" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;  // 0: no runtime bound
        std::function<Outcome()> fn;
    };
    const Criterion criteria[] = {
        {"normalization oracle", 5.0, normalization_oracle},
        {"identity resolution", 60.0, identity_resolution},
        {"quantization closed forms", 0.0, quantization_closed_forms},
        {"algebra suites", 0.0, algebra_suites},
        {"displacement equivalence", 0.0, displacement_equivalence},
        {"statistics pins", 0.0, statistics_pins},
        {"contraction", 30.0, contraction},
        {"reduction chain", 0.0, reduction_chain},
        {"cli determinism", 0.0, cli_determinism},
    };
    int failed = 0;
    int id = 0;
    for (const Criterion& c : criteria) {
        ++id;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0.0 && secs >= c.limit_s) {
            o.pass = false;
            o.detail += "; runtime over " + num(c.limit_s) + " s";
        }
        if (!o.pass) ++failed;
        std::printf("%s  %d  %-26s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, c.name, secs, o.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", id - failed, id);
    return failed == 0 ? 0 : 1;
}
