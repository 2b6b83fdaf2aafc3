#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "cli_internal.hpp"
#include "sgcs/error.hpp"
#include "sgcs/fockspace.hpp"
#include "sgcs/limits.hpp"
#include "sgcs/quantize.hpp"
#include "sgcs/stats.hpp"

namespace sgcs::cli {

namespace {

bool indexed(Family f) { return f == Family::sgi || f == Family::sgii || f == Family::su11 || f == Family::su2; }

Family family_of(const RunConfig& cfg) {
    const auto f = parse_family(cfg.family);
    if (!f) throw DomainError("unknown family '" + cfg.family + "'");
    return *f;
}

std::vector<double> kappas(const RunConfig& cfg, Family f, std::vector<double> fallback = {}) {
    if (!indexed(f)) return {1.0};
    std::vector<double> k = cfg.kappa.empty() ? fallback : cfg.kappa;
    if (k.empty()) throw DomainError(std::string("family ") + std::string(family_name(f)) + " needs --kappa");
    return k;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
    return s;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// Parameters in human-readable reports; CSV keeps format_double.
std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// Counts checks and prints the closing summary line.
struct Tally {
    int total = 0;
    int failed = 0;

    bool add(bool ok) {
        ++total;
        if (!ok) ++failed;
        return ok;
    }
    int finish(std::ostream& out) const {
        out << "result: " << verdict(failed == 0) << " (" << total - failed << "/" << total << " checks)\n";
        return failed == 0 ? kExitPass : kExitCheckFailed;
    }
};

}  // namespace

int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Family f = family_of(cfg);
    const std::vector<double> ks = kappas(cfg, f);
    if (ks.size() != 1) throw DomainError("coeffs takes a single --kappa");
    if (cfg.dim < 0) throw DimensionError("--dim must be >= 0");
    StateFamily s{f, Coherence::polar(cfg.alpha_r, cfg.alpha_phi), ks[0], cfg.dim};
    validate(s);
    s = canonical(s);
    const FockVector v = build_state(s);

    std::ostringstream csv;
    csv << "# sgcs coeffs\n# family=" << family_name(s.family) << "\n";
    if (indexed(s.family)) csv << "# kappa=" << format_double(s.kappa) << "\n";
    csv << "# alpha_r=" << format_double(s.coherence.r) << "\n# alpha_phi=" << format_double(s.coherence.phi)
        << "\n# dim=" << v.dim() << "\n";
    csv << "n,re_c,im_c,abs2\n";
    double norm = 0.0;
    for (int n = 0; n < v.dim(); ++n) {
        const double p = std::norm(v[n]);
        norm += p;
        csv << n << "," << format_double(v[n].real()) << "," << format_double(v[n].imag()) << "," << format_double(p)
            << "\n";
    }
    csv << "norm,,," << format_double(norm) << "\n";
    emit(cfg, csv.str(), out);

    const double tol = cfg.tol.value_or(kNormTol);
    if (std::abs(norm - 1.0) > tol) {
        err << "check failed: |norm - 1| = " << sci(std::abs(norm - 1.0)) << " > " << sci(tol) << "\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

int cmd_stats_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const Family f = family_of(cfg);
    const std::vector<double> ks = kappas(cfg, f);
    const Grid grid = parse_grid(cfg.grid);
    const std::vector<double> pts = grid.points();
    if (cfg.by_nbar && f != Family::gs && f != Family::msg && f != Family::sgi && f != Family::su11) {
        throw DomainError("--by-nbar needs a family with a monotone mean photon number (gs, msg, sgi, su11)");
    }

    std::ostringstream csv;
    csv << "# sgcs stats-sweep\n# family=" << family_name(f) << "\n";
    if (indexed(f)) csv << "# kappa=" << join(ks) << "\n";
    csv << "# grid=" << format_double(grid.min) << ":" << format_double(grid.max) << ":" << grid.steps
        << "\n# alpha_phi=" << format_double(Coherence::polar(0.0, cfg.alpha_phi).phi) << "\n";
    if (cfg.by_nbar) csv << "# by_nbar=1\n";
    if (indexed(f)) csv << "kappa,";
    if (cfg.by_nbar) csv << "target_nbar,";
    csv << "r,n_bar,n2,mandel_q,var_x,var_p,uncertainty_product\n";

    for (double k : ks) {
        std::vector<double> radii = pts;
        if (cfg.by_nbar) {
            for (double& r : radii) r = invert_nbar(f, k, r);
        }
        const StateFamily base{f, Coherence::polar(0.0, cfg.alpha_phi), k, 0};
        for (double r : radii) {
            StateFamily s = base;
            s.coherence = Coherence::polar(r, cfg.alpha_phi);
            validate(s);
        }
        const std::vector<StatsRecord> rec = stats_sweep(base, radii, Execution::parallel);
        for (std::size_t i = 0; i < rec.size(); ++i) {
            if (indexed(f)) csv << format_double(k) << ",";
            if (cfg.by_nbar) csv << format_double(pts[i]) << ",";
            const StatsRecord& s = rec[i];
            csv << format_double(s.r) << "," << format_double(s.n_bar) << "," << format_double(s.n2) << ","
                << format_double(s.mandel_q) << "," << format_double(s.var_x) << "," << format_double(s.var_p) << ","
                << format_double(s.uncertainty_product) << "\n";
        }
    }
    emit(cfg, csv.str(), out);
    return kExitPass;
}

int cmd_verify_identity(const RunConfig& cfg, std::ostream& out) {
    const Family f = family_of(cfg);
    if (f != Family::msg && f != Family::sgi && f != Family::sgii && f != Family::su11) {
        throw DomainError("verify-identity supports msg, sgi, sgii, su11");
    }
    const int n_max = cfg.dim > 0 ? cfg.dim : 10;
    const double tol = cfg.tol.value_or(1e-6);
    Tally t;
    for (double k : kappas(cfg, f)) {
        const IdentityResolution res = identity_resolution_check({f, {}, k, 0}, n_max);
        double closed_gap = 0.0;
        for (double c : res.closed) closed_gap = std::max(closed_gap, std::abs(c - 1.0));
        const bool ok = t.add(res.max_gap <= tol && closed_gap <= tol);
        out << "identity family=" << family_name(f);
        if (indexed(f)) out << " kappa=" << num(k);
        out << " n_max=" << res.diagonal.size() - 1 << " max_gap=" << sci(res.max_gap)
            << " closed_gap=" << sci(closed_gap) << " tol=" << sci(tol) << " " << verdict(ok) << "\n";
    }
    return t.finish(out);
}

int cmd_verify_algebra(const RunConfig& cfg, std::ostream& out) {
    Tally t;
    auto report = [&](const std::string& what, double gap, double tol) {
        const bool ok = t.add(gap <= tol);
        out << "algebra " << what << " gap=" << sci(gap) << " tol=" << sci(tol) << " " << verdict(ok) << "\n";
    };
    const double rel_tol = cfg.tol.value_or(1e-12);
    if (cfg.algebra == "sg") {
        const int d = cfg.dim > 0 ? cfg.dim : 40;
        const PhaseOps v = build_v(d);
        const FockOperator expected = projector(d, 0) - projector(d, d - 1);
        report("sg D=" + std::to_string(d) + " [V,V+]=|0><0|-|D-1><D-1|",
               max_abs_diff(commutator(v.v, v.v_dag), expected, d), cfg.tol.value_or(0.0));
        return t.finish(out);
    }
    if (cfg.kappa.empty()) throw DomainError("verify-algebra needs --kappa");
    for (double k : cfg.kappa) {
        const std::string tag = " kappa=" + num(k);
        if (cfg.algebra == "su11") {
            const int d = cfg.dim > 0 ? cfg.dim : 40;
            const int in = d - 2;
            const Su11Ladder l = build_su11_ladder(k, d);
            const std::string head = "su11" + tag + " D=" + std::to_string(d);
            report(head + " [a-,a+]/2=n", max_abs_diff(Complex(0.5) * commutator(l.lower, l.raise), l.number, in),
                   rel_tol);
            report(head + " [n,a+]=a+", max_abs_diff(commutator(l.number, l.raise), l.raise, in), rel_tol);
            report(head + " [n,a-]=-a-", max_abs_diff(commutator(l.number, l.lower), Complex(-1.0) * l.lower, in),
                   rel_tol);
            const FockOperator c = build_su11_casimir(k, d);
            const FockOperator expected = Complex(k * (k - 1.0)) * identity(d);
            report(head + " casimir=k(k-1)", max_abs_diff(c, expected, in), cfg.tol.value_or(1e-10));
        } else if (cfg.algebra == "su2") {
            const Su2Ladder s = build_su2_ladder(k);
            const int d = s.lower.dim();
            const std::string head = "su2" + tag + " D=" + std::to_string(d);
            report(head + " [c-,c+]=-2c0", max_abs_diff(commutator(s.lower, s.raise), Complex(-2.0) * s.c0, d),
                   rel_tol);
            report(head + " [c0,c+]=c+", max_abs_diff(commutator(s.c0, s.raise), s.raise, d), rel_tol);
            report(head + " [c0,c-]=-c-", max_abs_diff(commutator(s.c0, s.lower), Complex(-1.0) * s.lower, d),
                   rel_tol);
        } else {
            throw DomainError("unknown algebra '" + cfg.algebra + "' (su11, su2, sg)");
        }
    }
    return t.finish(out);
}

int cmd_verify_quantization(const RunConfig& cfg, std::ostream& out) {
    if (cfg.kappa.empty()) throw DomainError("verify-quantization needs --kappa");
    QuantizeOptions opts;
    opts.n_max = cfg.dim > 0 ? cfg.dim : 8;
    const double tol = cfg.tol.value_or(1e-6);
    Tally t;
    for (double k : cfg.kappa) {
        std::vector<std::pair<std::string, double>> gaps;
        int dim = 0;
        const std::string& op = cfg.op;
        if (op == "a") {
            const LadderPair p = quantize_linear_sgi(k, opts);
            gaps = {{"a", *p.lower.max_elem_gap}, {"a+", *p.raise.max_elem_gap}};
            dim = p.lower.op.dim();
        } else if (op == "A") {
            const QuantizedOperator q = quantize_modulus_sgi(k, cfg.gamma, opts);
            gaps = {{"A", *q.max_elem_gap}};
            dim = q.op.dim();
        } else if (op == "b" || op == "B") {
            const DiskQuantization q = quantize_disk_su11(k, cfg.gamma, opts);
            dim = q.b.op.dim();
            if (op == "b") {
                gaps = {{"b", *q.b.max_elem_gap}, {"b+", *q.b_dag.max_elem_gap}};
            } else {
                gaps = {{"B", *q.big_b.max_elem_gap}};
            }
        } else if (op == "c") {
            const LadderPair p = quantize_sgii(k, opts);
            gaps = {{"c-", *p.lower.max_elem_gap}, {"c+", *p.raise.max_elem_gap}};
            dim = p.lower.op.dim();
        } else {
            throw DomainError("unknown operator '" + op + "' (a, A, b, B, c)");
        }
        for (const auto& [name, gap] : gaps) {
            const bool ok = t.add(gap <= tol);
            out << "quantization op=" << name << " kappa=" << num(k);
            if (op == "A" || op == "B") out << " gamma=" << num(cfg.gamma);
            out << " dim=" << dim << " max_rel_gap=" << sci(gap) << " tol=" << sci(tol) << " "
                << verdict(ok) << "\n";
        }
    }
    return t.finish(out);
}

int cmd_contract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Family f = family_of(cfg);
    if (f != Family::sgi && f != Family::sgii) throw DomainError("contract supports sgi and sgii");
    const bool sgi = f == Family::sgi;
    const std::vector<double> ks =
        kappas(cfg, f, sgi ? std::vector<double>{10, 20, 40, 80, 160} : std::vector<double>{5.5, 10.5, 20.5, 40.5, 80.5});
    const int n_max = cfg.dim > 0 ? cfg.dim : 8;
    SgiiContractionOptions opts;
    if (cfg.sgii_radius == "half") {
        opts.radius = SgiiRadius::half_l;
    } else if (cfg.sgii_radius != "sqrt") {
        throw DomainError("--sgii-radius must be sqrt or half");
    }
    if (cfg.sgii_norm == "full") {
        opts.norm = SgiiNorm::full;
    } else if (cfg.sgii_norm != "lower") {
        throw DomainError("--sgii-norm must be lower or full");
    }
    std::vector<double> grid = ks;
    if (!sgi) {
        for (double& k : grid) {
            if (std::fmod(2.0 * k, 2.0) != 1.0) throw DomainError("sgii needs kappa = L + 1/2");
            k -= 0.5;
        }
    }
    const Complex z = std::polar(cfg.alpha_r, cfg.alpha_phi);
    const ContractionReport rep =
        contraction_report(sgi ? ContractionFamily::sgi : ContractionFamily::sgii, grid, z, n_max,
                           Execution::parallel, opts);

    std::ostringstream csv;
    csv << "# sgcs contract\n# family=" << family_name(f) << "\n# kappa=" << join(ks)
        << "\n# z_r=" << format_double(std::abs(z)) << "\n# z_phi=" << format_double(std::arg(z))
        << "\n# n_max=" << n_max << "\n";
    if (!sgi) csv << "# sgii_radius=" << cfg.sgii_radius << "\n# sgii_norm=" << cfg.sgii_norm << "\n";
    csv << "kappa,coeff_gap,op_gap\n";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        csv << format_double(ks[i]) << "," << format_double(rep.sup_coeff_gap[i]) << ","
            << format_double(rep.op_gap[i]) << "\n";
    }
    emit(cfg, csv.str(), out);
    if (!rep.strictly_decreasing()) {
        err << "check failed: gaps are not strictly decreasing along the grid\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

int cmd_verify_suite(const RunConfig& cfg, std::ostream& out) {
    static const char* const kSuites[] = {"identity", "algebra", "quantization", "contraction"};
    const std::string name = cfg.suite.empty() ? "all" : cfg.suite;
    if (name != "all" && std::find(std::begin(kSuites), std::end(kSuites), name) == std::end(kSuites)) {
        throw DomainError("unknown suite '" + name + "'");
    }
    int code = kExitPass;
    auto merge = [&](int c) { code = std::max(code, c); };
    auto with = [&](auto&& edit) {
        RunConfig c;
        c.tol = cfg.tol;
        edit(c);
        return c;
    };
    if (name == "all" || name == "identity") {
        merge(cmd_verify_identity(with([](RunConfig& c) { c.family = "msg"; }), out));
        merge(cmd_verify_identity(with([](RunConfig& c) { c.family = "sgi"; c.kappa = {1.5, 2, 4}; }), out));
        merge(cmd_verify_identity(with([](RunConfig& c) { c.family = "sgii"; c.kappa = {0.5, 1.5, 2.5}; }), out));
        merge(cmd_verify_identity(with([](RunConfig& c) { c.family = "su11"; c.kappa = {1.5, 2}; }), out));
    }
    if (name == "all" || name == "algebra") {
        merge(cmd_verify_algebra(with([](RunConfig& c) { c.algebra = "su11"; c.kappa = {1, 2, 5}; }), out));
        merge(cmd_verify_algebra(with([](RunConfig& c) { c.algebra = "su2"; c.kappa = {0.5, 2, 3.5}; }), out));
        merge(cmd_verify_algebra(with([](RunConfig& c) { c.algebra = "sg"; }), out));
    }
    if (name == "all" || name == "quantization") {
        merge(cmd_verify_quantization(with([](RunConfig& c) { c.op = "a"; c.kappa = {1.5, 2, 3}; }), out));
        for (double g : {-0.5, 0.7, 2.0}) {
            merge(cmd_verify_quantization(with([g](RunConfig& c) { c.op = "A"; c.kappa = {2, 3}; c.gamma = g; }), out));
        }
        merge(cmd_verify_quantization(with([](RunConfig& c) { c.op = "b"; c.kappa = {1.5, 2, 3}; }), out));
        for (double g : {0.0, 1.0, 2.5}) {
            merge(cmd_verify_quantization(with([g](RunConfig& c) { c.op = "B"; c.kappa = {2, 3}; c.gamma = g; }), out));
        }
        merge(cmd_verify_quantization(with([](RunConfig& c) { c.op = "c"; c.kappa = {1.5, 2.5, 4.5}; }), out));
    }
    if (name == "all" || name == "contraction") {
        for (const char* fam : {"sgi", "sgii"}) {
            std::ostringstream csv, diag;
            const int c = cmd_contract(with([fam](RunConfig& r) { r.family = fam; }), csv, diag);
            out << "contraction family=" << fam << " strictly_decreasing " << verdict(c == kExitPass) << "\n";
            merge(c);
        }
    }
    out << "suite " << name << ": " << verdict(code == kExitPass) << "\n";
    return code;
}

}  // namespace sgcs::cli
