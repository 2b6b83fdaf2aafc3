#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_internal.hpp"
#include "sgcs/error.hpp"

namespace sgcs::cli {

std::vector<double> Grid::points() const {
    std::vector<double> p(static_cast<std::size_t>(steps));
    const double h = (max - min) / (steps - 1);
    for (int i = 0; i < steps; ++i) p[static_cast<std::size_t>(i)] = min + i * h;
    p.back() = max;
    return p;
}

Grid parse_grid(std::string_view text) {
    const std::string s(text);
    Grid g;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &g.min, &g.max, &g.steps, &extra) != 3) {
        throw DomainError("grid must be MIN:MAX:STEPS, got '" + s + "'");
    }
    if (!std::isfinite(g.min) || !std::isfinite(g.max)) throw DomainError("grid bounds must be finite");
    if (g.steps < 2) throw DomainError("grid needs at least 2 steps");
    if (g.min < 0.0) throw DomainError("grid minimum must be >= 0");
    if (g.max < g.min) throw DomainError("grid maximum must be >= minimum");
    return g;
}

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("cannot open output file '" + cfg.out + "'");
    f << text;
    f.close();
    if (!f) throw DomainError("failed writing output file '" + cfg.out + "'");
}

namespace {

void check_writable(const std::string& path) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary | std::ios::app);
    if (!f) throw DomainError("output path is not writable: '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Generalized Susskind-Glogower coherent states"};
    app.require_subcommand(1, 1);
    app.set_config("--config", "", "key=value file; explicit flags take precedence");
    app.add_option("--family", cfg.family, "sg|msg|sgi|sgii|su11|su2|gs");
    app.add_option("--kappa", cfg.kappa, "index list, comma separated (L+1/2 for sgii)")->delimiter(',');
    app.add_option("--alpha-r", cfg.alpha_r, "modulus of the coherence parameter");
    app.add_option("--alpha-phi", cfg.alpha_phi, "phase of the coherence parameter");
    app.add_option("--grid", cfg.grid, "MIN:MAX:STEPS");
    app.add_option("--dim", cfg.dim, "truncation dimension or n_max");
    app.add_option("--out", cfg.out, "output CSV path (stdout if omitted)");
    app.add_option("--tol", cfg.tol, "pass tolerance override");
    app.add_option("--suite", cfg.suite, "identity|algebra|quantization|contraction|all");
    app.add_option("--algebra", cfg.algebra, "su11|su2|sg");
    app.add_option("--op", cfg.op, "a|A|b|B|c");
    app.add_option("--gamma", cfg.gamma, "exponent for A and B");
    app.add_flag("--by-nbar", cfg.by_nbar, "interpret the grid as target mean photon numbers");
    app.add_option("--sgii-radius", cfg.sgii_radius, "sqrt: r = sqrt(L/2)|z|, half: r = (L/2)|z|");
    app.add_option("--sgii-norm", cfg.sgii_norm, "lower: lower-fold normalization, full: whole state");
    for (const char* name : {"coeffs", "stats-sweep", "verify-identity", "verify-algebra", "verify-quantization",
                             "contract", "verify"}) {
        app.add_subcommand(name)->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        check_writable(cfg.out);
        if (cfg.command == "coeffs") return cmd_coeffs(cfg, out, err);
        if (cfg.command == "stats-sweep") return cmd_stats_sweep(cfg, out, err);
        if (cfg.command == "verify-identity") return cmd_verify_identity(cfg, out);
        if (cfg.command == "verify-algebra") return cmd_verify_algebra(cfg, out);
        if (cfg.command == "verify-quantization") return cmd_verify_quantization(cfg, out);
        if (cfg.command == "contract") return cmd_contract(cfg, out, err);
        return cmd_verify_suite(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace sgcs::cli
