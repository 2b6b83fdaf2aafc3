#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgcs/cli.hpp"
#include "sgcs/states.hpp"

namespace sgcs::cli {

struct RunConfig {
    std::string command;
    std::string family = "gs";
    std::vector<double> kappa;  // empty: command default
    double alpha_r = 1.0;
    double alpha_phi = 0.0;
    std::string grid = "0:5:51";
    int dim = 0;
    std::string out;
    std::optional<double> tol;
    std::string suite;
    std::string algebra = "su11";
    std::string op = "a";
    double gamma = 0.0;
    bool by_nbar = false;
    std::string sgii_radius = "sqrt";
    std::string sgii_norm = "lower";
};

// Writes to cfg.out, or to `out` when no path was given.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out);

int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_stats_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_identity(const RunConfig& cfg, std::ostream& out);
int cmd_verify_algebra(const RunConfig& cfg, std::ostream& out);
int cmd_verify_quantization(const RunConfig& cfg, std::ostream& out);
int cmd_contract(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_suite(const RunConfig& cfg, std::ostream& out);

}  // namespace sgcs::cli
