#pragma once

// Command-line front end. Everything the `sgcs` executable does goes through
// run(), so tests drive it in-process with the same argument vectors.
//
//   sgcs coeffs               --family F [--kappa K] --alpha-r R --alpha-phi P [--dim D]
//   sgcs stats-sweep          --family F --kappa K1,K2 --grid MIN:MAX:STEPS [--by-nbar]
//   sgcs verify-identity      --family F --kappa K1,... [--dim NMAX]
//   sgcs verify-algebra       --algebra {su11|su2|sg} --kappa K1,... [--dim D]
//   sgcs verify-quantization  --op {a|A|b|B|c} --kappa K1,... [--gamma G]
//   sgcs contract             --family {sgi|sgii} --kappa K1,... --alpha-r |z| [--dim NMAX]
//   sgcs verify               --suite {identity|algebra|quantization|contraction|all}
//
// Options may also come from --config FILE (key=value lines); flags win.
// Exit codes: 0 pass, 1 check failure, 2 usage or parameter error, 3 numerical failure.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgcs::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct Grid {
    double min = 0.0;
    double max = 5.0;
    int steps = 51;

    // min + i (max - min)/(steps - 1); the last point is exactly max.
    std::vector<double> points() const;
};

// "min:max:steps"; throws DomainError unless steps >= 2, min >= 0, max >= min.
Grid parse_grid(std::string_view text);

// 17 significant digits, C locale.
std::string format_double(double x);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgcs::cli
