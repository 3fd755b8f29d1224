#pragma once

#include <string>
#include <vector>

namespace fracpow::cli {

// Exit codes; 0 is success.
inline constexpr int kExitUsage = 2;       // parameter / domain errors
inline constexpr int kExitIo = 3;          // file errors
inline constexpr int kExitSolver = 4;      // factorization / CG / eigensolver failures
inline constexpr int kExitDimension = 5;   // dimension mismatch
inline constexpr int kExitSymmetry = 6;    // non-symmetric input matrix

/// Options shared by the subcommands. Sentinel values mean "not provided":
/// n < 0, h <= 0, d <= 0, d_pi_over <= 0, tau <= 0, cg_tol <= 0.
struct RunConfig {
    std::string transform = "se";
    double alpha = 0.5;
    int n = -1;
    double h = 0.0;
    double d = 0.0;
    int d_pi_over = 0;
    double tau = 0.0;
    double r = 0.95;
    std::vector<double> lambdas;
    std::string matrix_path;
    std::string vector_path;
    std::string out_path;
    bool artificial = false;
    bool diag_exact = false;
    std::string solver;
    double spectrum_lower_bound = 1.0;
    double cg_tol = 0.0;
    int figure = 0;
    std::string kind;
};

/// Applies a JSON config file (keys spelled like the long flags) onto cfg.
/// Flags parsed afterwards override these values.
void apply_config_file(const std::string& path, RunConfig& cfg);

/// Pre-scan of argv for --config PATH / --config=PATH.
std::string find_config_path(int argc, char** argv);

}  // namespace fracpow::cli
