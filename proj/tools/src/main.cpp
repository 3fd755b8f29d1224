#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "fracpow/errors.hpp"
#include "options.hpp"

namespace {

using fracpow::cli::RunConfig;

void add_rule_options(CLI::App* cmd, RunConfig& cfg) {
    // --h is a real option here, so help is reachable through --help only.
    cmd->set_help_flag("--help", "Print help");
    cmd->add_option("--transform", cfg.transform, "Quadrature transform: se or de");
    cmd->add_option("--alpha", cfg.alpha, "Fractional order in (0,1)");
    cmd->add_option("--n", cfg.n, "Solve budget (SE) / DE truncation index");
    cmd->add_option("--h", cfg.h, "Explicit SE step (alternative to --n)");
    cmd->add_option("--d", cfg.d, "Strip half-width override");
    cmd->add_option("--d-pi-over", cfg.d_pi_over, "Strip half-width as pi/INT");
    cmd->add_option("--tau", cfg.tau, "DE scaling override (default: tau*)");
    cmd->add_option("--r", cfg.r, "Strip safety factor in (0,1)");
    cmd->add_option("--config", "JSON config file; flags override its values");
    cmd->add_option("--out", cfg.out_path, "Output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional powers of SPD operators by exponentially convergent "
                 "trapezoidal quadrature (SE and DE transforms)"};
    app.set_help_flag("--help", "Print help");
    app.require_subcommand(1);

    RunConfig cfg;
    try {
        const std::string config_path = fracpow::cli::find_config_path(argc, argv);
        if (!config_path.empty())
            fracpow::cli::apply_config_file(config_path, cfg);
    } catch (const fracpow::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitIo;
    } catch (const fracpow::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitUsage;
    }

    CLI::App* nodes = app.add_subcommand("nodes", "Emit the quadrature terms as CSV");
    add_rule_options(nodes, cfg);

    CLI::App* scalar =
        app.add_subcommand("scalar", "Approximate lambda^-alpha at given spectral points");
    add_rule_options(scalar, cfg);
    scalar->add_option("--lambda", cfg.lambdas, "Spectral points (comma separated)")
        ->delimiter(',');

    CLI::App* op = app.add_subcommand("operator", "Apply L^-alpha to a vector");
    add_rule_options(op, cfg);
    op->add_option("--matrix", cfg.matrix_path, "Matrix Market file (symmetric real)");
    op->add_option("--vector", cfg.vector_path, "Right-hand side (default: all ones)");
    op->add_flag("--artificial", cfg.artificial, "Use the built-in diag(1..100)^8 spectrum");
    op->add_flag("--diag-exact", cfg.diag_exact,
                 "Report the exact sup error (diag solver only)");
    op->add_option("--solver", cfg.solver, "diag, dense or cg");
    op->add_option("--spectrum-lower-bound", cfg.spectrum_lower_bound,
                   "Certified lower bound of the spectrum");
    op->add_option("--cg-tol", cfg.cg_tol,
                   "CG relative residual (default: subordinated to the estimate)");

    CLI::App* estimate = app.add_subcommand("estimate", "Print an a-priori error estimate");
    estimate->set_help_flag("--help", "Print help");
    estimate->add_option("--kind", cfg.kind, "se, ere, ere2 or fest");
    estimate->add_option("--alpha", cfg.alpha, "Fractional order in (0,1)");
    estimate->add_option("--n", cfg.n, "Solve budget / truncation index");
    estimate->add_option("--lambda", cfg.lambdas, "Spectral point (ere, ere2)")
        ->delimiter(',');
    estimate->add_option("--tau", cfg.tau, "DE scaling override (default: tau*)");
    estimate->add_option("--r", cfg.r, "Strip safety factor in (0,1)");
    estimate->add_option("--d", cfg.d, "Strip half-width override (se)");
    estimate->add_option("--d-pi-over", cfg.d_pi_over, "Strip half-width as pi/INT");
    estimate->add_option("--config", "JSON config file; flags override its values");
    estimate->add_option("--out", cfg.out_path, "Output path (default: stdout)");

    CLI::App* figure = app.add_subcommand("figure", "Reproduce a result sweep as CSV");
    figure->set_help_flag("--help", "Print help");
    figure->add_option("--figure", cfg.figure, "Sweep id: 1, 2, 3 or 4");
    figure->add_option("--alpha", cfg.alpha, "Fractional order (sweeps 2 and 3)");
    figure->add_option("--n", cfg.n, "Truncation index (sweep 3, default 40)");
    figure->add_option("--tau", cfg.tau, "DE scaling override (sweep 2, default 100)");
    figure->add_option("--lambda", cfg.lambdas, "Spectral point (sweep 2, default 1e12)")
        ->delimiter(',');
    figure->add_option("--r", cfg.r, "Strip safety factor in (0,1)");
    figure->add_option("--config", "JSON config file; flags override its values");
    figure->add_option("--out", cfg.out_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return fracpow::cli::kExitUsage;
    }

    try {
        if (app.got_subcommand(nodes))
            return fracpow::cli::run_nodes(cfg);
        if (app.got_subcommand(scalar))
            return fracpow::cli::run_scalar(cfg);
        if (app.got_subcommand(op))
            return fracpow::cli::run_operator(cfg);
        if (app.got_subcommand(estimate))
            return fracpow::cli::run_estimate(cfg);
        if (app.got_subcommand(figure))
            return fracpow::cli::run_figure(cfg);
    } catch (const fracpow::SymmetryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitSymmetry;
    } catch (const fracpow::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitDimension;
    } catch (const fracpow::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitUsage;
    } catch (const fracpow::SolveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitSolver;
    } catch (const fracpow::OracleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitSolver;
    } catch (const fracpow::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fracpow::cli::kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
