#include <cmath>
#include <string>
#include <vector>

#include "commands.hpp"
#include "csv.hpp"
#include "fracpow/estimates.hpp"
#include "fracpow/kernel.hpp"
#include "fracpow/operators.hpp"
#include "fracpow/parallel.hpp"
#include "fracpow/params.hpp"

namespace fracpow::cli {

namespace {

constexpr double kPiHalf = 1.5707963267948966;

const std::vector<double> kFigureAlphas = {0.25, 0.5, 0.75};
const std::vector<int> kSweepN = {25, 50, 100, 150, 200, 250, 300, 350, 400};

void write_rows(const RunConfig& cfg, const std::string& header,
                const std::vector<std::string>& comments,
                const std::vector<std::string>& rows) {
    Output out(cfg.out_path);
    std::ostream& os = out.stream();
    for (const std::string& c : comments)
        os << c << '\n';
    os << header << '\n';
    for (const std::string& row : rows)
        os << row << '\n';
    out.finish(cfg.out_path);
}

// SE sup error on the synthetic spectrum, d = pi/4 against d = pi/2.
int figure1(const RunConfig& cfg) {
    const DiagonalOperator scex = artificial_operator();
    std::vector<std::string> rows(kFigureAlphas.size() * kSweepN.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const double alpha = kFigureAlphas[i / kSweepN.size()];
        const int n = kSweepN[i % kSweepN.size()];
        const FractionalOrder order(alpha);
        double errors[2] = {0.0, 0.0};
        const double widths[2] = {kPiHalf / 2.0, kPiHalf};
        for (int k = 0; k < 2; ++k) {
            const SEParams p = se_params_from_n(order, n, widths[k]);
            QuadratureRule rule = build_se_rule(order, p.h, p.M, p.N);
            rule.d = p.d;
            errors[k] = operator_error_sup(rule, scex);
        }
        rows[i] = g10(alpha) + "," + std::to_string(n) + "," + g17(errors[0]) + "," +
                  g17(errors[1]) + "," + g17(se_bound(order, n, kPiHalf).value);
    });
    write_rows(cfg, "alpha,n,err_d_pi4,err_d_pi2,bound", {}, rows);
    return 0;
}

// Scalar DE error against both estimators at a fixed spectral point.
int figure2(const RunConfig& cfg) {
    const FractionalOrder order(cfg.alpha);
    const double lambda = cfg.lambdas.empty() ? 1e12 : cfg.lambdas.front();
    if (cfg.lambdas.size() > 1)
        throw ParameterError("figure 2 uses a single --lambda");
    const double tau = cfg.tau > 0.0 ? cfg.tau : 100.0;
    const double d = strip_halfwidth(lambda, tau, cfg.r);
    const double exact = std::pow(lambda, -order.alpha);

    std::vector<int> ns;
    for (int n = 5; n <= 200; n += 5)
        ns.push_back(n);
    std::vector<std::string> rows(ns.size());
    parallel_for(ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        const double h = de_step(n, d, order);
        const QuadratureRule rule = build_de_rule(order, tau, h, n);
        const double err = std::fabs(exact - eval_rule(rule, lambda));
        rows[i] = std::to_string(n) + "," + g17(err) + "," +
                  g17(de_estimate_scalar(lambda, tau, n, order, cfg.r).value) + "," +
                  g17(de_estimate_okayama(lambda, tau, n, order, cfg.r).value);
    });
    write_rows(cfg,
               "n,err_de,ere,ere2",
               {"# lambda=" + g10(lambda) + " tau=" + g10(tau) + " alpha=" +
                g10(cfg.alpha) + " r=" + g10(cfg.r)},
               rows);
    return 0;
}

// The DE error landscape phi(lambda, tau*) with the closed-form markers.
int figure3(const RunConfig& cfg) {
    const FractionalOrder order(cfg.alpha);
    const int n = cfg.n >= 0 ? cfg.n : 40;
    const DEConfig de = de_config(n, order, cfg.r);
    const double lstar = lambda_star(n, order, de.tau, cfg.r);

    const int points = 2000;
    std::vector<std::string> rows(points);
    parallel_for(rows.size(), [&](std::size_t i) {
        const double lambda = std::pow(10.0, 20.0 * static_cast<double>(i) / (points - 1));
        rows[i] = g17(lambda) + "," + g17(de_phi(lambda, de.tau, n, order, cfg.r)) + ",";
    });
    rows.push_back(g17(lstar) + "," + g17(de_phi(lstar, de.tau, n, order, cfg.r)) +
                   ",phi_max");
    rows.push_back(g17(lstar) + "," + g17(de_phi_at_lambda_star(de.tau, n, order, cfg.r)) +
                   ",phi_max_closed_form");
    rows.push_back("1," + g17(de_phi_at_one(de.tau, n, order, cfg.r)) +
                   ",phi_at_one_closed_form");

    write_rows(cfg,
               "lambda,phi,marker",
               {"# tau_star=" + g10(de.tau) + " lambda_star=" + g10(lstar) + " alpha=" +
                g10(cfg.alpha) + " n=" + std::to_string(n) + " r=" + g10(cfg.r)},
               rows);
    return 0;
}

// DE against SE on the synthetic spectrum, with the operator estimator.
int figure4(const RunConfig& cfg) {
    const DiagonalOperator scex = artificial_operator();
    std::vector<std::string> rows(kFigureAlphas.size() * kSweepN.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const double alpha = kFigureAlphas[i / kSweepN.size()];
        const int n = kSweepN[i % kSweepN.size()];
        const FractionalOrder order(alpha);

        const QuadratureRule de_rule = build_rule(de_config(n, order, cfg.r));
        const double err_de = operator_error_sup(de_rule, scex);

        const SEParams p = se_params_from_n(order, n, kPiHalf);
        QuadratureRule se_rule = build_se_rule(order, p.h, p.M, p.N);
        se_rule.d = p.d;
        const double err_se = operator_error_sup(se_rule, scex);

        rows[i] = g10(alpha) + "," + std::to_string(n) + "," + g17(err_de) + "," +
                  g17(err_se) + "," + g17(de_operator_estimate(n, order, cfg.r).value);
    });
    write_rows(cfg, "alpha,n,err_de,err_se,fest", {}, rows);
    return 0;
}

}  // namespace

int run_figure(const RunConfig& cfg) {
    switch (cfg.figure) {
        case 1:
            return figure1(cfg);
        case 2:
            return figure2(cfg);
        case 3:
            return figure3(cfg);
        case 4:
            return figure4(cfg);
        default:
            throw ParameterError("--figure must be one of 1, 2, 3, 4");
    }
}

}  // namespace fracpow::cli
