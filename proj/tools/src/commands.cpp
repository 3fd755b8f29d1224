#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "csv.hpp"
#include "fracpow/estimates.hpp"
#include "fracpow/kernel.hpp"
#include "fracpow/matrix_io.hpp"
#include "fracpow/operators.hpp"
#include "fracpow/parallel.hpp"
#include "fracpow/params.hpp"

namespace fracpow::cli {

namespace {

constexpr double kPi = std::numbers::pi;

Transform resolve_transform(const RunConfig& cfg) {
    if (cfg.transform == "se")
        return Transform::SE;
    if (cfg.transform == "de")
        return Transform::DE;
    throw ParameterError("--transform must be 'se' or 'de'");
}

// Strip half-width override; pi/2 when nothing was provided.
double resolve_d(const RunConfig& cfg, bool* provided) {
    if (cfg.d > 0.0 && cfg.d_pi_over > 0)
        throw ParameterError("provide at most one of --d and --d-pi-over");
    if (provided)
        *provided = cfg.d > 0.0 || cfg.d_pi_over > 0;
    if (cfg.d > 0.0)
        return cfg.d;
    if (cfg.d_pi_over > 0)
        return kPi / cfg.d_pi_over;
    return kPi / 2.0;
}

QuadratureRule build_se(const RunConfig& cfg, SEParams* params_out) {
    const bool has_n = cfg.n >= 0;
    const bool has_h = cfg.h > 0.0;
    if (has_n == has_h)
        throw ParameterError("provide exactly one of --n and --h");
    const FractionalOrder order(cfg.alpha);
    const double d = resolve_d(cfg, nullptr);
    const SEParams p = has_h ? se_params_from_h(order, cfg.h, d)
                             : se_params_from_n(order, cfg.n, d);
    QuadratureRule rule = build_se_rule(order, p.h, p.M, p.N);
    rule.d = p.d;
    if (params_out)
        *params_out = p;
    return rule;
}

struct DeContext {
    double tau;
    double d;
    double h;
};

// DE rule anchored at a spectral point: lambda = 1 for operator work, the
// target lambda itself in scalar mode.
QuadratureRule build_de(const RunConfig& cfg, double anchor_lambda, DeContext* ctx_out) {
    if (cfg.h > 0.0)
        throw ParameterError("the DE rule is tuned from --n; --h is not accepted");
    if (cfg.n < 0)
        throw ParameterError("the DE rule requires --n");
    const FractionalOrder order(cfg.alpha);
    const double tau = cfg.tau > 0.0 ? cfg.tau : tau_star(cfg.n, order, cfg.r);
    bool d_provided = false;
    double d = resolve_d(cfg, &d_provided);
    if (!d_provided)
        d = strip_halfwidth(anchor_lambda, tau, cfg.r);
    const double h = de_step(cfg.n, d, order);
    QuadratureRule rule = build_de_rule(order, tau, h, cfg.n);
    rule.d = d;
    if (ctx_out)
        *ctx_out = {tau, d, h};
    return rule;
}

void check_lambda_admissible(double lambda) {
    if (!(lambda >= 1.0))
        throw ParameterError(
            "lambda < 1 is outside the admissible spectrum; rescale via the identity "
            "L^-a = m^-a (L/m)^-a (operator mode: --spectrum-lower-bound)");
}

int count_applied_terms(const QuadratureRule& rule) {
    int applied = 0;
    for (const ResolventTerm& t : rule.terms)
        if (t.weight != 0.0)
            ++applied;
    return applied;
}

}  // namespace

int run_nodes(const RunConfig& cfg) {
    Output out(cfg.out_path);
    std::ostream& os = out.stream();

    QuadratureRule rule = [&] {
        if (resolve_transform(cfg) == Transform::SE) {
            SEParams p{};
            QuadratureRule r = build_se(cfg, &p);
            os << "# transform=se alpha=" << g10(cfg.alpha) << " h=" << g10(p.h)
               << " d=" << g10(p.d) << " M=" << p.M << " N=" << p.N << " n=" << p.n
               << "\n";
            return r;
        }
        DeContext ctx{};
        QuadratureRule r = build_de(cfg, 1.0, &ctx);
        os << "# transform=de alpha=" << g10(cfg.alpha) << " n=" << cfg.n
           << " r=" << g10(cfg.r) << " tau=" << g10(ctx.tau) << " d=" << g10(ctx.d)
           << " h=" << g10(ctx.h) << "\n";
        return r;
    }();

    os << "index,log_weight,weight,shift\n";
    for (int l = -rule.M; l <= rule.N; ++l) {
        const ResolventTerm& t = rule.term(l);
        os << l << ',' << g17(t.log_weight) << ',' << g17(t.weight) << ','
           << g17(t.shift) << '\n';
    }
    out.finish(cfg.out_path);
    return 0;
}

int run_scalar(const RunConfig& cfg) {
    if (cfg.lambdas.empty())
        throw ParameterError("scalar mode requires --lambda");
    for (double lambda : cfg.lambdas)
        check_lambda_admissible(lambda);

    const FractionalOrder order(cfg.alpha);
    const Transform transform = resolve_transform(cfg);

    std::optional<QuadratureRule> se_rule;
    double se_estimate = 0.0;
    if (transform == Transform::SE) {
        SEParams p{};
        se_rule = build_se(cfg, &p);
        se_estimate = se_bound(order, cfg.n >= 0 ? cfg.n : p.n, p.d).value;
    }

    std::vector<std::string> rows(cfg.lambdas.size());
    parallel_for(cfg.lambdas.size(), [&](std::size_t i) {
        const double lambda = cfg.lambdas[i];
        double approx = 0.0;
        double estimate = 0.0;
        int inversions = 0;
        if (transform == Transform::SE) {
            approx = eval_rule(*se_rule, lambda);
            estimate = se_estimate;
            inversions = se_rule->size();
        } else {
            DeContext ctx{};
            const QuadratureRule rule = build_de(cfg, lambda, &ctx);
            approx = eval_rule(rule, lambda);
            estimate = de_estimate_scalar(lambda, ctx.tau, cfg.n, order, cfg.r).value;
            inversions = rule.size();
        }
        const double exact = std::pow(lambda, -order.alpha);
        rows[i] = g17(lambda) + "," + std::to_string(inversions) + "," + g17(approx) +
                  "," + g17(exact) + "," + g17(std::fabs(exact - approx)) + "," +
                  g17(estimate);
    });

    Output out(cfg.out_path);
    std::ostream& os = out.stream();
    os << "lambda,n,approx,exact,abs_error,estimate\n";
    for (const std::string& row : rows)
        os << row << '\n';
    out.finish(cfg.out_path);
    return 0;
}

int run_operator(const RunConfig& cfg) {
    if (cfg.out_path.empty())
        throw ParameterError("operator mode requires --out for the result vector");
    if (cfg.artificial != cfg.matrix_path.empty())
        throw ParameterError("provide exactly one of --artificial and --matrix");

    std::string solver = cfg.solver;
    if (solver.empty())
        solver = cfg.artificial ? "diag" : "dense";
    if (solver != "diag" && solver != "dense" && solver != "cg")
        throw ParameterError("--solver must be one of diag, dense, cg");

    const FractionalOrder order(cfg.alpha);
    const Transform transform = resolve_transform(cfg);

    // The a-priori estimate for the requested rule; the CG tolerance is
    // subordinated to it so solver error never dominates the quadrature error.
    QuadratureRule rule = transform == Transform::SE ? build_se(cfg, nullptr)
                                                     : build_de(cfg, 1.0, nullptr);
    double predicted = 0.0;
    if (transform == Transform::SE) {
        predicted = se_bound(order, cfg.n >= 0 ? cfg.n : rule.size(), rule.d).value;
    } else {
        predicted = de_operator_estimate(cfg.n, order, cfg.r).value;
    }

    std::unique_ptr<ShiftedSolveOperator> op;
    std::unique_ptr<DiagonalOperator> diag;
    if (solver == "diag") {
        if (cfg.artificial) {
            diag = std::make_unique<DiagonalOperator>(artificial_operator());
        } else {
            const Eigen::MatrixXd m = load_matrix_market_dense(cfg.matrix_path);
            Eigen::MatrixXd off = m;
            off.diagonal().setZero();
            if (off.cwiseAbs().maxCoeff() != 0.0)
                throw ParameterError("--solver diag requires a diagonal matrix");
            diag = std::make_unique<DiagonalOperator>(m.diagonal());
        }
    } else if (cfg.artificial) {
        throw ParameterError("--artificial is served by the diag solver");
    } else if (solver == "dense") {
        op = std::make_unique<DenseSPDOperator>(load_matrix_market_dense(cfg.matrix_path),
                                                cfg.spectrum_lower_bound);
    } else {
        const double cg_tol =
            cfg.cg_tol > 0.0 ? cfg.cg_tol : std::min(1e-12, 0.01 * predicted);
        Eigen::SparseMatrix<double> m = load_matrix_market_sparse(cfg.matrix_path);
        const int max_iter = std::max<int>(1000, 10 * static_cast<int>(m.rows()));
        op = std::make_unique<IterativeOperator>(std::move(m), cfg.spectrum_lower_bound,
                                                 cg_tol, max_iter);
    }
    const ShiftedSolveOperator& oper = diag ? *diag : *op;

    const Eigen::VectorXd g = cfg.vector_path.empty()
                                  ? Eigen::VectorXd::Ones(oper.dim()).eval()
                                  : load_vector_text(cfg.vector_path);
    if (g.size() != oper.dim())
        throw DimensionError("vector length " + std::to_string(g.size()) +
                             " does not match operator dimension " +
                             std::to_string(oper.dim()));

    Eigen::VectorXd result;
    int terms_applied = count_applied_terms(rule);
    if (oper.spectrum_lower_bound() >= 1.0) {
        FracpowResult res = apply_fracpow(rule, oper, g);
        result = std::move(res.vector);
        terms_applied = res.terms_applied;
    } else {
        result = scaled_fracpow(oper, order, [&](const FractionalOrder&) { return rule; }, g);
    }
    save_vector_text(cfg.out_path, result);

    std::optional<double> sup_error;
    if (cfg.diag_exact) {
        if (!diag)
            throw ParameterError("--diag-exact requires the diag solver");
        sup_error = operator_error_sup(rule, *diag);
    }

    std::cout << "dim,terms_applied,n,estimate" << (sup_error ? ",sup_error" : "")
              << "\n";
    std::cout << oper.dim() << ',' << terms_applied << ',' << rule.size() << ','
              << g17(predicted);
    if (sup_error)
        std::cout << ',' << g17(*sup_error);
    std::cout << "\n";
    return 0;
}

int run_estimate(const RunConfig& cfg) {
    if (cfg.kind.empty())
        throw ParameterError("--kind is required (se, ere, ere2, fest)");
    if (cfg.n < 0)
        throw ParameterError("--n is required");
    const FractionalOrder order(cfg.alpha);

    Output out(cfg.out_path);
    std::ostream& os = out.stream();
    os << "kind=" << cfg.kind << "\nalpha=" << g10(cfg.alpha) << "\nn=" << cfg.n
       << "\nr=" << g10(cfg.r) << "\n";

    if (cfg.kind == "se") {
        const double d = resolve_d(cfg, nullptr);
        const SEParams p = se_params_from_n(order, cfg.n, d);
        os << "d=" << g10(d) << "\nh=" << g10(p.h) << "\nM=" << p.M << "\nN=" << p.N
           << "\nactual_n=" << p.n << "\nestimate=" << g17(se_bound(order, cfg.n, d).value)
           << "\n";
    } else if (cfg.kind == "ere" || cfg.kind == "ere2") {
        if (cfg.lambdas.size() != 1)
            throw ParameterError("--kind " + cfg.kind + " requires exactly one --lambda");
        const double lambda = cfg.lambdas.front();
        check_lambda_admissible(lambda);
        const double tau = cfg.tau > 0.0 ? cfg.tau : tau_star(cfg.n, order, cfg.r);
        const double d = strip_halfwidth(lambda, tau, cfg.r);
        const ErrorEstimate est = cfg.kind == "ere"
                                      ? de_estimate_scalar(lambda, tau, cfg.n, order, cfg.r)
                                      : de_estimate_okayama(lambda, tau, cfg.n, order, cfg.r);
        os << "lambda=" << g10(lambda) << "\ntau=" << g10(tau) << "\nd=" << g10(d)
           << "\nh=" << g10(de_step(cfg.n, d, order)) << "\ns_n=" << g10(sn(cfg.n, order, cfg.r))
           << "\nestimate=" << g17(est.value) << "\n";
    } else if (cfg.kind == "fest") {
        const DEConfig de = de_config(cfg.n, order, cfg.r);
        os << "s_n=" << g10(de.s_n) << "\ntau_star=" << g10(de.tau) << "\nd=" << g10(de.d)
           << "\nh=" << g10(de.h)
           << "\nestimate=" << g17(de_operator_estimate(cfg.n, order, cfg.r).value) << "\n";
    } else {
        throw ParameterError("unknown estimate kind: " + cfg.kind);
    }
    out.finish(cfg.out_path);
    return 0;
}

}  // namespace fracpow::cli
