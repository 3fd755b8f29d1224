#pragma once

#include <optional>

#include "fracpow/types.hpp"

namespace fracpow {

enum class EstimateKind { SE_BOUND, DE_SCALAR, DE_OKAYAMA, DE_OPERATOR, GENERIC };

/// Inputs an estimator was evaluated at; optional fields are absent when the
/// estimator does not depend on them.
struct EstimateInputs {
    double alpha = 0.0;
    int n = 0;
    std::optional<double> lambda;
    std::optional<double> tau;
    std::optional<double> d;
    std::optional<double> r;
};

/// A nonnegative, finite error estimate together with its provenance.
///
/// Except for the SE bound, which is proved, these are estimators in the
/// asymptotic sense: reliable for tracking convergence, not certified upper
/// bounds.
struct ErrorEstimate {
    double value;
    EstimateKind kind;
    EstimateInputs inputs;
};

/// Generic trapezoidal error bound for a function that is analytic in the
/// strip of half-width d with boundary mass Nfd and decays like
/// C e^{-beta |x|} on the left and C e^{-gamma x} on the right:
///   Nfd e^{-pi d/h} / (2 sinh(pi d/h)) + (C/beta) e^{-beta M h} + (C/gamma) e^{-gamma N h}.
double generic_trapezoid_bound(double Nfd, double d, double h, double C, double beta,
                               double gamma, int M, int N);

/// A-priori SE bound (sin(alpha pi)/pi) (3/(alpha(1-alpha)))
/// exp(-2 sqrt(pi d alpha (1-alpha)) sqrt(n)), valid for the balanced
/// parameter choice of se_params_from_n. For d = pi/2 the exponent reduces to
/// -pi sqrt(2 alpha (1-alpha)) sqrt(n).
ErrorEstimate se_bound(const FractionalOrder& order, int n, double d);

/// xi(d) = 2 / (cos d cos((pi/2) sin d)), the strip-dependent constant of the
/// DE discretization bound. Defined on (0, pi/2), always > 2, diverges at pi/2.
double xi(double d);

/// K_alpha = 1/(alpha(1-alpha)) * 1/(1 - e^{-(pi/2) mu e}). Symmetric in
/// alpha <-> 1-alpha.
double k_alpha(const FractionalOrder& order);

/// DE error landscape phi(lambda, tau) = xi(d) lambda^-alpha
/// exp(-2 pi d n / ln(4 d n / mu)) with d the exact-pole strip half-width at
/// (lambda, tau). Requires the step-rule admissibility n >= mu e / (4d).
double de_phi(double lambda, double tau, int n, const FractionalOrder& order, double r);

/// Scalar DE estimator K_alpha * phi(lambda, tau).
ErrorEstimate de_estimate_scalar(double lambda, double tau, int n,
                                 const FractionalOrder& order, double r);

/// Okayama-style DE estimator with tau^-alpha prefactor:
/// (tau^-alpha / mu) alpha (1-alpha) (K_alpha xi(d) + e^{(pi/2) nu})
/// exp(-2 pi d n / ln(4 d n / mu)).
ErrorEstimate de_estimate_okayama(double lambda, double tau, int n,
                                  const FractionalOrder& order, double r);

/// Closed-form approximation of phi at the interior maximum:
/// 2 tau^-alpha exp(-3 sqrt(alpha) s_n).
double de_phi_at_lambda_star(double tau, int n, const FractionalOrder& order, double r);

/// Closed-form approximation of phi at lambda = 1: 2 exp(-s_n^2 / ln tau).
/// Requires tau > 1.
double de_phi_at_one(double tau, int n, const FractionalOrder& order, double r);

/// Operator-level DE estimator K̄_alpha exp(-3.3 sqrt(alpha) s_n) with
/// K̄_alpha = 4 (sin(alpha pi)/pi) K_alpha.
ErrorEstimate de_operator_estimate(int n, const FractionalOrder& order, double r);

}  // namespace fracpow
