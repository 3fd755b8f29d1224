#pragma once

#include <complex>

#include "fracpow/types.hpp"

namespace fracpow {

/// SE tuning: step h, truncation indices and the strip half-width d they were
/// balanced for. M = ceil(pi d / (alpha h^2)), N = ceil(pi d / ((1-alpha) h^2)).
struct SEParams {
    double d;
    double h;
    int M;
    int N;
    int n;  // M + N + 1, the actual number of shifted solves
};

/// DE tuning bundle produced by de_config: the closed-form scaling tau*, the
/// strip half-width d from the exact pole at lambda = 1, the step h and the
/// constants c1 = 2 pi^2 r, c2 = 4 pi r / mu behind s_n.
struct DEConfig {
    int n;
    double r;
    double c1;
    double c2;
    double s_n;
    double tau;
    double d;
    double h;
    FractionalOrder order;
};

/// Principal pole of the DE integrand: x0 = asinh((1/pi) ln(tau/lambda) + i),
/// the singularity closest to the real axis. 0 < Im x0 <= pi/2.
struct PoleLocation {
    std::complex<double> x0;
    double im_x0;
};

/// SE truncation balanced against the discretization error for the given step.
/// Throws ParameterError unless h > 0 and d in (0, pi/2].
SEParams se_params_from_h(const FractionalOrder& order, double h, double d);

/// SE parameters for a target solve budget: h = sqrt(pi d / (n alpha (1-alpha)))
/// and the balanced M, N. The returned n is the actual count M+N+1, which can
/// exceed the target by the ceiling slack. Requires n_target >= 3.
SEParams se_params_from_n(const FractionalOrder& order, int n_target, double d);

/// s_n = sqrt(c1 n / ln(c2 n)). Throws ParameterError when c2 n <= 1 (the
/// logarithm would be nonpositive) or r is outside (0,1).
double sn(int n, const FractionalOrder& order, double r);

/// Closed-form DE scaling tau* = exp(0.3 s_n / sqrt(alpha)). The exact root of
/// the equalization equation is (-3 + sqrt(13))/2 = 0.3028...; the hard-coded
/// 0.3 is the value the rest of the machinery is calibrated against.
double tau_star(int n, const FractionalOrder& order, double r);

/// Exact principal pole. Computed via the reflection asinh(w) = -asinh(-w)
/// when Re(w) < 0; the naive log(w + sqrt(w^2+1)) loses all accuracy there.
/// Requires lambda >= 1 and tau >= 1.
PoleLocation pole_x0(double lambda, double tau);

/// Asymptotic pole height pi / ln(lambda/tau), valid for lambda >> tau.
/// Throws ParameterError unless lambda > tau.
double im_x0_large_lambda(double lambda, double tau);

/// Asymptotic pole height pi / ln(tau) at lambda = 1, valid for tau >> 1.
/// Throws ParameterError unless tau > 1.
double im_x0_large_tau(double tau);

/// Strip half-width d = r Im x0 from the exact pole. The factor r in (0,1)
/// keeps xi(d) bounded away from its singularity at d = pi/2.
double strip_halfwidth(double lambda, double tau, double r);

/// DE step rule h = ln(4 d n / mu) / n, admissible for n >= mu e / (4 d).
/// The error message of the precondition failure names the minimum n.
double de_step(int n, double d, const FractionalOrder& order);

/// Approximate location of the interior maximum of the DE error landscape:
/// lambda* = tau exp(s_n / sqrt(alpha)).
double lambda_star(int n, const FractionalOrder& order, double tau, double r);

/// Assembles the full DE tuning pipeline: tau* from the closed form, d from
/// the exact pole at lambda = 1, h from the step rule. Deterministic.
DEConfig de_config(int n, const FractionalOrder& order, double r);

/// Builds the DE quadrature rule described by a config.
QuadratureRule build_rule(const DEConfig& config);

inline constexpr double kDefaultSafetyFactor = 0.95;

}  // namespace fracpow
