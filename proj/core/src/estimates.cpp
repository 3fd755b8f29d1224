#include "fracpow/estimates.hpp"

#include <cmath>
#include <numbers>

#include "fracpow/params.hpp"

namespace fracpow {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(-2 pi d n / ln(4 d n / mu)), the shared discretization factor of the DE
// estimators. de_step performs the admissibility checks.
double de_decay_factor(double d, int n, const FractionalOrder& order) {
    const double h = de_step(n, d, order);
    return std::exp(-2.0 * kPi * d / h);
}

}  // namespace

double generic_trapezoid_bound(double Nfd, double d, double h, double C, double beta,
                               double gamma, int M, int N) {
    if (!(h > 0.0) || !(d > 0.0))
        throw ParameterError("strip half-width d and step h must be positive");
    const double t = kPi * d / h;
    // e^{-t} / (2 sinh t) = e^{-2t} / (1 - e^{-2t})
    const double discretization = Nfd * std::exp(-2.0 * t) / (-std::expm1(-2.0 * t));
    return discretization + (C / beta) * std::exp(-beta * M * h) +
           (C / gamma) * std::exp(-gamma * N * h);
}

ErrorEstimate se_bound(const FractionalOrder& order, int n, double d) {
    if (n < 1)
        throw ParameterError("SE bound requires n >= 1");
    if (!(d > 0.0) || !(d <= kPi / 2.0))
        throw ParameterError("strip half-width d must lie in (0, pi/2]");
    const double a = order.alpha;
    const double value = std::sin(a * kPi) / kPi * 3.0 / (a * (1.0 - a)) *
                         std::exp(-2.0 * std::sqrt(kPi * d * a * (1.0 - a)) * std::sqrt(n));
    EstimateInputs in;
    in.alpha = a;
    in.n = n;
    in.d = d;
    return {value, EstimateKind::SE_BOUND, in};
}

double xi(double d) {
    if (!(d > 0.0) || !(d < kPi / 2.0))
        throw ParameterError("xi is defined on (0, pi/2)");
    return 2.0 / (std::cos(d) * std::cos(kPi / 2.0 * std::sin(d)));
}

double k_alpha(const FractionalOrder& order) {
    const double a = order.alpha;
    return 1.0 / (a * (1.0 - a)) /
           (-std::expm1(-kPi / 2.0 * order.mu * std::numbers::e));
}

double de_phi(double lambda, double tau, int n, const FractionalOrder& order, double r) {
    const double d = strip_halfwidth(lambda, tau, r);
    return xi(d) * std::pow(lambda, -order.alpha) * de_decay_factor(d, n, order);
}

ErrorEstimate de_estimate_scalar(double lambda, double tau, int n,
                                 const FractionalOrder& order, double r) {
    EstimateInputs in;
    in.alpha = order.alpha;
    in.n = n;
    in.lambda = lambda;
    in.tau = tau;
    in.d = strip_halfwidth(lambda, tau, r);
    in.r = r;
    return {k_alpha(order) * de_phi(lambda, tau, n, order, r), EstimateKind::DE_SCALAR, in};
}

ErrorEstimate de_estimate_okayama(double lambda, double tau, int n,
                                  const FractionalOrder& order, double r) {
    const double d = strip_halfwidth(lambda, tau, r);
    const double value = std::pow(tau, -order.alpha) / order.mu * order.alpha *
                         (1.0 - order.alpha) *
                         (k_alpha(order) * xi(d) + std::exp(kPi / 2.0 * order.nu)) *
                         de_decay_factor(d, n, order);
    EstimateInputs in;
    in.alpha = order.alpha;
    in.n = n;
    in.lambda = lambda;
    in.tau = tau;
    in.d = d;
    in.r = r;
    return {value, EstimateKind::DE_OKAYAMA, in};
}

double de_phi_at_lambda_star(double tau, int n, const FractionalOrder& order, double r) {
    return 2.0 * std::pow(tau, -order.alpha) *
           std::exp(-3.0 * std::sqrt(order.alpha) * sn(n, order, r));
}

double de_phi_at_one(double tau, int n, const FractionalOrder& order, double r) {
    if (!(tau > 1.0))
        throw ParameterError("phi at lambda = 1 requires tau > 1");
    const double s = sn(n, order, r);
    return 2.0 * std::exp(-s * s / std::log(tau));
}

ErrorEstimate de_operator_estimate(int n, const FractionalOrder& order, double r) {
    const double k_bar = 4.0 * std::sin(order.alpha * kPi) / kPi * k_alpha(order);
    const double value =
        k_bar * std::exp(-3.3 * std::sqrt(order.alpha) * sn(n, order, r));
    EstimateInputs in;
    in.alpha = order.alpha;
    in.n = n;
    in.r = r;
    return {value, EstimateKind::DE_OPERATOR, in};
}

}  // namespace fracpow
