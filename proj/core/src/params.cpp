#include "fracpow/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracpow/kernel.hpp"

namespace fracpow {

namespace {

constexpr double kPi = std::numbers::pi;

void check_safety_factor(double r) {
    if (!(r > 0.0) || !(r < 1.0))
        throw ParameterError("safety factor r must lie in (0,1)");
}

void check_spectral_point(double lambda, double tau) {
    if (!(lambda >= 1.0))
        throw ParameterError("lambda must be >= 1");
    if (!(tau >= 1.0))
        throw ParameterError("tau must be >= 1");
}

// Principal asinh, stable for Re(w) >= 0. Under that restriction the real
// parts of w and sqrt(w^2+1) have the same sign and the sum cannot cancel.
std::complex<double> asinh_right_halfplane(std::complex<double> w) {
    return std::log(w + std::sqrt(w * w + 1.0));
}

double c2_log(int n, const FractionalOrder& order, double r) {
    check_safety_factor(r);
    const double c2 = 4.0 * kPi * r / order.mu;
    const double arg = c2 * n;
    if (!(arg > 1.0))
        throw ParameterError("c2 * n must exceed 1 (logarithm nonpositive)");
    return std::log(arg);
}

}  // namespace

SEParams se_params_from_h(const FractionalOrder& order, double h, double d) {
    if (!(h > 0.0))
        throw ParameterError("quadrature step h must be positive");
    if (!(d > 0.0) || !(d <= kPi / 2.0))
        throw ParameterError("strip half-width d must lie in (0, pi/2]");
    const int M = static_cast<int>(std::ceil(kPi * d / (order.alpha * h * h)));
    const int N = static_cast<int>(std::ceil(kPi * d / ((1.0 - order.alpha) * h * h)));
    return {d, h, M, N, M + N + 1};
}

SEParams se_params_from_n(const FractionalOrder& order, int n_target, double d) {
    if (n_target < 3)
        throw ParameterError("SE solve budget n_target must be >= 3");
    if (!(d > 0.0) || !(d <= kPi / 2.0))
        throw ParameterError("strip half-width d must lie in (0, pi/2]");
    const double h = std::sqrt(kPi * d / (n_target * order.alpha * (1.0 - order.alpha)));
    return se_params_from_h(order, h, d);
}

double sn(int n, const FractionalOrder& order, double r) {
    const double c1 = 2.0 * kPi * kPi * r;
    return std::sqrt(c1 * n / c2_log(n, order, r));
}

double tau_star(int n, const FractionalOrder& order, double r) {
    return std::exp(0.3 * sn(n, order, r) / std::sqrt(order.alpha));
}

PoleLocation pole_x0(double lambda, double tau) {
    check_spectral_point(lambda, tau);
    const std::complex<double> w(std::log(tau / lambda) / kPi, 1.0);
    const std::complex<double> x0 =
        w.real() < 0.0 ? -asinh_right_halfplane(-w) : asinh_right_halfplane(w);
    return {x0, x0.imag()};
}

double im_x0_large_lambda(double lambda, double tau) {
    check_spectral_point(lambda, tau);
    if (!(lambda > tau))
        throw ParameterError("asymptotic pole height requires lambda > tau");
    return kPi / std::log(lambda / tau);
}

double im_x0_large_tau(double tau) {
    if (!(tau > 1.0))
        throw ParameterError("asymptotic pole height requires tau > 1");
    return kPi / std::log(tau);
}

double strip_halfwidth(double lambda, double tau, double r) {
    check_safety_factor(r);
    return r * pole_x0(lambda, tau).im_x0;
}

double de_step(int n, double d, const FractionalOrder& order) {
    if (!(d > 0.0))
        throw ParameterError("strip half-width d must be positive");
    if (n < 1)
        throw ParameterError("DE step rule requires n >= 1");
    const double n_min = order.mu * std::numbers::e / (4.0 * d);
    if (n < n_min)
        throw ParameterError("n below the DE admissibility threshold; need n >= " +
                             std::to_string(static_cast<int>(std::ceil(n_min))));
    return std::log(4.0 * d * n / order.mu) / n;
}

double lambda_star(int n, const FractionalOrder& order, double tau, double r) {
    return tau * std::exp(sn(n, order, r) / std::sqrt(order.alpha));
}

DEConfig de_config(int n, const FractionalOrder& order, double r) {
    const double s = sn(n, order, r);
    const double tau = std::exp(0.3 * s / std::sqrt(order.alpha));
    const double d = strip_halfwidth(1.0, tau, r);
    const double h = de_step(n, d, order);
    return {n, r, 2.0 * kPi * kPi * r, 4.0 * kPi * r / order.mu, s, tau, d, h, order};
}

QuadratureRule build_rule(const DEConfig& config) {
    QuadratureRule rule = build_de_rule(config.order, config.tau, config.h, config.n);
    rule.d = config.d;
    return rule;
}

}  // namespace fracpow
