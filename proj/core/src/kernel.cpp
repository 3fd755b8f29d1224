#include "fracpow/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fracpow/kahan.hpp"

namespace fracpow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// ln cosh(x) without overflowing cosh itself.
double log_cosh(double x) {
    const double ax = std::fabs(x);
    if (ax > 30.0)
        return ax - kLn2;
    return std::log(std::cosh(x));
}

// Materializes a term from its log-weight and log-shift, applying the
// clamping policy described in kernel.hpp.
ResolventTerm make_term(double log_weight, double log_shift) {
    if (std::isinf(log_shift)) {
        // sinh ran away deep in a tail; the term value has underflowed there
        // for every admissible lambda. Emit an inert term with a clamped shift.
        const double shift = log_shift > 0.0 ? std::exp(kMaxLogShift)
                                             : std::numeric_limits<double>::min();
        return {-std::numeric_limits<double>::infinity(), 0.0, shift};
    }
    if (log_shift > kMaxLogShift) {
        // Rescale (c, s) jointly; the quotient c/(s + lambda) is preserved
        // because s dominates lambda by hundreds of orders of magnitude.
        log_weight -= log_shift - kMaxLogShift;
        log_shift = kMaxLogShift;
    }
    double shift = std::exp(log_shift);
    if (shift < std::numeric_limits<double>::min())
        shift = std::numeric_limits<double>::min();

    static const double min_log_weight = std::log(std::numeric_limits<double>::min());
    if (log_weight < min_log_weight)
        return {-std::numeric_limits<double>::infinity(), 0.0, shift};
    return {log_weight, std::exp(log_weight), shift};
}

}  // namespace

double se_integrand(double lambda, const FractionalOrder& order, double x) {
    if (x <= 0.0)
        return std::exp(2.0 * order.alpha * x) / (1.0 + std::exp(2.0 * x) * lambda);
    return std::exp(-2.0 * (1.0 - order.alpha) * x) / (std::exp(-2.0 * x) + lambda);
}

double de_integrand(double lambda, const FractionalOrder& order, double tau, double x) {
    const double sh = std::sinh(x);
    const double log_pref =
        std::log(0.5 * kPi) + (1.0 - order.alpha) * std::log(tau) + log_cosh(x);
    if (x <= 0.0)
        return std::exp(log_pref + order.alpha * kPi * sh) /
               (tau + lambda * std::exp(kPi * sh));
    return std::exp(log_pref - (1.0 - order.alpha) * kPi * sh) /
           (tau * std::exp(-kPi * sh) + lambda);
}

QuadratureRule build_se_rule(const FractionalOrder& order, double h, int M, int N) {
    if (!(h > 0.0))
        throw ParameterError("quadrature step h must be positive");
    if (M < 0 || N < 0)
        throw ParameterError("truncation indices M, N must be nonnegative");

    const double log_pref = std::log(2.0 * std::sin(order.alpha * kPi) / kPi * h);
    QuadratureRule rule{order, Transform::SE, h, M, N, 1.0, kPi / 2.0, {}};
    rule.terms.reserve(static_cast<std::size_t>(M) + N + 1);
    for (int l = -M; l <= N; ++l) {
        const double lh = l * h;
        rule.terms.push_back(make_term(log_pref - 2.0 * (1.0 - order.alpha) * lh, -2.0 * lh));
    }
    return rule;
}

QuadratureRule build_de_rule(const FractionalOrder& order, double tau, double h, int n) {
    if (!(tau >= 1.0))
        throw ParameterError("DE scaling tau must be >= 1");
    if (!(h > 0.0))
        throw ParameterError("quadrature step h must be positive");
    if (n < 0)
        throw ParameterError("DE truncation index n must be nonnegative");

    const double log_tau = std::log(tau);
    const double log_pref = std::log(std::sin(order.alpha * kPi) * h) + (1.0 - order.alpha) * log_tau;

    // Strip half-width the step rule h = ln(4 d n / mu) / n corresponds to;
    // provenance only, clamped to (0, pi/2].
    double d = kPi / 2.0;
    if (n >= 1) {
        const double inverted = order.mu * std::exp(n * h) / (4.0 * n);
        if (inverted < d)
            d = inverted;
    }

    QuadratureRule rule{order, Transform::DE, h, n, n, tau, d, {}};
    rule.terms.reserve(2 * static_cast<std::size_t>(n) + 1);
    for (int l = -n; l <= n; ++l) {
        const double sh = std::sinh(l * h);
        const double lw = log_pref + log_cosh(l * h) - (1.0 - order.alpha) * kPi * sh;
        rule.terms.push_back(make_term(lw, log_tau - kPi * sh));
    }
    return rule;
}

double eval_rule(const QuadratureRule& rule, double lambda) {
    KahanAccumulator acc;
    for (const ResolventTerm& t : rule.terms) {
        if (t.weight == 0.0)
            continue;
        acc.add(t.weight / (t.shift + lambda));
    }
    return acc.sum();
}

}  // namespace fracpow
