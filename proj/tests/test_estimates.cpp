#include <cmath>
#include <doctest.h>
#include <numbers>
#include <vector>

#include "fracpow/estimates.hpp"
#include "fracpow/kernel.hpp"
#include "fracpow/params.hpp"

using namespace fracpow;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("generic trapezoid bound") {
    SUBCASE("equals the term-by-term sum") {
        const double Nfd = 4.0, d = kPi / 2.0, h = 1.0, C = 1.0, beta = 1.0, gamma = 1.0;
        const int M = 10, N = 10;
        const double t = kPi * d / h;
        const double expected = Nfd * std::exp(-t) / (2.0 * std::sinh(t)) +
                                (C / beta) * std::exp(-beta * M * h) +
                                (C / gamma) * std::exp(-gamma * N * h);
        CHECK(generic_trapezoid_bound(Nfd, d, h, C, beta, gamma, M, N) ==
              doctest::Approx(expected).epsilon(1e-14));
    }

    SUBCASE("SE instantiation sandwiches the three-exponential form") {
        const double alpha = 0.5, d = kPi / 2.0, h = 0.5;
        const int M = 13, N = 13;
        const double value = generic_trapezoid_bound(1.0 / (alpha * (1 - alpha)), d, h, 1.0,
                                                     2 * alpha, 2 * (1 - alpha), M, N);
        const double e2t = std::exp(-2.0 * kPi * d / h);
        const double three_terms = e2t / (alpha * (1 - alpha)) +
                                   std::exp(-2 * alpha * M * h) / (2 * alpha) +
                                   std::exp(-2 * (1 - alpha) * N * h) / (2 * (1 - alpha));
        CHECK(value >= three_terms);
        CHECK(value <= three_terms * (1.0 + 2.0 * e2t));
    }

    SUBCASE("discretization part vanishes like exp(-2 pi d / h)") {
        // C ~ 0 isolates the first term.
        const double tiny = 1e-300;
        const double v1 = generic_trapezoid_bound(1.0, kPi / 2.0, 0.2, tiny, 1.0, 1.0, 1, 1);
        const double v2 = generic_trapezoid_bound(1.0, kPi / 2.0, 0.1, tiny, 1.0, 1.0, 1, 1);
        CHECK(std::log(v2 / v1) ==
              doctest::Approx(-2.0 * kPi * (kPi / 2.0) * (10.0 - 5.0)).epsilon(1e-6));
    }

    CHECK_THROWS_AS(generic_trapezoid_bound(1, 0.0, 1, 1, 1, 1, 1, 1), ParameterError);
    CHECK_THROWS_AS(generic_trapezoid_bound(1, 1, 0.0, 1, 1, 1, 1, 1), ParameterError);
}

TEST_CASE("se_bound values") {
    const FractionalOrder half(0.5);
    CHECK(se_bound(half, 100, kPi / 2.0).value == doctest::Approx(8.59871697e-10).epsilon(1e-7));
    CHECK(se_bound(half, 157, kPi / 2.0).value == doctest::Approx(3.11620543e-12).epsilon(1e-7));
    CHECK(se_bound(half, 100, kPi / 4.0).value == doctest::Approx(5.75638197e-7).epsilon(1e-7));
    CHECK(se_bound(half, 100, kPi / 2.0).kind == EstimateKind::SE_BOUND);

    CHECK_THROWS_AS(se_bound(half, 0, kPi / 2.0), ParameterError);
    CHECK_THROWS_AS(se_bound(half, 10, 2.0), ParameterError);
}

TEST_CASE("xi") {
    CHECK(xi(1e-9) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(xi(kPi / 4.0) == doctest::Approx(6.37010409959).epsilon(1e-9));
    CHECK(xi(1.5) == doctest::Approx(7185.4390747).epsilon(1e-7));

    double prev = xi(0.01);
    for (double d = 0.05; d < kPi / 2.0 - 0.01; d += 0.05) {
        CHECK(xi(d) > prev);
        prev = xi(d);
    }
    CHECK(prev > 2.0);

    CHECK_THROWS_AS(xi(0.0), ParameterError);
    CHECK_THROWS_AS(xi(kPi / 2.0), ParameterError);
}

TEST_CASE("k_alpha") {
    CHECK(k_alpha(FractionalOrder(0.5)) == doctest::Approx(4.5364458204).epsilon(1e-9));
    CHECK(k_alpha(FractionalOrder(0.25)) == doctest::Approx(8.12857622191).epsilon(1e-9));
    for (double a : {0.1, 0.25, 0.4})
        CHECK(k_alpha(FractionalOrder(a)) ==
              doctest::Approx(k_alpha(FractionalOrder(1.0 - a))).epsilon(1e-14));
}

TEST_CASE("phi landscape") {
    const FractionalOrder half(0.5);
    const double r = 0.95;
    const int n = 40;
    const double ts = tau_star(n, half, r);

    SUBCASE("closed form at lambda = 1 agrees within a factor 3") {
        const double exact = de_phi(1.0, ts, n, half, r);
        const double closed = de_phi_at_one(ts, n, half, r);
        CHECK(closed / exact > 1.0 / 3.0);
        CHECK(closed / exact < 3.0);
    }

    SUBCASE("vanishes as lambda grows") {
        CHECK(de_phi(1e19, ts, n, half, r) < 1e-2 * de_phi(1e10, ts, n, half, r));
        CHECK(de_phi(1e19, ts, n, half, r) < 1e-11);
    }

    SUBCASE("one interior minimum near tau, one interior maximum, then decay") {
        // Scan a log grid and count slope sign changes; micro-flat segments
        // are treated as no change.
        std::vector<double> phis;
        std::vector<double> lambdas;
        for (int i = 0; i <= 600; ++i) {
            const double lambda = std::pow(10.0, 20.0 * i / 600.0);
            lambdas.push_back(lambda);
            phis.push_back(de_phi(lambda, ts, n, half, r));
        }
        int changes = 0;
        int previous_sign = 0;
        double min_lambda = 0.0;
        for (std::size_t i = 1; i < phis.size(); ++i) {
            const double delta = phis[i] - phis[i - 1];
            if (std::fabs(delta) <= 1e-12 * phis[i])
                continue;
            const int sign = delta > 0.0 ? 1 : -1;
            if (previous_sign != 0 && sign != previous_sign) {
                ++changes;
                if (changes == 1)
                    min_lambda = lambdas[i - 1];
            }
            previous_sign = sign;
        }
        CHECK(changes == 2);
        CHECK(previous_sign == -1);  // decays at the right end
        CHECK(min_lambda / ts > 0.2);
        CHECK(min_lambda / ts < 5.0);
    }
}

TEST_CASE("scalar and Okayama-style estimators") {
    const FractionalOrder half(0.5);
    const double r = 0.95;
    const double lambda = 1e12, tau = 100.0;

    SUBCASE("scalar estimator is K_alpha phi") {
        const ErrorEstimate est = de_estimate_scalar(1.0, 84.4, 40, half, r);
        CHECK(est.value == k_alpha(half) * de_phi(1.0, 84.4, 40, half, r));
        CHECK(est.kind == EstimateKind::DE_SCALAR);
        CHECK(est.value > 0.0);
        CHECK(est.inputs.lambda.value() == 1.0);
    }

    SUBCASE("estimator gap at a large spectral point") {
        // The tau^-alpha prefactor of the Okayama-style form cannot see
        // lambda; at lambda = 1e12 the scalar form is smaller by ~6e4.
        for (int n : {40, 100, 160}) {
            const double e1 = de_estimate_scalar(lambda, tau, n, half, r).value;
            const double e2 = de_estimate_okayama(lambda, tau, n, half, r).value;
            CHECK(e2 / e1 == doctest::Approx(61747.6).epsilon(1e-3));
            CHECK(e1 <= 1e-3 * e2);
        }
    }

    SUBCASE("measured error envelope on the fixed-point configuration") {
        const double d = strip_halfwidth(lambda, tau, r);
        for (int n : {20, 40, 60, 80}) {
            const double h = de_step(n, d, half);
            const QuadratureRule rule = build_de_rule(half, tau, h, n);
            const double err = std::fabs(eval_rule(rule, lambda) - 1e-6);
            if (err < 1e-12 || err > 1e-2)
                continue;
            CHECK(err <= 100.0 * de_estimate_scalar(lambda, tau, n, half, r).value);
            CHECK(err <= de_estimate_okayama(lambda, tau, n, half, r).value);
        }
    }
}

TEST_CASE("closed forms at the equalized peaks") {
    const FractionalOrder half(0.5);
    const double r = 0.95;
    const int n = 40;
    const double ts = tau_star(n, half, r);

    const double at_peak = de_phi_at_lambda_star(ts, n, half, r);
    const double at_one = de_phi_at_one(ts, n, half, r);
    CHECK(at_peak == doctest::Approx(5.07587533758e-11).epsilon(1e-9));
    CHECK(at_one == doctest::Approx(3.9672128541e-11).epsilon(1e-9));

    // tau* is built to equalize exactly these two closed forms.
    CHECK(at_peak / at_one > 1.0 / 3.0);
    CHECK(at_peak / at_one < 3.0);

    // Substituting tau* turns the peak value into 2 exp(-3.3 sqrt(alpha) s_n).
    const double gtt = 2.0 * std::exp(-3.3 * std::sqrt(0.5) * sn(n, half, r));
    CHECK(at_peak == doctest::Approx(gtt).epsilon(1e-12));
}

TEST_CASE("operator estimator") {
    const FractionalOrder half(0.5);
    const ErrorEstimate est = de_operator_estimate(40, half, 0.95);
    CHECK(est.value == doctest::Approx(1.46590828278e-10).epsilon(1e-9));
    CHECK(est.kind == EstimateKind::DE_OPERATOR);

    double prev = de_operator_estimate(3, half, 0.95).value;
    for (int n = 4; n <= 400; n += 7) {
        const double cur = de_operator_estimate(n, half, 0.95).value;
        CHECK(cur < prev);
        prev = cur;
    }

    // The prefactor 4 (sin(alpha pi)/pi) K_alpha is symmetric in
    // alpha <-> 1-alpha (the exponent is not: sqrt(alpha) enters it).
    for (double a : {0.2, 0.35}) {
        const FractionalOrder lo(a), hi(1.0 - a);
        const double k_lo = de_operator_estimate(40, lo, 0.95).value /
                            std::exp(-3.3 * std::sqrt(lo.alpha) * sn(40, lo, 0.95));
        const double k_hi = de_operator_estimate(40, hi, 0.95).value /
                            std::exp(-3.3 * std::sqrt(hi.alpha) * sn(40, hi, 0.95));
        CHECK(k_lo == doctest::Approx(k_hi).epsilon(1e-12));
    }
}

TEST_CASE("estimators are finite, positive and deterministic over the grid") {
    for (double a = 0.1; a < 0.95; a += 0.1) {
        const FractionalOrder order(a);
        for (int n = 10; n <= 400; n += 39) {
            const double v1 = de_operator_estimate(n, order, 0.95).value;
            const double v2 = de_operator_estimate(n, order, 0.95).value;
            CHECK(v1 == v2);
            CHECK(std::isfinite(v1));
            CHECK(v1 > 0.0);

            const double b = se_bound(order, n, kPi / 2.0).value;
            CHECK(std::isfinite(b));
            CHECK(b > 0.0);

            const double s1 = de_estimate_scalar(1e6, 50.0, n, order, 0.95).value;
            const double s2 = de_estimate_okayama(1e6, 50.0, n, order, 0.95).value;
            CHECK(std::isfinite(s1));
            CHECK(s1 > 0.0);
            CHECK(std::isfinite(s2));
            CHECK(s2 > 0.0);
        }
    }
}
