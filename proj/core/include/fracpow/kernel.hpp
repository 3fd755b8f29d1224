#pragma once

#include "fracpow/types.hpp"

namespace fracpow {

/// Transformed integrand of the SE substitution t = e^x:
/// g(x) = e^{2 alpha x} / (1 + e^{2x} lambda).
/// Overflow-safe for |x| up to ~700: for x > 0 the quotient is evaluated as
/// e^{-2(1-alpha)x} / (e^{-2x} + lambda). Requires lambda >= 1.
double se_integrand(double lambda, const FractionalOrder& order, double x);

/// Transformed integrand of the DE substitution tau t^2 = exp(pi sinh x):
/// g(x) = (pi/2) tau^{1-alpha} e^{alpha pi sinh x} cosh x / (tau + lambda e^{pi sinh x}).
/// For x > 0 the divided form
/// (pi/2) tau^{1-alpha} cosh x e^{-(1-alpha) pi sinh x} / (tau e^{-pi sinh x} + lambda)
/// keeps every factor representable. Requires lambda >= 1 and tau >= 1.
double de_integrand(double lambda, const FractionalOrder& order, double tau, double x);

/// SE rule with step h and truncation indices l = -M..N. Term algebra:
///   ln c_l = ln((2 sin(alpha pi)/pi) h) - 2(1-alpha) l h,   s_l = e^{-2 l h}.
/// Shifts are strictly decreasing in l (up to clamping at the extreme tails,
/// see below). Throws ParameterError for h <= 0 or negative M, N.
QuadratureRule build_se_rule(const FractionalOrder& order, double h, int M, int N);

/// DE rule with scaling tau >= 1, step h and M = N = n (2n+1 terms):
///   ln c_l = ln(sin(alpha pi) h tau^{1-alpha} cosh(l h)) - (1-alpha) pi sinh(l h),
///   s_l = tau e^{-pi sinh(l h)}.
/// Throws ParameterError for tau < 1, h <= 0 or n < 0.
QuadratureRule build_de_rule(const FractionalOrder& order, double tau, double h, int n);

/// Evaluates sum_l c_l / (s_l + lambda) in fixed index order with compensated
/// summation; zero-weight terms are skipped. Deterministic for identical
/// inputs. Requires lambda >= 1.
double eval_rule(const QuadratureRule& rule, double lambda);

// Clamping constants for the term list. A left-tail shift that would exceed
// e^709 is rescaled jointly with its weight, preserving the value of
// c/(s + lambda) to better than 1e-290 relative for lambda <= 1e16; a
// right-tail shift that underflows is raised to the smallest normal double.
inline constexpr double kMaxLogShift = 709.0;

}  // namespace fracpow
