#pragma once

#include <vector>

#include "fracpow/errors.hpp"

namespace fracpow {

/// Fractional exponent alpha in (0,1) together with the derived constants
/// mu = min(alpha, 1-alpha) and nu = max(alpha, 1-alpha) that drive the DE
/// step rule and the estimators. mu + nu = 1 by construction.
struct FractionalOrder {
    double alpha;
    double mu;
    double nu;

    explicit FractionalOrder(double a) : alpha(a) {
        if (!(a > 0.0) || !(a < 1.0))
            throw ParameterError("fractional order alpha must lie in (0,1)");
        mu = a < 1.0 - a ? a : 1.0 - a;
        nu = 1.0 - mu;
    }
};

enum class Transform { SE, DE };

/// One quadrature term in normalized partial-fraction form c * (s + lambda)^-1.
///
/// Weights are tracked in log space so that tail terms with huge exponents stay
/// representable. A term whose weight underflows the smallest normal double is
/// kept in the list with weight = 0 and log_weight = -inf; evaluation skips it
/// but the term still counts toward the rule size.
struct ResolventTerm {
    double log_weight;  // ln c, -inf when the term vanished
    double weight;      // c = exp(log_weight), 0 exactly when log_weight = -inf
    double shift;       // s > 0, finite
};

/// Trapezoidal quadrature rule for lambda^-alpha written as a sum of
/// resolvent terms, indices l = -M..N in ascending order.
///
/// n = M + N + 1 is the number of shifted solves the rule costs when applied
/// to an operator. tau is the DE scaling (1 for SE rules); d records the strip
/// half-width associated with the construction.
struct QuadratureRule {
    FractionalOrder order;
    Transform transform;
    double h;
    int M;
    int N;
    double tau;
    double d;
    std::vector<ResolventTerm> terms;

    int size() const { return M + N + 1; }

    /// Term at quadrature index l in [-M, N].
    const ResolventTerm& term(int l) const { return terms[static_cast<std::size_t>(l + M)]; }
};

}  // namespace fracpow
