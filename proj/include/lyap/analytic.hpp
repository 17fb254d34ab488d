#pragma once

// Closed-form and analytic-bound evaluation of Lyapunov exponents: the exact
// scaled-Cauchy formula, the two-sided Bernoulli(p) bounds, and the
// deterministic values at the parameter endpoints the formulas exclude.

#include <cmath>
#include <stdexcept>

#include "lyap/core.hpp"
#include "lyap/recursion.hpp"

namespace lyap {

// Lyapunov exponent in nats, tagged with the model it belongs to.
struct LambdaValue {
    double value = 0.0;
    ModelKind kind = ModelKind::bernoulli;
    double param = 0.0;
};

// Scale of the invariant Cauchy distribution: the unique positive solution of
// gamma = 1/gamma + |xi|.
inline double cauchy_scale(double xi) {
    const double axi = std::fabs(xi);
    return (axi + std::sqrt(xi * xi + 4.0)) / 2.0;
}

// lambda(xi) = log((|xi| + sqrt(xi^2 + 4)) / 2), exact for xi != 0.
inline LambdaValue cauchy_lambda(double xi) {
    if (xi == 0.0 || !std::isfinite(xi))
        throw std::domain_error("cauchy_lambda: boundary parameter (xi must be nonzero)");
    return {std::log(cauchy_scale(xi)), ModelKind::cauchy, xi};
}

// p*log3/(4-p) <= lambda(p) <= p*log3/2 for 0 < p < 1.
inline BoundPair bernoulli_bounds(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("bernoulli_bounds: p must lie strictly in (0,1)");
    const double log3 = std::log(3.0);
    return {p * log3 / (4.0 - p), p * log3 / 2.0, BoundProvenance::analytic, -1};
}

enum class Endpoint { bernoulli_p0, bernoulli_p1, cauchy_xi0 };

// Lyapunov exponent at the deterministic parameter endpoints. p=0: the swap
// matrix is an involution, every product has norm 1, so lambda = 0. p=1:
// products are powers of [[1,1],[1,0]], whose entries are Fibonacci numbers,
// so lambda = log((1+sqrt(5))/2). xi=0: the continuous limit of the closed
// form, lambda = 0.
inline LambdaValue boundary_lambda(Endpoint endpoint) {
    switch (endpoint) {
        case Endpoint::bernoulli_p0:
            return {0.0, ModelKind::bernoulli, 0.0};
        case Endpoint::bernoulli_p1:
            return {std::log((1.0 + std::sqrt(5.0)) / 2.0), ModelKind::bernoulli, 1.0};
        case Endpoint::cauchy_xi0:
            return {0.0, ModelKind::cauchy, 0.0};
    }
    throw std::logic_error("boundary_lambda: unknown endpoint");
}

inline LambdaValue boundary_lambda(ModelKind kind, double param) {
    if (kind == ModelKind::bernoulli && param == 0.0)
        return boundary_lambda(Endpoint::bernoulli_p0);
    if (kind == ModelKind::bernoulli && param == 1.0)
        return boundary_lambda(Endpoint::bernoulli_p1);
    if (kind == ModelKind::cauchy && param == 0.0) return boundary_lambda(Endpoint::cauchy_xi0);
    throw std::domain_error("boundary_lambda: not an endpoint parameter");
}

}  // namespace lyap
