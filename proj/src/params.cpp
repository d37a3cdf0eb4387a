#include "fhn/params.hpp"

#include <cmath>
#include <string>

#include "fhn/errors.hpp"

namespace fhn {

void FhnParams::validate() const {
    if (!(eps > 0.0)) throw DomainError("FhnParams: eps must be positive");
    if (!(L > 0.0)) throw DomainError("FhnParams: L must be positive");
    if (!(T > 0.0)) throw DomainError("FhnParams: T must be positive");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(beta))
        throw DomainError("FhnParams: a, b, beta must be finite");
}

double decay_E(double a, double beta, double t) {
    if (std::fabs(a - beta) < 1e-10) return t * std::exp(-a * t);
    return (std::exp(-beta * t) - std::exp(-a * t)) / (a - beta);
}

AuxQuantities aux_quantities(const FhnParams& params, double t) {
    if (!params.estimates_valid())
        throw RegimeError(
            "aux_quantities: requires a > 0, b >= 0, beta > 0 (got a=" +
            std::to_string(params.a) + ", b=" + std::to_string(params.b) +
            ", beta=" + std::to_string(params.beta) + ")");
    if (!(t > 0.0)) throw DomainError("aux_quantities: t must be positive");

    const double a = params.a, b = params.b, beta = params.beta;
    AuxQuantities q;
    q.E_t = decay_E(a, beta, t);
    q.omega = std::min(a, beta);
    q.beta0 = 1.0 / a + M_PI * std::sqrt(b) * (a + beta) / (2.0 * std::pow(a * beta, 1.5));
    q.beta1 = 1.0 / (a * beta);
    return q;
}

JosephsonParams josephson_params(double alpha, double eps) {
    if (!(eps > 0.0)) throw DomainError("josephson_params: eps must be positive");
    JosephsonParams p;
    p.a = alpha - 1.0 / eps;
    p.b = -p.a / eps;
    p.beta = 1.0 / eps;
    p.estimates_valid = !(p.a <= 0.0 || p.b < 0.0);
    return p;
}

}  // namespace fhn
