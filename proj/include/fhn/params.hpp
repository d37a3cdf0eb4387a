#ifndef FHN_PARAMS_HPP
#define FHN_PARAMS_HPP

namespace fhn {

// Constants of the linear operator and the domain: diffusion eps, linear rate
// a, coupling b, recovery rate beta, strip length L, time horizon T. In the
// biological regime a, b, beta are nonnegative; the Josephson mapping can make
// a (and then b) negative, which disables the a priori estimates.
struct FhnParams {
    double eps = 1.0;
    double a = 1.0;
    double b = 0.0;
    double beta = 1.0;
    double L = 1.0;
    double T = 1.0;

    // Regime in which the kernel/solution bounds are proved.
    bool estimates_valid() const { return a > 0.0 && b >= 0.0 && beta > 0.0; }

    // Throws DomainError unless eps, L, T are positive.
    void validate() const;
};

struct AuxQuantities {
    double E_t = 0.0;    // E(t) = (e^{-beta t} - e^{-a t}) / (a - beta)
    double omega = 0.0;  // min(a, beta)
    double beta0 = 0.0;  // 1/a + pi sqrt(b) (a+beta) / (2 (a beta)^{3/2})
    double beta1 = 0.0;  // 1/(a beta)
};

// E(t) alone, with the analytic a = beta limit t e^{-a t} below |a-beta| = 1e-10
// (direct evaluation cancels catastrophically there).
double decay_E(double a, double beta, double t);

// Requires params.estimates_valid(); throws RegimeError otherwise.
AuxQuantities aux_quantities(const FhnParams& params, double t);

// Parameter fragment produced by the Josephson-junction mapping
// a = alpha - 1/eps, b = -a/eps, beta = 1/eps.
struct JosephsonParams {
    double a = 0.0;
    double b = 0.0;
    double beta = 0.0;
    bool estimates_valid = false;
};

JosephsonParams josephson_params(double alpha, double eps);

}  // namespace fhn

#endif
