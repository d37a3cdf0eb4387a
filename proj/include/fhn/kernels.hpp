#ifndef FHN_KERNELS_HPP
#define FHN_KERNELS_HPP

#include "fhn/params.hpp"

namespace fhn {

enum class KernelKind { K0, K0x, K1, K2 };

struct KernelEval {
    double x = 0.0;
    double t = 0.0;
    KernelKind which = KernelKind::K0;
    double value = 0.0;
    double quad_abs_error = 0.0;
};

// Fundamental solution of the linear integro-differential operator,
//   K0(x,t) = (1/(2 sqrt(pi eps))) [ e^{-x^2/(4 eps t) - a t} / sqrt(t)
//             - sqrt(b) Int_0^t e^{-x^2/(4 eps y) - a y - beta (t-y)}
//                       J1(2 sqrt(b y (t-y))) / sqrt(t-y) dy ].
// The substitution y = t sin^2(theta) removes the endpoint singularities; the
// transformed integrand is smooth and handled by panel-doubling quadrature.
// Even in x. Requires t > 0, tol >= 1e-12, b >= 0 (no real-valued kernel form
// exists for b < 0).
KernelEval k0(const FhnParams& params, double x, double t, double tol);

// Spatial derivative of K0, obtained by differentiating under the integral
// sign. Odd in x; undefined at x = 0 (one-sided limits differ), which is a
// DomainError.
KernelEval k0_x(const FhnParams& params, double x, double t, double tol);

// Iterated kernels K1, K2 (i = 1, 2):
//   K_i(x,t) = Int_0^t e^{-x^2/(4 eps y) - a y - beta(t-y)} / (2 sqrt(pi eps y))
//              (sqrt((t-y)/(b y)))^{i-1} J_{i-1}(2 sqrt(b y (t-y))) dy,
// equal to the time convolution of K_{i-1} against e^{-beta (t-.)}.
// i = 2 requires b > 0.
KernelEval k_i(const FhnParams& params, int i, double x, double t, double tol);

// Checks the Laplace-transform identity
//   Int_0^inf e^{-s t} K0(r, t) dt = e^{-r sigma} / (2 sqrt(eps) sigma),
//   sigma^2 = s + a + b/(s + beta),
// by truncated quadrature with an analytic tail bound. Returns the absolute
// discrepancy. Requires s > max(-a, -beta).
double laplace_check_k0(const FhnParams& params, double r, double s, double tol);

// Gaussian-envelope constants: |K_i(x,t)| <= envelope_coeff(i) * e^{-x^2/(4 eps t)}.
// Used for certified truncation of the theta image sums and of improper
// integrals over the line. Valid for any sign of a, beta (b >= 0).
double kernel_envelope_coeff(const FhnParams& params, int i, double t);

// |K0_x(x,t)| <= k0x_envelope_coeff(t) / |x| * e^{-x^2/(8 eps t)}.
double k0x_envelope_coeff(const FhnParams& params, double t);

}  // namespace fhn

#endif
