#include "fhn/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhn/bessel.hpp"
#include "fhn/errors.hpp"
#include "fhn/quadrature.hpp"

namespace fhn {

namespace {

void check_kernel_args(const FhnParams& params, double t, double tol) {
    params.validate();
    if (!(t > 0.0)) throw DomainError("kernel: t must be positive");
    if (!(tol >= 1e-12)) throw DomainError("kernel: tol must be >= 1e-12");
    if (params.b < 0.0)
        throw DomainError("kernel: b < 0 has no real-valued kernel form; "
                          "use the finite-difference oracle");
}

// max over y in [0,t] of e^{-a y - beta (t-y)} equals e^{-min(a,beta) t}
// for parameters of any sign.
inline double exp_path_max(const FhnParams& p, double t) {
    return std::exp(-std::min(p.a, p.beta) * t);
}

}  // namespace

KernelEval k0(const FhnParams& params, double x, double t, double tol) {
    check_kernel_args(params, t, tol);
    const double eps = params.eps, a = params.a, b = params.b, beta = params.beta;
    const double x2 = x * x;

    const double lead = std::exp(-x2 / (4.0 * eps * t) - a * t) / std::sqrt(t);
    const double pref = 1.0 / (2.0 * std::sqrt(M_PI * eps));

    KernelEval out;
    out.x = x;
    out.t = t;
    out.which = KernelKind::K0;

    if (b == 0.0) {
        out.value = pref * lead;
        out.quad_abs_error = std::fabs(out.value) * 1e-15;
        return out;
    }

    const double sb = std::sqrt(b);
    auto integrand = [&](double theta) {
        const double st = std::sin(theta), ct = std::cos(theta);
        const double s2 = st * st;
        if (s2 == 0.0) return 0.0;
        const double y = t * s2;
        const double e = std::exp(-x2 / (4.0 * eps * y) - a * y -
                                  beta * t * ct * ct);
        return 2.0 * std::sqrt(t) * st * e *
               bessel_j1(sb * t * 2.0 * st * ct).value;
    };

    // tolerance passed through the prefactor so the reported error is in
    // units of the kernel value
    const double inner_tol = tol / (pref * sb);
    QuadResult q = integrate_doubling(integrand, 0.0, M_PI / 2.0, inner_tol, 4);
    out.value = pref * (lead - sb * q.value);
    out.quad_abs_error = pref * sb * q.abs_error + std::fabs(out.value) * 1e-15;
    if (!q.converged)
        throw ToleranceError("k0: quadrature failed to reach tol", out.value,
                             out.quad_abs_error);
    return out;
}

KernelEval k0_x(const FhnParams& params, double x, double t, double tol) {
    check_kernel_args(params, t, tol);
    if (x == 0.0)
        throw DomainError("k0_x: undefined at x = 0 (one-sided limits differ)");
    const double eps = params.eps, a = params.a, b = params.b, beta = params.beta;
    const double x2 = x * x;

    const double pref = 1.0 / (2.0 * std::sqrt(M_PI * eps));
    const double lead_x =
        -x / (2.0 * eps * t) * std::exp(-x2 / (4.0 * eps * t) - a * t) / std::sqrt(t);

    KernelEval out;
    out.x = x;
    out.t = t;
    out.which = KernelKind::K0x;

    if (b == 0.0) {
        out.value = pref * lead_x;
        out.quad_abs_error = std::fabs(out.value) * 1e-15;
        return out;
    }

    const double sb = std::sqrt(b);
    auto integrand = [&](double theta) {
        const double st = std::sin(theta), ct = std::cos(theta);
        const double s2 = st * st;
        if (s2 == 0.0) return 0.0;
        const double y = t * s2;
        const double e = std::exp(-x2 / (4.0 * eps * y) - a * y -
                                  beta * t * ct * ct);
        if (e == 0.0) return 0.0;
        return x / (eps * std::sqrt(t) * st) * e *
               bessel_j1(sb * t * 2.0 * st * ct).value;
    };

    const double inner_tol = tol / (pref * sb);
    QuadResult q = integrate_doubling(integrand, 0.0, M_PI / 2.0, inner_tol, 4);
    out.value = pref * (lead_x + sb * q.value);
    out.quad_abs_error = pref * sb * q.abs_error + std::fabs(out.value) * 1e-15;
    if (!q.converged)
        throw ToleranceError("k0_x: quadrature failed to reach tol", out.value,
                             out.quad_abs_error);
    return out;
}

KernelEval k_i(const FhnParams& params, int i, double x, double t, double tol) {
    check_kernel_args(params, t, tol);
    if (i != 1 && i != 2) throw DomainError("k_i: i must be 1 or 2");
    if (i == 2 && !(params.b > 0.0))
        throw DomainError("k_i: i = 2 requires b > 0");
    const double eps = params.eps, a = params.a, b = params.b, beta = params.beta;
    const double x2 = x * x;
    const double sb = std::sqrt(b);

    auto exponent = [&](double st, double ct) {
        const double y = t * st * st;
        if (y == 0.0) return 0.0;
        return std::exp(-x2 / (4.0 * eps * y) - a * y - beta * t * ct * ct);
    };

    auto integrand = [&](double theta) {
        const double st = std::sin(theta), ct = std::cos(theta);
        if (st == 0.0) {
            // y = 0 endpoint: the transformed integrand has the finite limit 0
            // for i = 1 (cos factor times vanishing Gaussian for x != 0; for
            // x = 0 the value is e^{-beta t} sqrt(t/pi/eps) * cos, handled by
            // the rule never sampling the endpoint exactly)
            return 0.0;
        }
        const double e = exponent(st, ct);
        if (e == 0.0) return 0.0;
        if (i == 1)
            return std::sqrt(t / (M_PI * eps)) * ct * e *
                   bessel_j0(sb * t * 2.0 * st * ct).value;
        return 2.0 * t * std::sqrt(t / (M_PI * eps)) * ct * ct * ct * e *
               bessel_j1_over_z(sb * t * 2.0 * st * ct);
    };

    QuadResult q = integrate_doubling(integrand, 0.0, M_PI / 2.0, tol, 4);

    KernelEval out;
    out.x = x;
    out.t = t;
    out.which = (i == 1) ? KernelKind::K1 : KernelKind::K2;
    out.value = q.value;
    out.quad_abs_error = q.abs_error + std::fabs(q.value) * 1e-15;
    if (!q.converged)
        throw ToleranceError("k_i: quadrature failed to reach tol", out.value,
                             out.quad_abs_error);
    return out;
}

double laplace_check_k0(const FhnParams& params, double r, double s, double tol) {
    params.validate();
    if (params.b < 0.0)
        throw DomainError("laplace_check_k0: b < 0 not supported");
    if (!(tol > 0.0)) throw DomainError("laplace_check_k0: tol must be positive");
    if (!(r > 0.0)) throw DomainError("laplace_check_k0: r must be positive");
    if (!(s > std::max(-params.a, -params.beta)))
        throw DomainError("laplace_check_k0: s outside the convergence region "
                          "s > max(-a, -beta)");

    const double eps = params.eps, a = params.a, b = params.b, beta = params.beta;
    const double sigma = std::sqrt(s + a + b / (s + beta));
    const double target = std::exp(-r * sigma) / (2.0 * std::sqrt(eps) * sigma);

    const double x = r * std::sqrt(eps);
    const double omega = std::min(a, beta);
    const double rate = s + omega;  // positive inside the convergence region

    // pointwise bound used for the truncation tail:
    // |K0(r,t)| <= (1/(2 sqrt(pi eps t))) [e^{-a t} + b t E(t)], E(t) <= t e^{-omega t}
    auto bound = [&](double t) {
        return (std::exp(-a * t) + b * t * t * std::exp(-omega * t)) /
               (2.0 * std::sqrt(M_PI * eps * t));
    };

    double t_star = std::max(10.0, 4.0 / rate);
    double tail = std::exp(-s * t_star) * bound(t_star) * 2.0 / rate;
    while (t_star < 400.0 && tail > 0.1 * tol) {
        t_star *= 1.5;
        tail = std::exp(-s * t_star) * bound(t_star) * 2.0 / rate;
    }
    if (tail > 0.1 * tol)
        throw ToleranceError("laplace_check_k0: truncation tail above budget",
                             0.0, tail);

    const double inner_tol = std::max(1e-12, 0.02 * tol * std::min(1.0, s));
    auto integrand = [&](double qv) {
        const double t = qv * qv;
        if (t < 1e-300) return 0.0;
        return 2.0 * qv * std::exp(-s * t) * k0(params, x, t, inner_tol).value;
    };
    QuadResult q =
        integrate_adaptive(integrand, 0.0, std::sqrt(t_star), 0.3 * tol, 600);

    return std::fabs(q.value - target);
}

double kernel_envelope_coeff(const FhnParams& params, int i, double t) {
    const double eps = params.eps, a = params.a, b = params.b, beta = params.beta;
    const double m = std::exp(-std::min(a, beta) * t);
    switch (i) {
        case 0:
            return (std::exp(-a * t) / std::sqrt(t) +
                    2.0 * std::sqrt(b * t) * m) /
                   (2.0 * std::sqrt(M_PI * eps));
        case 1:
            return m * std::sqrt(t / (M_PI * eps));
        case 2:
            return (2.0 / 3.0) * m * t * std::sqrt(t / (M_PI * eps));
        default:
            throw DomainError("kernel_envelope_coeff: i must be 0, 1 or 2");
    }
}

double k0x_envelope_coeff(const FhnParams& params, double t) {
    // (x/(2 eps y)) e^{-x^2/(4 eps y)} <= (4/(e |x|)) e^{-x^2/(8 eps y)} and the
    // remaining factors integrate as in the K0 envelope.
    const double eps = params.eps, a = params.a, b = params.b, beta = params.beta;
    const double m = std::exp(-std::min(a, beta) * t);
    const double base = std::exp(-a * t) / std::sqrt(t) + 2.0 * std::sqrt(b * t) * m;
    return (4.0 / M_E) * base / (2.0 * std::sqrt(M_PI * eps));
}

}  // namespace fhn
