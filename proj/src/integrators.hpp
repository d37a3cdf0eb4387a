#ifndef FHN_SRC_INTEGRATORS_HPP
#define FHN_SRC_INTEGRATORS_HPP

// Internal quadrature building blocks shared by the linear and nonlinear
// solvers. Not installed.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "fhn/data.hpp"
#include "fhn/quadrature.hpp"
#include "fhn/theta.hpp"

namespace fhn {
namespace detail {

// Time convolution Int_0^t w(s) g(t-s) ds. The substitution s = q^2 grades the
// nodes toward s = 0, which restores accuracy against the 1/sqrt(s) blow-up of
// the theta kernels at the boundary points (and the s^{-3/2} e^{-c/s} shape of
// the derivative kernel near it).
inline QuadResult convolve_boundary(const std::function<double(double)>& w_of_s,
                                    const std::function<double(double)>& g,
                                    double t, double tol) {
    auto integrand = [&](double q) {
        const double s = q * q;
        return 2.0 * q * w_of_s(s) * g(t - s);
    };
    return integrate_adaptive(integrand, 0.0, std::sqrt(t), tol, 500);
}

// Split points for a Green-kernel integral over xi in [0, L]: the kernel
// G(x, xi, s) has Gaussian spikes of width ~ sqrt(eps s) at xi = x and at the
// reflected centers -x and 2L - x.
inline std::vector<double> spike_splits(double x, double s, double eps,
                                        double L) {
    const double w = std::max(9.0 * std::sqrt(eps * s), 1e-3 * L);
    std::vector<double> pts{0.0, L};
    for (double c : {x, -x, 2.0 * L - x}) {
        for (double p : {c - w, c, c + w})
            if (p > 0.0 && p < L) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [L](double a, double b) { return b - a < 1e-12 * L; }),
              pts.end());
    return pts;
}

// Adaptive integral of fn over [0, L] with initial subdivision at the spike
// points.
inline QuadResult integrate_spatial(const std::function<double(double)>& fn,
                                    double x, double s, double eps, double L,
                                    double tol) {
    const std::vector<double> pts = spike_splits(x, s, eps, L);
    double value = 0.0, err = 0.0;
    const double piece_tol = tol / double(pts.size() - 1);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        QuadResult r = integrate_adaptive(fn, pts[k], pts[k + 1], piece_tol, 200);
        value += r.value;
        err += r.abs_error;
    }
    return {value, err, err <= tol};
}

// Fixed-rule variant used inside Picard sweeps: gk15 panels sized from the
// spike width. Deterministic cost, no adaptivity.
inline double integrate_spatial_fixed(const std::function<double(double)>& fn,
                                      double x, double s, double eps, double L) {
    const std::vector<double> pts = spike_splits(x, s, eps, L);
    const double w = std::max(9.0 * std::sqrt(eps * s), 1e-3 * L);
    double value = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const double len = pts[k + 1] - pts[k];
        const int panels =
            std::clamp(int(std::ceil(len / std::max(0.6 * w, L / 3.0))), 1, 5);
        const double h = len / panels;
        for (int p = 0; p < panels; ++p)
            value += gk15(fn, pts[k] + p * h, pts[k] + (p + 1) * h).value;
    }
    return value;
}

// Double integral Int_0^t ds Int_0^L G(xi, s) f(xi, t-s) dxi, adaptive in the
// graded time variable q = sqrt(s). G is the Green kernel already bound to the
// target point x.
inline QuadResult source_integral_adaptive(
    double x, double t, double eps, double L,
    const std::function<double(double, double)>& G,
    const std::function<double(double, double)>& f, double tol) {
    auto inner = [&](double s) {
        auto fn = [&](double xi) { return G(xi, s) * f(xi, t - s); };
        return integrate_spatial(fn, x, s, eps, L, 0.2 * tol / std::sqrt(t)).value;
    };
    auto integrand = [&](double q) { return 2.0 * q * inner(q * q); };
    return integrate_adaptive(integrand, 0.0, std::sqrt(t), tol, 60);
}

// Fixed-rule version for the Picard source term. panels_per_q controls the
// composite resolution of the outer graded time integral.
inline double source_integral_fixed(
    double x, double t, double eps, double L,
    const std::function<double(double, double)>& G,
    const std::function<double(double, double)>& f, int panels_per_q) {
    auto inner = [&](double s) {
        auto fn = [&](double xi) { return G(xi, s) * f(xi, t - s); };
        return integrate_spatial_fixed(fn, x, s, eps, L);
    };
    auto integrand = [&](double q) { return 2.0 * q * inner(q * q); };
    const double qmax = std::sqrt(t);
    const int panels = std::max(4, int(std::ceil(panels_per_q * qmax)));
    double value = 0.0;
    const double h = qmax / panels;
    for (int p = 0; p < panels; ++p)
        value += gk15(integrand, p * h, (p + 1) * h).value;
    return value;
}

}  // namespace detail
}  // namespace fhn

#endif
