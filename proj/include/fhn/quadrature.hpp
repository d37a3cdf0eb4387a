#ifndef FHN_QUADRATURE_HPP
#define FHN_QUADRATURE_HPP

#include <functional>

namespace fhn {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;   // sound estimate of |value - exact|
    bool converged = false;   // est <= requested tolerance
};

// 15-point Gauss-Kronrod rule on [a,b] with the embedded 7-point Gauss error
// estimate.
QuadResult gk15(const std::function<double(double)>& f, double a, double b);

// Globally adaptive bisection built on gk15. Splits the worst interval until
// the summed error estimate drops below tol or the interval budget runs out.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_intervals = 4000);

// Composite rule with panel doubling: evaluates gk15 on m equal panels,
// doubling m until two successive composites agree within tol. Suited to the
// smooth substituted kernel integrands.
QuadResult integrate_doubling(const std::function<double(double)>& f, double a,
                              double b, double tol, int initial_panels = 4,
                              int max_panels = 4096);

}  // namespace fhn

#endif
