#ifndef FHN_BESSEL_HPP
#define FHN_BESSEL_HPP

namespace fhn {

// Value plus a sound absolute-error estimate. The estimate stays below 1e-12
// for |z| <= 50, which covers every kernel integrand argument at desk scale.
struct BesselResult {
    double value = 0.0;
    double est_abs_error = 0.0;
};

// Bessel functions of the first kind, orders 0 and 1. Two-branch evaluation:
// compensated (double-double) power series for |z| <= 18, Hankel large-argument
// expansion beyond; the branches agree to ~1e-13 at the seam.
BesselResult bessel_j0(double z);
BesselResult bessel_j1(double z);

// J1(z)/z, finite at z = 0 (value 1/2). Used where the kernel formulas put a
// vanishing factor under J1.
double bessel_j1_over_z(double z);

namespace bessel_detail {
// Exposed so tests can probe each branch on both sides of the crossover.
constexpr double kSeriesAsymptoticCrossover = 18.0;
BesselResult j_series(int order, double z);
BesselResult j_asymptotic(int order, double z);
}  // namespace bessel_detail

}  // namespace fhn

#endif
