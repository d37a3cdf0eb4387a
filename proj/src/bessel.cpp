#include "fhn/bessel.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "fhn/errors.hpp"

namespace fhn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Minimal double-double arithmetic. The power series suffers catastrophic
// cancellation in plain doubles once the largest term exceeds ~1e4 (z ~ 12);
// carrying term and sum as hi+lo pairs keeps the absolute rounding error near
// max_term * 1e-30, which preserves the 1e-12 error budget up to the seam.
struct DD {
    double hi, lo;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DD r = two_sum(s.hi, s.lo);
    return r;
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

inline DD dd_div_double(DD a, double b) {
    double q1 = a.hi / b;
    DD p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    return two_sum(q1, r / b);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

}  // namespace

namespace bessel_detail {

BesselResult j_series(int order, double z) {
    // J0: sum (-1)^k q^k / (k!)^2,       q = (z/2)^2
    // J1: (z/2) sum (-1)^k q^k / (k!(k+1)!)
    const double half = 0.5 * z;
    const DD q = two_prod(half, half);

    DD term = (order == 0) ? DD{1.0, 0.0} : DD{half, 0.0};
    DD sum = term;
    double max_term = std::fabs(term.hi);

    for (int k = 1; k < 200; ++k) {
        const double denom =
            (order == 0) ? double(k) * double(k) : double(k) * double(k + 1);
        term = dd_div_double(dd_mul(term, q), denom);
        term = dd_neg(term);
        sum = dd_add(sum, term);
        const double mag = std::fabs(term.hi);
        if (mag > max_term) max_term = mag;
        if (mag < 1e-20 * (std::fabs(sum.hi) + 1e-30) && mag < 1e-25) break;
    }

    BesselResult r;
    r.value = sum.hi + sum.lo;
    r.est_abs_error = max_term * 1e-30 + std::fabs(r.value) * 4.0 * kEps + 1e-18;
    return r;
}

BesselResult j_asymptotic(int order, double z) {
    // Hankel expansion: J_nu(z) = sqrt(2/(pi z)) Re[ e^{i chi} sum_k i^k a_k / z^k ],
    // chi = z - nu pi/2 - pi/4, a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (8 j).
    // Terms decrease until k ~ 2z; truncate at the first negligible or growing term.
    const double az = std::fabs(z);
    const double mu = 4.0 * order * order;
    std::complex<double> sum(1.0, 0.0);
    double a = 1.0;
    double prev_mag = 1.0;
    double last_mag = 0.0;
    for (int k = 1; k <= 40; ++k) {
        a *= (mu - double(2 * k - 1) * double(2 * k - 1)) / (8.0 * k);
        const double mag = std::fabs(a) / std::pow(az, k);
        last_mag = mag;
        if (mag > prev_mag) break;  // divergent tail reached
        std::complex<double> ik;
        switch (k & 3) {
            case 0: ik = {1.0, 0.0}; break;
            case 1: ik = {0.0, 1.0}; break;
            case 2: ik = {-1.0, 0.0}; break;
            default: ik = {0.0, -1.0}; break;
        }
        sum += ik * (a / std::pow(az, k));
        prev_mag = mag;
        if (mag < 1e-17) break;
    }
    const double chi = az - 0.5 * order * M_PI - 0.25 * M_PI;
    const double pref = std::sqrt(2.0 / (M_PI * az));
    double value = pref * (std::cos(chi) * sum.real() - std::sin(chi) * sum.imag());
    if (z < 0.0 && order == 1) value = -value;  // J1 odd (J0 even)

    BesselResult r;
    r.value = value;
    r.est_abs_error = pref * last_mag + (std::fabs(value) + az) * 2.0 * kEps;
    return r;
}

}  // namespace bessel_detail

static BesselResult bessel_j(int order, double z) {
    if (!std::isfinite(z)) throw DomainError("bessel_j: non-finite argument");
    if (std::fabs(z) <= bessel_detail::kSeriesAsymptoticCrossover)
        return bessel_detail::j_series(order, z);
    return bessel_detail::j_asymptotic(order, z);
}

BesselResult bessel_j0(double z) { return bessel_j(0, z); }

BesselResult bessel_j1(double z) { return bessel_j(1, z); }

double bessel_j1_over_z(double z) {
    if (!std::isfinite(z)) throw DomainError("bessel_j1_over_z: non-finite argument");
    const double az = std::fabs(z);
    if (az < 1e-4) {
        // leading series terms; next omitted term ~ z^6/3e4, below 1e-28 here
        const double q = 0.25 * z * z;
        return 0.5 - q / 4.0 + q * q / 24.0;
    }
    return bessel_j1(z).value / z;
}

}  // namespace fhn
