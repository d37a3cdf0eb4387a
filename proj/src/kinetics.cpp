#include "fhn/kinetics.hpp"

#include <algorithm>
#include <cmath>

#include "fhn/errors.hpp"

namespace fhn {

double phi_cubic(double a, double u) { return u * u * (a + 1.0 - u); }

Kinetics cubic_kinetics(double a, double halfwidth) {
    Kinetics k;
    const double w = halfwidth > 0.0 ? halfwidth : 2.0 * (a + 1.0);
    k.phi = [a](double u) { return phi_cubic(a, u); };
    // sup |phi'| on [-w, w]; phi'(u) = 2u(a+1) - 3u^2, critical at u = (a+1)/3
    double lip = 0.0;
    for (double u : {-w, w, (a + 1.0) / 3.0}) {
        if (std::fabs(u) <= w)
            lip = std::max(lip, std::fabs(2.0 * u * (a + 1.0) - 3.0 * u * u));
    }
    k.phi_lipschitz_bound = lip;
    k.working_halfwidth = w;
    k.description = "cubic u^2(a+1-u), a=" + std::to_string(a);
    return k;
}

double source_F(const Kinetics& kin, const Profile& v0, double beta, double x,
                double t, double u) {
    return kin.phi(u) - v0(x) * std::exp(-beta * t);
}

double josephson_source(double gamma, double eps,
                        const std::vector<double>& times,
                        const std::vector<double>& u_values, double t) {
    if (!(eps > 0.0)) throw DomainError("josephson_source: eps must be positive");
    if (times.size() != u_values.size() || times.size() < 2)
        throw DomainError("josephson_source: need at least two history samples");
    if (times.front() > 0.0 || times.back() < t - 1e-12)
        throw DomainError("josephson_source: history must cover [0, t]");

    auto g = [&](std::size_t j) { return gamma + std::sin(u_values[j]); };
    auto weight = [&](double tau) { return std::exp(-(t - tau) / eps); };

    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < times.size(); ++j) {
        double t0 = std::max(times[j], 0.0);
        double t1 = std::min(times[j + 1], t);
        if (t1 <= t0) continue;
        // linear integrand values at the clipped segment ends
        const double h_full = times[j + 1] - times[j];
        auto lin = [&](double tau) {
            const double s = (tau - times[j]) / h_full;
            return g(j) * (1.0 - s) + g(j + 1) * s;
        };
        const double g0 = lin(t0), g1 = lin(t1);
        const double h = t1 - t0;
        const double w0 = weight(t0), w1 = weight(t1);
        // Int w * (g0 + (g1-g0)(tau-t0)/h) dtau, exact in the exponential
        const double int_w = eps * (w1 - w0);
        const double int_w_ramp = eps * h * w1 - eps * int_w;
        acc += g0 * int_w + (g1 - g0) / h * int_w_ramp;
    }
    return -acc;
}

}  // namespace fhn
