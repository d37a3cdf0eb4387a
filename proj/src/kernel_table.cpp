#include "fhn/kernel_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fhn/errors.hpp"
#include "fhn/kernels.hpp"

namespace fhn {

namespace {

inline double heat_lead(const FhnParams& p, double xi, double t) {
    return std::exp(-xi * xi / (4.0 * p.eps * t) - p.a * t) / std::sqrt(t);
}

}  // namespace

KernelTable KernelTable::build(const FhnParams& params, const Options& opts) {
    params.validate();
    if (params.b < 0.0)
        throw DomainError("KernelTable: b < 0 has no real-valued kernel form");
    if (!(opts.t_max > 0.0) || !(opts.xi_max > 0.0))
        throw DomainError("KernelTable: xi_max and t_max must be positive");

    KernelTable tab;
    tab.params_ = params;
    tab.xi_max_ = opts.xi_max;
    tab.t_max_ = opts.t_max;
    tab.trivial_b_ = (params.b == 0.0);
    tab.has_k0x_ = opts.need_k0x;
    tab.has_k2_ = opts.need_k2 && params.b > 0.0;

    // xi resolution follows the Gaussian spike width sqrt(eps t); 0.02 sqrt(eps)
    // resolves the smallest amplitude-relevant widths (validated below).
    std::size_t n_xi = opts.n_xi;
    if (n_xi == 0) {
        n_xi = std::size_t(std::clamp(opts.xi_max / (0.02 * std::sqrt(params.eps)),
                                      200.0, 2400.0));
    }
    const std::size_t n_q = std::max<std::size_t>(opts.n_q, 33);
    const double dxi = opts.xi_max / double(n_xi);
    const double q_max = std::sqrt(opts.t_max);
    const double dq = q_max / double(n_q - 1);

    const double pref = 1.0 / (2.0 * std::sqrt(M_PI * params.eps));
    const double sb = std::sqrt(params.b);

    struct Spec {
        UniformBicubic* grid;
        int which;  // 0: R0, 1: R0x, 2: K1, 3: K2
    };
    std::vector<Spec> specs;
    if (!tab.trivial_b_)
        tab.r0_ = UniformBicubic(n_xi + 1, n_q, 0.0, dxi, 0.0, dq, +1, +1);
    if (!tab.trivial_b_ && tab.has_k0x_)
        tab.r0x_ = UniformBicubic(n_xi + 1, n_q, 0.0, dxi, 0.0, dq, -1, +1);
    tab.k1_ = UniformBicubic(n_xi + 1, n_q, 0.0, dxi, 0.0, dq, +1, +1);
    if (tab.has_k2_)
        tab.k2_ = UniformBicubic(n_xi + 1, n_q, 0.0, dxi, 0.0, dq, +1, +1);

    if (!tab.trivial_b_) specs.push_back({&tab.r0_, 0});
    if (!tab.trivial_b_ && tab.has_k0x_) specs.push_back({&tab.r0x_, 1});
    specs.push_back({&tab.k1_, 2});
    if (tab.has_k2_) specs.push_back({&tab.k2_, 3});

    for (auto& spec : specs) {
        UniformBicubic& g = *spec.grid;
        const int which = spec.which;
        parallel_for(std::ptrdiff_t((n_xi + 1) * n_q), opts.exec,
                     [&](std::ptrdiff_t idx) {
            const std::size_t i = std::size_t(idx) % (n_xi + 1);
            const std::size_t j = std::size_t(idx) / (n_xi + 1);
            if (j == 0) {
                g.node(i, 0) = 0.0;  // all tabulated parts vanish at t = 0
                return;
            }
            const double xi = i * dxi;
            const double q = j * dq;
            const double t = q * q;
            double v = 0.0;
            switch (which) {
                case 0:
                    v = (heat_lead(params, xi, t) -
                         k0(params, xi, t, opts.build_tol).value / pref) / sb;
                    break;
                case 1:
                    if (xi == 0.0) {
                        v = 0.0;  // odd in xi
                    } else {
                        const double lead_x =
                            -xi / (2.0 * params.eps * t) * heat_lead(params, xi, t);
                        v = (k0_x(params, xi, t, opts.build_tol).value / pref -
                             lead_x) / sb;
                    }
                    break;
                case 2:
                    v = k_i(params, 1, xi, t, opts.build_tol).value;
                    break;
                case 3:
                    v = k_i(params, 2, xi, t, opts.build_tol).value;
                    break;
            }
            g.node(i, j) = v;
        });
    }

    // measure the table against the direct evaluators on random points
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> ux(0.0, opts.xi_max);
    std::uniform_real_distribution<double> ut(1e-3 * opts.t_max, opts.t_max);
    double max_diff = 0.0;
    for (int k = 0; k < 160; ++k) {
        const double xi = ux(rng);
        const double t = (k % 8 == 0) ? opts.t_max * 1e-4 + ut(rng) * 1e-3
                                      : ut(rng);
        max_diff = std::max(max_diff,
            std::fabs(tab.k0(xi, t) - k0(params, xi, t, 1e-10).value));
        max_diff = std::max(max_diff,
            std::fabs(tab.k1(xi, t) - k_i(params, 1, xi, t, 1e-10).value));
        if (tab.has_k0x_ && xi > 1e-6)
            max_diff = std::max(max_diff,
                std::fabs(tab.k0_x(xi, t) - k0_x(params, xi, t, 1e-10).value));
        if (tab.has_k2_)
            max_diff = std::max(max_diff,
                std::fabs(tab.k2(xi, t) - k_i(params, 2, xi, t, 1e-10).value));
    }
    tab.err_bound_ = 2.0 * max_diff + opts.build_tol;
    return tab;
}

double KernelTable::k0(double xi, double t) const {
    if (!(t > 0.0)) return 0.0;
    const double axi = std::fabs(xi);
    const double pref = 1.0 / (2.0 * std::sqrt(M_PI * params_.eps));
    double v = pref * heat_lead(params_, axi, t);
    if (!trivial_b_ && axi <= xi_max_)
        v -= pref * std::sqrt(params_.b) * r0_.eval(axi, std::sqrt(t));
    return v;
}

double KernelTable::k0_x(double xi, double t) const {
    if (!(t > 0.0) || xi == 0.0) return 0.0;
    const double axi = std::fabs(xi);
    const double sign = xi > 0.0 ? 1.0 : -1.0;
    const double pref = 1.0 / (2.0 * std::sqrt(M_PI * params_.eps));
    double v = -axi / (2.0 * params_.eps * t) * heat_lead(params_, axi, t);
    if (!trivial_b_ && axi <= xi_max_) {
        if (!has_k0x_)
            throw DomainError("KernelTable: k0_x requested but not built");
        v += std::sqrt(params_.b) * r0x_.eval(axi, std::sqrt(t));
    }
    return sign * pref * v;
}

double KernelTable::k1(double xi, double t) const {
    if (!(t > 0.0)) return 0.0;
    const double axi = std::fabs(xi);
    if (axi > xi_max_) return 0.0;
    return k1_.eval(axi, std::sqrt(t));
}

double KernelTable::k2(double xi, double t) const {
    if (!has_k2_) throw DomainError("KernelTable: k2 requested but not built");
    if (!(t > 0.0)) return 0.0;
    const double axi = std::fabs(xi);
    if (axi > xi_max_) return 0.0;
    return k2_.eval(axi, std::sqrt(t));
}

}  // namespace fhn
