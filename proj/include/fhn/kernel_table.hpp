#ifndef FHN_KERNEL_TABLE_HPP
#define FHN_KERNEL_TABLE_HPP

#include <cstddef>

#include "fhn/interp.hpp"
#include "fhn/params.hpp"
#include "fhn/parallel.hpp"

namespace fhn {

// Tabulated kernel backend for the solution formulas, which evaluate the
// kernels at millions of (x, t) points per solve. The closed-form damped heat
// part of K0 (and of K0_x) is kept analytic; only the bounded Bessel-integral
// parts are tabulated, on a uniform grid in (xi, q = sqrt(t)) where they are
// smooth. Interpolation is bicubic with parity-correct mirroring at xi = 0 and
// q = 0. The direct quadrature evaluators in kernels.hpp remain the reference;
// build() measures the table against them on random points and stores the
// observed error bound.
class KernelTable {
public:
    struct Options {
        double xi_max = 10.0;
        double t_max = 1.0;
        std::size_t n_xi = 0;   // 0 -> resolution chosen from eps and xi_max
        std::size_t n_q = 257;
        double build_tol = 1e-9;
        bool need_k2 = false;
        bool need_k0x = false;
        Exec exec = Exec::par;
    };

    static KernelTable build(const FhnParams& params, const Options& opts);

    double k0(double xi, double t) const;
    double k0_x(double xi, double t) const;
    double k1(double xi, double t) const;
    double k2(double xi, double t) const;

    bool has_k0x() const { return has_k0x_; }
    bool has_k2() const { return has_k2_; }
    double xi_max() const { return xi_max_; }
    double t_max() const { return t_max_; }

    // Observed |table - direct| bound from the post-build validation sweep,
    // folded into solver slack accounting.
    double err_bound() const { return err_bound_; }

    const FhnParams& params() const { return params_; }

private:
    FhnParams params_;
    double xi_max_ = 0.0, t_max_ = 0.0;
    bool trivial_b_ = true;  // b == 0: K0/K0_x fully closed-form
    bool has_k0x_ = false, has_k2_ = false;
    double err_bound_ = 0.0;
    UniformBicubic r0_, r0x_, k1_, k2_;
};

}  // namespace fhn

#endif
