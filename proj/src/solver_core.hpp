#ifndef FHN_SRC_SOLVER_CORE_HPP
#define FHN_SRC_SOLVER_CORE_HPP

// Shared evaluation machinery for the explicit solution formulas. Internal.

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>

#include "fhn/errors.hpp"
#include "fhn/kernel_table.hpp"
#include "fhn/linear_solver.hpp"
#include "fhn/theta.hpp"
#include "integrators.hpp"

namespace fhn {
namespace detail {

struct SolverCore {
    FhnParams params;
    BoundaryKind kind = BoundaryKind::Neumann;
    SolveOptions opts;
    std::optional<KernelTable> table;
    std::unique_ptr<ThetaEvaluator> th;

    static SolverCore make(const FhnParams& params, BoundaryKind kind,
                           double t_max, bool need_k1, bool need_k2,
                           const SolveOptions& opts) {
        SolverCore c;
        c.params = params;
        c.kind = kind;
        c.opts = opts;

        const bool need_k0x = (kind == BoundaryKind::Dirichlet);
        if (opts.use_table && params.b > 0.0) {
            int n = theta_truncation_images(params, 0, false, t_max,
                                            0.5 * opts.theta_tol);
            if (need_k1)
                n = std::max(n, theta_truncation_images(params, 1, false, t_max,
                                                        0.5 * opts.theta_tol));
            if (need_k2)
                n = std::max(n, theta_truncation_images(params, 2, false, t_max,
                                                        0.5 * opts.theta_tol));
            if (need_k0x)
                n = std::max(n, theta_truncation_images(params, 0, true, t_max,
                                                        0.5 * opts.theta_tol));
            KernelTable::Options to;
            to.xi_max = (2.0 * n + 2.0) * params.L;
            to.t_max = t_max;
            to.build_tol = opts.table_build_tol;
            to.need_k0x = need_k0x;
            to.need_k2 = need_k2;
            to.exec = opts.exec;
            c.table = KernelTable::build(params, to);
            c.th = std::make_unique<ThetaEvaluator>(params, &*c.table);
        } else {
            c.th = std::make_unique<ThetaEvaluator>(params);
        }
        c.th->set_fast_tol(opts.theta_tol);
        return c;
    }

    double table_err() const { return table ? table->err_bound() : 0.0; }

    // Data/source kernel: theta_i(|x-xi|) + theta_i(x+xi) for Neumann,
    // theta_i(|x-xi|) - theta_i(x+xi) for Dirichlet.
    double data_kernel(int i, double x, double xi, double s) const {
        const double d = th->theta_fast(i, std::fabs(x - xi), s);
        const double r = th->theta_fast(i, x + xi, s);
        return kind == BoundaryKind::Neumann ? d + r : d - r;
    }

    // Int_0^L data_kernel(i, x, xi, t) p(xi) dxi
    double term_profile(int i, double x, double t, const Profile& p, double tol,
                        double* err_acc) const {
        if (p.is_const_zero()) return 0.0;
        auto fn = [&](double xi) { return data_kernel(i, x, xi, t) * p(xi); };
        QuadResult r = integrate_spatial(fn, x, t, params.eps, params.L, tol);
        if (err_acc) *err_acc += r.abs_error;
        return r.value;
    }

    // Boundary convolutions of the u-formula: theta0 against the fluxes for
    // Neumann, -d/dy theta0 against the boundary values for Dirichlet.
    double boundary_terms_u(double x, double t, const BoundaryData& bdry,
                            double tol, double* err_acc) const {
        const double eps = params.eps, L = params.L;
        double acc = 0.0;
        if (kind == BoundaryKind::Neumann) {
            if (!bdry.left.is_const_zero()) {
                auto w = [&](double s) { return th->theta_fast(0, x, s); };
                auto g = [&](double tau) { return bdry.left(tau); };
                QuadResult r = convolve_boundary(w, g, t, tol);
                acc -= 2.0 * eps * r.value;
                if (err_acc) *err_acc += 2.0 * eps * r.abs_error;
            }
            if (!bdry.right.is_const_zero()) {
                auto w = [&](double s) { return th->theta_fast(0, L - x, s); };
                auto g = [&](double tau) { return bdry.right(tau); };
                QuadResult r = convolve_boundary(w, g, t, tol);
                acc += 2.0 * eps * r.value;
                if (err_acc) *err_acc += 2.0 * eps * r.abs_error;
            }
        } else {
            if (!bdry.left.is_const_zero()) {
                auto w = [&](double s) { return th->theta_x_fast(x, s); };
                auto g = [&](double tau) { return bdry.left(tau); };
                QuadResult r = convolve_boundary(w, g, t, tol);
                acc -= 2.0 * eps * r.value;
                if (err_acc) *err_acc += 2.0 * eps * r.abs_error;
            }
            if (!bdry.right.is_const_zero()) {
                auto w = [&](double s) { return th->theta_x_fast(L - x, s); };
                auto g = [&](double tau) { return bdry.right(tau); };
                QuadResult r = convolve_boundary(w, g, t, tol);
                acc -= 2.0 * eps * r.value;
                if (err_acc) *err_acc += 2.0 * eps * r.abs_error;
            }
        }
        return acc;
    }

    // theta1 convolutions of the v-formula (Neumann only; the whole block
    // carries the prefactor b applied by the caller).
    double boundary_terms_v(double x, double t, const BoundaryData& bdry,
                            double tol, double* err_acc) const {
        const double eps = params.eps, L = params.L;
        double acc = 0.0;
        if (!bdry.left.is_const_zero()) {
            auto w = [&](double s) { return th->theta_fast(1, x, s); };
            auto g = [&](double tau) { return bdry.left(tau); };
            QuadResult r = convolve_boundary(w, g, t, tol);
            acc -= 2.0 * eps * r.value;
            if (err_acc) *err_acc += 2.0 * eps * r.abs_error;
        }
        if (!bdry.right.is_const_zero()) {
            auto w = [&](double s) { return th->theta_fast(1, L - x, s); };
            auto g = [&](double tau) { return bdry.right(tau); };
            QuadResult r = convolve_boundary(w, g, t, tol);
            acc += 2.0 * eps * r.value;
            if (err_acc) *err_acc += 2.0 * eps * r.abs_error;
        }
        return acc;
    }

    double source_adaptive(int i, double x, double t,
                           const std::function<double(double, double)>& f,
                           double tol, double* err_acc) const {
        auto G = [&](double xi, double s) { return data_kernel(i, x, xi, s); };
        QuadResult r =
            source_integral_adaptive(x, t, params.eps, params.L, G, f, tol);
        if (err_acc) *err_acc += r.abs_error;
        if (r.abs_error > 50.0 * tol)
            throw ToleranceError("source integral failed to reach tolerance",
                                 r.value, r.abs_error);
        return r.value;
    }

    double source_fixed(int i, double x, double t,
                        const std::function<double(double, double)>& f) const {
        auto G = [&](double xi, double s) { return data_kernel(i, x, xi, s); };
        return source_integral_fixed(x, t, params.eps, params.L, G, f,
                                     opts.source_panels_per_q);
    }
};

}  // namespace detail
}  // namespace fhn

#endif
