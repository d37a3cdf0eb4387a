#ifndef FHN_LINEAR_SOLVER_HPP
#define FHN_LINEAR_SOLVER_HPP

#include <functional>

#include "fhn/data.hpp"
#include "fhn/parallel.hpp"
#include "fhn/params.hpp"

namespace fhn {

// Space-time source f(x,t) of the linear problem.
struct SourceTerm {
    std::function<double(double, double)> fn;
    bool zero = true;

    static SourceTerm none() { return {}; }
    static SourceTerm of(std::function<double(double, double)> f) {
        SourceTerm s;
        s.fn = std::move(f);
        s.zero = false;
        return s;
    }
};

struct SolveOptions {
    double quad_tol = 1e-6;       // per-term absolute quadrature tolerance
    double theta_tol = 1e-9;      // image-sum truncation tolerance
    bool use_table = true;        // tabulated kernel backend for b > 0
    double table_build_tol = 3e-9;
    int source_panels_per_q = 4;  // Picard source rule resolution
    Exec exec = Exec::par;
};

// Accumulated numerics diagnostics of one solve, used for certificate slack.
struct SolveDiagnostics {
    double max_quad_err = 0.0;   // worst per-point quadrature error estimate
    double table_err = 0.0;      // kernel-table validation bound (0 if direct)
};

// Explicit solution of the linear Neumann problem:
//   u = Int G0 u0 dxi - 2 eps Int theta0(x) psi1 + 2 eps Int theta0(L-x) psi2
//       + Int Int G0 f,
// with G0(x,xi,t) = theta0(|x-xi|,t) + theta0(x+xi,t). Every grid point is
// evaluated independently.
Field solve_linear_neumann(const FhnParams& params, const InitialData& init,
                           const BoundaryData& bdry, const SourceTerm& f,
                           const Grid& grid, const SolveOptions& opts = {},
                           SolveDiagnostics* diag = nullptr);

// Dirichlet counterpart. The data/source kernel is
// theta0(|x-xi|,t) - theta0(x+xi,t) and the boundary data convolve against
// -2 eps d/dy theta0(y, .) at y = x and y = L-x; this sign convention was
// fixed by matching the finite-difference oracle (the paper's bracket has the
// opposite sign, its transform-domain form resolves to this one).
Field solve_linear_dirichlet(const FhnParams& params, const InitialData& init,
                             const BoundaryData& bdry, const SourceTerm& f,
                             const Grid& grid, const SolveOptions& opts = {},
                             SolveDiagnostics* diag = nullptr);

// Piecewise-linear (McKean) kinetics with the step frozen to eta_bar in {0,1}:
// the -u term of f(u) = eta(u-a) - u shifts the operator coefficient to a+1
// and the step becomes the constant source eta_bar. Requires the estimates
// regime.
Field mckean_linear_scenario(const FhnParams& params, const InitialData& init,
                             const BoundaryData& bdry, int eta_bar,
                             const Grid& grid, const SolveOptions& opts = {},
                             SolveDiagnostics* diag = nullptr);

}  // namespace fhn

#endif
