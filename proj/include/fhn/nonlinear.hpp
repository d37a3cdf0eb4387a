#ifndef FHN_NONLINEAR_HPP
#define FHN_NONLINEAR_HPP

#include <vector>

#include "fhn/data.hpp"
#include "fhn/kinetics.hpp"
#include "fhn/linear_solver.hpp"
#include "fhn/params.hpp"

namespace fhn {

struct PicardReport {
    int iterations = 0;
    std::vector<double> residual_history;  // sup-norm successive differences
    bool converged = false;
    double final_residual = 0.0;
};

struct FhnSolution {
    Field u;
    Field v;
    PicardReport report;
};

struct PicardOptions {
    double picard_tol = 1e-8;
    int max_iter = 50;
    SolveOptions solve;
};

// Picard iteration on the coupled integral equations: u is the fixed point of
//   u = Int [G0 u0 - G1 v0] dxi - 2 eps Int theta0 psi1 + 2 eps Int theta0 psi2
//       + Int Int G0 phi[u],
// starting from the linear part (everything except the phi integral); v then
// follows from its own expansion in G1, G2, theta1. Iterates live on the
// output grid and interpolate piecewise-cubically inside the integrals.
// Throws NonConvergenceError past max_iter and DivergenceError when an
// iterate leaves the kinetics working box or goes non-finite.
FhnSolution solve_fhn_neumann(const FhnParams& params, const InitialData& init,
                              const BoundaryData& bdry, const Kinetics& kin,
                              const Grid& grid, const PicardOptions& opts = {},
                              SolveDiagnostics* diag = nullptr);

// Dirichlet counterpart: the data/source kernel is the theta difference and
// the boundary values convolve against the theta0 derivative; v is recovered
// from the converged u by the recovery formula.
FhnSolution solve_fhn_dirichlet(const FhnParams& params, const InitialData& init,
                                const BoundaryData& bdry, const Kinetics& kin,
                                const Grid& grid, const PicardOptions& opts = {},
                                SolveDiagnostics* diag = nullptr);

// v(x,t) = v0(x) e^{-beta t} + b Int_0^t e^{-beta (t-tau)} u(x,tau) dtau,
// trapezoid in tau with the exponential factor integrated exactly; the field
// is resampled through its cubic interpolant on an 8x refined tau grid so the
// result resolves the interpolant rather than the raw sample spacing.
Field recover_v(const FhnParams& params, const Field& u, const Profile& v0);

// Variant with the t = 0 row (u0 on grid_x) supplied, used internally where
// the initial profile is known exactly.
Field recover_v(const FhnParams& params, const Field& u, const Profile& v0,
                const std::vector<double>& u0_row);

// One application of the integral-equation map to a trial field; exposed so
// tests can verify the fixed-point property of a converged solution.
Field apply_fhn_map(const FhnParams& params, const InitialData& init,
                    const BoundaryData& bdry, const Kinetics& kin,
                    const Field& trial, const PicardOptions& opts = {});

}  // namespace fhn

#endif
