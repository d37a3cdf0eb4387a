#ifndef FHN_FD_ORACLE_HPP
#define FHN_FD_ORACLE_HPP

#include <functional>
#include <vector>

#include "fhn/data.hpp"
#include "fhn/kinetics.hpp"
#include "fhn/nonlinear.hpp"
#include "fhn/params.hpp"

namespace fhn {

enum class FdScheme { explicit_rk4, imex };

struct FdConfig {
    int nx = 128;       // spatial intervals, >= 16
    double dt = 0.0;    // 0 -> chosen from the stability bound
    FdScheme scheme = FdScheme::explicit_rk4;
    BoundaryKind bc = BoundaryKind::Neumann;
};

// Reaction/source variants of the method-of-lines system. All three reduce
// the memory term to the local ODE w' = b u - beta w (w(0) = 0 in the linear
// and Josephson modes, w = v with v(0) = v0 in the kinetics mode); the
// Josephson memory source becomes m' = -beta m - (gamma + sin u), m(0) = 0,
// since the mapping sets the memory rate 1/eps equal to beta.
struct FdSource {
    enum class Mode { linear, kinetics, josephson };
    Mode mode = Mode::linear;
    std::function<double(double, double)> f;  // linear mode source f(x,t)
    bool f_zero = true;
    Kinetics kin;        // kinetics mode
    double gamma = 0.0;  // josephson bias

    static FdSource none();
    static FdSource linear_source(std::function<double(double, double)> fn);
    static FdSource of_kinetics(Kinetics k);
    static FdSource josephson(double gamma);
};

// Independent finite-difference reference: second-order central differences,
// ghost-point Neumann or pinned Dirichlet boundaries, RK4 (or first-order
// IMEX) in time. Deterministic; the ground-truth oracle for the semi-analytic
// solvers.
FhnSolution fd_solve(const FhnParams& params, const InitialData& init,
                     const BoundaryData& bdry, const FdSource& src,
                     const FdConfig& cfg, const Grid& out);

struct FdScenario {
    FhnParams params;
    InitialData init;
    BoundaryData bdry;
    FdSource src;
    FdConfig cfg;
    Grid out;
    std::function<double(double, double)> analytic;  // optional exact solution
    bool has_analytic = false;
};

struct ConvergenceTable {
    std::vector<int> nx;
    std::vector<double> error;   // max-norm at the final output time
    std::vector<double> order;   // observed order between successive rows
    bool exact = false;          // all errors at rounding level
};

// Error at the final output time for each nx (against the analytic solution
// when present, else against the finest run restricted to coarse nodes) and
// the observed convergence orders.
ConvergenceTable fd_convergence_study(const FdScenario& scenario,
                                      const std::vector<int>& nx_list);

}  // namespace fhn

#endif
