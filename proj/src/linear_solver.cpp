#include "fhn/linear_solver.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "fhn/errors.hpp"
#include "solver_core.hpp"

namespace fhn {

namespace {

void check_grid(const FhnParams& params, const Grid& grid) {
    if (grid.x.empty() || grid.t.empty())
        throw DomainError("solve_linear: empty grid");
    if (!(grid.t.front() > 0.0))
        throw DomainError("solve_linear: grid_t must start above 0");
    for (double x : grid.x)
        if (x < 0.0 || x > params.L)
            throw DomainError("solve_linear: grid_x outside [0, L]");
}

Field solve_linear_common(const FhnParams& params, const InitialData& init,
                          const BoundaryData& bdry, const SourceTerm& f,
                          const Grid& grid, const SolveOptions& opts,
                          SolveDiagnostics* diag, BoundaryKind kind) {
    params.validate();
    check_grid(params, grid);
    if (bdry.kind != kind)
        throw DomainError("solve_linear: boundary data kind does not match solver");

    const detail::SolverCore core = detail::SolverCore::make(
        params, kind, grid.t.back(), /*need_k1=*/false, /*need_k2=*/false, opts);

    const std::size_t nx = grid.x.size(), nt = grid.t.size();
    Field u;
    u.grid_x = grid.x;
    u.grid_t = grid.t;
    u.values.assign(nx * nt, 0.0);

    std::vector<double> point_err(nx * nt, 0.0);
    const bool dirichlet = (kind == BoundaryKind::Dirichlet);
    const double L = params.L;

    parallel_for(std::ptrdiff_t(nx * nt), opts.exec, [&](std::ptrdiff_t idx) {
        const std::size_t i = std::size_t(idx) % nx;
        const std::size_t j = std::size_t(idx) / nx;
        const double x = grid.x[i], t = grid.t[j];

        // Dirichlet boundary rows carry the data; the formula is evaluated at
        // interior x only (the derivative kernel jumps at x = 0).
        if (dirichlet && (x == 0.0 || x == L)) {
            u.at(j, i) = (x == 0.0) ? bdry.left(t) : bdry.right(t);
            return;
        }

        double err = 0.0;
        double val = core.term_profile(0, x, t, init.u0, opts.quad_tol, &err);
        val += core.boundary_terms_u(x, t, bdry, opts.quad_tol, &err);
        if (!f.zero) val += core.source_adaptive(0, x, t, f.fn, opts.quad_tol, &err);
        u.at(j, i) = val;
        point_err[idx] = err;
    });

    if (diag) {
        diag->table_err = core.table_err();
        for (double e : point_err)
            diag->max_quad_err = std::max(diag->max_quad_err, e);
    }
    u.meta = std::string("linear-") + (dirichlet ? "dirichlet" : "neumann");
    u.validate();
    return u;
}

}  // namespace

Field solve_linear_neumann(const FhnParams& params, const InitialData& init,
                           const BoundaryData& bdry, const SourceTerm& f,
                           const Grid& grid, const SolveOptions& opts,
                           SolveDiagnostics* diag) {
    return solve_linear_common(params, init, bdry, f, grid, opts, diag,
                               BoundaryKind::Neumann);
}

Field solve_linear_dirichlet(const FhnParams& params, const InitialData& init,
                             const BoundaryData& bdry, const SourceTerm& f,
                             const Grid& grid, const SolveOptions& opts,
                             SolveDiagnostics* diag) {
    return solve_linear_common(params, init, bdry, f, grid, opts, diag,
                               BoundaryKind::Dirichlet);
}

Field mckean_linear_scenario(const FhnParams& params, const InitialData& init,
                             const BoundaryData& bdry, int eta_bar,
                             const Grid& grid, const SolveOptions& opts,
                             SolveDiagnostics* diag) {
    if (!params.estimates_valid())
        throw RegimeError("mckean_linear_scenario: requires the estimates regime");
    if (eta_bar != 0 && eta_bar != 1)
        throw DomainError("mckean_linear_scenario: eta_bar must be 0 or 1");

    FhnParams shifted = params;
    shifted.a = params.a + 1.0;  // the -u of eta(u-a) - u joins the operator

    SourceTerm f = eta_bar == 0
                       ? SourceTerm::none()
                       : SourceTerm::of([](double, double) { return 1.0; });
    Field out =
        bdry.kind == BoundaryKind::Neumann
            ? solve_linear_neumann(shifted, init, bdry, f, grid, opts, diag)
            : solve_linear_dirichlet(shifted, init, bdry, f, grid, opts, diag);
    out.meta = "mckean-step eta=" + std::to_string(eta_bar);
    return out;
}

}  // namespace fhn
