#include "fhn/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhn/errors.hpp"

namespace fhn {

FdSource FdSource::none() { return {}; }

FdSource FdSource::linear_source(std::function<double(double, double)> fn) {
    FdSource s;
    s.mode = Mode::linear;
    s.f = std::move(fn);
    s.f_zero = false;
    return s;
}

FdSource FdSource::of_kinetics(Kinetics k) {
    FdSource s;
    s.mode = Mode::kinetics;
    s.kin = std::move(k);
    return s;
}

FdSource FdSource::josephson(double gamma) {
    FdSource s;
    s.mode = Mode::josephson;
    s.gamma = gamma;
    return s;
}

namespace {

struct FdState {
    std::vector<double> u, w, m;
};

class FdSystem {
public:
    FdSystem(const FhnParams& p, const BoundaryData& bdry, const FdSource& src,
             int nx)
        : p_(p), bdry_(bdry), src_(src), nx_(nx), h_(p.L / nx) {}

    double h() const { return h_; }
    bool has_memory_source() const {
        return src_.mode == FdSource::Mode::josephson;
    }

    // du/dt etc. at time tau; state boundary values must already honor the
    // Dirichlet constraint at tau.
    void rhs(const FdState& s, double tau, FdState& out) const {
        const int n = nx_;
        const double eps = p_.eps, a = p_.a, b = p_.b, beta = p_.beta;
        out.u.resize(n + 1);
        out.w.resize(n + 1);
        if (has_memory_source()) out.m.resize(n + 1);

        auto lap = [&](int i) -> double {
            double um, up;
            if (i == 0) {
                if (bdry_.kind == BoundaryKind::Neumann)
                    um = s.u[1] - 2.0 * h_ * bdry_.left(tau);
                else
                    return 0.0;  // pinned
            } else {
                um = s.u[i - 1];
            }
            if (i == n) {
                if (bdry_.kind == BoundaryKind::Neumann)
                    up = s.u[n - 1] + 2.0 * h_ * bdry_.right(tau);
                else
                    return 0.0;
            } else {
                up = s.u[i + 1];
            }
            return eps * (um - 2.0 * s.u[i] + up) / (h_ * h_);
        };

        const bool pin = bdry_.kind == BoundaryKind::Dirichlet;
        for (int i = 0; i <= n; ++i) {
            const double x = i * h_;
            double du;
            if (pin && (i == 0 || i == n)) {
                du = 0.0;  // boundary value imposed outside the stage
            } else {
                du = lap(i) - a * s.u[i] - s.w[i];
                switch (src_.mode) {
                    case FdSource::Mode::linear:
                        if (!src_.f_zero) du += src_.f(x, tau);
                        break;
                    case FdSource::Mode::kinetics:
                        du += src_.kin.phi(s.u[i]);
                        break;
                    case FdSource::Mode::josephson:
                        du += s.m[i];
                        break;
                }
            }
            out.u[i] = du;
            out.w[i] = b * s.u[i] - beta * s.w[i];
            if (has_memory_source())
                out.m[i] = -beta * s.m[i] - (src_.gamma + std::sin(s.u[i]));
        }
    }

    void impose_boundary(FdState& s, double tau) const {
        if (bdry_.kind == BoundaryKind::Dirichlet) {
            s.u[0] = bdry_.left(tau);
            s.u[nx_] = bdry_.right(tau);
        }
    }

    void rk4_step(FdState& s, double tau, double dt) const {
        FdState k1, k2, k3, k4, tmp;
        rhs(s, tau, k1);
        tmp = advance(s, k1, 0.5 * dt, tau + 0.5 * dt);
        rhs(tmp, tau + 0.5 * dt, k2);
        tmp = advance(s, k2, 0.5 * dt, tau + 0.5 * dt);
        rhs(tmp, tau + 0.5 * dt, k3);
        tmp = advance(s, k3, dt, tau + dt);
        rhs(tmp, tau + dt, k4);
        const int n = nx_;
        for (int i = 0; i <= n; ++i) {
            s.u[i] += dt / 6.0 * (k1.u[i] + 2 * k2.u[i] + 2 * k3.u[i] + k4.u[i]);
            s.w[i] += dt / 6.0 * (k1.w[i] + 2 * k2.w[i] + 2 * k3.w[i] + k4.w[i]);
            if (has_memory_source())
                s.m[i] += dt / 6.0 * (k1.m[i] + 2 * k2.m[i] + 2 * k3.m[i] + k4.m[i]);
        }
        impose_boundary(s, tau + dt);
    }

    // first-order IMEX: implicit diffusion (backward Euler, Thomas solve),
    // explicit reaction, semi-implicit local ODEs
    void imex_step(FdState& s, double tau, double dt) const {
        const int n = nx_;
        const double r = dt * p_.eps / (h_ * h_);
        const double tau1 = tau + dt;

        std::vector<double> diag(n + 1, 1.0 + 2.0 * r), lower(n + 1, -r),
            upper(n + 1, -r), rhsv(n + 1);
        for (int i = 0; i <= n; ++i) {
            const double x = i * h_;
            double react = -p_.a * s.u[i] - s.w[i];
            switch (src_.mode) {
                case FdSource::Mode::linear:
                    if (!src_.f_zero) react += src_.f(x, tau);
                    break;
                case FdSource::Mode::kinetics:
                    react += src_.kin.phi(s.u[i]);
                    break;
                case FdSource::Mode::josephson:
                    react += s.m[i];
                    break;
            }
            rhsv[i] = s.u[i] + dt * react;
        }
        if (bdry_.kind == BoundaryKind::Neumann) {
            upper[0] = -2.0 * r;
            rhsv[0] -= 2.0 * r * h_ * bdry_.left(tau1);
            lower[n] = -2.0 * r;
            rhsv[n] += 2.0 * r * h_ * bdry_.right(tau1);
        } else {
            diag[0] = 1.0;
            upper[0] = 0.0;
            rhsv[0] = bdry_.left(tau1);
            diag[n] = 1.0;
            lower[n] = 0.0;
            rhsv[n] = bdry_.right(tau1);
        }
        // Thomas
        std::vector<double> cp(n + 1), dp(n + 1);
        cp[0] = upper[0] / diag[0];
        dp[0] = rhsv[0] / diag[0];
        for (int i = 1; i <= n; ++i) {
            const double m = diag[i] - lower[i] * cp[i - 1];
            cp[i] = upper[i] / m;
            dp[i] = (rhsv[i] - lower[i] * dp[i - 1]) / m;
        }
        std::vector<double> unew(n + 1);
        unew[n] = dp[n];
        for (int i = n - 1; i >= 0; --i) unew[i] = dp[i] - cp[i] * unew[i + 1];

        for (int i = 0; i <= n; ++i) {
            s.w[i] = (s.w[i] + dt * p_.b * unew[i]) / (1.0 + dt * p_.beta);
            if (has_memory_source())
                s.m[i] = (s.m[i] - dt * (src_.gamma + std::sin(unew[i]))) /
                         (1.0 + dt * p_.beta);
        }
        s.u = std::move(unew);
        impose_boundary(s, tau1);
    }

private:
    FdState advance(const FdState& s, const FdState& k, double dt,
                    double tau_stage) const {
        FdState r;
        const int n = nx_;
        r.u.resize(n + 1);
        r.w.resize(n + 1);
        if (has_memory_source()) r.m.resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            r.u[i] = s.u[i] + dt * k.u[i];
            r.w[i] = s.w[i] + dt * k.w[i];
            if (has_memory_source()) r.m[i] = s.m[i] + dt * k.m[i];
        }
        impose_boundary(r, tau_stage);
        return r;
    }

    const FhnParams& p_;
    const BoundaryData& bdry_;
    const FdSource& src_;
    int nx_;
    double h_;
};

}  // namespace

FhnSolution fd_solve(const FhnParams& params, const InitialData& init,
                     const BoundaryData& bdry, const FdSource& src,
                     const FdConfig& cfg, const Grid& out) {
    params.validate();
    if (cfg.nx < 16)
        throw ConfigError(ConfigError::Kind::constraint, "fd_solve: nx must be >= 16");
    if (out.x.empty() || out.t.empty())
        throw ConfigError(ConfigError::Kind::constraint, "fd_solve: empty output grid");

    const double h = params.L / cfg.nx;
    const double dt_stab = 0.4 * h * h / params.eps;
    double dt = cfg.dt;
    if (cfg.scheme == FdScheme::explicit_rk4) {
        if (dt == 0.0)
            dt = dt_stab;
        else if (dt > dt_stab * (1.0 + 1e-12))
            throw ConfigError(ConfigError::Kind::constraint,
                              "fd_solve: explicit_rk4 requires dt <= 0.4 (L/nx)^2 / eps");
    } else if (dt == 0.0) {
        dt = h / 4.0;
    }

    FdSystem sys(params, bdry, src, cfg.nx);
    FdState state;
    state.u.resize(cfg.nx + 1);
    state.w.resize(cfg.nx + 1);
    if (sys.has_memory_source()) state.m.assign(cfg.nx + 1, 0.0);
    const bool kinetics_mode = src.mode == FdSource::Mode::kinetics;
    for (int i = 0; i <= cfg.nx; ++i) {
        const double x = i * h;
        state.u[i] = init.u0(x);
        state.w[i] = kinetics_mode ? init.v0(x) : 0.0;  // memory starts empty
    }
    // initial boundary values for the Dirichlet case come from the data limit
    if (bdry.kind == BoundaryKind::Dirichlet) {
        state.u[0] = bdry.left(0.0);
        state.u[cfg.nx] = bdry.right(0.0);
    }

    std::vector<double> fd_x(cfg.nx + 1);
    for (int i = 0; i <= cfg.nx; ++i) fd_x[i] = i * h;

    Field u_out, v_out;
    u_out.grid_x = out.x;
    u_out.grid_t = out.t;
    u_out.values.assign(out.x.size() * out.t.size(), 0.0);
    v_out = u_out;

    double tau = 0.0;
    for (std::size_t j = 0; j < out.t.size(); ++j) {
        const double target = out.t[j];
        while (tau < target - 1e-14) {
            const double step = std::min(dt, target - tau);
            if (cfg.scheme == FdScheme::explicit_rk4)
                sys.rk4_step(state, tau, step);
            else
                sys.imex_step(state, tau, step);
            tau += step;
            double m = 0.0;
            for (double v : state.u) m = std::max(m, std::fabs(v));
            if (!(m < 1e6))
                throw DivergenceError("fd_solve: |u| exceeded 1e6 at t=" +
                                      std::to_string(tau));
        }
        CubicInterp u_row(fd_x, state.u), w_row(fd_x, state.w);
        for (std::size_t i = 0; i < out.x.size(); ++i) {
            u_out.at(j, i) = u_row(out.x[i]);
            v_out.at(j, i) = w_row(out.x[i]);
        }
    }

    u_out.meta = "fd-oracle u";
    v_out.meta = "fd-oracle v";
    u_out.validate();
    v_out.validate();

    FhnSolution sol;
    sol.u = std::move(u_out);
    sol.v = std::move(v_out);
    sol.report.converged = true;
    return sol;
}

ConvergenceTable fd_convergence_study(const FdScenario& scenario,
                                      const std::vector<int>& nx_list) {
    if (nx_list.size() < 3)
        throw DomainError("fd_convergence_study: need at least 3 grid sizes");
    for (std::size_t k = 1; k < nx_list.size(); ++k)
        if (nx_list[k] <= nx_list[k - 1])
            throw DomainError("fd_convergence_study: nx_list must be increasing");

    std::vector<Field> runs;
    for (int nx : nx_list) {
        FdConfig cfg = scenario.cfg;
        cfg.nx = nx;
        runs.push_back(
            fd_solve(scenario.params, scenario.init, scenario.bdry, scenario.src,
                     cfg, scenario.out)
                .u);
    }

    ConvergenceTable table;
    table.nx = nx_list;
    const std::size_t jt = scenario.out.t.size() - 1;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        double e = 0.0;
        for (std::size_t i = 0; i < scenario.out.x.size(); ++i) {
            double ref;
            if (scenario.has_analytic)
                ref = scenario.analytic(scenario.out.x[i], scenario.out.t[jt]);
            else
                ref = runs.back().at(jt, i);
            e = std::max(e, std::fabs(runs[k].at(jt, i) - ref));
        }
        table.error.push_back(e);
    }

    // self-convergence against the finest grid leaves the last row out
    const std::size_t usable =
        scenario.has_analytic ? runs.size() : runs.size() - 1;
    bool all_zero = true;
    for (std::size_t k = 0; k < usable; ++k)
        if (table.error[k] > 1e-13) all_zero = false;
    table.exact = all_zero;
    if (!all_zero) {
        for (std::size_t k = 0; k + 1 < usable; ++k) {
            const double ratio = table.error[k] / table.error[k + 1];
            table.order.push_back(std::log(ratio) /
                                  std::log(double(nx_list[k + 1]) / nx_list[k]));
        }
    }
    return table;
}

}  // namespace fhn
