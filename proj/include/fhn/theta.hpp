#ifndef FHN_THETA_HPP
#define FHN_THETA_HPP

#include "fhn/kernel_table.hpp"
#include "fhn/params.hpp"

namespace fhn {

// theta_i(x,t) = sum_n K_i(x + 2nL, t): the 2L-periodic, even image sum that
// encodes the boundary reflections on the strip [0,L].
struct ThetaEval {
    double x = 0.0;
    double t = 0.0;
    int i = 0;
    bool derivative = false;
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;  // truncation tail plus accumulated quadrature error
};

enum class GreenKind { Neumann_sum, Dirichlet_difference };

// G_i(x,xi,t): theta_i(|x-xi|,t) + theta_i(x+xi,t) for the Neumann problems,
// theta_i(x+xi,t) - theta_i(|x-xi|,t) for the Dirichlet bracket.
struct GreenEval {
    double x = 0.0;
    double xi = 0.0;
    double t = 0.0;
    int i = 0;
    GreenKind kind = GreenKind::Neumann_sum;
    double value = 0.0;
};

// Evaluates theta_i, its x-derivative (i = 0 only), and the Green kernels.
// Truncation N is certified from the Gaussian envelope of the kernel bounds:
// the skipped images are summed geometrically without being evaluated.
// Backend is either the direct quadrature kernels or a KernelTable.
class ThetaEvaluator {
public:
    explicit ThetaEvaluator(const FhnParams& params);
    ThetaEvaluator(const FhnParams& params, const KernelTable* table);

    ThetaEval theta(int i, double x, double t, bool derivative, double tol) const;
    GreenEval green(int i, GreenKind kind, double x, double xi, double t,
                    double tol) const;

    // Solver-facing paths: no minimum-t floor, never throw on truncation
    // (the envelope still controls N), fixed tolerance set by set_fast_tol.
    double theta_fast(int i, double x, double t) const;
    double theta_x_fast(double x, double t) const;
    double green_fast(int i, GreenKind kind, double x, double xi, double t) const;

    void set_fast_tol(double tol) { fast_tol_ = tol; }
    double fast_tol() const { return fast_tol_; }
    const FhnParams& params() const { return params_; }
    bool tabulated() const { return table_ != nullptr; }

private:
    struct Sum {
        double value = 0.0;
        double tail = 0.0;
        double quad_err = 0.0;
        int terms = 0;
    };
    Sum image_sum(int i, bool deriv, double x, double t, double tol,
                  bool throw_on_cap) const;
    int truncation_count(int i, bool deriv, double t, double tol) const;

    FhnParams params_;
    const KernelTable* table_ = nullptr;
    double fast_tol_ = 1e-9;
};

// One-shot direct evaluations (construct a transient direct-backend evaluator).
ThetaEval theta(const FhnParams& params, int i, double x, double t,
                bool derivative, double tol);
GreenEval green(const FhnParams& params, int i, GreenKind kind, double x,
                double xi, double t, double tol);

// Image count N with the skipped-tail bound below tol at time t; the sum then
// runs over n in [-N, N]. Used to size kernel tables.
int theta_truncation_images(const FhnParams& params, int i, bool derivative,
                            double t, double tol);

}  // namespace fhn

#endif
