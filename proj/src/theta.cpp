#include "fhn/theta.hpp"

#include <cmath>
#include <string>

#include "fhn/errors.hpp"
#include "fhn/kernels.hpp"

namespace fhn {

namespace {
constexpr int kMaxImages = 10000;
constexpr double kMinThetaTime = 1e-8;
}  // namespace

ThetaEvaluator::ThetaEvaluator(const FhnParams& params) : params_(params) {
    params_.validate();
}

ThetaEvaluator::ThetaEvaluator(const FhnParams& params, const KernelTable* table)
    : params_(params), table_(table) {
    params_.validate();
}

// Smallest N with the skipped-image bound below tol. Images at |x+2nL| with
// x reduced to [-L,L] satisfy |x+2nL| >= (2|n|-1)L, so the tail is dominated
// by a geometric series in the Gaussian envelope.
int theta_truncation_images(const FhnParams& params, int i, bool deriv,
                            double t, double tol) {
    const double L = params.L, eps = params.eps;
    const double denom = deriv ? 8.0 : 4.0;  // e^{-xi^2/(denom eps t)} envelope
    const double coeff = deriv ? k0x_envelope_coeff(params, t)
                               : kernel_envelope_coeff(params, i, t);
    auto tail = [&](int N) {
        const double d = (2.0 * N + 1.0) * L;
        double first = coeff * std::exp(-d * d / (denom * eps * t));
        if (deriv) first /= d;
        const double rho =
            std::exp(-(4.0 / denom) * 2.0 * (N + 1.0) * L * L / (eps * t));
        return 2.0 * first / (1.0 - rho);
    };
    int N = 0;
    while (N < kMaxImages && tail(N) > tol) ++N;
    return N;
}

int ThetaEvaluator::truncation_count(int i, bool deriv, double t,
                                     double tol) const {
    return theta_truncation_images(params_, i, deriv, t, tol);
}

ThetaEvaluator::Sum ThetaEvaluator::image_sum(int i, bool deriv, double x,
                                              double t, double tol,
                                              bool throw_on_cap) const {
    const double L = params_.L;
    double x_red = std::remainder(x, 2.0 * L);  // in [-L, L]

    const int N = truncation_count(i, deriv, t, 0.5 * tol);
    if (N >= kMaxImages) {
        if (throw_on_cap)
            throw ToleranceError("theta: image truncation tolerance unreachable",
                                 0.0, tol);
    }

    Sum s;
    s.terms = 2 * N + 1;
    const double d = (2.0 * N + 1.0) * L;
    {
        const double denom = deriv ? 8.0 : 4.0;
        const double coeff = deriv ? k0x_envelope_coeff(params_, t)
                                   : kernel_envelope_coeff(params_, i, t);
        double first = coeff * std::exp(-d * d / (denom * params_.eps * t));
        if (deriv) first /= d;
        const double rho = std::exp(-(4.0 / denom) * 2.0 * (N + 1.0) * L * L /
                                    (params_.eps * t));
        s.tail = 2.0 * first / (1.0 - rho);
    }

    const double term_tol = 0.5 * tol / double(2 * N + 1);
    for (int n = -N; n <= N; ++n) {
        const double xi = x_red + 2.0 * n * L;
        if (table_) {
            if (deriv)
                s.value += table_->k0_x(xi, t);
            else if (i == 0)
                s.value += table_->k0(xi, t);
            else if (i == 1)
                s.value += table_->k1(xi, t);
            else
                s.value += table_->k2(xi, t);
            s.quad_err += table_->err_bound();
        } else {
            KernelEval e;
            if (deriv)
                e = k0_x(params_, xi, t, term_tol);
            else if (i == 0)
                e = k0(params_, xi, t, term_tol);
            else
                e = k_i(params_, i, xi, t, term_tol);
            s.value += e.value;
            s.quad_err += e.quad_abs_error;
        }
    }
    return s;
}

ThetaEval ThetaEvaluator::theta(int i, double x, double t, bool derivative,
                                double tol) const {
    if (i < 0 || i > 2) throw DomainError("theta: i must be 0, 1 or 2");
    if (!(t > 0.0)) throw DomainError("theta: t must be positive");
    if (t < kMinThetaTime)
        throw DomainError("theta: evaluation requires t >= 1e-8");
    if (!(tol > 0.0)) throw DomainError("theta: tol must be positive");
    if (derivative) {
        if (i != 0) throw DomainError("theta: derivative available for i = 0 only");
        if (std::remainder(x, 2.0 * params_.L) == 0.0)
            throw DomainError("theta: derivative undefined at x = 0 (mod 2L)");
    }
    if (i == 2 && !(params_.b > 0.0) && !table_)
        throw DomainError("theta: i = 2 requires b > 0");

    Sum s = image_sum(i, derivative, x, t, tol, /*throw_on_cap=*/true);

    ThetaEval out;
    out.x = x;
    out.t = t;
    out.i = i;
    out.derivative = derivative;
    out.value = s.value;
    out.terms_used = s.terms;
    out.tail_bound = s.tail + s.quad_err;
    return out;
}

GreenEval ThetaEvaluator::green(int i, GreenKind kind, double x, double xi,
                                double t, double tol) const {
    const double L = params_.L;
    if (!(x >= 0.0 && x <= L) || !(xi >= 0.0 && xi <= L))
        throw DomainError("green: x and xi must lie in [0, L]");

    const double diff = std::fabs(x - xi);
    const double sum = x + xi;
    GreenEval out;
    out.x = x;
    out.xi = xi;
    out.t = t;
    out.i = i;
    out.kind = kind;
    if (kind == GreenKind::Neumann_sum) {
        out.value = theta(i, diff, t, false, 0.5 * tol).value +
                    theta(i, sum, t, false, 0.5 * tol).value;
    } else {
        out.value = theta(i, sum, t, false, 0.5 * tol).value -
                    theta(i, diff, t, false, 0.5 * tol).value;
    }
    return out;
}

double ThetaEvaluator::theta_fast(int i, double x, double t) const {
    if (!(t > 0.0)) return 0.0;
    return image_sum(i, false, x, t, fast_tol_, /*throw_on_cap=*/false).value;
}

double ThetaEvaluator::theta_x_fast(double x, double t) const {
    if (!(t > 0.0)) return 0.0;
    return image_sum(0, true, x, t, fast_tol_, /*throw_on_cap=*/false).value;
}

double ThetaEvaluator::green_fast(int i, GreenKind kind, double x, double xi,
                                  double t) const {
    const double a = theta_fast(i, std::fabs(x - xi), t);
    const double b = theta_fast(i, x + xi, t);
    return kind == GreenKind::Neumann_sum ? a + b : b - a;
}

ThetaEval theta(const FhnParams& params, int i, double x, double t,
                bool derivative, double tol) {
    return ThetaEvaluator(params).theta(i, x, t, derivative, tol);
}

GreenEval green(const FhnParams& params, int i, GreenKind kind, double x,
                double xi, double t, double tol) {
    return ThetaEvaluator(params).green(i, kind, x, xi, t, tol);
}

}  // namespace fhn
