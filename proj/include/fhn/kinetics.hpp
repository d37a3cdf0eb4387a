#ifndef FHN_KINETICS_HPP
#define FHN_KINETICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "fhn/data.hpp"

namespace fhn {

// Nonlinear reaction term phi after splitting f(u) = -a u + phi(u). The
// Lipschitz bound holds on [-working_halfwidth, working_halfwidth]; Picard
// iterates are required to stay inside that box.
struct Kinetics {
    std::function<double(double)> phi;
    double phi_lipschitz_bound = 0.0;
    double working_halfwidth = 0.0;
    std::string description;
};

// phi(u) = u^2 (a + 1 - u), the cubic FitzHugh-Nagumo reaction.
double phi_cubic(double a, double u);

// Cubic kinetics with the Lipschitz bound computed on
// [-halfwidth, halfwidth]; halfwidth <= 0 selects the default 2(a+1).
Kinetics cubic_kinetics(double a, double halfwidth = 0.0);

// F(x,t,u) = phi(u) - v0(x) e^{-beta t}.
double source_F(const Kinetics& kin, const Profile& v0, double beta, double x,
                double t, double u);

// Josephson memory source
//   F = -Int_0^t e^{-(t-tau)/eps} [gamma + sin u(tau)] dtau
// from time-indexed samples of u at a fixed x, by exponentially weighted
// trapezoid (piecewise-linear integrand, exact exponential factor). The
// samples must cover [0, t].
double josephson_source(double gamma, double eps,
                        const std::vector<double>& times,
                        const std::vector<double>& u_values, double t);

}  // namespace fhn

#endif
