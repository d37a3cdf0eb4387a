#ifndef FHN_DATA_HPP
#define FHN_DATA_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fhn/interp.hpp"

namespace fhn {

// A scalar function of one variable: spatial profile on [0,L] or time signal
// on [0,T]. Constant, callable, or sampled (piecewise-cubic interpolated).
class Profile {
public:
    Profile() = default;

    static Profile constant(double c);
    static Profile callable(std::function<double(double)> fn);
    static Profile sampled(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;

    // Lets solvers skip identically-zero terms.
    bool is_const_zero() const;

private:
    enum class Kind { constant, callable, sampled };
    Kind kind_ = Kind::constant;
    double const_value_ = 0.0;
    std::function<double(double)> fn_;
    CubicInterp interp_;
};

struct InitialData {
    Profile u0 = Profile::constant(0.0);
    Profile v0 = Profile::constant(0.0);
};

enum class BoundaryKind { Neumann, Dirichlet };

// Time signals on (0,T]: flux psi_1/psi_2 for Neumann, values g_1/g_2 for
// Dirichlet.
struct BoundaryData {
    BoundaryKind kind = BoundaryKind::Neumann;
    Profile left = Profile::constant(0.0);
    Profile right = Profile::constant(0.0);
};

struct Grid {
    std::vector<double> x;  // in [0, L], strictly increasing
    std::vector<double> t;  // in (0, T], strictly increasing

    static Grid uniform(double L, std::size_t nx, double t_first, double T,
                        std::size_t nt);
};

// Space-time sample of a scalar field, row-major in t then x.
struct Field {
    std::vector<double> grid_x;
    std::vector<double> grid_t;
    std::vector<double> values;
    std::string meta;

    std::size_t nx() const { return grid_x.size(); }
    std::size_t nt() const { return grid_t.size(); }
    double& at(std::size_t j_t, std::size_t i_x) {
        return values[j_t * grid_x.size() + i_x];
    }
    double at(std::size_t j_t, std::size_t i_x) const {
        return values[j_t * grid_x.size() + i_x];
    }

    void validate() const;  // shapes consistent, all values finite
    double max_abs() const;
};

// Piecewise-cubic interpolation of a Field in x and t. An optional t = 0 row
// (the initial profile sampled on grid_x) extends the field down to t = 0,
// which the Picard source integrals need.
class FieldInterp {
public:
    FieldInterp() = default;
    explicit FieldInterp(const Field& f, const double* t0_row = nullptr);

    double operator()(double x, double t) const;

private:
    const Field* field_ = nullptr;
    bool has_t0_ = false;
    std::vector<double> t0_row_;
};

}  // namespace fhn

#endif
