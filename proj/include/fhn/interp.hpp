#ifndef FHN_INTERP_HPP
#define FHN_INTERP_HPP

#include <cstddef>
#include <vector>

namespace fhn {

// Piecewise-cubic Hermite interpolation with weighted centered-difference
// slopes (C^1, exact on quadratics). Knots must be strictly increasing.
// Evaluation outside the knot range continues the end cubics.
class CubicInterp {
public:
    CubicInterp() = default;
    CubicInterp(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;
    bool empty() const { return xs_.empty(); }

private:
    std::vector<double> xs_, ys_, slopes_;
};

// Catmull-Rom interpolation on a uniform 2-D grid, tensor-product form.
// Parity flags control the ghost values one node below the low edges:
// +1 mirrors evenly, -1 mirrors oddly (used for kernels even/odd in x and
// even in q = sqrt(t)). The high edges clamp.
class UniformBicubic {
public:
    UniformBicubic() = default;
    UniformBicubic(std::size_t nx, std::size_t ny, double x0, double dx,
                   double y0, double dy, int parity_x, int parity_y);

    double& node(std::size_t i, std::size_t j) { return data_[j * nx_ + i]; }
    double node(std::size_t i, std::size_t j) const { return data_[j * nx_ + i]; }

    double eval(double x, double y) const;

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }

private:
    double sample(std::ptrdiff_t i, std::ptrdiff_t j) const;

    std::size_t nx_ = 0, ny_ = 0;
    double x0_ = 0, dx_ = 1, y0_ = 0, dy_ = 1;
    int parity_x_ = 1, parity_y_ = 1;
    std::vector<double> data_;
};

}  // namespace fhn

#endif
