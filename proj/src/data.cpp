#include "fhn/data.hpp"

#include <algorithm>
#include <cmath>

#include "fhn/errors.hpp"

namespace fhn {

CubicInterp::CubicInterp(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n != ys_.size() || n == 0)
        throw DomainError("CubicInterp: need equal, nonzero sample counts");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw DomainError("CubicInterp: knots must be strictly increasing");

    slopes_.assign(n, 0.0);
    if (n == 1) return;
    if (n == 2) {
        slopes_[0] = slopes_[1] = (ys_[1] - ys_[0]) / (xs_[1] - xs_[0]);
        return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = xs_[i] - xs_[i - 1], hr = xs_[i + 1] - xs_[i];
        const double dl = (ys_[i] - ys_[i - 1]) / hl;
        const double dr = (ys_[i + 1] - ys_[i]) / hr;
        slopes_[i] = (dl * hr + dr * hl) / (hl + hr);
    }
    // three-point end slopes
    {
        const double h0 = xs_[1] - xs_[0], h1 = xs_[2] - xs_[1];
        const double d0 = (ys_[1] - ys_[0]) / h0, d1 = (ys_[2] - ys_[1]) / h1;
        slopes_[0] = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        const std::size_t m = n - 1;
        const double hm = xs_[m] - xs_[m - 1], hm1 = xs_[m - 1] - xs_[m - 2];
        const double dm = (ys_[m] - ys_[m - 1]) / hm;
        const double dm1 = (ys_[m - 1] - ys_[m - 2]) / hm1;
        slopes_[m] = ((2.0 * hm + hm1) * dm - hm * dm1) / (hm + hm1);
    }
}

double CubicInterp::operator()(double x) const {
    const std::size_t n = xs_.size();
    if (n == 1) return ys_[0];
    std::size_t i =
        std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin();
    if (i == 0) i = 1;
    if (i >= n) i = n - 1;
    --i;
    const double h = xs_[i + 1] - xs_[i];
    const double u = (x - xs_[i]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * ys_[i] + (u3 - 2 * u2 + u) * h * slopes_[i] +
           (-2 * u3 + 3 * u2) * ys_[i + 1] + (u3 - u2) * h * slopes_[i + 1];
}

UniformBicubic::UniformBicubic(std::size_t nx, std::size_t ny, double x0,
                               double dx, double y0, double dy, int parity_x,
                               int parity_y)
    : nx_(nx), ny_(ny), x0_(x0), dx_(dx), y0_(y0), dy_(dy),
      parity_x_(parity_x), parity_y_(parity_y), data_(nx * ny, 0.0) {}

double UniformBicubic::sample(std::ptrdiff_t i, std::ptrdiff_t j) const {
    double sign = 1.0;
    if (i < 0) {
        i = -i;
        if (parity_x_ < 0) sign = -sign;
    }
    if (j < 0) {
        j = -j;
        if (parity_y_ < 0) sign = -sign;
    }
    if (i >= std::ptrdiff_t(nx_)) i = nx_ - 1;
    if (j >= std::ptrdiff_t(ny_)) j = ny_ - 1;
    return sign * data_[std::size_t(j) * nx_ + std::size_t(i)];
}

double UniformBicubic::eval(double x, double y) const {
    auto weights = [](double u, double w[4]) {
        const double u2 = u * u, u3 = u2 * u;
        w[0] = -0.5 * u3 + u2 - 0.5 * u;
        w[1] = 1.5 * u3 - 2.5 * u2 + 1.0;
        w[2] = -1.5 * u3 + 2.0 * u2 + 0.5 * u;
        w[3] = 0.5 * u3 - 0.5 * u2;
    };

    double sx = (x - x0_) / dx_;
    double sy = (y - y0_) / dy_;
    sx = std::clamp(sx, 0.0, double(nx_ - 1));
    sy = std::clamp(sy, 0.0, double(ny_ - 1));
    std::ptrdiff_t i = std::min(std::ptrdiff_t(sx), std::ptrdiff_t(nx_) - 2);
    std::ptrdiff_t j = std::min(std::ptrdiff_t(sy), std::ptrdiff_t(ny_) - 2);

    double wx[4], wy[4];
    weights(sx - i, wx);
    weights(sy - j, wy);

    double acc = 0.0;
    for (int b = 0; b < 4; ++b) {
        double row = 0.0;
        for (int a = 0; a < 4; ++a) row += wx[a] * sample(i - 1 + a, j - 1 + b);
        acc += wy[b] * row;
    }
    return acc;
}

Profile Profile::constant(double c) {
    Profile p;
    p.kind_ = Kind::constant;
    p.const_value_ = c;
    return p;
}

Profile Profile::callable(std::function<double(double)> fn) {
    Profile p;
    p.kind_ = Kind::callable;
    p.fn_ = std::move(fn);
    return p;
}

Profile Profile::sampled(std::vector<double> xs, std::vector<double> ys) {
    Profile p;
    p.kind_ = Kind::sampled;
    p.interp_ = CubicInterp(std::move(xs), std::move(ys));
    return p;
}

double Profile::operator()(double x) const {
    switch (kind_) {
        case Kind::constant: return const_value_;
        case Kind::callable: return fn_(x);
        case Kind::sampled: return interp_(x);
    }
    return 0.0;
}

bool Profile::is_const_zero() const {
    return kind_ == Kind::constant && const_value_ == 0.0;
}

Grid Grid::uniform(double L, std::size_t nx, double t_first, double T,
                   std::size_t nt) {
    if (nx < 1 || nt < 1) throw DomainError("Grid::uniform: need nx, nt >= 1");
    if (!(t_first > 0.0) || !(T >= t_first))
        throw DomainError("Grid::uniform: need 0 < t_first <= T");
    Grid g;
    g.x.resize(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i) g.x[i] = L * double(i) / double(nx);
    g.t.resize(nt);
    if (nt == 1) {
        g.t[0] = T;
    } else {
        for (std::size_t j = 0; j < nt; ++j)
            g.t[j] = t_first + (T - t_first) * double(j) / double(nt - 1);
    }
    return g;
}

void Field::validate() const {
    if (grid_x.empty() || grid_t.empty())
        throw DomainError("Field: empty grid");
    if (values.size() != grid_x.size() * grid_t.size())
        throw DomainError("Field: values size does not match grid");
    for (std::size_t i = 1; i < grid_x.size(); ++i)
        if (!(grid_x[i] > grid_x[i - 1]))
            throw DomainError("Field: grid_x must be strictly increasing");
    for (std::size_t j = 1; j < grid_t.size(); ++j)
        if (!(grid_t[j] > grid_t[j - 1]))
            throw DomainError("Field: grid_t must be strictly increasing");
    for (double v : values)
        if (!std::isfinite(v)) throw DomainError("Field: non-finite value");
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

FieldInterp::FieldInterp(const Field& f, const double* t0_row)
    : field_(&f), has_t0_(t0_row != nullptr) {
    if (has_t0_) t0_row_.assign(t0_row, t0_row + f.grid_x.size());
}

namespace {

// cubic Hermite in x through the row values at the field's x-knots
template <typename RowFn>
double interp_row(const std::vector<double>& xs, RowFn&& row, double x) {
    const std::size_t n = xs.size();
    if (n == 1) return row(0);
    std::ptrdiff_t i =
        std::upper_bound(xs.begin(), xs.end(), x) - xs.begin() - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, n - 2);

    const double h = xs[i + 1] - xs[i];
    const double yl = row(i), yr = row(i + 1);
    double ml, mr;
    if (i > 0) {
        const double hl = xs[i] - xs[i - 1];
        ml = ((yl - row(i - 1)) / hl * h + (yr - yl) / h * hl) / (hl + h);
    } else {
        ml = (yr - yl) / h;
    }
    if (i + 2 < std::ptrdiff_t(n)) {
        const double hr = xs[i + 2] - xs[i + 1];
        mr = ((yr - yl) / h * hr + (row(i + 2) - yr) / hr * h) / (h + hr);
    } else {
        mr = (yr - yl) / h;
    }
    const double u = (x - xs[i]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * yl + (u3 - 2 * u2 + u) * h * ml +
           (-2 * u3 + 3 * u2) * yr + (u3 - u2) * h * mr;
}

}  // namespace

double FieldInterp::operator()(double x, double t) const {
    const Field& f = *field_;
    const std::size_t nx = f.grid_x.size();
    const std::size_t nt = f.grid_t.size();

    // assemble the local 4-row stencil in t (with the optional t = 0 row)
    auto t_at = [&](std::ptrdiff_t j) -> double {
        if (has_t0_ && j < 0) return 0.0;
        j = std::clamp<std::ptrdiff_t>(j, 0, std::ptrdiff_t(nt) - 1);
        return f.grid_t[j];
    };
    auto row_value = [&](std::ptrdiff_t j, std::ptrdiff_t i) -> double {
        if (has_t0_ && j < 0) return t0_row_[i];
        j = std::clamp<std::ptrdiff_t>(j, 0, std::ptrdiff_t(nt) - 1);
        return f.values[std::size_t(j) * nx + std::size_t(i)];
    };

    // locate t interval (j, j+1); j may be -1 when the t0 row is present
    std::ptrdiff_t j =
        std::upper_bound(f.grid_t.begin(), f.grid_t.end(), t) - f.grid_t.begin();
    --j;
    if (!has_t0_ && j < 0) j = 0;
    if (j < -1) j = -1;
    if (j > std::ptrdiff_t(nt) - 2) j = std::ptrdiff_t(nt) - 2;
    if (nt == 1 && !has_t0_) j = 0;

    // interpolate in x on the four t-rows around the interval, then in t
    double ts[4], vs[4];
    for (int b = 0; b < 4; ++b) {
        const std::ptrdiff_t jj = j - 1 + b;
        ts[b] = t_at(jj);
        vs[b] = interp_row(
            f.grid_x, [&](std::ptrdiff_t i) { return row_value(jj, i); }, x);
    }

    // local cubic Hermite in t on the middle interval (ts[1], ts[2])
    if (ts[2] <= ts[1]) return vs[1];
    const double h = ts[2] - ts[1];
    double m1, m2;
    if (ts[1] > ts[0])
        m1 = ((vs[1] - vs[0]) / (ts[1] - ts[0]) * h +
              (vs[2] - vs[1]) / h * (ts[1] - ts[0])) /
             (h + (ts[1] - ts[0]));
    else
        m1 = (vs[2] - vs[1]) / h;
    if (ts[3] > ts[2])
        m2 = ((vs[2] - vs[1]) / h * (ts[3] - ts[2]) +
              (vs[3] - vs[2]) / (ts[3] - ts[2]) * h) /
             (h + (ts[3] - ts[2]));
    else
        m2 = (vs[2] - vs[1]) / h;

    const double u = (t - ts[1]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * vs[1] + (u3 - 2 * u2 + u) * h * m1 +
           (-2 * u3 + 3 * u2) * vs[2] + (u3 - u2) * h * m2;
}

}  // namespace fhn
