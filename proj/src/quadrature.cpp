#include "fockparity/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fockparity {

namespace {

constexpr double kMaxPointsPerAxisRatio = 2000.0;  // R/h cost guard

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

[[noreturn]] void throw_nonfinite(std::span<const double> node) {
    std::ostringstream os;
    os << "integrate: non-finite integrand value at node (";
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (i) os << ", ";
        os << node[i];
    }
    os << ")";
    throw std::domain_error(os.str());
}

}  // namespace

QuadratureGrid::QuadratureGrid(double radius, double step, int dimension)
    : radius_(radius), step_(step), dimension_(dimension) {
    if (!(radius > 0.0) || !(step > 0.0)) {
        throw std::invalid_argument("QuadratureGrid: radius and step must be positive");
    }
    if (dimension != 2 && dimension != 4) {
        throw std::invalid_argument("QuadratureGrid: dimension must be 2 or 4");
    }
    if (radius / step > kMaxPointsPerAxisRatio) {
        throw std::invalid_argument("QuadratureGrid: R/h exceeds the per-axis cost guard (2000)");
    }
    n_ = int(std::llround(2.0 * radius / step));
    if (n_ < 1) n_ = 1;
}

long long QuadratureGrid::total_points() const noexcept {
    long long total = 1;
    for (int k = 0; k < dimension_; ++k) total *= n_;
    return total;
}

double QuadratureGrid::node(int i) const {
    return (double(i) - 0.5 * double(n_ - 1)) * step_;
}

std::vector<double> QuadratureGrid::axis() const {
    std::vector<double> xs(n_);
    for (int i = 0; i < n_; ++i) xs[i] = node(i);
    return xs;
}

Complex integrate(const QuadratureGrid& grid,
                  const std::function<Complex(std::span<const double>)>& f) {
    const auto xs = grid.axis();
    const int n = grid.points_per_axis();
    Complex acc(0.0, 0.0);
    if (grid.dimension() == 2) {
        double node[2];
        for (int i = 0; i < n; ++i) {
            node[0] = xs[i];
            for (int j = 0; j < n; ++j) {
                node[1] = xs[j];
                Complex v = f(std::span<const double>(node, 2));
                if (!finite(v)) throw_nonfinite(std::span<const double>(node, 2));
                acc += v;
            }
        }
        return acc * (grid.step() * grid.step());
    }
    double node[4];
    for (int i = 0; i < n; ++i) {
        node[0] = xs[i];
        for (int j = 0; j < n; ++j) {
            node[1] = xs[j];
            for (int k = 0; k < n; ++k) {
                node[2] = xs[k];
                for (int l = 0; l < n; ++l) {
                    node[3] = xs[l];
                    Complex v = f(std::span<const double>(node, 4));
                    if (!finite(v)) throw_nonfinite(std::span<const double>(node, 4));
                    acc += v;
                }
            }
        }
    }
    const double h2 = grid.step() * grid.step();
    return acc * (h2 * h2);
}

Complex integrate2(const QuadratureGrid& grid, const std::function<Complex(double, double)>& f) {
    if (grid.dimension() != 2) {
        throw std::invalid_argument("integrate2: grid dimension must be 2");
    }
    return integrate(grid, [&](std::span<const double> x) { return f(x[0], x[1]); });
}

Complex integrate4(const QuadratureGrid& grid,
                   const std::function<Complex(double, double, double, double)>& f) {
    if (grid.dimension() != 4) {
        throw std::invalid_argument("integrate4: grid dimension must be 4");
    }
    return integrate(grid, [&](std::span<const double> x) { return f(x[0], x[1], x[2], x[3]); });
}

Complex gauss1d_closed(Complex alpha, Complex beta) {
    if (!finite(alpha) || !finite(beta)) {
        throw std::invalid_argument("gauss1d_closed: non-finite argument");
    }
    if (!(alpha.real() > 0.0)) {
        throw std::domain_error("gauss1d_closed: convergence requires Re(alpha) > 0");
    }
    return std::sqrt(M_PI / alpha) * std::exp(beta * beta / (4.0 * alpha));
}

Complex gauss2d_closed(Complex zeta, Complex xi, Complex eta) {
    if (!finite(zeta) || !finite(xi) || !finite(eta)) {
        throw std::invalid_argument("gauss2d_closed: non-finite argument");
    }
    if (!(zeta.real() < 0.0)) {
        throw std::domain_error("gauss2d_closed: convergence requires Re(zeta) < 0");
    }
    return (-1.0 / zeta) * std::exp(-xi * eta / zeta);
}

Complex gauss2d_general_closed(Complex zeta, Complex xi, Complex eta, Complex f, Complex g) {
    if (!finite(zeta) || !finite(xi) || !finite(eta) || !finite(f) || !finite(g)) {
        throw std::invalid_argument("gauss2d_general_closed: non-finite argument");
    }
    const Complex disc = zeta * zeta - 4.0 * f * g;
    for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
            const Complex c = zeta + double(s1) * f + double(s2) * g;
            std::ostringstream which;
            which << "zeta " << (s1 > 0 ? "+" : "-") << " f " << (s2 > 0 ? "+" : "-") << " g";
            if (!(c.real() < 0.0)) {
                throw std::domain_error("gauss2d_general_closed: convergence requires Re(" +
                                        which.str() + ") < 0");
            }
            if (!((disc / c).real() < 0.0)) {
                throw std::domain_error(
                    "gauss2d_general_closed: convergence requires Re((zeta^2-4fg)/(" +
                    which.str() + ")) < 0");
            }
        }
    }
    return std::exp((-zeta * xi * eta + xi * xi * g + eta * eta * f) / disc) / std::sqrt(disc);
}

}  // namespace fockparity
