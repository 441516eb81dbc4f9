#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fockparity/algebra.hpp"

namespace fockparity {

/// Uniform midpoint rule on [-R, R]^dim.  The per-axis lattice is
/// x_i = (i - (n-1)/2) * h with n = round(2R/h), which is exactly symmetric
/// under x -> -x and axis swaps; the quadrature builders rely on that
/// symmetry.  Integrands handled here all decay like exp(-|z|^2), for which
/// the rule converges superalgebraically in h once R covers the support.
class QuadratureGrid {
public:
    QuadratureGrid(double radius, double step, int dimension = 2);

    double radius() const noexcept { return radius_; }
    double step() const noexcept { return step_; }
    int dimension() const noexcept { return dimension_; }
    int points_per_axis() const noexcept { return n_; }
    long long total_points() const noexcept;

    double node(int i) const;
    std::vector<double> axis() const;

private:
    double radius_;
    double step_;
    int dimension_;
    int n_;
};

/// Midpoint sum of f over the grid times h^dim, nodes visited in fixed
/// lexicographic order.  A non-finite integrand value aborts with an error
/// naming the node.
Complex integrate(const QuadratureGrid& grid,
                  const std::function<Complex(std::span<const double>)>& f);

Complex integrate2(const QuadratureGrid& grid, const std::function<Complex(double, double)>& f);
Complex integrate4(const QuadratureGrid& grid,
                   const std::function<Complex(double, double, double, double)>& f);

/// Closed form of the 1-D Gaussian integral
///   int_-inf^inf exp(-alpha x^2 + beta x) dx = sqrt(pi/alpha) exp(beta^2/(4 alpha)),
/// valid for Re(alpha) > 0; principal square root.
Complex gauss1d_closed(Complex alpha, Complex beta);

/// Closed form of the complex-plane Gaussian integral
///   int d^2z/pi exp(zeta |z|^2 + xi z + eta z*) = (-1/zeta) exp(-xi eta / zeta),
/// valid for Re(zeta) < 0.
Complex gauss2d_closed(Complex zeta, Complex xi, Complex eta);

/// Closed form of the general quadratic complex-plane Gaussian integral
///   int d^2z/pi exp(zeta |z|^2 + xi z + eta z* + f z^2 + g z*^2)
///     = exp[(-zeta xi eta + xi^2 g + eta^2 f) / (zeta^2 - 4 f g)] / sqrt(zeta^2 - 4 f g),
/// valid when Re(zeta +- f +- g) < 0 and Re((zeta^2 - 4 f g)/(zeta +- f +- g)) < 0
/// for all four sign choices; principal square root.
Complex gauss2d_general_closed(Complex zeta, Complex xi, Complex eta, Complex f, Complex g);

}  // namespace fockparity
