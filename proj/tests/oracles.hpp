#pragma once

// Independent oracles shared by the unit tests.  These deliberately avoid
// the library's computation paths: the Hermite oracle expands the generating
// function term by term and the quadrature helpers are plain midpoint loops.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

using Complex = std::complex<double>;

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= double(k);
    return f;
}

// Coefficient of t^m t'^n in exp(-t t' + t xi + t' eta), times m! n!.
inline Complex hermite_expansion(int m, int n, Complex xi, Complex eta) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j <= std::min(m, n); ++j) {
        const double coeff =
            factorial(m) * factorial(n) / (factorial(j) * factorial(m - j) * factorial(n - j));
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * coeff * std::pow(xi, m - j) * std::pow(eta, n - j);
    }
    return acc;
}

// Midpoint rule on the symmetric lattice, 1-D.
inline Complex quad1d(double radius, double step, const std::function<Complex(double)>& f) {
    const int n = int(std::llround(2.0 * radius / step));
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        acc += f((double(i) - 0.5 * double(n - 1)) * step);
    }
    return acc * step;
}

// Midpoint rule, 2-D over [-R, R]^2.
inline Complex quad2d(double radius, double step,
                      const std::function<Complex(double, double)>& f) {
    const int n = int(std::llround(2.0 * radius / step));
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        const double x = (double(i) - 0.5 * double(n - 1)) * step;
        for (int j = 0; j < n; ++j) {
            const double y = (double(j) - 0.5 * double(n - 1)) * step;
            acc += f(x, y);
        }
    }
    return acc * step * step;
}

}  // namespace oracles
