#pragma once

#include <span>
#include <vector>

#include "fockparity/algebra.hpp"

namespace fockparity {

/// Grid of two-variable Hermite polynomial values H_{m,n}(xi, eta) for
/// 0 <= m <= max_m, 0 <= n <= max_n, filled by the recurrences
///   H_{0,0} = 1,  H_{m,0} = xi^m,  H_{0,n} = eta^n,
///   H_{m,n} = xi * H_{m-1,n} - n * H_{m-1,n-1}   (m, n >= 1).
struct HermiteTable {
    int max_m = 0;
    int max_n = 0;
    Complex xi;
    Complex eta;
    std::vector<Complex> values;  // (max_m+1) x (max_n+1), m-major

    Complex at(int m, int n) const;
};

HermiteTable hermite_table(int max_m, int max_n, Complex xi, Complex eta);

/// H_{m,n}(xi, eta); m, n <= 200 (values grow combinatorially).
Complex hermite_mn(int m, int n, Complex xi, Complex eta);

namespace detail {

/// Fills `out` (size (max_m+1)*(max_n+1), m-major) with the Hermite grid.
/// No allocation; used by the quadrature-heavy state builders.
void hermite_fill(std::span<Complex> out, int max_m, int max_n, Complex xi, Complex eta);

}  // namespace detail

}  // namespace fockparity
