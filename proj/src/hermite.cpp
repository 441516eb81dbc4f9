#include "fockparity/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace fockparity {

namespace {

constexpr int kMaxOrder = 200;

void check_order(int m, int n) {
    if (m < 0 || n < 0 || m > kMaxOrder || n > kMaxOrder) {
        throw std::invalid_argument("hermite: order out of range [0, 200]");
    }
}

void check_args(Complex xi, Complex eta) {
    if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag()) || !std::isfinite(eta.real()) ||
        !std::isfinite(eta.imag())) {
        throw std::invalid_argument("hermite: non-finite argument");
    }
}

}  // namespace

namespace detail {

void hermite_fill(std::span<Complex> out, int max_m, int max_n, Complex xi, Complex eta) {
    const int cols = max_n + 1;
    out[0] = Complex(1.0, 0.0);
    for (int n = 1; n <= max_n; ++n) {
        out[n] = eta * out[n - 1];
    }
    for (int m = 1; m <= max_m; ++m) {
        Complex* row = out.data() + std::size_t(m) * cols;
        const Complex* prev = row - cols;
        row[0] = xi * prev[0];
        for (int n = 1; n <= max_n; ++n) {
            row[n] = xi * prev[n] - double(n) * prev[n - 1];
        }
    }
}

}  // namespace detail

Complex HermiteTable::at(int m, int n) const {
    if (m < 0 || n < 0 || m > max_m || n > max_n) {
        throw std::out_of_range("HermiteTable::at: index out of range");
    }
    return values[std::size_t(m) * (max_n + 1) + n];
}

HermiteTable hermite_table(int max_m, int max_n, Complex xi, Complex eta) {
    check_order(max_m, max_n);
    check_args(xi, eta);
    HermiteTable t;
    t.max_m = max_m;
    t.max_n = max_n;
    t.xi = xi;
    t.eta = eta;
    t.values.resize(std::size_t(max_m + 1) * (max_n + 1));
    detail::hermite_fill(t.values, max_m, max_n, xi, eta);
    return t;
}

Complex hermite_mn(int m, int n, Complex xi, Complex eta) {
    check_order(m, n);
    return hermite_table(m, n, xi, eta).at(m, n);
}

}  // namespace fockparity
