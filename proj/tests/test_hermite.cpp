#include <doctest.h>

#include <random>

#include "fockparity/hermite.hpp"
#include "oracles.hpp"

using namespace fockparity;

TEST_CASE("low-order values") {
    const Complex xi(0.7, -0.4), eta(-1.1, 0.3);
    CHECK(hermite_mn(0, 0, xi, eta) == Complex(1.0, 0.0));
    CHECK(std::abs(hermite_mn(3, 0, xi, eta) - xi * xi * xi) <= 1e-14);
    CHECK(std::abs(hermite_mn(0, 2, xi, eta) - eta * eta) <= 1e-14);
    // frozen symbolic forms from the generating-function expansion
    CHECK(std::abs(hermite_mn(1, 1, xi, eta) - (xi * eta - 1.0)) <= 1e-14);
    CHECK(std::abs(hermite_mn(2, 1, xi, eta) - (xi * xi * eta - 2.0 * xi)) <= 1e-14);
}

TEST_CASE("table satisfies the two-index recurrences") {
    const Complex xi(1.3, 0.2), eta(-0.5, -0.9);
    const HermiteTable t = hermite_table(8, 8, xi, eta);
    for (int m = 1; m <= 8; ++m) {
        for (int n = 1; n <= 8; ++n) {
            const Complex want = xi * t.at(m - 1, n) - double(n) * t.at(m - 1, n - 1);
            const double scale = std::max(1.0, std::abs(t.at(m, n)));
            CHECK(std::abs(t.at(m, n) - want) / scale <= 1e-10);
        }
    }
}

TEST_CASE("recurrence agrees with the brute-force expansion") {
    std::mt19937_64 gen(777);
    auto unit = [&]() { return double(gen() >> 11) * 0x1.0p-53 * 4.0 - 2.0; };
    for (int draw = 0; draw < 10; ++draw) {
        const Complex xi(unit(), unit());
        const Complex eta(unit(), unit());
        const HermiteTable t = hermite_table(6, 6, xi, eta);
        for (int m = 0; m <= 6; ++m) {
            for (int n = 0; n <= 6; ++n) {
                const Complex want = oracles::hermite_expansion(m, n, xi, eta);
                const double scale = std::max(1.0, std::abs(want));
                CHECK(std::abs(t.at(m, n) - want) / scale <= 1e-9);
            }
        }
    }
}

TEST_CASE("order guard") {
    CHECK_THROWS_AS(hermite_mn(201, 0, {1, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(hermite_mn(0, 201, {1, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(hermite_mn(-1, 0, {1, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(hermite_table(3, 3, {0, 0}, {0, 0}).at(4, 0), std::out_of_range);
}
