#include <doctest.h>

#include <cmath>

#include "fockparity/algebra.hpp"
#include "fockparity/states.hpp"
#include "oracles.hpp"

using namespace fockparity;

TEST_CASE("fock state basics") {
    const TwoModeState vac = fock_state(0, 0, 5);
    CHECK(vac.amplitude(0, 0) == Complex(1.0, 0.0));
    CHECK(vac.norm() == 1.0);

    const TwoModeState s = fock_state(1, 0, 4);
    CHECK(s.amplitudes()[4] == Complex(1.0, 0.0));
    CHECK(s.amplitudes().cwiseAbs().sum() == 1.0);

    CHECK_THROWS_AS(fock_state(4, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(fock_state(0, -1, 4), std::invalid_argument);
}

TEST_CASE("coherent state amplitudes") {
    const Vector vac = coherent_state({0.0, 0.0}, 6);
    CHECK(vac[0] == Complex(1.0, 0.0));
    CHECK(vac.tail(5).cwiseAbs().maxCoeff() == 0.0);

    const Complex alpha(1.0, 0.0);
    const Vector c = coherent_state(alpha, 30);
    CHECK(std::abs(c.squaredNorm() - 1.0) <= 1e-12);
    CHECK(std::abs(c[0] - std::exp(-0.5 * std::norm(alpha))) <= 1e-15);

    const Complex z(0.4, -0.7);
    const Vector cz = coherent_state(z, 25);
    CHECK(std::abs(cz[3] - std::exp(-0.5 * std::norm(z)) * z * z * z /
                               std::sqrt(oracles::factorial(3))) <= 1e-14);
}

TEST_CASE("squeezed vacuum amplitudes") {
    CHECK((squeezed_vacuum(0.0, 8) - coherent_state({0, 0}, 8)).cwiseAbs().maxCoeff() == 0.0);

    const Vector s = squeezed_vacuum(0.7, 21);
    for (int n = 1; n < 21; n += 2) CHECK(s[n] == Complex(0.0, 0.0));

    // closed form c_{2k} = sech^{1/2} (-tanh r)^k sqrt((2k)!)/(2^k k!)
    const double r = 0.7, t = std::tanh(r);
    for (int k : {0, 1, 2, 5}) {
        const double want = std::sqrt(1.0 / std::cosh(r)) * std::pow(-t, k) *
                            std::sqrt(oracles::factorial(2 * k)) /
                            (std::pow(2.0, k) * oracles::factorial(k));
        CHECK(s[2 * k].real() == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("squeezed vacuum matches its coherent-integral form") {
    const int d = 20;
    const double r = 0.5;
    const Vector closed = squeezed_vacuum(r, d);
    const double pref = std::sqrt(1.0 / std::cosh(r));
    const double t = std::tanh(r);
    Vector quad = Vector::Zero(d);
    for (int n = 0; n < d; ++n) {
        quad[n] = oracles::quad2d(7.0, 0.05, [&](double x, double y) {
                      const Complex alpha(x, y);
                      const Complex ac = std::conj(alpha);
                      // full integrand: weight times the coherent amplitude of |n>
                      return pref * std::exp(-0.5 * std::norm(alpha) - 0.5 * t * ac * ac) *
                             std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) /
                             std::sqrt(oracles::factorial(n));
                  }) /
                  M_PI;
    }
    CHECK((quad - closed).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("noon state") {
    const TwoModeState s = noon_state(1, 4);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(s.amplitude(1, 0).real() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(s.amplitude(0, 1).real() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));

    const TwoModeState degenerate = noon_state(0, 3);
    CHECK(degenerate.amplitude(0, 0) == Complex(1.0, 0.0));
    CHECK(degenerate.norm() == 1.0);

    CHECK_THROWS_AS(noon_state(4, 4), std::invalid_argument);
}

TEST_CASE("eta state low-order amplitudes") {
    const EtaParams p{0.6, -0.4};
    const Complex eta(p.eta1, p.eta2);
    const TwoModeState s = eta_state(p, 8);
    CHECK(std::abs(s.amplitude(0, 0) - std::exp(-0.5 * std::norm(eta))) <= 1e-15);

    // eta = 0 is the maximally correlated pair sum: c_{n,n} = 1
    const TwoModeState zero = eta_state({0.0, 0.0}, 6);
    for (int n = 0; n < 6; ++n) {
        CHECK(std::abs(zero.amplitude(n, n) - Complex(1.0, 0.0)) <= 1e-12);
        for (int m = 0; m < 6; ++m) {
            if (m != n) CHECK(std::abs(zero.amplitude(m, n)) == 0.0);
        }
    }
}

TEST_CASE("xi state low-order amplitudes") {
    const XiParams p{-0.3, 0.8};
    const Complex xi(p.xi1, p.xi2);
    const TwoModeState s = xi_state(p, 8);
    CHECK(std::abs(s.amplitude(0, 0) - std::exp(-0.5 * std::norm(xi))) <= 1e-15);

    const TwoModeState zero = xi_state({0.0, 0.0}, 6);
    for (int n = 0; n < 6; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(zero.amplitude(n, n) - Complex(sign, 0.0)) <= 1e-12);
    }
}

TEST_CASE("entangled states match the exponential power series") {
    const int d = 10;
    const ModeIndexer idx(d);
    const Matrix ad = embed(creation_matrix(d), Mode::A, d).entries();
    const Matrix bd = embed(creation_matrix(d), Mode::B, d).entries();

    const Complex eta(0.3, 0.2);
    const Matrix gen_eta = eta * ad - std::conj(eta) * bd + ad * bd;
    Vector term = Vector::Zero(idx.dim());
    term[0] = 1.0;
    Vector sum = term;
    for (int k = 1; k <= 2 * (d - 1); ++k) {
        term = (gen_eta * term) / double(k);
        sum += term;
    }
    sum *= std::exp(-0.5 * std::norm(eta));
    const Vector want = eta_state({eta.real(), eta.imag()}, d).amplitudes();
    double worst = 0.0;
    for (int k = 0; k < idx.dim(); ++k) {
        if (idx.sector(k) <= d / 2) worst = std::max(worst, std::abs(sum[k] - want[k]));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("eta state is an eigenvector of the relative quadratures") {
    const int d = 12;
    const ModeIndexer idx(d);
    const EtaParams p{0.4, -0.3};
    const Vector psi = eta_state(p, d).amplitudes();
    const Matrix x_rel = embed(position_matrix(d), Mode::A, d).entries() -
                         embed(position_matrix(d), Mode::B, d).entries();
    const Matrix p_tot = embed(momentum_matrix(d), Mode::A, d).entries() +
                         embed(momentum_matrix(d), Mode::B, d).entries();
    const Vector rx = x_rel * psi - std::sqrt(2.0) * p.eta1 * psi;
    const Vector rp = p_tot * psi - std::sqrt(2.0) * p.eta2 * psi;
    double worst = 0.0;
    for (int k = 0; k < idx.dim(); ++k) {
        if (idx.sector(k) <= 5) {
            worst = std::max({worst, std::abs(rx[k]), std::abs(rp[k])});
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("product state") {
    const TwoModeState s = product_state(coherent_state({0.5, 0.0}, 6), squeezed_vacuum(0.3, 6));
    CHECK(s.cutoff() == 6);
    CHECK(std::abs(s.amplitude(1, 2) - coherent_state({0.5, 0.0}, 6)[1] *
                                           squeezed_vacuum(0.3, 6)[2]) == 0.0);
    CHECK_THROWS_AS(product_state(Vector::Zero(3), Vector::Zero(4)), std::invalid_argument);
}
