#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "fockparity/algebra.hpp"
#include "fockparity/projectors.hpp"
#include "fockparity/serialization.hpp"
#include "fockparity/states.hpp"

using namespace fockparity;

TEST_CASE("mode indexer is a bijection with a-major ordering") {
    const ModeIndexer idx(5);
    CHECK(idx.dim() == 25);
    int seen = 0;
    for (int m = 0; m < 5; ++m) {
        for (int n = 0; n < 5; ++n) {
            const int k = idx.flat(m, n);
            CHECK(idx.modes(k) == std::pair<int, int>{m, n});
            CHECK(idx.sector(k) == m + n);
            ++seen;
        }
    }
    CHECK(seen == 25);
    CHECK(ModeIndexer(4).flat(1, 0) == 4);
    CHECK_THROWS_AS(ModeIndexer(0), std::invalid_argument);
    CHECK_THROWS_AS(idx.flat(5, 0), std::out_of_range);
}

TEST_CASE("annihilation matrix entries") {
    CHECK(annihilation_matrix(1).entries().cwiseAbs().maxCoeff() == 0.0);

    const Matrix a3 = annihilation_matrix(3).entries();
    CHECK(a3(0, 1) == Complex(1.0, 0.0));
    CHECK(a3(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(a3(0, 0)) == 0.0);
    CHECK(std::abs(a3(2, 1)) == 0.0);

    // A^dag A at cutoff 4 is the number operator
    const Matrix a4 = annihilation_matrix(4).entries();
    const Matrix n4 = a4.adjoint() * a4;
    for (int i = 0; i < 4; ++i) {
        CHECK(n4(i, i).real() == doctest::Approx(double(i)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(annihilation_matrix(0), std::invalid_argument);
}

TEST_CASE("embed places single-mode operators on the right factor") {
    CHECK((embed(identity_matrix(3), Mode::A, 3).entries() - Matrix::Identity(9, 9))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    const TwoModeState one_zero = fock_state(1, 0, 2);
    const OperatorMatrix n_a = embed(number_matrix(2), Mode::A, 2);
    const OperatorMatrix n_b = embed(number_matrix(2), Mode::B, 2);
    CHECK(expectation(one_zero, n_a).real() == doctest::Approx(1.0));
    CHECK(std::abs(expectation(one_zero, n_b)) == 0.0);

    CHECK_THROWS_AS(embed(identity_matrix(3), Mode::A, 4), std::invalid_argument);
}

TEST_CASE("matrix exponential basics") {
    const OperatorMatrix zero = OperatorMatrix::two_mode(2, Matrix::Zero(4, 4));
    CHECK((matrix_exponential(zero).entries() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() ==
          0.0);

    // theta = 0 beam-splitter generator is the zero matrix
    CHECK((beam_splitter({0.0, 0.3}, 3).entries() - Matrix::Identity(9, 9))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(OperatorMatrix::single_mode(2, bad), std::invalid_argument);
}

TEST_CASE("beam splitter unitarity at d=12") {
    const int d = 12;
    const OperatorMatrix g = bs_generator({M_PI_2, 0.0}, d);
    CHECK((g.entries() + g.entries().adjoint()).cwiseAbs().maxCoeff() == 0.0);
    const Matrix u = matrix_exponential(g).entries();
    const double resid =
        (u.adjoint() * u - Matrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff();
    CHECK(resid <= 1e-10);
}

TEST_CASE("beam splitter preserves total photon number") {
    const int d = 8;
    const ModeIndexer idx(d);
    const Matrix u = beam_splitter({1.1, -0.4}, d).entries();
    double off = 0.0;
    for (int r = 0; r < idx.dim(); ++r) {
        for (int c = 0; c < idx.dim(); ++c) {
            if (idx.sector(r) != idx.sector(c)) off = std::max(off, std::abs(u(r, c)));
        }
    }
    CHECK(off <= 1e-12);
}

TEST_CASE("heisenberg transformation of the mode operators") {
    const int d = 12;
    const ModeIndexer idx(d);
    const double theta = M_PI / 4, phi = M_PI_2;
    const Matrix a = embed(annihilation_matrix(d), Mode::A, d).entries();
    const Matrix b = embed(annihilation_matrix(d), Mode::B, d).entries();
    const Matrix u = beam_splitter({theta, phi}, d).entries();
    const Complex eip = std::exp(Complex(0.0, phi));
    const Matrix resid =
        u.adjoint() * a * u - (std::cos(theta / 2) * a + eip * std::sin(theta / 2) * b);
    double worst = 0.0;
    for (int c = 0; c < idx.dim(); ++c) {
        if (idx.sector(c) <= d - 2) worst = std::max(worst, resid.col(c).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("expectation examples and errors") {
    const int d = 4;
    CHECK(expectation(fock_state(0, 0, d), two_mode_identity(d)).real() == doctest::Approx(1.0));
    const OperatorMatrix parity_b = parity_op(d);
    CHECK(expectation(fock_state(1, 0, d), parity_b).real() == doctest::Approx(1.0));
    CHECK(expectation(fock_state(0, 1, d), parity_b).real() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(expectation(fock_state(0, 0, 3), parity_b), std::invalid_argument);
}

TEST_CASE("expectation of a hermitian operator is real") {
    std::mt19937_64 gen(20240613);
    auto unit = [&]() { return double(gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    const int d = 5;
    const ModeIndexer idx(d);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(idx.dim(), idx.dim());
        for (int r = 0; r < idx.dim(); ++r)
            for (int c = 0; c < idx.dim(); ++c) m(r, c) = Complex(unit(), unit());
        const OperatorMatrix h = OperatorMatrix::two_mode(d, Matrix(m + m.adjoint()));
        REQUIRE(h.is_hermitian(1e-12));
        Vector v(idx.dim());
        for (int k = 0; k < idx.dim(); ++k) v[k] = Complex(unit(), unit());
        const TwoModeState psi = TwoModeState(d, v).normalized();
        CHECK(std::abs(expectation(psi, h).imag()) <= 1e-10);
    }
}

TEST_CASE("operator predicates") {
    const OperatorMatrix p = parity_op(3);
    CHECK(p.is_hermitian(0.0));
    CHECK(p.is_unitary(1e-15));
    CHECK(p.is_diagonal(0.0));
    CHECK_FALSE(annihilation_matrix(3).is_hermitian(1e-12));
    CHECK_FALSE(beam_splitter({M_PI_2, 0.0}, 3).is_diagonal(1e-3));
}

TEST_CASE("state norm and normalization") {
    CHECK(fock_state(2, 1, 4).norm() == 1.0);
    Vector v = Vector::Zero(4);
    v[0] = Complex(3.0, 0.0);
    v[3] = Complex(0.0, 4.0);
    const TwoModeState s(2, v);
    CHECK(s.norm() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(s.normalized().norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(TwoModeState(3, v), std::invalid_argument);
    CHECK_THROWS_AS(TwoModeState::zero(2).normalized(), std::domain_error);
}

TEST_CASE("operator and state json round trip") {
    const OperatorMatrix op = beam_splitter({0.9, -0.4}, 3);
    const nlohmann::json j = operator_to_json(op);
    CHECK(j.at("cutoff") == 3);
    const OperatorMatrix back = operator_from_json(j);
    CHECK(back.modes() == 2);
    CHECK((back.entries() - op.entries()).cwiseAbs().maxCoeff() == 0.0);

    const OperatorMatrix single = annihilation_matrix(4);
    const OperatorMatrix single_back = operator_from_json(operator_to_json(single));
    CHECK(single_back.modes() == 1);
    CHECK((single_back.entries() - single.entries()).cwiseAbs().maxCoeff() == 0.0);

    const TwoModeState st = noon_state(2, 4);
    const TwoModeState st_back = state_from_json(state_to_json(st));
    CHECK((st_back.amplitudes() - st.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
}
