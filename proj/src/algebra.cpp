#include "fockparity/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace fockparity {

namespace {

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": non-finite entries");
    }
}

}  // namespace

ModeIndexer::ModeIndexer(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("ModeIndexer: cutoff must be >= 1");
    }
}

int ModeIndexer::flat(int m, int n) const {
    if (m < 0 || n < 0 || m >= cutoff_ || n >= cutoff_) {
        throw std::out_of_range("ModeIndexer::flat: mode index out of range");
    }
    return m * cutoff_ + n;
}

std::pair<int, int> ModeIndexer::modes(int k) const {
    if (k < 0 || k >= dim()) {
        throw std::out_of_range("ModeIndexer::modes: flat index out of range");
    }
    return {k / cutoff_, k % cutoff_};
}

int ModeIndexer::sector(int k) const {
    auto [m, n] = modes(k);
    return m + n;
}

TwoModeState::TwoModeState(int cutoff, Vector amplitudes)
    : cutoff_(cutoff), amps_(std::move(amplitudes)) {
    ModeIndexer idx(cutoff);
    if (amps_.size() != idx.dim()) {
        throw std::invalid_argument("TwoModeState: amplitude vector must have length cutoff^2");
    }
    if (!amps_.allFinite()) {
        throw std::invalid_argument("TwoModeState: non-finite amplitudes");
    }
}

TwoModeState TwoModeState::zero(int cutoff) {
    ModeIndexer idx(cutoff);
    return TwoModeState(cutoff, Vector::Zero(idx.dim()));
}

Complex TwoModeState::amplitude(int m, int n) const {
    return amps_[ModeIndexer(cutoff_).flat(m, n)];
}

double TwoModeState::norm() const {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < amps_.size(); ++k) {
        acc += std::norm(amps_[k]);
    }
    return std::sqrt(acc);
}

TwoModeState TwoModeState::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::domain_error("TwoModeState::normalized: zero state");
    }
    return TwoModeState(cutoff_, amps_ / n);
}

OperatorMatrix::OperatorMatrix(int cutoff, int modes, Matrix entries)
    : cutoff_(cutoff), modes_(modes), entries_(std::move(entries)) {
    if (cutoff < 1) {
        throw std::invalid_argument("OperatorMatrix: cutoff must be >= 1");
    }
    const Eigen::Index want = (modes == 1) ? cutoff : Eigen::Index(cutoff) * cutoff;
    if (entries_.rows() != want || entries_.cols() != want) {
        throw std::invalid_argument("OperatorMatrix: entry matrix has wrong dimension");
    }
    require_finite(entries_, "OperatorMatrix");
}

OperatorMatrix OperatorMatrix::single_mode(int cutoff, Matrix entries) {
    return OperatorMatrix(cutoff, 1, std::move(entries));
}

OperatorMatrix OperatorMatrix::two_mode(int cutoff, Matrix entries) {
    return OperatorMatrix(cutoff, 2, std::move(entries));
}

OperatorMatrix OperatorMatrix::adjoint() const {
    return OperatorMatrix(cutoff_, modes_, entries_.adjoint());
}

double OperatorMatrix::hermiticity_residual() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

bool OperatorMatrix::is_hermitian(double tol) const {
    return hermiticity_residual() <= tol;
}

bool OperatorMatrix::is_unitary(double tol) const {
    Matrix gram = entries_.adjoint() * entries_;
    gram.diagonal().array() -= 1.0;
    return gram.cwiseAbs().maxCoeff() <= tol;
}

bool OperatorMatrix::is_diagonal(double tol) const {
    double off = 0.0;
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
        for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
            if (i != j) off = std::max(off, std::abs(entries_(i, j)));
        }
    }
    return off <= tol;
}

OperatorMatrix annihilation_matrix(int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("annihilation_matrix: cutoff must be >= 1");
    }
    Matrix a = Matrix::Zero(cutoff, cutoff);
    for (int m = 0; m + 1 < cutoff; ++m) {
        a(m, m + 1) = std::sqrt(double(m + 1));
    }
    return OperatorMatrix::single_mode(cutoff, std::move(a));
}

OperatorMatrix creation_matrix(int cutoff) {
    return annihilation_matrix(cutoff).adjoint();
}

OperatorMatrix number_matrix(int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("number_matrix: cutoff must be >= 1");
    }
    Matrix n = Matrix::Zero(cutoff, cutoff);
    for (int m = 0; m < cutoff; ++m) n(m, m) = double(m);
    return OperatorMatrix::single_mode(cutoff, std::move(n));
}

OperatorMatrix identity_matrix(int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("identity_matrix: cutoff must be >= 1");
    }
    return OperatorMatrix::single_mode(cutoff, Matrix::Identity(cutoff, cutoff));
}

OperatorMatrix position_matrix(int cutoff) {
    const Matrix a = annihilation_matrix(cutoff).entries();
    return OperatorMatrix::single_mode(cutoff, (a + a.adjoint()) / std::sqrt(2.0));
}

OperatorMatrix momentum_matrix(int cutoff) {
    const Matrix a = annihilation_matrix(cutoff).entries();
    return OperatorMatrix::single_mode(cutoff, (a - a.adjoint()) / Complex(0.0, std::sqrt(2.0)));
}

OperatorMatrix embed(const OperatorMatrix& op, Mode mode, int cutoff) {
    if (op.modes() != 1 || op.cutoff() != cutoff) {
        throw std::invalid_argument("embed: operator must be single-mode with matching cutoff");
    }
    const int d = cutoff;
    const Matrix& x = op.entries();
    Matrix out = Matrix::Zero(Eigen::Index(d) * d, Eigen::Index(d) * d);
    if (mode == Mode::A) {
        // x (x) I
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    out(i * d + k, j * d + k) = x(i, j);
    } else {
        // I (x) x
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    out(k * d + i, k * d + j) = x(i, j);
    }
    return OperatorMatrix::two_mode(cutoff, std::move(out));
}

OperatorMatrix two_mode_identity(int cutoff) {
    ModeIndexer idx(cutoff);
    return OperatorMatrix::two_mode(cutoff, Matrix::Identity(idx.dim(), idx.dim()));
}

OperatorMatrix matrix_exponential(const OperatorMatrix& generator) {
    require_finite(generator.entries(), "matrix_exponential");
    Matrix e = generator.entries().exp();
    return (generator.modes() == 1)
               ? OperatorMatrix::single_mode(generator.cutoff(), std::move(e))
               : OperatorMatrix::two_mode(generator.cutoff(), std::move(e));
}

Complex expectation(const TwoModeState& state, const OperatorMatrix& op) {
    if (op.modes() != 2 || op.cutoff() != state.cutoff()) {
        throw std::invalid_argument("expectation: operator/state cutoff mismatch");
    }
    const Vector& psi = state.amplitudes();
    const Matrix& m = op.entries();
    const Eigen::Index dim = psi.size();
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < dim; ++i) {
        Complex row(0.0, 0.0);
        for (Eigen::Index j = 0; j < dim; ++j) {
            row += m(i, j) * psi[j];
        }
        acc += std::conj(psi[i]) * row;
    }
    return acc;
}

Complex overlap(const TwoModeState& bra, const TwoModeState& ket) {
    if (bra.cutoff() != ket.cutoff()) {
        throw std::invalid_argument("overlap: cutoff mismatch");
    }
    const Vector& a = bra.amplitudes();
    const Vector& b = ket.amplitudes();
    Complex acc(0.0, 0.0);
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

Complex matrix_element(const TwoModeState& bra, const OperatorMatrix& op,
                       const TwoModeState& ket) {
    if (op.modes() != 2 || op.cutoff() != bra.cutoff() || op.cutoff() != ket.cutoff()) {
        throw std::invalid_argument("matrix_element: operator/state cutoff mismatch");
    }
    const Vector& a = bra.amplitudes();
    const Vector& b = ket.amplitudes();
    const Matrix& m = op.entries();
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        Complex row(0.0, 0.0);
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            row += m(i, j) * b[j];
        }
        acc += std::conj(a[i]) * row;
    }
    return acc;
}

TwoModeState apply(const OperatorMatrix& op, const TwoModeState& state) {
    if (op.modes() != 2 || op.cutoff() != state.cutoff()) {
        throw std::invalid_argument("apply: operator/state cutoff mismatch");
    }
    return TwoModeState(state.cutoff(), op.entries() * state.amplitudes());
}

}  // namespace fockparity
