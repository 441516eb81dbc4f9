#pragma once

#include <complex>
#include <span>
#include <utility>

#include <Eigen/Dense>

namespace fockparity {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Mode { A, B };

/// Flat layout of the truncated two-mode Fock basis.
///
/// With per-mode cutoff d, the basis state |m>_a |n>_b (m photons in mode a,
/// n in mode b, 0 <= m,n < d) sits at flat index k = m*d + n.  Mode a is the
/// major index, mode b the minor one; every module in this library assumes
/// this row-major ordering.
class ModeIndexer {
public:
    explicit ModeIndexer(int cutoff);

    int cutoff() const noexcept { return cutoff_; }
    int dim() const noexcept { return cutoff_ * cutoff_; }

    int flat(int m, int n) const;
    std::pair<int, int> modes(int k) const;
    /// Total photon number m + n of the basis state at flat index k.
    int sector(int k) const;

private:
    int cutoff_;
};

/// Pure state of the truncated two-mode space: d^2 complex amplitudes in
/// ModeIndexer order.  States produced by the library constructors are
/// normalized to 1 within 1e-12 except where a truncation deficit is
/// documented (coherent, squeezed and entangled families).
class TwoModeState {
public:
    TwoModeState(int cutoff, Vector amplitudes);
    static TwoModeState zero(int cutoff);

    int cutoff() const noexcept { return cutoff_; }
    const Vector& amplitudes() const noexcept { return amps_; }

    Complex amplitude(int m, int n) const;
    /// sqrt(sum |c_k|^2), accumulated in fixed index order.
    double norm() const;
    TwoModeState normalized() const;

private:
    int cutoff_;
    Vector amps_;
};

/// Dense complex operator on the truncated space.  Holds either a d x d
/// single-mode matrix or a d^2 x d^2 two-mode matrix; `modes()` tells which.
class OperatorMatrix {
public:
    static OperatorMatrix single_mode(int cutoff, Matrix entries);
    static OperatorMatrix two_mode(int cutoff, Matrix entries);

    int cutoff() const noexcept { return cutoff_; }
    int modes() const noexcept { return modes_; }
    Eigen::Index dim() const noexcept { return entries_.rows(); }
    const Matrix& entries() const noexcept { return entries_; }

    OperatorMatrix adjoint() const;
    /// max_ij |M - M^dagger|
    double hermiticity_residual() const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;
    bool is_diagonal(double tol) const;

private:
    OperatorMatrix(int cutoff, int modes, Matrix entries);

    int cutoff_;
    int modes_;
    Matrix entries_;
};

// Single-mode ladder and quadrature operators, d x d.
OperatorMatrix annihilation_matrix(int cutoff);
OperatorMatrix creation_matrix(int cutoff);
OperatorMatrix number_matrix(int cutoff);
OperatorMatrix identity_matrix(int cutoff);
/// x = (a + a^dag)/sqrt(2)
OperatorMatrix position_matrix(int cutoff);
/// p = (a - a^dag)/(i sqrt(2))
OperatorMatrix momentum_matrix(int cutoff);

/// Kronecker embedding into the two-mode space: op (x) I for mode A,
/// I (x) op for mode B, consistent with the ModeIndexer ordering.
OperatorMatrix embed(const OperatorMatrix& op, Mode mode, int cutoff);

OperatorMatrix two_mode_identity(int cutoff);

/// exp(G) by scaling-and-squaring with Pade approximants.  Accuracy is
/// ~1e-13 relative in spectral norm for ||G|| <= 50; for skew-Hermitian G
/// the result is unitary within 1e-10 in the max-entry norm.
OperatorMatrix matrix_exponential(const OperatorMatrix& generator);

/// <psi| op |psi>, accumulated left-to-right in fixed index order.
Complex expectation(const TwoModeState& state, const OperatorMatrix& op);

/// <bra|ket>, accumulated in fixed index order.
Complex overlap(const TwoModeState& bra, const TwoModeState& ket);

/// <bra| op |ket>
Complex matrix_element(const TwoModeState& bra, const OperatorMatrix& op, const TwoModeState& ket);

TwoModeState apply(const OperatorMatrix& op, const TwoModeState& state);

}  // namespace fockparity
