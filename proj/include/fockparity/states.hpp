#pragma once

#include <span>
#include <vector>

#include "fockparity/algebra.hpp"

namespace fockparity {

/// Eigenvalue components of the relative-position / total-momentum
/// entangled family: eta = eta1 + i*eta2.
struct EtaParams {
    double eta1 = 0.0;
    double eta2 = 0.0;
};

/// Eigenvalue components of the center-of-mass / relative-momentum family:
/// xi = xi1 + i*xi2.
struct XiParams {
    double xi1 = 0.0;
    double xi2 = 0.0;
};

/// |m>_a |n>_b, exactly normalized.
TwoModeState fock_state(int m, int n, int cutoff);

/// Single-mode coherent amplitudes c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!).
/// Truncation deficit is negligible for |alpha|^2 <= cutoff/4; beyond that a
/// one-time warning is printed to stderr.
Vector coherent_state(Complex alpha, int cutoff);

/// Single-mode squeezed vacuum: even amplitudes
/// c_{2k} = sech(r)^{1/2} (-tanh r)^k sqrt((2k)!) / (2^k k!), odd ones zero.
Vector squeezed_vacuum(double r, int cutoff);

/// (|N,0> + |0,N>)/sqrt(2).  N = 0 degenerates to |0,0> with norm 1 and a
/// warning on stderr.
TwoModeState noon_state(int photons, int cutoff);

/// Product state with `a` amplitudes in mode a and `b` in mode b.
TwoModeState product_state(const Vector& a, const Vector& b);

/// Truncated |eta>, unnormalized (the continuum family is delta-normalized):
/// c_{m,n} = exp(-|eta|^2/2) (-1)^n H_{m,n}(eta, eta*) / sqrt(m! n!).
TwoModeState eta_state(const EtaParams& p, int cutoff);

/// Truncated |xi>, unnormalized:
/// c_{m,n} = exp(-|xi|^2/2) H_{m,n}(xi, xi*) / sqrt(m! n!).
TwoModeState xi_state(const XiParams& p, int cutoff);

enum class EntangledFamily { Eta, Xi };

namespace detail {

/// 1/sqrt(k!) for k = 0..count-1.
std::vector<double> inv_sqrt_factorials(int count);

/// Writes the truncated entangled-ket amplitudes for eigenvalue x + i*y into
/// `out` (length cutoff^2, ModeIndexer order).  `scratch` must hold cutoff^2
/// entries and is clobbered.  No allocation; hot path of the quadrature
/// builders.
void entangled_fill(std::span<Complex> out, std::span<Complex> scratch, double x, double y,
                    int cutoff, EntangledFamily family, const double* inv_sqrt_fact);

/// Coherent amplitudes without the truncation-quality warning.
void coherent_fill(std::span<Complex> out, Complex alpha, int cutoff);

}  // namespace detail

}  // namespace fockparity
