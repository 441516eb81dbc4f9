#pragma once

#include <string>

#include "fockparity/algebra.hpp"
#include "fockparity/quadrature.hpp"
#include "fockparity/states.hpp"

namespace fockparity {

/// Beam-splitter parameters: transmissivity angle theta in [0, pi] and phase
/// phi in (-pi, pi].  The unitary is exp[(theta/2)(a^dag b e^{i phi} - a b^dag e^{-i phi})].
struct BsParams {
    double theta = 0.0;
    double phi = 0.0;
};

/// What a projector builder did: construction route, grid (if any), the
/// measured Hermiticity residual ||M - M^dag||_max and the wall time.
struct ProjectorBuildReport {
    std::string method;
    int cutoff = 0;
    double grid_radius = 0.0;  // 0 when no grid is involved
    double grid_step = 0.0;
    double hermiticity_residual = 0.0;
    double seconds = 0.0;
    bool grid_warning = false;  // grid radius below the recommended coverage
    bool convergence_checked = false;
    double convergence_delta = 0.0;  // max entry change when h is halved
};

struct ProjectorBuild {
    OperatorMatrix op;
    ProjectorBuildReport report;
};

/// Two-mode parity on mode b: diagonal (-1)^n at |m,n>.
OperatorMatrix parity_op(int cutoff);

/// Single-mode parity, diag((-1)^n).
OperatorMatrix parity_op_single(int cutoff);

/// Parity via the coherent-state integral  int d^2beta/pi |beta><-beta|,
/// evaluated on the grid.  Single-mode, d x d.
ProjectorBuild parity_from_coherent_quadrature(const QuadratureGrid& grid, int cutoff);

/// Skew-Hermitian beam-splitter generator (theta/2)(A^dag B e^{i phi} - A B^dag e^{-i phi}).
OperatorMatrix bs_generator(const BsParams& p, int cutoff);

/// Beam-splitter unitary, exp of the generator.  Exact on total-photon
/// sectors <= cutoff-1 (complete sectors are invariant subspaces).
OperatorMatrix beam_splitter(const BsParams& p, int cutoff);

/// Measurement projector by operator conjugation: U^dag (I (x) parity_b) U.
ProjectorBuild mu_conjugation(const BsParams& p, int cutoff);

/// Balanced-splitter (theta = pi/2) measurement projector in closed Fock
/// form: entry e^{i(m-n)phi} at (row (m,n), col (n,m)).  Phases at integer
/// multiples of pi/2 are assigned from the exact {1, i, -1, -i} table so the
/// special values phi = 0, +-pi/2, pi are bit-exact.
OperatorMatrix mu_fock(double phi, int cutoff);

/// Discrete sum with factor i^{n-m}; identical to mu_fock(-pi/2).
OperatorMatrix mu_fock_eta_form(int cutoff);

/// Discrete sum with factor i^{m-n}; identical to mu_fock(+pi/2).
OperatorMatrix mu_fock_xi_form(int cutoff);

/// Quadrature of  int d(eta1) d(eta2)/pi |eta1 + i eta2><eta2 + i eta1|.
/// The bra is the conjugate transpose of the ket built with swapped real and
/// imaginary parts.  Converges to mu_fock(-pi/2) on low sectors.
ProjectorBuild mu_from_eta_quadrature(const QuadratureGrid& grid, int cutoff,
                                      bool convergence_check = false);

/// Same for the xi family; converges to mu_fock(+pi/2).
ProjectorBuild mu_from_xi_quadrature(const QuadratureGrid& grid, int cutoff,
                                     bool convergence_check = false);

/// Quadrature of  int d^2eta/pi |eta><eta|  (no argument swap): the
/// resolution of the identity of the entangled family, used by the
/// completeness checks.
ProjectorBuild entangled_completeness(const QuadratureGrid& grid, int cutoff,
                                      EntangledFamily family);

/// 4-D quadrature of  int d^2alpha d^2beta/pi^2 |alpha>_a|beta>_b <alpha|_b <beta|_a,
/// which converges to the swap operator mu_fock(0).  The node count grows as
/// (2R/h)^4, so this is guarded to cutoff <= 4 and ~5e8 nodes unless forced.
ProjectorBuild mu_coherent_quadrature(const QuadratureGrid& grid, int cutoff, bool force = false);

/// Coherent-state matrix element <alpha',beta'| mu(theta,phi) |alpha,beta>
/// from the normal-ordered closed form (valid for any theta, phi).
Complex mu_coherent_matrix_element(const BsParams& p, Complex alpha, Complex beta,
                                   Complex alpha_prime, Complex beta_prime);

/// Max entry |m1 - m2| restricted to rows and columns whose total photon
/// number is <= block.  For single-mode operators the photon number itself
/// plays the role of the sector.
double compare_projectors(const OperatorMatrix& m1, const OperatorMatrix& m2, int block);

/// Default comparison block, d/2 - 2 (truncation makes high sectors
/// meaningless).
int default_block(int cutoff);

}  // namespace fockparity
