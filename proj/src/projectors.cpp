#include "fockparity/projectors.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fockparity/states.hpp"

namespace fockparity {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// e^{i k phi}.  Multiples of pi/2 hit the exact {1, i, -1, -i} table, making
// the Fock-sum projectors bit-exact at the special phases.
Complex phase_power(long long k, double phi) {
    int quarter = 0;
    if (phi == 0.0) {
        quarter = 0;
    } else if (phi == M_PI_2) {
        quarter = 1;
    } else if (phi == -M_PI_2) {
        quarter = 3;
    } else if (phi == M_PI || phi == -M_PI) {
        quarter = 2;
    } else {
        return std::exp(Complex(0.0, double(k) * phi));
    }
    static constexpr Complex table[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return table[((k % 4) * quarter % 4 + 4) % 4];
}

int grid_index_sector(const ModeIndexer& idx, int modes, int k) {
    return (modes == 2) ? idx.sector(k) : k;
}

constexpr int kGemmTile = 256;  // quadrature nodes per accumulated tile

// Shared core of the 2-D entangled/coherent quadrature builders:
//   acc[k,k'] = sum_nodes w * ket_k(node) * conj(bra_src_k'(node)).
// Kets and bra sources are filled column-per-node and flushed tile by tile
// through complex GEMM in fixed node order, so the result is reproducible.
template <typename FillKet, typename FillBra>
Matrix accumulate_outer(const QuadratureGrid& grid, Eigen::Index dim, FillKet&& fill_ket,
                        FillBra&& fill_bra) {
    const auto xs = grid.axis();
    const int n = grid.points_per_axis();
    const double w = grid.step() * grid.step() / M_PI;

    Matrix acc = Matrix::Zero(dim, dim);
    Matrix kets(dim, kGemmTile);
    Matrix bras(dim, kGemmTile);
    int filled = 0;
    auto flush = [&]() {
        if (filled == 0) return;
        acc.noalias() += kets.leftCols(filled) * bras.leftCols(filled).adjoint();
        filled = 0;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            fill_ket(std::span<Complex>(kets.col(filled).data(), std::size_t(dim)), xs[i], xs[j]);
            fill_bra(std::span<Complex>(bras.col(filled).data(), std::size_t(dim)), xs[i], xs[j]);
            if (++filled == kGemmTile) flush();
        }
    }
    flush();
    return acc * w;
}

Matrix entangled_mu_matrix(const QuadratureGrid& grid, int cutoff,
                           EntangledFamily family) {
    const ModeIndexer idx(cutoff);
    const auto isf = detail::inv_sqrt_factorials(cutoff);
    std::vector<Complex> scratch(idx.dim());
    auto ket = [&](std::span<Complex> out, double x, double y) {
        detail::entangled_fill(out, scratch, x, y, cutoff, family, isf.data());
    };
    auto bra = [&](std::span<Complex> out, double x, double y) {
        // |eta2 + i eta1>: the bra swaps real and imaginary parts.
        detail::entangled_fill(out, scratch, y, x, cutoff, family, isf.data());
    };
    return accumulate_outer(grid, idx.dim(), ket, bra);
}

ProjectorBuild entangled_mu_build(const QuadratureGrid& grid, int cutoff,
                                  EntangledFamily family, bool convergence_check,
                                  const char* method) {
    if (grid.dimension() != 2) {
        throw std::invalid_argument("entangled-state quadrature needs a 2-D grid");
    }
    const auto t0 = Clock::now();
    Matrix m = entangled_mu_matrix(grid, cutoff, family);
    ProjectorBuildReport rep;
    rep.method = method;
    rep.cutoff = cutoff;
    rep.grid_radius = grid.radius();
    rep.grid_step = grid.step();
    rep.grid_warning = grid.radius() < std::sqrt(2.0 * cutoff) + 2.0;
    if (convergence_check) {
        QuadratureGrid fine(grid.radius(), grid.step() / 2.0, 2);
        Matrix refined = entangled_mu_matrix(fine, cutoff, family);
        rep.convergence_checked = true;
        rep.convergence_delta = (refined - m).cwiseAbs().maxCoeff();
    }
    OperatorMatrix op = OperatorMatrix::two_mode(cutoff, std::move(m));
    rep.hermiticity_residual = op.hermiticity_residual();
    rep.seconds = seconds_since(t0);
    return {std::move(op), std::move(rep)};
}

}  // namespace

OperatorMatrix parity_op_single(int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("parity_op_single: cutoff must be >= 1");
    }
    Matrix p = Matrix::Zero(cutoff, cutoff);
    for (int n = 0; n < cutoff; ++n) p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    return OperatorMatrix::single_mode(cutoff, std::move(p));
}

OperatorMatrix parity_op(int cutoff) {
    return embed(parity_op_single(cutoff), Mode::B, cutoff);
}

ProjectorBuild parity_from_coherent_quadrature(const QuadratureGrid& grid, int cutoff) {
    if (grid.dimension() != 2) {
        throw std::invalid_argument("parity_from_coherent_quadrature: needs a 2-D grid");
    }
    if (cutoff < 1) {
        throw std::invalid_argument("parity_from_coherent_quadrature: cutoff must be >= 1");
    }
    const auto t0 = Clock::now();
    auto ket = [&](std::span<Complex> out, double x, double y) {
        detail::coherent_fill(out, Complex(x, y), cutoff);
    };
    auto bra = [&](std::span<Complex> out, double x, double y) {
        detail::coherent_fill(out, Complex(-x, -y), cutoff);
    };
    Matrix m = accumulate_outer(grid, cutoff, ket, bra);
    ProjectorBuildReport rep;
    rep.method = "coherent-parity-quadrature";
    rep.cutoff = cutoff;
    rep.grid_radius = grid.radius();
    rep.grid_step = grid.step();
    rep.grid_warning = grid.radius() < std::sqrt(2.0 * cutoff);
    OperatorMatrix op = OperatorMatrix::single_mode(cutoff, std::move(m));
    rep.hermiticity_residual = op.hermiticity_residual();
    rep.seconds = seconds_since(t0);
    return {std::move(op), std::move(rep)};
}

OperatorMatrix bs_generator(const BsParams& p, int cutoff) {
    if (!std::isfinite(p.theta) || !std::isfinite(p.phi)) {
        throw std::invalid_argument("bs_generator: non-finite parameters");
    }
    const Matrix a = embed(annihilation_matrix(cutoff), Mode::A, cutoff).entries();
    const Matrix b = embed(annihilation_matrix(cutoff), Mode::B, cutoff).entries();
    const Complex eip = std::exp(Complex(0.0, p.phi));
    Matrix g = 0.5 * p.theta * (eip * (a.adjoint() * b) - std::conj(eip) * (a * b.adjoint()));
    return OperatorMatrix::two_mode(cutoff, std::move(g));
}

OperatorMatrix beam_splitter(const BsParams& p, int cutoff) {
    return matrix_exponential(bs_generator(p, cutoff));
}

ProjectorBuild mu_conjugation(const BsParams& p, int cutoff) {
    const auto t0 = Clock::now();
    const Matrix u = beam_splitter(p, cutoff).entries();
    const Matrix pi_b = parity_op(cutoff).entries();
    Matrix m = u.adjoint() * pi_b * u;
    ProjectorBuildReport rep;
    rep.method = "conjugation";
    rep.cutoff = cutoff;
    OperatorMatrix op = OperatorMatrix::two_mode(cutoff, std::move(m));
    rep.hermiticity_residual = op.hermiticity_residual();
    rep.seconds = seconds_since(t0);
    return {std::move(op), std::move(rep)};
}

OperatorMatrix mu_fock(double phi, int cutoff) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("mu_fock: non-finite phi");
    }
    const ModeIndexer idx(cutoff);
    Matrix m = Matrix::Zero(idx.dim(), idx.dim());
    for (int mm = 0; mm < cutoff; ++mm) {
        for (int nn = 0; nn < cutoff; ++nn) {
            m(idx.flat(mm, nn), idx.flat(nn, mm)) = phase_power(mm - nn, phi);
        }
    }
    return OperatorMatrix::two_mode(cutoff, std::move(m));
}

OperatorMatrix mu_fock_eta_form(int cutoff) {
    // factor i^{n-m} = e^{i(m-n)(-pi/2)}
    return mu_fock(-M_PI_2, cutoff);
}

OperatorMatrix mu_fock_xi_form(int cutoff) {
    // factor i^{m-n} = e^{i(m-n)(+pi/2)}
    return mu_fock(M_PI_2, cutoff);
}

ProjectorBuild mu_from_eta_quadrature(const QuadratureGrid& grid, int cutoff,
                                      bool convergence_check) {
    return entangled_mu_build(grid, cutoff, EntangledFamily::Eta, convergence_check,
                              "eta-quadrature");
}

ProjectorBuild mu_from_xi_quadrature(const QuadratureGrid& grid, int cutoff,
                                     bool convergence_check) {
    return entangled_mu_build(grid, cutoff, EntangledFamily::Xi, convergence_check,
                              "xi-quadrature");
}

ProjectorBuild entangled_completeness(const QuadratureGrid& grid, int cutoff,
                                      EntangledFamily family) {
    if (grid.dimension() != 2) {
        throw std::invalid_argument("entangled_completeness: needs a 2-D grid");
    }
    const auto t0 = Clock::now();
    const ModeIndexer idx(cutoff);
    const auto isf = detail::inv_sqrt_factorials(cutoff);
    std::vector<Complex> scratch(idx.dim());
    auto ket = [&](std::span<Complex> out, double x, double y) {
        detail::entangled_fill(out, scratch, x, y, cutoff, family, isf.data());
    };
    Matrix m = accumulate_outer(grid, idx.dim(), ket, ket);
    ProjectorBuildReport rep;
    rep.method = (family == EntangledFamily::Eta) ? "eta-completeness" : "xi-completeness";
    rep.cutoff = cutoff;
    rep.grid_radius = grid.radius();
    rep.grid_step = grid.step();
    rep.grid_warning = grid.radius() < std::sqrt(2.0 * cutoff) + 2.0;
    OperatorMatrix op = OperatorMatrix::two_mode(cutoff, std::move(m));
    rep.hermiticity_residual = op.hermiticity_residual();
    rep.seconds = seconds_since(t0);
    return {std::move(op), std::move(rep)};
}

ProjectorBuild mu_coherent_quadrature(const QuadratureGrid& grid, int cutoff, bool force) {
    if (grid.dimension() != 4) {
        throw std::invalid_argument("mu_coherent_quadrature: needs a 4-D grid");
    }
    if (cutoff < 1) {
        throw std::invalid_argument("mu_coherent_quadrature: cutoff must be >= 1");
    }
    if (!force && (cutoff > 4 || grid.total_points() > 500'000'000LL)) {
        throw std::invalid_argument(
            "mu_coherent_quadrature: cost guard exceeded (cutoff <= 4 and <= 5e8 nodes); "
            "pass force to override");
    }
    const auto t0 = Clock::now();
    const int d = cutoff;
    const int dim = d * d;
    const auto xs = grid.axis();
    const int n = grid.points_per_axis();
    const std::size_t n2 = std::size_t(n) * n;

    // Coherent amplitude vectors for every 2-D node, reused for both planes.
    std::vector<Complex> coh(n2 * d);
    {
        std::size_t t = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j, ++t) {
                detail::coherent_fill(std::span<Complex>(&coh[t * d], d), Complex(xs[i], xs[j]), d);
            }
        }
    }

    std::vector<Complex> acc(std::size_t(dim) * dim, Complex(0.0, 0.0));
    std::vector<Complex> bra_conj(dim);
    for (std::size_t s = 0; s < n2; ++s) {
        const Complex* ca = &coh[s * d];
        for (std::size_t t = 0; t < n2; ++t) {
            const Complex* cb = &coh[t * d];
            // bra source |beta>_a |alpha>_b
            for (int mp = 0; mp < d; ++mp) {
                for (int np = 0; np < d; ++np) {
                    bra_conj[mp * d + np] = std::conj(cb[mp] * ca[np]);
                }
            }
            for (int m = 0; m < d; ++m) {
                for (int nn = 0; nn < d; ++nn) {
                    const Complex ket = ca[m] * cb[nn];
                    Complex* row = &acc[std::size_t(m * d + nn) * dim];
                    for (int c = 0; c < dim; ++c) {
                        row[c] += ket * bra_conj[c];
                    }
                }
            }
        }
    }

    const double w2 = grid.step() * grid.step() / M_PI;
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            m(r, c) = acc[std::size_t(r) * dim + c] * (w2 * w2);
        }
    }

    ProjectorBuildReport rep;
    rep.method = "coherent-quadrature";
    rep.cutoff = cutoff;
    rep.grid_radius = grid.radius();
    rep.grid_step = grid.step();
    rep.grid_warning = grid.radius() < std::sqrt(2.0 * cutoff);
    OperatorMatrix op = OperatorMatrix::two_mode(cutoff, std::move(m));
    rep.hermiticity_residual = op.hermiticity_residual();
    rep.seconds = seconds_since(t0);
    return {std::move(op), std::move(rep)};
}

Complex mu_coherent_matrix_element(const BsParams& p, Complex alpha, Complex beta,
                                   Complex alpha_prime, Complex beta_prime) {
    for (Complex z : {alpha, beta, alpha_prime, beta_prime}) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("mu_coherent_matrix_element: non-finite argument");
        }
    }
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);
    const Complex eip = std::exp(Complex(0.0, p.phi));
    const Complex ap = std::conj(alpha_prime);
    const Complex bp = std::conj(beta_prime);
    // Normal-ordered exponent with operators replaced by coherent eigenvalues.
    const Complex exponent = ap * alpha * ct - bp * beta * ct + ap * beta * eip * st +
                             bp * alpha * std::conj(eip) * st - ap * alpha - bp * beta;
    const Complex ov_a =
        std::exp(-0.5 * std::norm(alpha_prime) - 0.5 * std::norm(alpha) + ap * alpha);
    const Complex ov_b = std::exp(-0.5 * std::norm(beta_prime) - 0.5 * std::norm(beta) + bp * beta);
    return std::exp(exponent) * ov_a * ov_b;
}

double compare_projectors(const OperatorMatrix& m1, const OperatorMatrix& m2, int block) {
    if (m1.cutoff() != m2.cutoff() || m1.modes() != m2.modes()) {
        throw std::invalid_argument("compare_projectors: cutoff/mode mismatch");
    }
    const ModeIndexer idx(m1.cutoff());
    const Eigen::Index dim = m1.dim();
    double maxdiff = 0.0;
    for (Eigen::Index r = 0; r < dim; ++r) {
        if (grid_index_sector(idx, m1.modes(), int(r)) > block) continue;
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (grid_index_sector(idx, m1.modes(), int(c)) > block) continue;
            maxdiff = std::max(maxdiff, std::abs(m1.entries()(r, c) - m2.entries()(r, c)));
        }
    }
    return maxdiff;
}

int default_block(int cutoff) {
    return std::max(0, cutoff / 2 - 2);
}

}  // namespace fockparity
