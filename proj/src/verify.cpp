#include "fockparity/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fockparity/hermite.hpp"
#include "fockparity/metrology.hpp"
#include "fockparity/projectors.hpp"
#include "fockparity/quadrature.hpp"
#include "fockparity/states.hpp"

namespace fockparity {

namespace {

using Clock = std::chrono::steady_clock;

// Deterministic uniform draws; does not depend on std::uniform_real_distribution
// so reports are identical across standard libraries.
struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::mt19937_64 gen;

    double unit() { return double(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);
        const double im = uniform(im_lo, im_hi);
        return {re, im};
    }
};

struct Ctx {
    Ctx(const VerifyConfig& c, VerifyReport& r) : cfg(c), report(r) {}

    const VerifyConfig& cfg;
    VerifyReport& report;

    QuadratureGrid grid() const { return QuadratureGrid(cfg.grid_radius, cfg.grid_step, 2); }
    int quad_cutoff() const { return cfg.cutoff > 0 ? cfg.cutoff : 16; }
    Rng rng(std::uint64_t salt) const { return Rng(cfg.seed ^ salt); }

    // Built once per suite run and shared across checks.
    std::optional<ProjectorBuild> eta_quad, xi_quad, parity_coh, coherent_4d;
    std::optional<Matrix> bs1_d30;
    // Collected by the signal checks, reported by signal-reality-and-bounds.
    double max_imag_residual = 0.0;
    double max_bound_excess = 0.0;
};

void run_check(Ctx& ctx, const std::string& name, double default_tol,
               const std::function<double()>& fn) {
    VerifyCheck c;
    c.name = name;
    const auto it = ctx.cfg.tolerance_overrides.find(name);
    c.tolerance = (it != ctx.cfg.tolerance_overrides.end()) ? it->second : default_tol;
    const auto t0 = Clock::now();
    try {
        c.residual = fn();
        c.pass = std::isfinite(c.residual) && c.residual <= c.tolerance;
    } catch (const std::exception& e) {
        c.residual = std::numeric_limits<double>::infinity();
        c.pass = false;
        c.note = e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    ctx.report.checks.push_back(std::move(c));
}

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Midpoint rule on the symmetric 1-D lattice, used as the oracle for the
// 1-D Gaussian closed form.
Complex quad1d(double radius, double step, const std::function<Complex(double)>& f) {
    const int n = int(std::llround(2.0 * radius / step));
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        acc += f((double(i) - 0.5 * double(n - 1)) * step);
    }
    return acc * step;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= double(k);
    return f;
}

// Brute-force coefficient of t^m t'^n in exp(-t t' + t xi + t' eta), times
// m! n!: the generating-function oracle for the Hermite recurrence.
Complex hermite_expansion_oracle(int m, int n, Complex xi, Complex eta) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j <= std::min(m, n); ++j) {
        const double coeff = factorial(m) * factorial(n) /
                             (factorial(j) * factorial(m - j) * factorial(n - j));
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * coeff * std::pow(xi, m - j) * std::pow(eta, n - j);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// gaussians
// ---------------------------------------------------------------------------

void suite_gaussians(Ctx& ctx) {
    run_check(ctx, "gauss1d-closed-vs-quadrature", 1e-7, [&]() {
        Rng rng = ctx.rng(0x11);
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            const Complex alpha = rng.box(0.6, 2.0, -0.5, 0.5);
            const Complex beta = rng.box(-1.0, 1.0, -1.0, 1.0);
            const Complex closed = gauss1d_closed(alpha, beta);
            const Complex quad = quad1d(10.0, 0.001, [&](double x) {
                return std::exp(-alpha * x * x + beta * x);
            });
            worst = std::max(worst, rel_err(quad, closed));
        }
        return worst;
    });

    run_check(ctx, "gauss2d-closed-vs-quadrature", 1e-7, [&]() {
        Rng rng = ctx.rng(0x12);
        const QuadratureGrid grid = ctx.grid();
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            const Complex zeta = rng.box(-2.0, -0.8, -0.5, 0.5);
            const Complex xi = rng.box(-0.8, 0.8, -0.8, 0.8);
            const Complex eta = rng.box(-0.8, 0.8, -0.8, 0.8);
            const Complex closed = gauss2d_closed(zeta, xi, eta);
            const Complex quad = integrate2(grid, [&](double x, double y) {
                                     const Complex z(x, y);
                                     const Complex zc(x, -y);
                                     return std::exp(zeta * (x * x + y * y) + xi * z + eta * zc);
                                 }) /
                                 M_PI;
            worst = std::max(worst, rel_err(quad, closed));
        }
        return worst;
    });

    run_check(ctx, "gauss2d-general-closed-vs-quadrature", 1e-7, [&]() {
        Rng rng = ctx.rng(0x13);
        const QuadratureGrid grid = ctx.grid();
        double worst = 0.0;
        int done = 0;
        int attempts = 0;
        while (done < 50 && attempts < 5000) {
            ++attempts;
            const Complex zeta = rng.box(-2.2, -1.2, -0.3, 0.3);
            const Complex f = rng.box(-0.2, 0.2, -0.2, 0.2);
            const Complex g = rng.box(-0.2, 0.2, -0.2, 0.2);
            const Complex xi = rng.box(-0.6, 0.6, -0.6, 0.6);
            const Complex eta = rng.box(-0.6, 0.6, -0.6, 0.6);
            Complex closed;
            try {
                closed = gauss2d_general_closed(zeta, xi, eta, f, g);
            } catch (const std::domain_error&) {
                continue;  // outside the convergence region; redraw
            }
            ++done;
            const Complex quad = integrate2(grid, [&](double x, double y) {
                                     const Complex z(x, y);
                                     const Complex zc(x, -y);
                                     return std::exp(zeta * (x * x + y * y) + xi * z + eta * zc +
                                                     f * z * z + g * zc * zc);
                                 }) /
                                 M_PI;
            worst = std::max(worst, rel_err(quad, closed));
        }
        if (done < 50) throw std::runtime_error("could not draw 50 in-region parameter sets");
        return worst;
    });

    run_check(ctx, "gauss2d-general-branch-continuity", 0.25, [&]() {
        // A branch flip of the principal square root would show up as an O(1)
        // relative jump between neighbouring path points.
        struct Path {
            Complex zeta0, zeta1, f0, f1, g0, g1;
        };
        const Path paths[] = {
            {{-1.5, 0.0}, {-2.0, 0.3}, {0.1, 0.0}, {-0.1, 0.1}, {0.0, 0.1}, {0.15, -0.05}},
            {{-1.2, -0.2}, {-1.9, 0.2}, {0.0, -0.15}, {0.12, 0.0}, {-0.1, 0.0}, {0.0, 0.12}},
            {{-2.0, 0.1}, {-1.3, -0.3}, {0.15, 0.05}, {-0.05, -0.1}, {0.05, -0.1}, {-0.12, 0.0}},
        };
        const Complex xi(0.3, -0.2), eta(-0.1, 0.25);
        double worst = 0.0;
        for (const auto& p : paths) {
            Complex prev;
            for (int k = 0; k <= 10; ++k) {
                const double t = double(k) / 10.0;
                const Complex zeta = p.zeta0 + t * (p.zeta1 - p.zeta0);
                const Complex f = p.f0 + t * (p.f1 - p.f0);
                const Complex g = p.g0 + t * (p.g1 - p.g0);
                const Complex v = gauss2d_general_closed(zeta, xi, eta, f, g);
                if (k > 0) {
                    worst = std::max(worst, std::abs(v - prev) / std::max(1e-12, std::abs(prev)));
                }
                prev = v;
            }
        }
        return worst;
    });
}

// ---------------------------------------------------------------------------
// hermite
// ---------------------------------------------------------------------------

void suite_hermite(Ctx& ctx) {
    run_check(ctx, "hermite-recurrence-vs-expansion", 1e-9, [&]() {
        Rng rng = ctx.rng(0x21);
        double worst = 0.0;
        for (int draw = 0; draw < 10; ++draw) {
            const Complex xi = rng.box(-2.0, 2.0, -2.0, 2.0);
            const Complex eta = rng.box(-2.0, 2.0, -2.0, 2.0);
            const HermiteTable table = hermite_table(6, 6, xi, eta);
            for (int m = 0; m <= 6; ++m) {
                for (int n = 0; n <= 6; ++n) {
                    worst = std::max(
                        worst, rel_err(table.at(m, n), hermite_expansion_oracle(m, n, xi, eta)));
                }
            }
        }
        return worst;
    });
}

// ---------------------------------------------------------------------------
// states
// ---------------------------------------------------------------------------

double block_norm(const Vector& v, int cutoff, int block) {
    const ModeIndexer idx(cutoff);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (idx.sector(int(k)) <= block) acc += std::norm(v[k]);
    }
    return std::sqrt(acc);
}

double completeness_residual(Ctx& ctx, EntangledFamily family) {
    const int d = 10;
    const auto build = entangled_completeness(ctx.grid(), d, family);
    const ModeIndexer idx(d);
    double worst = 0.0;
    for (int r = 0; r < idx.dim(); ++r) {
        if (idx.sector(r) > 6) continue;
        for (int c = 0; c < idx.dim(); ++c) {
            if (idx.sector(c) > 6) continue;
            const Complex want = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            worst = std::max(worst, std::abs(build.op.entries()(r, c) - want));
        }
    }
    return worst;
}

double eigenvector_residual(EntangledFamily family) {
    const int d = 20;
    const int block = 8;
    const Matrix x1 = embed(position_matrix(d), Mode::A, d).entries();
    const Matrix x2 = embed(position_matrix(d), Mode::B, d).entries();
    const Matrix p1 = embed(momentum_matrix(d), Mode::A, d).entries();
    const Matrix p2 = embed(momentum_matrix(d), Mode::B, d).entries();
    const double pairs[][2] = {{0.3, 0.5}, {-0.8, 0.2}, {1.0, 0.0}, {0.0, -1.0}, {0.5, 0.5}};
    double worst = 0.0;
    for (const auto& pr : pairs) {
        const double u = pr[0], v = pr[1];
        Vector psi;
        Matrix op_x, op_p;
        if (family == EntangledFamily::Eta) {
            psi = eta_state({u, v}, d).amplitudes();
            op_x = x1 - x2;
            op_p = p1 + p2;
        } else {
            psi = xi_state({u, v}, d).amplitudes();
            op_x = x1 + x2;
            op_p = p1 - p2;
        }
        const double s2 = std::sqrt(2.0);
        worst = std::max(worst, block_norm(op_x * psi - s2 * u * psi, d, block));
        worst = std::max(worst, block_norm(op_p * psi - s2 * v * psi, d, block));
    }
    return worst;
}

double power_series_residual(EntangledFamily family) {
    const int d = 16;
    const Complex ev = (family == EntangledFamily::Eta) ? Complex(0.7, 0.3) : Complex(0.5, -0.2);
    const Matrix ad = embed(creation_matrix(d), Mode::A, d).entries();
    const Matrix bd = embed(creation_matrix(d), Mode::B, d).entries();
    Matrix gen;
    Vector want;
    if (family == EntangledFamily::Eta) {
        gen = ev * ad - std::conj(ev) * bd + ad * bd;
        want = eta_state({ev.real(), ev.imag()}, d).amplitudes();
    } else {
        gen = ev * ad + std::conj(ev) * bd - ad * bd;
        want = xi_state({ev.real(), ev.imag()}, d).amplitudes();
    }
    // The generator only raises photon numbers, so the series applied to the
    // vacuum terminates once every path has left the truncated space.
    const ModeIndexer idx(d);
    Vector term = Vector::Zero(idx.dim());
    term[0] = 1.0;
    Vector sum = term;
    for (int k = 1; k <= 2 * (d - 1); ++k) {
        term = (gen * term) / double(k);
        sum += term;
    }
    sum *= std::exp(-0.5 * std::norm(ev));

    double worst = 0.0;
    for (Eigen::Index k = 0; k < sum.size(); ++k) {
        if (idx.sector(int(k)) <= d / 2) {
            worst = std::max(worst, std::abs(sum[k] - want[k]));
        }
    }
    return worst;
}

void suite_states(Ctx& ctx) {
    run_check(ctx, "eta-completeness-identity", 1e-6,
              [&]() { return completeness_residual(ctx, EntangledFamily::Eta); });
    run_check(ctx, "xi-completeness-identity", 1e-6,
              [&]() { return completeness_residual(ctx, EntangledFamily::Xi); });
    run_check(ctx, "eta-eigenvector-relations", 1e-6,
              [&]() { return eigenvector_residual(EntangledFamily::Eta); });
    run_check(ctx, "xi-eigenvector-relations", 1e-6,
              [&]() { return eigenvector_residual(EntangledFamily::Xi); });

    run_check(ctx, "squeezed-vacuum-integral-overlap", 1e-6, [&]() {
        const int d = 20;
        const double r = 0.5;
        const Vector closed = squeezed_vacuum(r, d);
        const QuadratureGrid grid = ctx.grid();
        const auto xs = grid.axis();
        const double w = grid.step() * grid.step() / M_PI;
        const double pref = std::sqrt(1.0 / std::cosh(r));
        const double t = std::tanh(r);
        Vector quad = Vector::Zero(d);
        std::vector<Complex> coh(d);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = 0; j < xs.size(); ++j) {
                const Complex alpha(xs[i], xs[j]);
                const Complex ac = std::conj(alpha);
                const Complex weight =
                    pref * std::exp(-0.5 * std::norm(alpha) - 0.5 * t * ac * ac);
                detail::coherent_fill(coh, alpha, d);
                for (int n = 0; n < d; ++n) quad[n] += w * weight * coh[n];
            }
        }
        return (quad - closed).cwiseAbs().maxCoeff();
    });

    run_check(ctx, "eta-power-series-agreement", 1e-8,
              [&]() { return power_series_residual(EntangledFamily::Eta); });
    run_check(ctx, "xi-power-series-agreement", 1e-8,
              [&]() { return power_series_residual(EntangledFamily::Xi); });
}

// ---------------------------------------------------------------------------
// projectors
// ---------------------------------------------------------------------------

void ensure_eta_build(Ctx& ctx) {
    if (!ctx.eta_quad) {
        ctx.eta_quad = mu_from_eta_quadrature(ctx.grid(), ctx.quad_cutoff());
    }
}

void ensure_xi_build(Ctx& ctx) {
    if (!ctx.xi_quad) {
        ctx.xi_quad = mu_from_xi_quadrature(ctx.grid(), ctx.quad_cutoff());
    }
}

void suite_projectors(Ctx& ctx) {
    run_check(ctx, "bs-unitarity", 1e-10, [&]() {
        const BsParams params[] = {{M_PI / 4, 0.0}, {M_PI_2, M_PI_2}, {M_PI, -M_PI_2}, {2.0, 1.1}};
        double worst = 0.0;
        for (int d : {6, 12, 24}) {
            const Matrix id = Matrix::Identity(Eigen::Index(d) * d, Eigen::Index(d) * d);
            for (const auto& p : params) {
                const OperatorMatrix g = bs_generator(p, d);
                const double skew = (g.entries() + g.entries().adjoint()).cwiseAbs().maxCoeff();
                const Matrix u = matrix_exponential(g).entries();
                const double unit = (u.adjoint() * u - id).cwiseAbs().maxCoeff();
                worst = std::max({worst, skew, unit});
            }
        }
        return worst;
    });

    run_check(ctx, "bs-number-block-structure", 1e-12, [&]() {
        const int d = 12;
        const ModeIndexer idx(d);
        const Matrix u = beam_splitter({M_PI_2, 0.7}, d).entries();
        double worst = 0.0;
        for (int r = 0; r < idx.dim(); ++r) {
            for (int c = 0; c < idx.dim(); ++c) {
                if (idx.sector(r) != idx.sector(c)) {
                    worst = std::max(worst, std::abs(u(r, c)));
                }
            }
        }
        return worst;
    });

    run_check(ctx, "bs-transformation-relations", 1e-9, [&]() {
        const int d = 12;
        const int block = d - 2;
        const ModeIndexer idx(d);
        const Matrix a = embed(annihilation_matrix(d), Mode::A, d).entries();
        const Matrix b = embed(annihilation_matrix(d), Mode::B, d).entries();
        double worst = 0.0;
        for (double theta : {M_PI / 4, M_PI_2, M_PI}) {
            for (double phi : {0.0, M_PI_2, -M_PI_2}) {
                const Matrix u = beam_splitter({theta, phi}, d).entries();
                const double c = std::cos(0.5 * theta);
                const double s = std::sin(0.5 * theta);
                const Complex eip = std::exp(Complex(0.0, phi));
                const Matrix resid_a = u.adjoint() * a * u - (c * a + eip * s * b);
                const Matrix resid_b = u.adjoint() * b * u - (c * b - std::conj(eip) * s * a);
                for (int col = 0; col < idx.dim(); ++col) {
                    if (idx.sector(col) > block) continue;
                    worst = std::max({worst, resid_a.col(col).cwiseAbs().maxCoeff(),
                                      resid_b.col(col).cwiseAbs().maxCoeff()});
                }
            }
        }
        return worst;
    });

    run_check(ctx, "parity-coherent-vs-diagonal", 1e-6, [&]() {
        const int d = 8;
        ctx.parity_coh = parity_from_coherent_quadrature(QuadratureGrid(6.0, 0.05, 2), d);
        return compare_projectors(ctx.parity_coh->op, parity_op_single(d), 2 * d);
    });

    run_check(ctx, "conjugation-vs-fock", 1e-10, [&]() {
        const int d = 12;
        double worst = 0.0;
        for (double phi : {0.0, M_PI_2, -M_PI_2}) {
            const auto conj_build = mu_conjugation({M_PI_2, phi}, d);
            worst = std::max(worst, compare_projectors(conj_build.op, mu_fock(phi, d), d - 1));
        }
        return worst;
    });

    run_check(ctx, "eta-quadrature-vs-fock", 1e-6, [&]() {
        ensure_eta_build(ctx);
        return compare_projectors(ctx.eta_quad->op, mu_fock(-M_PI_2, ctx.quad_cutoff()), 6);
    });

    run_check(ctx, "xi-quadrature-vs-fock", 1e-6, [&]() {
        ensure_xi_build(ctx);
        return compare_projectors(ctx.xi_quad->op, mu_fock(M_PI_2, ctx.quad_cutoff()), 6);
    });

    run_check(ctx, "xi-vs-eta-transpose", 1e-6, [&]() {
        // mu_xi equals the entrywise transpose (= conjugate) of mu_eta: the
        // pair realizes phi = +pi/2 and -pi/2 of the same Hermitian family.
        ensure_eta_build(ctx);
        ensure_xi_build(ctx);
        const OperatorMatrix eta_t = OperatorMatrix::two_mode(
            ctx.quad_cutoff(), ctx.eta_quad->op.entries().transpose());
        return compare_projectors(ctx.xi_quad->op, eta_t, 6);
    });

    run_check(ctx, "coherent-quadrature-vs-swap", 1e-3, [&]() {
        const int d = 3;
        ctx.coherent_4d = mu_coherent_quadrature(QuadratureGrid(4.0, 0.1, 4), d);
        return compare_projectors(ctx.coherent_4d->op, mu_fock(0.0, d), 2 * d);
    });

    run_check(ctx, "projector-hermiticity-exact", 1e-10, [&]() {
        const int d = 12;
        double worst = parity_op(d).hermiticity_residual();
        for (double phi : {0.0, M_PI_2, -M_PI_2, 0.7}) {
            worst = std::max(worst, mu_fock(phi, d).hermiticity_residual());
            worst = std::max(worst, mu_conjugation({M_PI_2, phi}, d).report.hermiticity_residual);
        }
        worst = std::max(worst, mu_fock_eta_form(d).hermiticity_residual());
        worst = std::max(worst, mu_fock_xi_form(d).hermiticity_residual());
        return worst;
    });

    run_check(ctx, "projector-hermiticity-quadrature", 1e-6, [&]() {
        ensure_eta_build(ctx);
        ensure_xi_build(ctx);
        if (!ctx.parity_coh) {
            ctx.parity_coh = parity_from_coherent_quadrature(QuadratureGrid(6.0, 0.05, 2), 8);
        }
        if (!ctx.coherent_4d) {
            ctx.coherent_4d = mu_coherent_quadrature(QuadratureGrid(4.0, 0.1, 4), 3);
        }
        return std::max({ctx.eta_quad->report.hermiticity_residual,
                         ctx.xi_quad->report.hermiticity_residual,
                         ctx.parity_coh->report.hermiticity_residual,
                         ctx.coherent_4d->report.hermiticity_residual});
    });

    run_check(ctx, "fock-projector-involution", 1e-12, [&]() {
        const int d = 12;
        const Matrix id = Matrix::Identity(Eigen::Index(d) * d, Eigen::Index(d) * d);
        double worst = 0.0;
        for (double phi : {0.0, M_PI_2, -M_PI_2, 0.7, 2.1}) {
            const Matrix m = mu_fock(phi, d).entries();
            worst = std::max(worst, (m * m - id).cwiseAbs().maxCoeff());
        }
        return worst;
    });

    run_check(ctx, "fock-projector-spectrum", 1e-8, [&]() {
        const int d = 12;
        double worst = 0.0;
        for (double phi : {0.0, M_PI_2, -M_PI_2, 1.1}) {
            Eigen::SelfAdjointEigenSolver<Matrix> solver(mu_fock(phi, d).entries());
            for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
                worst = std::max(worst, std::abs(std::abs(solver.eigenvalues()[k]) - 1.0));
            }
        }
        return worst;
    });

    run_check(ctx, "coherent-element-vs-conjugation", 1e-6, [&]() {
        const int d = 25;
        Rng rng = ctx.rng(0x31);
        const BsParams configs[] = {{M_PI / 4, 0.4}, {M_PI / 3, -0.9}};
        double worst = 0.0;
        for (const auto& p : configs) {
            const auto mu = mu_conjugation(p, d);
            for (int k = 0; k < 10; ++k) {
                const Complex alpha = rng.box(-0.7, 0.7, -0.7, 0.7);
                const Complex beta = rng.box(-0.7, 0.7, -0.7, 0.7);
                const Complex alpha_p = rng.box(-0.7, 0.7, -0.7, 0.7);
                const Complex beta_p = rng.box(-0.7, 0.7, -0.7, 0.7);
                const Complex closed = mu_coherent_matrix_element(p, alpha, beta, alpha_p, beta_p);
                const TwoModeState ket =
                    product_state(coherent_state(alpha, d), coherent_state(beta, d));
                const TwoModeState bra =
                    product_state(coherent_state(alpha_p, d), coherent_state(beta_p, d));
                const Complex numeric = matrix_element(bra, mu.op, ket);
                worst = std::max(worst, std::abs(numeric - closed));
            }
        }
        return worst;
    });
}

// ---------------------------------------------------------------------------
// metrology
// ---------------------------------------------------------------------------

InterferometerSpec noon_spec(int photons, double phi, int cutoff) {
    InterferometerSpec spec;
    spec.input = "noon:" + std::to_string(photons);
    spec.phase = phi;
    spec.cutoff = cutoff;
    spec.detection.method = DetectionMethod::Fock;
    spec.detection.fock_phi = -M_PI_2;
    return spec;
}

const Matrix& bs1_30(Ctx& ctx) {
    if (!ctx.bs1_d30) ctx.bs1_d30 = bs1_symmetric_i(30).entries();
    return *ctx.bs1_d30;
}

double cs_sv_signal(Ctx& ctx, const Matrix& bs1, const OperatorMatrix& mu, Complex z, double r,
                    double phi, int cutoff) {
    const TwoModeState input =
        product_state(coherent_state(z, cutoff), squeezed_vacuum(r, cutoff));
    Vector amps = bs1 * input.amplitudes();
    const ModeIndexer idx(cutoff);
    for (int m = 0; m < cutoff; ++m) {
        for (int n = 0; n < cutoff; ++n) {
            amps[idx.flat(m, n)] *= std::exp(Complex(0.0, 0.5 * phi * double(m - n)));
        }
    }
    const Complex e = expectation(TwoModeState(cutoff, std::move(amps)), mu);
    ctx.max_imag_residual = std::max(ctx.max_imag_residual, std::abs(e.imag()));
    ctx.max_bound_excess = std::max(ctx.max_bound_excess, std::abs(e.real()) - 1.0);
    return e.real();
}

void suite_metrology(Ctx& ctx) {
    run_check(ctx, "noon-signal-vs-closed-form", 1e-8, [&]() {
        const int d = 12;
        const OperatorMatrix mu = mu_fock(-M_PI_2, d);
        double worst = 0.0;
        for (int photons = 1; photons <= 6; ++photons) {
            for (int k = 0; k < 50; ++k) {
                const double phi = 2.0 * M_PI * double(k) / 49.0;
                const auto sig = parity_signal_detailed(noon_spec(photons, phi, d), &mu);
                ctx.max_imag_residual = std::max(ctx.max_imag_residual, sig.imag_residual);
                ctx.max_bound_excess = std::max(ctx.max_bound_excess, std::abs(sig.value) - 1.0);
                const Complex closed = noon_parity_closed(photons, phi);
                worst = std::max(worst, std::abs(sig.value - closed.real()));
            }
        }
        return worst;
    });

    run_check(ctx, "cs-sv-signal-vs-closed-form", 1e-4, [&]() {
        const int d = 30;
        const OperatorMatrix mu = mu_fock(-M_PI_2, d);
        const Matrix& bs1 = bs1_30(ctx);
        double worst = 0.0;
        for (double zmag : {0.5, 1.0}) {
            for (double r : {0.2, 0.5}) {
                for (int k = 0; k < 20; ++k) {
                    const double phi = 2.0 * M_PI * double(k) / 19.0;
                    const double numeric =
                        cs_sv_signal(ctx, bs1, mu, Complex(zmag, 0.0), r, phi, d);
                    const double closed = cs_sv_parity_closed(Complex(zmag, 0.0), r, phi);
                    worst = std::max(worst, std::abs(numeric - closed));
                }
            }
        }
        return worst;
    });

    run_check(ctx, "noon-quadrature-expectation", 1e-6, [&]() {
        const int d = 12;
        double worst = 0.0;
        const double phis[] = {0.0, M_PI / 4, M_PI_2};
        for (int photons : {0, 1, 2}) {
            for (double phi : phis) {
                const double quad = noon_pipeline_check(photons, phi, d, ctx.grid());
                const double closed = noon_parity_closed(photons, phi).real();
                worst = std::max(worst, std::abs(quad - closed));
                if (photons == 0) break;  // single phase suffices for the degenerate case
            }
        }
        return worst;
    });

    run_check(ctx, "detection-route-independence", 1e-6, [&]() {
        const int d = 12;
        const OperatorMatrix mu_sum = mu_fock(-M_PI_2, d);
        const OperatorMatrix mu_conj = mu_conjugation({M_PI_2, -M_PI_2}, d).op;
        const OperatorMatrix mu_quad = mu_from_eta_quadrature(ctx.grid(), d).op;
        double worst = 0.0;
        for (const char* input : {"noon:3", "fock:2,1"}) {
            for (double phi : {0.3, 1.2, 2.5}) {
                InterferometerSpec spec;
                spec.input = input;
                spec.phase = phi;
                spec.cutoff = d;
                const double s1 = parity_signal_detailed(spec, &mu_sum).value;
                const double s2 = parity_signal_detailed(spec, &mu_conj).value;
                const double s3 = parity_signal_detailed(spec, &mu_quad).value;
                worst = std::max({worst, std::abs(s1 - s2), std::abs(s1 - s3),
                                  std::abs(s2 - s3)});
            }
        }
        return worst;
    });

    run_check(ctx, "noon-signal-periodicity", 1e-10, [&]() {
        const int d = 12;
        const OperatorMatrix mu = mu_fock(-M_PI_2, d);
        double worst = 0.0;
        for (int photons : {1, 2, 3}) {
            const double period = 2.0 * M_PI / photons;
            for (int k = 0; k < 10; ++k) {
                const double phi = period * double(k) / 10.0;
                const double s0 = parity_signal_detailed(noon_spec(photons, phi, d), &mu).value;
                const double s1 =
                    parity_signal_detailed(noon_spec(photons, phi + period, d), &mu).value;
                worst = std::max(worst, std::abs(s1 - s0));
            }
        }
        return worst;
    });

    run_check(ctx, "noon-sensitivity", 5e-3, [&]() {
        const int d = 12;
        const OperatorMatrix mu = mu_fock(-M_PI_2, d);
        const double h = 1e-4;
        double worst = 0.0;
        for (int photons = 1; photons <= 6; ++photons) {
            // Extremal-slope operating point: the signal is a pure sin/cos of
            // N*phi, so the sensitivity there is exactly 1/N.
            const double phi =
                (photons % 2 == 0) ? M_PI / (2.0 * photons) : M_PI / photons;
            const double s0 = parity_signal_detailed(noon_spec(photons, phi, d), &mu).value;
            const double sp = parity_signal_detailed(noon_spec(photons, phi + h, d), &mu).value;
            const double sm = parity_signal_detailed(noon_spec(photons, phi - h, d), &mu).value;
            const double slope = (sp - sm) / (2.0 * h);
            const double sens = std::sqrt(std::max(0.0, 1.0 - s0 * s0)) / std::abs(slope);
            worst = std::max(worst, std::abs(sens * photons - 1.0));
        }
        return worst;
    });

    run_check(ctx, "cs-sv-cutoff-convergence", 1e-6, [&]() {
        const Complex z(1.0, 0.0);
        const double r = 0.5;
        const OperatorMatrix mu30 = mu_fock(-M_PI_2, 30);
        const OperatorMatrix mu40 = mu_fock(-M_PI_2, 40);
        const Matrix& bs1_a = bs1_30(ctx);
        const Matrix bs1_b = bs1_symmetric_i(40).entries();
        double worst = 0.0;
        for (double phi : {0.6, 2.1}) {
            const double s30 = cs_sv_signal(ctx, bs1_a, mu30, z, r, phi, 30);
            const double s40 = cs_sv_signal(ctx, bs1_b, mu40, z, r, phi, 40);
            worst = std::max(worst, std::abs(s30 - s40));
        }
        return worst;
    });

    run_check(ctx, "signal-reality-and-bounds", 1e-8, [&]() {
        return std::max(ctx.max_imag_residual, std::max(0.0, ctx.max_bound_excess));
    });
}

}  // namespace

int VerifyReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

int VerifyReport::failed() const { return int(checks.size()) - passed(); }

bool VerifyReport::all_pass() const { return failed() == 0; }

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"gaussians", "hermite",   "states",
                                                   "projectors", "metrology", "all"};
    return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyConfig& cfg) {
    VerifyReport report;
    report.suite = suite;
    Ctx ctx(cfg, report);
    const auto t0 = Clock::now();
    if (suite == "gaussians") {
        suite_gaussians(ctx);
    } else if (suite == "hermite") {
        suite_hermite(ctx);
    } else if (suite == "states") {
        suite_states(ctx);
    } else if (suite == "projectors") {
        suite_projectors(ctx);
    } else if (suite == "metrology") {
        suite_metrology(ctx);
    } else if (suite == "all") {
        suite_gaussians(ctx);
        suite_hermite(ctx);
        suite_states(ctx);
        suite_projectors(ctx);
        suite_metrology(ctx);
    } else {
        throw std::invalid_argument("run_verify: unknown suite '" + suite + "'");
    }
    report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json j{{"name", c.name},
                         {"residual", c.residual},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass},
                         {"seconds", c.seconds}};
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    return {{"suite", report.suite},
            {"checks", checks},
            {"passed", report.passed()},
            {"failed", report.failed()},
            {"seconds", report.seconds}};
}

}  // namespace fockparity
