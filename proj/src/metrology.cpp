#include "fockparity/metrology.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fockparity/specs.hpp"
#include "fockparity/states.hpp"

namespace fockparity {

namespace {

constexpr double kNormDeficitTol = 1e-8;
constexpr double kSensitivityStep = 1e-4;  // rad, central difference

Vector phase_shifted(const Vector& amps, double phi, int cutoff) {
    const ModeIndexer idx(cutoff);
    Vector out(amps.size());
    for (int m = 0; m < cutoff; ++m) {
        for (int n = 0; n < cutoff; ++n) {
            const int k = idx.flat(m, n);
            out[k] = amps[k] * std::exp(Complex(0.0, 0.5 * phi * double(m - n)));
        }
    }
    return out;
}

TwoModeState checked_input(const InterferometerSpec& spec) {
    TwoModeState in = make_state(parse_state_spec(spec.input), spec.cutoff);
    const double deficit = 1.0 - in.amplitudes().squaredNorm();
    if (deficit > kNormDeficitTol) {
        std::ostringstream os;
        os << "parity_signal: input '" << spec.input << "' has truncation norm deficit " << deficit
           << " > 1e-8 at cutoff " << spec.cutoff << "; increase the cutoff";
        throw std::runtime_error(os.str());
    }
    return in;
}

TwoModeState apply_bs1(const Bs1Spec& bs1, const TwoModeState& in) {
    switch (bs1.kind) {
        case Bs1Kind::None:
            return in;
        case Bs1Kind::SymmetricI:
            return apply(bs1_symmetric_i(in.cutoff()), in);
        case Bs1Kind::General:
            return apply(beam_splitter(bs1.params, in.cutoff()), in);
    }
    throw std::logic_error("apply_bs1: unknown kind");
}

}  // namespace

OperatorMatrix phase_shifter(double phi, int cutoff) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase_shifter: non-finite phi");
    }
    const ModeIndexer idx(cutoff);
    Matrix m = Matrix::Zero(idx.dim(), idx.dim());
    for (int mm = 0; mm < cutoff; ++mm) {
        for (int nn = 0; nn < cutoff; ++nn) {
            const int k = idx.flat(mm, nn);
            m(k, k) = std::exp(Complex(0.0, 0.5 * phi * double(mm - nn)));
        }
    }
    return OperatorMatrix::two_mode(cutoff, std::move(m));
}

OperatorMatrix bs1_symmetric_i(int cutoff) {
    const Matrix a = embed(annihilation_matrix(cutoff), Mode::A, cutoff).entries();
    const Matrix b = embed(annihilation_matrix(cutoff), Mode::B, cutoff).entries();
    Matrix g = Complex(0.0, M_PI / 4.0) * (a.adjoint() * b + a * b.adjoint());
    return matrix_exponential(OperatorMatrix::two_mode(cutoff, std::move(g)));
}

OperatorMatrix build_detector(const DetectionSpec& det, int cutoff) {
    switch (det.method) {
        case DetectionMethod::Fock:
            return mu_fock(det.fock_phi, cutoff);
        case DetectionMethod::Conjugation:
            return mu_conjugation(det.bs, cutoff).op;
        case DetectionMethod::EtaQuadrature:
            return mu_from_eta_quadrature(det.grid, cutoff).op;
        case DetectionMethod::XiQuadrature:
            return mu_from_xi_quadrature(det.grid, cutoff).op;
    }
    throw std::logic_error("build_detector: unknown method");
}

SignalResult parity_signal_detailed(const InterferometerSpec& spec,
                                    const OperatorMatrix* detector) {
    TwoModeState st = apply_bs1(spec.bs1, checked_input(spec));
    st = TwoModeState(spec.cutoff, phase_shifted(st.amplitudes(), spec.phase, spec.cutoff));

    std::optional<OperatorMatrix> built;
    if (!detector) built.emplace(build_detector(spec.detection, spec.cutoff));
    const OperatorMatrix& mu = detector ? *detector : *built;
    if (mu.modes() != 2 || mu.cutoff() != spec.cutoff) {
        throw std::invalid_argument("parity_signal: detector cutoff mismatch");
    }
    const Complex e = expectation(st, mu);
    return {e.real(), std::abs(e.imag())};
}

double parity_signal(const InterferometerSpec& spec) {
    return parity_signal_detailed(spec).value;
}

Complex noon_parity_closed(int photons, double phi) {
    if (photons < 0) {
        throw std::invalid_argument("noon_parity_closed: photon number must be >= 0");
    }
    static constexpr Complex i_powers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const Complex i_pow_n = i_powers[photons % 4];
    const double sign = (photons % 2 == 0) ? 1.0 : -1.0;
    return 0.5 * i_pow_n *
           (std::exp(Complex(0.0, photons * phi)) + sign * std::exp(Complex(0.0, -photons * phi)));
}

double cs_sv_parity_closed(Complex z, double r, double phi) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(r) ||
        !std::isfinite(phi)) {
        throw std::invalid_argument("cs_sv_parity_closed: non-finite argument");
    }
    const double s2 = std::sin(phi) * std::sin(phi);
    const double sh = std::sinh(r);
    const double denom = 1.0 + sh * sh * s2;
    const double num = 2.0 * (std::cos(phi) - 1.0 - sh * sh * s2) * std::norm(z) -
                       std::sinh(2.0 * r) * s2 * (z * z).real();
    return std::exp(num / (2.0 * denom)) / std::sqrt(denom);
}

double noon_pipeline_check(int photons, double phi, int cutoff, const QuadratureGrid& grid) {
    if (grid.dimension() != 2) {
        throw std::invalid_argument("noon_pipeline_check: needs a 2-D grid");
    }
    const ModeIndexer idx(cutoff);
    TwoModeState psi(cutoff,
                     phase_shifted(noon_state(photons, cutoff).amplitudes(), phi, cutoff));
    const Vector& amps = psi.amplitudes();

    const auto xs = grid.axis();
    const int n = grid.points_per_axis();
    const auto isf = detail::inv_sqrt_factorials(cutoff);
    std::vector<Complex> ket(idx.dim()), bra_src(idx.dim()), scratch(idx.dim());

    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            detail::entangled_fill(ket, scratch, xs[i], xs[j], cutoff,
                                   EntangledFamily::Eta, isf.data());
            detail::entangled_fill(bra_src, scratch, xs[j], xs[i], cutoff,
                                   EntangledFamily::Eta, isf.data());
            Complex left(0.0, 0.0), right(0.0, 0.0);
            for (Eigen::Index k = 0; k < amps.size(); ++k) {
                left += std::conj(amps[k]) * ket[k];
                right += std::conj(bra_src[k]) * amps[k];
            }
            acc += left * right;
        }
    }
    acc *= grid.step() * grid.step() / M_PI;

    const Complex matrix_value = expectation(psi, mu_fock_eta_form(cutoff));
    if (std::abs(acc - matrix_value) > 1e-6) {
        std::ostringstream os;
        os << "noon_pipeline_check: quadrature value " << acc << " and projector value "
           << matrix_value << " disagree beyond 1e-6";
        throw std::runtime_error(os.str());
    }
    return acc.real();
}

SweepResult phase_sweep(const InterferometerSpec& spec, double phi_min, double phi_max,
                        int steps) {
    if (steps < 2) {
        throw std::invalid_argument("phase_sweep: steps must be >= 2");
    }
    const StateSpec in_spec = parse_state_spec(spec.input);
    const TwoModeState post_bs1 = apply_bs1(spec.bs1, checked_input(spec));
    const OperatorMatrix mu = build_detector(spec.detection, spec.cutoff);

    auto signal_at = [&](double phi) -> SignalResult {
        TwoModeState st(spec.cutoff, phase_shifted(post_bs1.amplitudes(), phi, spec.cutoff));
        const Complex e = expectation(st, mu);
        return {e.real(), std::abs(e.imag())};
    };
    auto closed_at = [&](double phi) -> std::optional<double> {
        switch (in_spec.kind) {
            case StateSpec::Kind::Noon:
                return noon_parity_closed(in_spec.photons, phi).real();
            case StateSpec::Kind::CsSv:
                return cs_sv_parity_closed(in_spec.z, in_spec.r, phi);
            default:
                return std::nullopt;
        }
    };

    SweepResult out;
    out.rows.reserve(steps);
    const double span = phi_max - phi_min;
    for (int k = 0; k < steps; ++k) {
        SweepRow row;
        row.phi = phi_min + span * double(k) / double(steps - 1);
        const SignalResult sig = signal_at(row.phi);
        row.signal = sig.value;
        if (std::abs(row.signal) > 1.0 + 1e-8) {
            throw std::logic_error("phase_sweep: signal escaped [-1, 1]");
        }
        row.closed_form = closed_at(row.phi);
        if (row.closed_form) {
            row.abs_err = std::abs(row.signal - *row.closed_form);
        }
        const double sp = signal_at(row.phi + kSensitivityStep).value;
        const double sm = signal_at(row.phi - kSensitivityStep).value;
        const double slope = (sp - sm) / (2.0 * kSensitivityStep);
        const double variance = std::max(0.0, 1.0 - row.signal * row.signal);
        row.sensitivity = (slope == 0.0) ? std::numeric_limits<double>::infinity()
                                         : std::sqrt(variance) / std::abs(slope);
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace fockparity
