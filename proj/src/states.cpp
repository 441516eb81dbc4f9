#include "fockparity/states.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "fockparity/hermite.hpp"

namespace fockparity {

namespace detail {

std::vector<double> inv_sqrt_factorials(int count) {
    std::vector<double> v(count);
    double fact = 1.0;
    for (int k = 0; k < count; ++k) {
        if (k > 0) fact *= double(k);
        v[k] = 1.0 / std::sqrt(fact);
    }
    return v;
}

void entangled_fill(std::span<Complex> out, std::span<Complex> scratch, double x, double y,
                    int cutoff, EntangledFamily family, const double* inv_sqrt_fact) {
    const Complex z(x, y);
    hermite_fill(scratch, cutoff - 1, cutoff - 1, z, std::conj(z));
    const double pref = std::exp(-0.5 * (x * x + y * y));
    for (int m = 0; m < cutoff; ++m) {
        const double fm = pref * inv_sqrt_fact[m];
        for (int n = 0; n < cutoff; ++n) {
            double f = fm * inv_sqrt_fact[n];
            if (family == EntangledFamily::Eta && (n & 1)) f = -f;
            out[std::size_t(m) * cutoff + n] = f * scratch[std::size_t(m) * cutoff + n];
        }
    }
}

void coherent_fill(std::span<Complex> out, Complex alpha, int cutoff) {
    out[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < cutoff; ++n) {
        out[n] = out[n - 1] * alpha / std::sqrt(double(n));
    }
}

}  // namespace detail

TwoModeState fock_state(int m, int n, int cutoff) {
    ModeIndexer idx(cutoff);
    if (m < 0 || n < 0 || m >= cutoff || n >= cutoff) {
        throw std::invalid_argument("fock_state: photon number exceeds cutoff");
    }
    Vector amps = Vector::Zero(idx.dim());
    amps[idx.flat(m, n)] = 1.0;
    return TwoModeState(cutoff, std::move(amps));
}

Vector coherent_state(Complex alpha, int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("coherent_state: cutoff must be >= 1");
    }
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw std::invalid_argument("coherent_state: non-finite alpha");
    }
    if (std::norm(alpha) > 0.25 * cutoff) {
        static bool warned = false;
        if (!warned) {
            warned = true;
            std::cerr << "fockparity: coherent_state |alpha|^2 > cutoff/4, truncation may be poor"
                         " (further warnings suppressed)\n";
        }
    }
    Vector amps(cutoff);
    detail::coherent_fill(std::span<Complex>(amps.data(), cutoff), alpha, cutoff);
    return amps;
}

Vector squeezed_vacuum(double r, int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("squeezed_vacuum: cutoff must be >= 1");
    }
    if (!std::isfinite(r)) {
        throw std::invalid_argument("squeezed_vacuum: non-finite r");
    }
    Vector amps = Vector::Zero(cutoff);
    const double t = std::tanh(r);
    // c_{2k} = sech(r)^{1/2} (-t)^k sqrt((2k)!)/(2^k k!), built iteratively:
    // c_{2(k+1)} = c_{2k} * (-t) * sqrt((2k+1)(2k+2)) / (2(k+1)).
    double c = std::sqrt(1.0 / std::cosh(r));
    amps[0] = c;
    for (int k = 0; 2 * (k + 1) < cutoff; ++k) {
        c *= -t * std::sqrt(double(2 * k + 1) * double(2 * k + 2)) / (2.0 * (k + 1));
        amps[2 * (k + 1)] = c;
    }
    return amps;
}

TwoModeState noon_state(int photons, int cutoff) {
    ModeIndexer idx(cutoff);
    if (photons < 0 || photons >= cutoff) {
        throw std::invalid_argument("noon_state: photon number exceeds cutoff");
    }
    Vector amps = Vector::Zero(idx.dim());
    if (photons == 0) {
        std::cerr << "fockparity: noon_state with N=0 degenerates to |0,0>\n";
        amps[0] = 1.0;
    } else {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        amps[idx.flat(photons, 0)] = inv_sqrt2;
        amps[idx.flat(0, photons)] = inv_sqrt2;
    }
    return TwoModeState(cutoff, std::move(amps));
}

TwoModeState product_state(const Vector& a, const Vector& b) {
    if (a.size() != b.size() || a.size() < 1) {
        throw std::invalid_argument("product_state: mode vectors must have equal nonzero length");
    }
    const int d = int(a.size());
    Vector amps(Eigen::Index(d) * d);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            amps[Eigen::Index(m) * d + n] = a[m] * b[n];
        }
    }
    return TwoModeState(d, std::move(amps));
}

namespace {

TwoModeState entangled_state(double x, double y, int cutoff, EntangledFamily family) {
    ModeIndexer idx(cutoff);
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("entangled state: non-finite eigenvalue");
    }
    const auto isf = detail::inv_sqrt_factorials(cutoff);
    Vector amps(idx.dim());
    std::vector<Complex> scratch(idx.dim());
    detail::entangled_fill(std::span<Complex>(amps.data(), std::size_t(idx.dim())), scratch, x, y,
                           cutoff, family, isf.data());
    return TwoModeState(cutoff, std::move(amps));
}

}  // namespace

TwoModeState eta_state(const EtaParams& p, int cutoff) {
    return entangled_state(p.eta1, p.eta2, cutoff, EntangledFamily::Eta);
}

TwoModeState xi_state(const XiParams& p, int cutoff) {
    return entangled_state(p.xi1, p.xi2, cutoff, EntangledFamily::Xi);
}

}  // namespace fockparity
