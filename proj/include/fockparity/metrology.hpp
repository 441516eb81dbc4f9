#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockparity/algebra.hpp"
#include "fockparity/projectors.hpp"
#include "fockparity/quadrature.hpp"

namespace fockparity {

enum class Bs1Kind { None, SymmetricI, General };

struct Bs1Spec {
    Bs1Kind kind = Bs1Kind::None;
    BsParams params;  // used when kind == General
};

enum class DetectionMethod { Fock, Conjugation, EtaQuadrature, XiQuadrature };

/// How the detection projector is built.  The Fock route takes the splitter
/// phase; conjugation takes (theta, phi); the quadrature routes take a grid.
struct DetectionSpec {
    DetectionMethod method = DetectionMethod::Fock;
    double fock_phi = -M_PI_2;
    BsParams bs{M_PI_2, 0.0};
    QuadratureGrid grid{7.0, 0.05, 2};
};

/// One interferometer run: input state, optional first splitter, phase
/// shift, parity detection through the chosen projector route.
struct InterferometerSpec {
    std::string input;  // state-spec string, e.g. "noon:2" or "cs-sv:0.8,0,0.4"
    Bs1Spec bs1;
    double phase = 0.0;
    DetectionSpec detection;
    int cutoff = 12;
};

struct SweepRow {
    double phi = 0.0;
    double signal = 0.0;
    std::optional<double> closed_form;
    std::optional<double> abs_err;
    std::optional<double> sensitivity;
};

/// Table of (phi, numeric signal, closed form when available, abs error,
/// phase sensitivity) rows over a uniform phi grid.
struct SweepResult {
    std::vector<SweepRow> rows;
};

/// Two-arm phase shifter, diagonal e^{i phi (m - n)/2}.
OperatorMatrix phase_shifter(double phi, int cutoff);

/// First beam splitter in the symmetric convention exp[i pi (a^dag b + a b^dag)/4].
/// Differs from beam_splitter({pi/2, 0}) by the factor i inside the generator.
OperatorMatrix bs1_symmetric_i(int cutoff);

OperatorMatrix build_detector(const DetectionSpec& det, int cutoff);

struct SignalResult {
    double value = 0.0;
    double imag_residual = 0.0;
};

/// Full pipeline expectation.  Throws if the input state's truncation norm
/// deficit exceeds 1e-8 (increase the cutoff).  A prebuilt detector can be
/// supplied to amortize projector construction across many calls.
SignalResult parity_signal_detailed(const InterferometerSpec& spec,
                                    const OperatorMatrix* detector = nullptr);

double parity_signal(const InterferometerSpec& spec);

/// Closed-form NOON-state parity signal (i^N/2)[e^{i N phi} + (-1)^N e^{-i N phi}];
/// real for every N, returned as a complex value whose caller takes the real part.
Complex noon_parity_closed(int photons, double phi);

/// Closed-form coherent (x) squeezed-vacuum parity signal.
double cs_sv_parity_closed(Complex z, double r, double phi);

/// Evaluates the NOON expectation both as the entangled-state overlap
/// quadrature  int d(eta1) d(eta2)/pi <psi|eta1+i eta2><eta2+i eta1|psi>
/// and through the Fock-sum projector; throws if they disagree beyond 1e-6.
/// Returns the quadrature value.
double noon_pipeline_check(int photons, double phi, int cutoff,
                           const QuadratureGrid& grid = QuadratureGrid(7.0, 0.05, 2));

/// Inclusive uniform sweep of the interferometer phase.  The closed-form
/// column is attached for "noon:N" and "cs-sv:..." inputs; sensitivity is
/// sqrt(1 - <P>^2)/|d<P>/dphi| with a central difference of step 1e-4 rad.
SweepResult phase_sweep(const InterferometerSpec& spec, double phi_min, double phi_max, int steps);

}  // namespace fockparity
