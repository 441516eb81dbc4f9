#pragma once

#include <stdexcept>
#include <string>

#include "fockparity/algebra.hpp"
#include "fockparity/metrology.hpp"
#include "fockparity/projectors.hpp"

namespace fockparity {

/// Malformed command-line token; the CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses an angle given as decimal radians or as a pi token:
/// "pi", "-pi/2", "pi/2", "pi/4", "2pi", "0.5pi", ...
double parse_angle(const std::string& token);

/// Parsed state-spec string.  Grammar:
///   fock:m,n | noon:N | coherent:re,im | sqvac:r | cs-sv:zre,zim,r
/// "coherent" puts the coherent state in mode a (vacuum in b); "sqvac" puts
/// the squeezed vacuum in mode a; "cs-sv" is coherent in a, squeezed vacuum
/// in b.
struct StateSpec {
    enum class Kind { Fock, Noon, Coherent, SqVac, CsSv };
    Kind kind = Kind::Fock;
    int m = 0;
    int n = 0;
    int photons = 0;
    Complex z;
    double r = 0.0;
};

StateSpec parse_state_spec(const std::string& text);
TwoModeState make_state(const StateSpec& spec, int cutoff);

/// Projector construction route named on the command line:
///   parity | parity-coherent | fock:phi | fock-eta | fock-xi |
///   conjugation:theta,phi | eta-quadrature | xi-quadrature |
///   coherent-quadrature | bs:theta,phi | bs1-symmetric-i | phase:phi
struct MethodSpec {
    enum class Kind {
        Parity,
        ParityCoherent,
        Fock,
        FockEta,
        FockXi,
        Conjugation,
        EtaQuadrature,
        XiQuadrature,
        CoherentQuadrature,
        Annihilation,
        BeamSplitter,
        Bs1SymmetricI,
        PhaseShifter,
    };
    Kind kind = Kind::Fock;
    double phi = 0.0;
    BsParams bs;
};

MethodSpec parse_method_spec(const std::string& text);

/// Builds the operator named by a MethodSpec.  `grid` backs the quadrature
/// routes (reinterpreted as 4-D for the coherent route).
ProjectorBuild build_method(const MethodSpec& spec, int cutoff, const QuadratureGrid& grid);

/// Detection tag: fock:phi | conjugation:theta,phi | eta-quadrature | xi-quadrature.
DetectionSpec parse_detection_spec(const std::string& text, const QuadratureGrid& grid);

struct PhiRange {
    double min = 0.0;
    double max = 0.0;
    int steps = 0;
};

/// "min:max:steps" with angle tokens allowed for min/max.
PhiRange parse_phi_range(const std::string& text);

struct GridSpec {
    double radius = 7.0;
    double step = 0.05;
};

/// "R,h"
GridSpec parse_grid_spec(const std::string& text);

/// Shortest of 17-significant-digit formatting; byte-stable across runs.
std::string format_g17(double x);

}  // namespace fockparity
