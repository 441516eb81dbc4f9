#include "fockparity/specs.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fockparity/states.hpp"

namespace fockparity {

namespace {

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& token, const std::string& context) {
    const std::string t = trimmed(token);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || t.empty()) {
        throw UsageError(context + ": bad number '" + token + "'");
    }
    return value;
}

int parse_int(const std::string& token, const std::string& context) {
    const std::string t = trimmed(token);
    int value = 0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || t.empty()) {
        throw UsageError(context + ": bad integer '" + token + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::vector<double> parse_angles(const std::string& args, std::size_t want,
                                 const std::string& context) {
    const auto parts = split(args, ',');
    if (parts.size() != want) {
        throw UsageError(context + ": expected " + std::to_string(want) + " arguments in '" +
                         args + "'");
    }
    std::vector<double> out;
    out.reserve(want);
    for (const auto& p : parts) out.push_back(parse_angle(p));
    return out;
}

}  // namespace

double parse_angle(const std::string& token) {
    std::string t = trimmed(token);
    if (t.empty()) throw UsageError("angle: empty token");
    double sign = 1.0;
    if (t[0] == '+' || t[0] == '-') {
        if (t[0] == '-') sign = -1.0;
        t = t.substr(1);
    }
    const auto pos = t.find("pi");
    if (pos == std::string::npos) {
        return sign * parse_number(t, "angle");
    }
    const std::string coef_str = t.substr(0, pos);
    const std::string rest = t.substr(pos + 2);
    const double coef = coef_str.empty() ? 1.0 : parse_number(coef_str, "angle");
    double denom = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') throw UsageError("angle: bad token '" + token + "'");
        denom = parse_number(rest.substr(1), "angle");
        if (denom == 0.0) throw UsageError("angle: zero denominator in '" + token + "'");
    }
    return sign * coef * M_PI / denom;
}

StateSpec parse_state_spec(const std::string& text) {
    const std::string t = trimmed(text);
    const auto colon = t.find(':');
    const std::string head = (colon == std::string::npos) ? t : t.substr(0, colon);
    const std::string args = (colon == std::string::npos) ? "" : t.substr(colon + 1);

    StateSpec s;
    if (head == "fock") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw UsageError("state-spec fock: expected 'fock:m,n', got '" + text + "'");
        s.kind = StateSpec::Kind::Fock;
        s.m = parse_int(parts[0], "state-spec fock");
        s.n = parse_int(parts[1], "state-spec fock");
    } else if (head == "noon") {
        s.kind = StateSpec::Kind::Noon;
        s.photons = parse_int(args, "state-spec noon");
    } else if (head == "coherent") {
        const auto parts = split(args, ',');
        if (parts.size() != 2)
            throw UsageError("state-spec coherent: expected 'coherent:re,im', got '" + text + "'");
        s.kind = StateSpec::Kind::Coherent;
        s.z = Complex(parse_number(parts[0], "state-spec coherent"),
                      parse_number(parts[1], "state-spec coherent"));
    } else if (head == "sqvac") {
        s.kind = StateSpec::Kind::SqVac;
        s.r = parse_number(args, "state-spec sqvac");
    } else if (head == "cs-sv") {
        const auto parts = split(args, ',');
        if (parts.size() != 3)
            throw UsageError("state-spec cs-sv: expected 'cs-sv:zre,zim,r', got '" + text + "'");
        s.kind = StateSpec::Kind::CsSv;
        s.z = Complex(parse_number(parts[0], "state-spec cs-sv"),
                      parse_number(parts[1], "state-spec cs-sv"));
        s.r = parse_number(parts[2], "state-spec cs-sv");
    } else {
        throw UsageError("state-spec: unknown kind '" + head + "'");
    }
    return s;
}

TwoModeState make_state(const StateSpec& spec, int cutoff) {
    switch (spec.kind) {
        case StateSpec::Kind::Fock:
            return fock_state(spec.m, spec.n, cutoff);
        case StateSpec::Kind::Noon:
            return noon_state(spec.photons, cutoff);
        case StateSpec::Kind::Coherent: {
            Vector vac = Vector::Zero(cutoff);
            vac[0] = 1.0;
            return product_state(coherent_state(spec.z, cutoff), vac);
        }
        case StateSpec::Kind::SqVac: {
            Vector vac = Vector::Zero(cutoff);
            vac[0] = 1.0;
            return product_state(squeezed_vacuum(spec.r, cutoff), vac);
        }
        case StateSpec::Kind::CsSv:
            return product_state(coherent_state(spec.z, cutoff), squeezed_vacuum(spec.r, cutoff));
    }
    throw UsageError("make_state: unknown state kind");
}

MethodSpec parse_method_spec(const std::string& text) {
    const std::string t = trimmed(text);
    const auto colon = t.find(':');
    const std::string head = (colon == std::string::npos) ? t : t.substr(0, colon);
    const std::string args = (colon == std::string::npos) ? "" : t.substr(colon + 1);

    MethodSpec m;
    if (head == "parity") {
        m.kind = MethodSpec::Kind::Parity;
    } else if (head == "parity-coherent") {
        m.kind = MethodSpec::Kind::ParityCoherent;
    } else if (head == "fock" || head == "fock-sum") {
        m.kind = MethodSpec::Kind::Fock;
        m.phi = args.empty() ? 0.0 : parse_angle(args);
    } else if (head == "fock-eta") {
        m.kind = MethodSpec::Kind::FockEta;
    } else if (head == "fock-xi") {
        m.kind = MethodSpec::Kind::FockXi;
    } else if (head == "conjugation") {
        m.kind = MethodSpec::Kind::Conjugation;
        const auto v = parse_angles(args, 2, "method conjugation");
        m.bs = {v[0], v[1]};
    } else if (head == "eta-quadrature") {
        m.kind = MethodSpec::Kind::EtaQuadrature;
    } else if (head == "xi-quadrature") {
        m.kind = MethodSpec::Kind::XiQuadrature;
    } else if (head == "coherent-quadrature") {
        m.kind = MethodSpec::Kind::CoherentQuadrature;
    } else if (head == "annihilation") {
        m.kind = MethodSpec::Kind::Annihilation;
    } else if (head == "bs") {
        m.kind = MethodSpec::Kind::BeamSplitter;
        const auto v = parse_angles(args, 2, "method bs");
        m.bs = {v[0], v[1]};
    } else if (head == "bs1-symmetric-i") {
        m.kind = MethodSpec::Kind::Bs1SymmetricI;
    } else if (head == "phase") {
        m.kind = MethodSpec::Kind::PhaseShifter;
        m.phi = parse_angle(args);
    } else {
        throw UsageError("method: unknown construction '" + head + "'");
    }
    return m;
}

ProjectorBuild build_method(const MethodSpec& spec, int cutoff, const QuadratureGrid& grid) {
    auto exact = [&](OperatorMatrix op, const char* name) -> ProjectorBuild {
        ProjectorBuildReport rep;
        rep.method = name;
        rep.cutoff = cutoff;
        rep.hermiticity_residual = op.hermiticity_residual();
        return {std::move(op), std::move(rep)};
    };
    switch (spec.kind) {
        case MethodSpec::Kind::Parity:
            return exact(parity_op(cutoff), "parity");
        case MethodSpec::Kind::ParityCoherent:
            return parity_from_coherent_quadrature(grid, cutoff);
        case MethodSpec::Kind::Fock:
            return exact(mu_fock(spec.phi, cutoff), "fock-sum");
        case MethodSpec::Kind::FockEta:
            return exact(mu_fock_eta_form(cutoff), "fock-eta");
        case MethodSpec::Kind::FockXi:
            return exact(mu_fock_xi_form(cutoff), "fock-xi");
        case MethodSpec::Kind::Conjugation:
            return mu_conjugation(spec.bs, cutoff);
        case MethodSpec::Kind::EtaQuadrature:
            return mu_from_eta_quadrature(grid, cutoff);
        case MethodSpec::Kind::XiQuadrature:
            return mu_from_xi_quadrature(grid, cutoff);
        case MethodSpec::Kind::CoherentQuadrature:
            return mu_coherent_quadrature(QuadratureGrid(grid.radius(), grid.step(), 4), cutoff);
        case MethodSpec::Kind::Annihilation:
            return exact(annihilation_matrix(cutoff), "annihilation");
        case MethodSpec::Kind::BeamSplitter:
            return exact(beam_splitter(spec.bs, cutoff), "bs");
        case MethodSpec::Kind::Bs1SymmetricI:
            return exact(bs1_symmetric_i(cutoff), "bs1-symmetric-i");
        case MethodSpec::Kind::PhaseShifter:
            return exact(phase_shifter(spec.phi, cutoff), "phase");
    }
    throw UsageError("build_method: unknown method kind");
}

DetectionSpec parse_detection_spec(const std::string& text, const QuadratureGrid& grid) {
    const std::string t = trimmed(text);
    const auto colon = t.find(':');
    const std::string head = (colon == std::string::npos) ? t : t.substr(0, colon);
    const std::string args = (colon == std::string::npos) ? "" : t.substr(colon + 1);

    DetectionSpec d;
    d.grid = grid;
    if (head == "fock") {
        d.method = DetectionMethod::Fock;
        d.fock_phi = args.empty() ? -M_PI_2 : parse_angle(args);
    } else if (head == "conjugation") {
        d.method = DetectionMethod::Conjugation;
        const auto v = parse_angles(args, 2, "detect conjugation");
        d.bs = {v[0], v[1]};
    } else if (head == "eta-quadrature") {
        d.method = DetectionMethod::EtaQuadrature;
    } else if (head == "xi-quadrature") {
        d.method = DetectionMethod::XiQuadrature;
    } else {
        throw UsageError("detect: unknown method '" + head + "'");
    }
    return d;
}

PhiRange parse_phi_range(const std::string& text) {
    const auto parts = split(trimmed(text), ':');
    if (parts.size() != 3) {
        throw UsageError("phi range: expected 'min:max:steps', got '" + text + "'");
    }
    PhiRange r;
    r.min = parse_angle(parts[0]);
    r.max = parse_angle(parts[1]);
    r.steps = parse_int(parts[2], "phi range steps");
    if (r.steps < 2) throw UsageError("phi range: steps must be >= 2");
    return r;
}

GridSpec parse_grid_spec(const std::string& text) {
    const auto parts = split(trimmed(text), ',');
    if (parts.size() != 2) {
        throw UsageError("grid: expected 'R,h', got '" + text + "'");
    }
    GridSpec g;
    g.radius = parse_number(parts[0], "grid radius");
    g.step = parse_number(parts[1], "grid step");
    return g;
}

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace fockparity
