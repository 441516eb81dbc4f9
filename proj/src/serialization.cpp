#include "fockparity/serialization.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fockparity {

namespace {

nlohmann::json entries_to_json(const Matrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            entries.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    return entries;
}

Complex entry_from_json(const nlohmann::json& e) {
    if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("json entry must be a [re, im] pair");
    }
    return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

nlohmann::json operator_to_json(const OperatorMatrix& op) {
    return {{"cutoff", op.cutoff()}, {"entries", entries_to_json(op.entries())}};
}

OperatorMatrix operator_from_json(const nlohmann::json& j) {
    const int cutoff = j.at("cutoff").get<int>();
    const auto& entries = j.at("entries");
    const Eigen::Index d1 = cutoff;
    const Eigen::Index d2 = Eigen::Index(cutoff) * cutoff;
    Eigen::Index dim;
    int modes;
    if (Eigen::Index(entries.size()) == d2 * d2) {
        dim = d2;
        modes = 2;
    } else if (Eigen::Index(entries.size()) == d1 * d1) {
        dim = d1;
        modes = 1;
    } else {
        throw std::invalid_argument("operator json: entry count matches neither d^2 nor d^4");
    }
    Matrix m(dim, dim);
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c, ++k) {
            m(r, c) = entry_from_json(entries[k]);
        }
    }
    return (modes == 2) ? OperatorMatrix::two_mode(cutoff, std::move(m))
                        : OperatorMatrix::single_mode(cutoff, std::move(m));
}

nlohmann::json state_to_json(const TwoModeState& state) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index k = 0; k < state.amplitudes().size(); ++k) {
        entries.push_back({state.amplitudes()[k].real(), state.amplitudes()[k].imag()});
    }
    return {{"cutoff", state.cutoff()}, {"entries", entries}};
}

TwoModeState state_from_json(const nlohmann::json& j) {
    const int cutoff = j.at("cutoff").get<int>();
    const auto& entries = j.at("entries");
    Vector amps(Eigen::Index(entries.size()));
    for (Eigen::Index k = 0; k < amps.size(); ++k) {
        amps[k] = entry_from_json(entries[k]);
    }
    return TwoModeState(cutoff, std::move(amps));
}

nlohmann::json report_to_json(const ProjectorBuildReport& rep) {
    nlohmann::json j{{"method", rep.method},
                     {"cutoff", rep.cutoff},
                     {"hermiticity_residual", rep.hermiticity_residual},
                     {"seconds", rep.seconds}};
    if (rep.grid_radius > 0.0) {
        j["grid"] = {{"radius", rep.grid_radius}, {"step", rep.grid_step}};
        j["grid_warning"] = rep.grid_warning;
    }
    if (rep.convergence_checked) {
        j["convergence_delta"] = rep.convergence_delta;
    }
    return j;
}

}  // namespace fockparity
