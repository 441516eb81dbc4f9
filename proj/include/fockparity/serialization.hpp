#pragma once

#include <nlohmann/json_fwd.hpp>

#include "fockparity/algebra.hpp"
#include "fockparity/projectors.hpp"

namespace fockparity {

/// JSON schema for operators and states: {"cutoff": d, "entries": [[re, im], ...]}
/// with entries flattened row-major.  A d x d entry list is read back as a
/// single-mode operator, a d^2 x d^2 one as two-mode.
nlohmann::json operator_to_json(const OperatorMatrix& op);
OperatorMatrix operator_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const TwoModeState& state);
TwoModeState state_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ProjectorBuildReport& rep);

}  // namespace fockparity
