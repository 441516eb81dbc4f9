#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace fockparity {

struct VerifyCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
    std::string note;  // failure detail when a check aborted
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    double seconds = 0.0;

    int passed() const;
    int failed() const;
    bool all_pass() const;
};

/// Knobs shared by the verification suites.  `cutoff` overrides the cutoff
/// of the entangled-quadrature equivalence checks (default 16); tolerances
/// can be overridden per check name.  Randomized checks draw from a fixed
/// seed, so reports are reproducible.
struct VerifyConfig {
    double grid_radius = 7.0;
    double grid_step = 0.05;
    int cutoff = 0;  // 0 = per-check defaults
    std::map<std::string, double> tolerance_overrides;
    std::uint64_t seed = 0x66b2c5f1d0a3e917ULL;
};

/// Suites: gaussians, hermite, states, projectors, metrology, all.
VerifyReport run_verify(const std::string& suite, const VerifyConfig& cfg);

const std::vector<std::string>& verify_suite_names();

nlohmann::json verify_report_to_json(const VerifyReport& report);

}  // namespace fockparity
