// Acceptance suite: runs the full verification battery at the documented
// default parameters and reports one line per acceptance criterion, with
// wall-time budgets enforced where a criterion carries one.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "fockparity/verify.hpp"

namespace {

using fockparity::VerifyCheck;

struct Criterion {
    int number;
    std::string label;
    std::vector<std::string> checks;
    double time_budget_s;  // 0 = no budget
};

}  // namespace

int main() {
    fockparity::VerifyConfig cfg;  // documented defaults: R=7, h=0.05, d=16 quadratures
    const fockparity::VerifyReport report = fockparity::run_verify("all", cfg);

    std::map<std::string, const VerifyCheck*> by_name;
    for (const auto& c : report.checks) by_name[c.name] = &c;

    const std::vector<Criterion> criteria = {
        {1, "eta-quadrature projector equals fock sum at phi=-pi/2 (block m+n<=6)",
         {"eta-quadrature-vs-fock"}, 60.0},
        {2, "xi-quadrature projector equals fock sum at phi=+pi/2 (block m+n<=6)",
         {"xi-quadrature-vs-fock"}, 0.0},
        {3, "conjugation route equals fock sum on exact sectors (d=12, phi=0,+-pi/2)",
         {"conjugation-vs-fock"}, 5.0},
        {4, "4-D coherent quadrature equals the swap operator (d=3)",
         {"coherent-quadrature-vs-swap"}, 300.0},
        {5, "coherent-integral parity equals diagonal parity (d=8)",
         {"parity-coherent-vs-diagonal"}, 0.0},
        {6, "NOON pipeline matches the closed-form signal (N=1..6, 50 points, d=12)",
         {"noon-signal-vs-closed-form"}, 0.0},
        {7, "coherent x squeezed-vacuum pipeline matches the closed form (d=30)",
         {"cs-sv-signal-vs-closed-form"}, 120.0},
        {8, "Gaussian integral closed forms vs quadrature (50 draws each)",
         {"gauss1d-closed-vs-quadrature", "gauss2d-closed-vs-quadrature",
          "gauss2d-general-closed-vs-quadrature"}, 0.0},
        {9, "Hermite recurrence vs generating-function expansion (m,n<=6)",
         {"hermite-recurrence-vs-expansion"}, 0.0},
        {10, "every projector construction is Hermitian",
         {"projector-hermiticity-exact", "projector-hermiticity-quadrature"}, 0.0},
        {11, "entangled-state completeness resolves the identity (d=10, block m+n<=6)",
         {"eta-completeness-identity", "xi-completeness-identity"}, 0.0},
        {12, "property suite green under verify --suite all",
         {"bs-unitarity", "bs-number-block-structure", "bs-transformation-relations",
          "xi-vs-eta-transpose", "fock-projector-involution", "fock-projector-spectrum",
          "coherent-element-vs-conjugation", "eta-eigenvector-relations",
          "xi-eigenvector-relations", "squeezed-vacuum-integral-overlap",
          "eta-power-series-agreement", "xi-power-series-agreement",
          "gauss2d-general-branch-continuity", "noon-quadrature-expectation",
          "detection-route-independence", "noon-signal-periodicity", "noon-sensitivity",
          "cs-sv-cutoff-convergence", "signal-reality-and-bounds"}, 600.0},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        bool pass = true;
        double residual = 0.0;
        double tolerance = 0.0;
        double seconds = 0.0;
        std::string missing;
        for (const auto& name : crit.checks) {
            const auto it = by_name.find(name);
            if (it == by_name.end()) {
                pass = false;
                missing = name;
                continue;
            }
            const VerifyCheck& c = *it->second;
            pass = pass && c.pass;
            seconds += c.seconds;
            if (c.residual > residual) {
                residual = c.residual;
                tolerance = c.tolerance;
            }
        }
        const double budget = (crit.number == 12) ? report.seconds : seconds;
        const bool in_budget = (crit.time_budget_s == 0.0) || (budget <= crit.time_budget_s);
        pass = pass && in_budget;
        if (!pass) ++failures;

        std::printf("criterion %2d [%s] %s\n", crit.number, pass ? "PASS" : "FAIL",
                    crit.label.c_str());
        std::printf("              worst residual %.3e (tol %.0e), %.1fs", residual, tolerance,
                    budget);
        if (crit.time_budget_s > 0.0) {
            std::printf(" (budget %.0fs%s)", crit.time_budget_s,
                        in_budget ? "" : " EXCEEDED");
        }
        if (!missing.empty()) std::printf("  MISSING CHECK %s", missing.c_str());
        std::printf("\n");
    }

    std::printf("\nacceptance: %d/%zu criteria passed, %d/%zu checks, %.1fs total\n",
                int(criteria.size()) - failures, criteria.size(), report.passed(),
                report.checks.size(), report.seconds);
    return failures == 0 ? 0 : 1;
}
