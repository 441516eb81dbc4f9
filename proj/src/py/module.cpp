#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "fockparity/hermite.hpp"
#include "fockparity/metrology.hpp"
#include "fockparity/projectors.hpp"
#include "fockparity/specs.hpp"
#include "fockparity/states.hpp"
#include "fockparity/verify.hpp"

namespace py = pybind11;
using namespace fockparity;

namespace {

QuadratureGrid grid2(double radius, double step) { return QuadratureGrid(radius, step, 2); }

InterferometerSpec make_spec(const std::string& input, double phase, int cutoff,
                             const std::string& bs1, const std::string& detect, double radius,
                             double step) {
    InterferometerSpec spec;
    spec.input = input;
    spec.phase = phase;
    spec.cutoff = cutoff;
    spec.detection = parse_detection_spec(detect, grid2(radius, step));
    if (bs1 == "none") {
        spec.bs1.kind = Bs1Kind::None;
    } else if (bs1 == "symmetric-i") {
        spec.bs1.kind = Bs1Kind::SymmetricI;
    } else {
        const auto m = parse_method_spec("bs:" + bs1);
        spec.bs1.kind = Bs1Kind::General;
        spec.bs1.params = m.bs;
    }
    return spec;
}

OperatorMatrix wrap_operator(const Matrix& m, int cutoff) {
    if (m.rows() == cutoff) return OperatorMatrix::single_mode(cutoff, m);
    return OperatorMatrix::two_mode(cutoff, m);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-mode Fock-space toolkit: entangled-state projection operators and "
              "parity-measurement interferometry.";

    // states
    m.def("fock_state", [](int mm, int nn, int cutoff) {
        return fock_state(mm, nn, cutoff).amplitudes();
    }, py::arg("m"), py::arg("n"), py::arg("cutoff"));
    m.def("coherent_state", &coherent_state, py::arg("alpha"), py::arg("cutoff"));
    m.def("squeezed_vacuum", &squeezed_vacuum, py::arg("r"), py::arg("cutoff"));
    m.def("noon_state", [](int photons, int cutoff) {
        return noon_state(photons, cutoff).amplitudes();
    }, py::arg("photons"), py::arg("cutoff"));
    m.def("eta_state", [](double eta1, double eta2, int cutoff) {
        return eta_state({eta1, eta2}, cutoff).amplitudes();
    }, py::arg("eta1"), py::arg("eta2"), py::arg("cutoff"));
    m.def("xi_state", [](double xi1, double xi2, int cutoff) {
        return xi_state({xi1, xi2}, cutoff).amplitudes();
    }, py::arg("xi1"), py::arg("xi2"), py::arg("cutoff"));
    m.def("hermite_mn", &hermite_mn, py::arg("m"), py::arg("n"), py::arg("xi"), py::arg("eta"));

    // operators
    m.def("annihilation_matrix", [](int cutoff) { return annihilation_matrix(cutoff).entries(); },
          py::arg("cutoff"));
    m.def("parity_op", [](int cutoff) { return parity_op(cutoff).entries(); }, py::arg("cutoff"));
    m.def("beam_splitter", [](double theta, double phi, int cutoff) {
        return beam_splitter({theta, phi}, cutoff).entries();
    }, py::arg("theta"), py::arg("phi"), py::arg("cutoff"));
    m.def("bs1_symmetric_i", [](int cutoff) { return bs1_symmetric_i(cutoff).entries(); },
          py::arg("cutoff"));
    m.def("phase_shifter", [](double phi, int cutoff) { return phase_shifter(phi, cutoff).entries(); },
          py::arg("phi"), py::arg("cutoff"));
    m.def("mu_fock", [](double phi, int cutoff) { return mu_fock(phi, cutoff).entries(); },
          py::arg("phi"), py::arg("cutoff"));
    m.def("mu_fock_eta_form", [](int cutoff) { return mu_fock_eta_form(cutoff).entries(); },
          py::arg("cutoff"));
    m.def("mu_fock_xi_form", [](int cutoff) { return mu_fock_xi_form(cutoff).entries(); },
          py::arg("cutoff"));
    m.def("mu_conjugation", [](double theta, double phi, int cutoff) {
        return mu_conjugation({theta, phi}, cutoff).op.entries();
    }, py::arg("theta"), py::arg("phi"), py::arg("cutoff"));
    m.def("mu_from_eta_quadrature", [](int cutoff, double radius, double step) {
        return mu_from_eta_quadrature(grid2(radius, step), cutoff).op.entries();
    }, py::arg("cutoff"), py::arg("radius") = 7.0, py::arg("step") = 0.05);
    m.def("mu_from_xi_quadrature", [](int cutoff, double radius, double step) {
        return mu_from_xi_quadrature(grid2(radius, step), cutoff).op.entries();
    }, py::arg("cutoff"), py::arg("radius") = 7.0, py::arg("step") = 0.05);
    m.def("mu_coherent_quadrature", [](int cutoff, double radius, double step, bool force) {
        return mu_coherent_quadrature(QuadratureGrid(radius, step, 4), cutoff, force).op.entries();
    }, py::arg("cutoff"), py::arg("radius") = 4.0, py::arg("step") = 0.1, py::arg("force") = false);
    m.def("parity_from_coherent_quadrature", [](int cutoff, double radius, double step) {
        return parity_from_coherent_quadrature(grid2(radius, step), cutoff).op.entries();
    }, py::arg("cutoff"), py::arg("radius") = 6.0, py::arg("step") = 0.05);
    m.def("mu_coherent_matrix_element", [](double theta, double phi, Complex alpha, Complex beta,
                                           Complex alpha_prime, Complex beta_prime) {
        return mu_coherent_matrix_element({theta, phi}, alpha, beta, alpha_prime, beta_prime);
    }, py::arg("theta"), py::arg("phi"), py::arg("alpha"), py::arg("beta"),
       py::arg("alpha_prime"), py::arg("beta_prime"));
    m.def("compare_projectors", [](const Matrix& a, const Matrix& b, int cutoff, int block) {
        return compare_projectors(wrap_operator(a, cutoff), wrap_operator(b, cutoff), block);
    }, py::arg("a"), py::arg("b"), py::arg("cutoff"), py::arg("block"));

    // gaussian integral closed forms
    m.def("gauss1d_closed", &gauss1d_closed, py::arg("alpha"), py::arg("beta"));
    m.def("gauss2d_closed", &gauss2d_closed, py::arg("zeta"), py::arg("xi"), py::arg("eta"));
    m.def("gauss2d_general_closed", &gauss2d_general_closed, py::arg("zeta"), py::arg("xi"),
          py::arg("eta"), py::arg("f"), py::arg("g"));

    // metrology
    m.def("parity_signal", [](const std::string& input, double phase, int cutoff,
                              const std::string& bs1, const std::string& detect, double radius,
                              double step) {
        return parity_signal(make_spec(input, phase, cutoff, bs1, detect, radius, step));
    }, py::arg("input"), py::arg("phase"), py::arg("cutoff"), py::arg("bs1") = "none",
       py::arg("detect") = "fock:-pi/2", py::arg("radius") = 7.0, py::arg("step") = 0.05);
    m.def("noon_parity_closed", &noon_parity_closed, py::arg("photons"), py::arg("phi"));
    m.def("cs_sv_parity_closed", &cs_sv_parity_closed, py::arg("z"), py::arg("r"), py::arg("phi"));
    m.def("noon_pipeline_check", [](int photons, double phi, int cutoff) {
        return noon_pipeline_check(photons, phi, cutoff);
    }, py::arg("photons"), py::arg("phi"), py::arg("cutoff"));
    m.def("phase_sweep", [](const std::string& input, double phi_min, double phi_max, int steps,
                            int cutoff, const std::string& bs1, const std::string& detect,
                            double radius, double step) {
        const auto result = phase_sweep(make_spec(input, 0.0, cutoff, bs1, detect, radius, step),
                                        phi_min, phi_max, steps);
        std::vector<std::tuple<double, double, std::optional<double>, std::optional<double>,
                               std::optional<double>>> rows;
        rows.reserve(result.rows.size());
        for (const auto& r : result.rows) {
            rows.emplace_back(r.phi, r.signal, r.closed_form, r.abs_err, r.sensitivity);
        }
        return rows;
    }, py::arg("input"), py::arg("phi_min"), py::arg("phi_max"), py::arg("steps"),
       py::arg("cutoff"), py::arg("bs1") = "none", py::arg("detect") = "fock:-pi/2",
       py::arg("radius") = 7.0, py::arg("step") = 0.05);

    // verification suites
    m.def("verify_json", [](const std::string& suite, int cutoff, double radius, double step) {
        VerifyConfig cfg;
        cfg.cutoff = cutoff;
        cfg.grid_radius = radius;
        cfg.grid_step = step;
        return verify_report_to_json(run_verify(suite, cfg)).dump();
    }, py::arg("suite"), py::arg("cutoff") = 0, py::arg("radius") = 7.0, py::arg("step") = 0.05);

    m.attr("__version__") = "0.1.0";
}
