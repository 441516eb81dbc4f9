#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockparity/metrology.hpp"
#include "fockparity/projectors.hpp"
#include "fockparity/serialization.hpp"
#include "fockparity/specs.hpp"
#include "fockparity/verify.hpp"

namespace {

using namespace fockparity;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
}

struct CommonOpts {
    int cutoff = 12;
    std::string grid = "7,0.05";
    int block = -1;  // -1 = default d/2 - 2
    std::string out;
    std::string format = "csv";
    std::vector<std::string> tol;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--cutoff", o.cutoff, "Per-mode Fock dimension")->check(CLI::Range(2, 64));
    cmd->add_option("--grid", o.grid, "Quadrature grid as R,h (default 7,0.05)");
    cmd->add_option("--block", o.block, "Total-photon comparison block (default d/2-2)");
    cmd->add_option("--out", o.out, "Output path (default stdout)");
    cmd->add_option("--format", o.format, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tol", o.tol, "Tolerance override NAME=VALUE (repeatable)");
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--tol expects NAME=VALUE, got '" + item + "'");
        }
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--tol: bad value in '" + item + "'");
        }
        if (!(out[item.substr(0, eq)] > 0.0)) {
            throw UsageError("--tol: tolerance must be positive in '" + item + "'");
        }
    }
    return out;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, bool cutoff_given) {
    VerifyConfig cfg;
    const GridSpec g = parse_grid_spec(o.grid);
    cfg.grid_radius = g.radius;
    cfg.grid_step = g.step;
    cfg.cutoff = cutoff_given ? o.cutoff : 0;
    cfg.tolerance_overrides = parse_tols(o.tol);

    bool known = false;
    for (const auto& name : verify_suite_names()) known = known || (name == suite);
    if (!known) throw UsageError("verify: unknown suite '" + suite + "'");

    const VerifyReport report = run_verify(suite, cfg);
    const std::string json_text = verify_report_to_json(report).dump(2) + "\n";
    if (o.format == "json" && o.out.empty()) {
        std::cout << json_text;
    } else {
        for (const auto& c : report.checks) {
            std::printf("[%s] %-40s residual=%-12.3e tol=%-9.0e (%.2fs)%s%s\n",
                        c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual, c.tolerance,
                        c.seconds, c.note.empty() ? "" : " note: ", c.note.c_str());
        }
        std::printf("%s: %d/%zu checks passed in %.1fs\n", report.suite.c_str(), report.passed(),
                    report.checks.size(), report.seconds);
        if (!o.out.empty()) write_output(json_text, o.out);
    }
    return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_compare(const CommonOpts& o, const std::string& method_a, const std::string& method_b) {
    const GridSpec g = parse_grid_spec(o.grid);
    const QuadratureGrid grid(g.radius, g.step, 2);
    const int block = (o.block >= 0) ? o.block : default_block(o.cutoff);

    const ProjectorBuild a = build_method(parse_method_spec(method_a), o.cutoff, grid);
    const ProjectorBuild b = build_method(parse_method_spec(method_b), o.cutoff, grid);
    const double maxdiff = compare_projectors(a.op, b.op, block);

    nlohmann::json j{{"method_a", method_a},
                     {"method_b", method_b},
                     {"cutoff", o.cutoff},
                     {"block", block},
                     {"maxdiff", maxdiff},
                     {"hermiticity_a", a.report.hermiticity_residual},
                     {"hermiticity_b", b.report.hermiticity_residual},
                     {"grid", {{"radius", g.radius}, {"step", g.step}}},
                     {"seconds", a.report.seconds + b.report.seconds}};
    write_output(j.dump(2) + "\n", o.out);
    return kExitPass;
}

int cmd_sweep(const CommonOpts& o, const std::string& input, const std::string& bs1,
              const std::string& detect, const std::string& phi_range) {
    const GridSpec g = parse_grid_spec(o.grid);
    const QuadratureGrid grid(g.radius, g.step, 2);
    const PhiRange range = parse_phi_range(phi_range);

    InterferometerSpec spec;
    spec.input = input;
    spec.cutoff = o.cutoff;
    spec.detection = parse_detection_spec(detect, grid);
    if (bs1 == "none") {
        spec.bs1.kind = Bs1Kind::None;
    } else if (bs1 == "symmetric-i") {
        spec.bs1.kind = Bs1Kind::SymmetricI;
    } else if (bs1.rfind("general:", 0) == 0) {
        spec.bs1.kind = Bs1Kind::General;
        const auto m = parse_method_spec("bs:" + bs1.substr(8));
        spec.bs1.params = m.bs;
    } else {
        throw UsageError("sweep: --bs1 must be none|symmetric-i|general:theta,phi, got '" + bs1 +
                         "'");
    }

    const SweepResult result = phase_sweep(spec, range.min, range.max, range.steps);

    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : result.rows) {
            nlohmann::json row{{"phi", r.phi}, {"signal", r.signal}};
            if (r.closed_form) row["closed_form"] = *r.closed_form;
            if (r.abs_err) row["abs_err"] = *r.abs_err;
            if (r.sensitivity) row["sensitivity"] = *r.sensitivity;
            rows.push_back(std::move(row));
        }
        write_output(rows.dump(2) + "\n", o.out);
        return kExitPass;
    }

    std::ostringstream csv;
    csv << "phi,signal,closed_form,abs_err,sensitivity\n";
    for (const auto& r : result.rows) {
        csv << format_g17(r.phi) << ',' << format_g17(r.signal) << ',';
        if (r.closed_form) csv << format_g17(*r.closed_form);
        csv << ',';
        if (r.abs_err) csv << format_g17(*r.abs_err);
        csv << ',';
        if (r.sensitivity) csv << format_g17(*r.sensitivity);
        csv << '\n';
    }
    write_output(csv.str(), o.out);
    return kExitPass;
}

int cmd_dump(const CommonOpts& o, const std::string& op_spec) {
    const GridSpec g = parse_grid_spec(o.grid);
    const QuadratureGrid grid(g.radius, g.step, 2);
    const ProjectorBuild build = build_method(parse_method_spec(op_spec), o.cutoff, grid);
    nlohmann::json j = operator_to_json(build.op);
    write_output(j.dump(2) + "\n", o.out);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fockparity: two-mode Fock-space projector and parity-interferometry toolkit"};
    app.require_subcommand(1);

    CommonOpts verify_opts, compare_opts, sweep_opts, dump_opts;
    std::string suite = "all";
    std::string method_a, method_b;
    std::string input, bs1 = "none", detect = "fock:-pi/2", phi_range = "0:2pi:100";
    std::string op_spec;

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("--suite", suite, "gaussians|hermite|states|projectors|metrology|all");
    add_common(verify, verify_opts);

    auto* compare = app.add_subcommand("compare", "Compare two projector constructions");
    compare->add_option("--method-a", method_a, "First construction")->required();
    compare->add_option("--method-b", method_b, "Second construction")->required();
    add_common(compare, compare_opts);

    auto* sweep = app.add_subcommand("sweep", "Phase sweep of the parity signal");
    sweep->add_option("--input", input, "Input state-spec, e.g. noon:2")->required();
    sweep->add_option("--bs1", bs1, "First splitter: none|symmetric-i|general:theta,phi");
    sweep->add_option("--detect", detect,
                      "Detection: fock:phi|conjugation:theta,phi|eta-quadrature|xi-quadrature");
    sweep->add_option("--phi", phi_range, "Sweep range min:max:steps");
    add_common(sweep, sweep_opts);

    auto* dump = app.add_subcommand("dump-operator", "Dump an operator as JSON");
    dump->add_option("--op", op_spec, "Operator construction, e.g. fock:0 or parity")->required();
    add_common(dump, dump_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(verify_opts, suite, verify->count("--cutoff") > 0);
        }
        if (compare->parsed()) return cmd_compare(compare_opts, method_a, method_b);
        if (sweep->parsed()) return cmd_sweep(sweep_opts, input, bs1, detect, phi_range);
        if (dump->parsed()) return cmd_dump(dump_opts, op_spec);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
