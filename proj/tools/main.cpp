// Command-line front end.  Three subcommands over JSON scenario files:
//   weakvalue  weak value, pole diagnostics, Bargmann triple -> JSON report
//   superosc   trace of F^N over a theta grid -> CSV, optional DFT spectrum CSV
//   bloch      observable-induced field and metrics on a Bloch grid -> CSV
// Exit codes: 0 success, 1 usage or schema problem, 2 weak-value pole,
// 3 spectrum refusal (incommensurate eigenvalues).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "weaklens/runner.hpp"

namespace {

std::string format_complex(weaklens::Complex z) {
    std::string s = weaklens::format_double(z.real());
    if (z.imag() < 0.0) {
        s += " - " + weaklens::format_double(-z.imag()) + "i";
    } else {
        s += " + " + weaklens::format_double(z.imag()) + "i";
    }
    return s;
}

void print_report(const weaklens::RunReport& rep) {
    std::cout << "weak_value: " << format_complex(rep.weak_value.value) << "\n";
    if (rep.weak_value.near_pole) std::cout << "near_pole: yes\n";
    if (rep.weak_ratio) std::cout << "weak_ratio: " << format_complex(*rep.weak_ratio) << "\n";
    std::cout << "pole_proximity: " << weaklens::format_double(rep.pole_proximity) << "\n";
    std::cout << "spectral_bound: " << weaklens::format_double(rep.spectral_bound) << "\n";
    std::cout << "copies: " << rep.copies << "\n";
    std::cout << "omega: " << weaklens::format_double(rep.omega) << "\n";
    std::cout << "bandlimit: " << weaklens::format_double(rep.bandlimit) << "\n";
    if (rep.bargmann.phase_defined) {
        std::cout << "bargmann_phase: " << weaklens::format_double(rep.bargmann.phase) << "\n";
    } else {
        std::cout << "bargmann_phase: undefined\n";
    }
    for (const std::string& p : rep.output_paths) std::cout << "wrote " << p << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak-value lenses: deformation ratios, superoscillation traces, and "
                 "Bloch-sphere field geometry"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string report_path = "report.json";
    std::string trace_path = "trace.csv";
    std::string spectrum_path = "spectrum.csv";
    std::string field_path = "field.csv";
    std::size_t n_theta = 0;
    std::size_t n_phi = 0;

    CLI::App* weakvalue = app.add_subcommand(
        "weakvalue", "weak value, pole diagnostics, and Bargmann triple; writes a JSON report");
    weakvalue->add_option("scenario", scenario_path, "scenario JSON file")->required();
    weakvalue->add_option("--out", report_path, "report output path")->capture_default_str();

    CLI::App* superosc = app.add_subcommand(
        "superosc", "superoscillation trace of F^N; optional DFT bandlimit spectrum");
    superosc->add_option("scenario", scenario_path, "scenario JSON file")->required();
    superosc->add_option("--trace", trace_path, "trace CSV path")->capture_default_str();
    superosc->add_option("--spectrum", spectrum_path, "spectrum CSV path")->capture_default_str();

    CLI::App* bloch = app.add_subcommand(
        "bloch", "observable-induced scalar field and metrics on a Bloch-sphere grid");
    bloch->add_option("scenario", scenario_path, "scenario JSON file")->required();
    bloch->add_option("--ntheta", n_theta, "polar sample count")->required();
    bloch->add_option("--nphi", n_phi, "azimuthal sample count")->required();
    bloch->add_option("--out", field_path, "field CSV path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11's own exit codes do not match the documented contract, so
        // collapse every parse failure to 1 and keep help at 0.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const weaklens::ResolvedScenario sc = weaklens::load_scenario(scenario_path);
        if (weakvalue->parsed()) {
            print_report(weaklens::run_weakvalue(sc, scenario_path, report_path));
        } else if (superosc->parsed()) {
            const weaklens::SuperoscRun run =
                weaklens::run_superosc(sc, scenario_path, trace_path, spectrum_path);
            print_report(run.report);
            if (run.spectrum) {
                const double total = run.spectrum->in_band_energy + run.spectrum->out_band_energy;
                const double fraction = total > 0.0 ? run.spectrum->out_band_energy / total : 0.0;
                std::cout << "out_band_fraction: " << weaklens::format_double(fraction) << "\n";
            }
        } else {
            weaklens::run_bloch(sc, n_theta, n_phi, field_path);
            std::cout << "wrote " << field_path << "\n";
        }
        return 0;
    } catch (const weaklens::NotPeriodicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const weaklens::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
