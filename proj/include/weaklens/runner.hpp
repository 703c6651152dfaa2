// runner.hpp
// Command implementations shared by the CLI binary and the tests: run a
// resolved scenario and write the CSV/JSON artifacts.  All numeric output
// goes through format_double so identical runs emit identical bytes.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "weaklens/blochgeom.hpp"
#include "weaklens/scenario.hpp"
#include "weaklens/superosc.hpp"

namespace weaklens {

struct RunReport {
    std::string scenario_echo;
    WeakValueResult weak_value;
    std::optional<Complex> weak_ratio;  // set when the scenario has observable2
    double pole_proximity = 0.0;
    double spectral_bound = 0.0;
    int copies = 1;
    double omega = 0.0;      // copies * Re(weak_value)
    double bandlimit = 0.0;  // copies * spectral_bound
    BargmannTriple bargmann;
    std::vector<std::string> output_paths;
};

struct SuperoscRun {
    RunReport report;
    SuperoscillationTrace trace;
    std::optional<BandlimitReport> spectrum;
};

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

// Weak value, ratio when requested, pole diagnostics, and the Bargmann triple
// (pre, evolve(A, theta_mid, pre), post) at the grid midpoint; writes the
// JSON report to out_json.
RunReport run_weakvalue(const ResolvedScenario& sc, const std::string& scenario_echo,
                        const std::filesystem::path& out_json);

// Trace over the scenario grid, plus the DFT spectrum when spectrum_check is
// present.  Nothing is written until every requested computation succeeded,
// so a spectrum refusal leaves no partial files behind.
SuperoscRun run_superosc(const ResolvedScenario& sc, const std::string& scenario_echo,
                         const std::filesystem::path& trace_csv,
                         const std::filesystem::path& spectrum_csv);

// Field grid export.  The scenario observable must be a pauli combo.
void run_bloch(const ResolvedScenario& sc, std::size_t n_theta, std::size_t n_phi,
               const std::filesystem::path& out_csv);

void write_trace_csv(const SuperoscillationTrace& trace, const std::filesystem::path& path);
void write_spectrum_csv(const BandlimitReport& rep, const std::filesystem::path& path);
void write_field_csv(const std::vector<FieldGridRow>& rows, const std::filesystem::path& path);
void write_report_json(const RunReport& rep, const std::filesystem::path& path);

}  // namespace weaklens
