#include "weaklens/runner.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "json.hpp"

namespace weaklens {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path.string());
    return out;
}

void close_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error("writing output file failed: " + path.string());
}

RunReport build_report(const WeakContext& ctx, const ResolvedScenario& sc,
                       const std::string& echo) {
    RunReport rep;
    rep.scenario_echo = echo;
    rep.weak_value = weak_value(ctx, sc.observable);
    if (sc.observable2) rep.weak_ratio = weak_ratio(ctx, sc.observable, *sc.observable2);
    rep.pole_proximity = pole_proximity(ctx);
    rep.spectral_bound = spectral_bound(sc.observable);
    rep.copies = sc.copies;
    rep.omega = double(sc.copies) * rep.weak_value.value.real();
    rep.bandlimit = double(sc.copies) * rep.spectral_bound;
    const double theta_mid = 0.5 * (sc.grid.min_value() + sc.grid.max_value());
    rep.bargmann =
        bargmann_invariant(sc.pre, evolve(sc.observable, theta_mid, sc.pre), sc.post);
    return rep;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

RunReport run_weakvalue(const ResolvedScenario& sc, const std::string& scenario_echo,
                        const std::filesystem::path& out_json) {
    const WeakContext ctx(sc.pre, sc.post);
    RunReport rep = build_report(ctx, sc, scenario_echo);
    write_report_json(rep, out_json);
    rep.output_paths.push_back(out_json.string());
    return rep;
}

SuperoscRun run_superosc(const ResolvedScenario& sc, const std::string& scenario_echo,
                         const std::filesystem::path& trace_csv,
                         const std::filesystem::path& spectrum_csv) {
    const WeakContext ctx(sc.pre, sc.post);
    RunReport rep = build_report(ctx, sc, scenario_echo);
    SuperoscillationTrace trace = trace_scan(ctx, sc.observable, sc.copies, sc.grid);
    std::optional<BandlimitReport> spectrum;
    if (sc.spectrum) {
        spectrum = bandlimit_spectrum(ctx, sc.observable, sc.copies, sc.spectrum->period,
                                      sc.spectrum->samples);
    }
    write_trace_csv(trace, trace_csv);
    rep.output_paths.push_back(trace_csv.string());
    if (spectrum) {
        write_spectrum_csv(*spectrum, spectrum_csv);
        rep.output_paths.push_back(spectrum_csv.string());
    }
    return SuperoscRun{std::move(rep), std::move(trace), std::move(spectrum)};
}

void run_bloch(const ResolvedScenario& sc, std::size_t n_theta, std::size_t n_phi,
               const std::filesystem::path& out_csv) {
    if (!sc.pauli_axis) {
        throw SchemaError("bloch: observable must be a pauli combo; dense matrices have no axis");
    }
    write_field_csv(sample_field_grid(*sc.pauli_axis, n_theta, n_phi), out_csv);
}

void write_trace_csv(const SuperoscillationTrace& trace, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "theta,f_re,f_im,f_abs,f_phase_unwrapped,g_re,g_im,local_freq,phase_valid\n";
    for (std::size_t k = 0; k < trace.grid.count(); ++k) {
        out << format_double(trace.grid.point(k)) << ',' << format_double(trace.f[k].real())
            << ',' << format_double(trace.f[k].imag()) << ','
            << format_double(std::abs(trace.f[k])) << ',';
        if (trace.phase_valid[k]) out << format_double(trace.phase_unwrapped[k]);
        out << ',' << format_double(trace.g[k].real()) << ',' << format_double(trace.g[k].imag())
            << ',';
        if (!std::isnan(trace.local_freq[k])) out << format_double(trace.local_freq[k]);
        out << ',' << (trace.phase_valid[k] ? '1' : '0') << '\n';
    }
    close_output(out, path);
}

void write_spectrum_csv(const BandlimitReport& rep, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "frequency,coeff_re,coeff_im,energy,in_band\n";
    for (std::size_t i = 0; i < rep.frequencies.size(); ++i) {
        const double freq = rep.frequencies[i];
        const Complex c = rep.coefficients[i];
        const bool in_band = std::abs(freq) <= rep.bandlimit + kBandMargin;
        out << format_double(freq) << ',' << format_double(c.real()) << ','
            << format_double(c.imag()) << ',' << format_double(std::norm(c)) << ','
            << (in_band ? '1' : '0') << '\n';
    }
    close_output(out, path);
}

void write_field_csv(const std::vector<FieldGridRow>& rows, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "theta,phi,g,dg_dtheta,dg_dphi,ind_tt,ind_tp,ind_pp,fs_tt,fs_tp,fs_pp\n";
    for (const FieldGridRow& row : rows) {
        out << format_double(row.theta) << ',' << format_double(row.phi) << ','
            << format_double(row.g) << ',' << format_double(row.dg_dtheta) << ','
            << format_double(row.dg_dphi) << ',' << format_double(row.induced.tt) << ','
            << format_double(row.induced.tp) << ',' << format_double(row.induced.pp) << ','
            << format_double(row.fubini_study.tt) << ',' << format_double(row.fubini_study.tp)
            << ',' << format_double(row.fubini_study.pp) << '\n';
    }
    close_output(out, path);
}

void write_report_json(const RunReport& rep, const std::filesystem::path& path) {
    nlohmann::ordered_json j;
    j["weak_value"] = nlohmann::ordered_json{{"re", rep.weak_value.value.real()},
                                             {"im", rep.weak_value.value.imag()}};
    j["pole_proximity"] = rep.pole_proximity;
    j["spectral_bound"] = rep.spectral_bound;
    j["copies"] = rep.copies;
    j["omega"] = rep.omega;
    j["bandlimit"] = rep.bandlimit;
    j["bargmann"] = nlohmann::ordered_json{{"delta_re", rep.bargmann.delta.real()},
                                           {"delta_im", rep.bargmann.delta.imag()},
                                           {"phase", rep.bargmann.phase},
                                           {"phase_defined", rep.bargmann.phase_defined}};
    if (rep.weak_ratio) {
        j["weak_ratio"] = nlohmann::ordered_json{{"re", rep.weak_ratio->real()},
                                                 {"im", rep.weak_ratio->imag()}};
    }
    std::ofstream out = open_output(path);
    out << j.dump(2) << '\n';
    close_output(out, path);
}

}  // namespace weaklens
