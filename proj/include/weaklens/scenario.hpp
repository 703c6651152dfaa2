// scenario.hpp
// JSON scenario files for the CLI.  A scenario names a pre/post selection
// pair, one or two observables, a copy count, a theta grid, and an optional
// spectrum request.  Parsing is strict: unknown keys are rejected, and every
// number has to be of the declared kind.
//
// State spec variants (object keys decide which):
//   {"re": [..], "im": [..]}   explicit amplitudes, im optional, normalized
//   {"theta": t, "phi": p}     point on the Bloch sphere
//   {"a_param": a}             lens family: pre |+x>, post (|+x> + a|-x>)/sqrt(1+a^2)
// Operator spec variants:
//   {"a": [ax, ay, az], "scale": s}   scale * (a . sigma), scale optional
//   {"re": [[..]], "im": [[..]]}      dense Hermitian matrix, im optional

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weaklens/blochgeom.hpp"
#include "weaklens/linalg.hpp"
#include "weaklens/superosc.hpp"

namespace weaklens {

struct FileNotFoundError : Error {
    using Error::Error;
};

// The file is not valid JSON at all (as opposed to valid JSON with a bad shape).
struct MalformedInputError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct AmplitudesSpec {
    std::vector<double> re;
    std::vector<double> im;  // always same length as re after parsing
};

struct BlochSpec {
    double theta = 0.0;
    double phi = 0.0;
};

struct LensSpec {
    double a_param = 0.0;
};

using StateSpec = std::variant<AmplitudesSpec, BlochSpec, LensSpec>;

struct PauliSpec {
    std::array<double, 3> a{0.0, 0.0, 0.0};
    double scale = 1.0;
};

struct DenseSpec {
    std::vector<std::vector<double>> re;
    std::vector<std::vector<double>> im;  // same shape as re after parsing
};

using OperatorSpec = std::variant<PauliSpec, DenseSpec>;

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

struct SpectrumSpec {
    double period = 0.0;
    std::size_t samples = 0;
};

// Scenario exactly as written in the file, defaults applied.
struct Scenario {
    StateSpec pre_state;
    StateSpec post_state;
    OperatorSpec observable;
    std::optional<OperatorSpec> observable2;
    int copies = 1;
    GridSpec theta_grid;
    std::optional<SpectrumSpec> spectrum_check;
};

// Scenario turned into library objects, ready to run.
struct ResolvedScenario {
    PureState pre;
    PureState post;
    HermitianObservable observable;
    std::optional<HermitianObservable> observable2;
    std::optional<PauliAxis> pauli_axis;  // scale folded in; set for pauli-combo observables
    int copies = 1;
    ThetaGrid grid;
    std::optional<SpectrumSpec> spectrum;
};

// Throws MalformedInputError for broken JSON, SchemaError for wrong shapes.
Scenario parse_scenario_text(const std::string& text);

// parse_scenario_text plus FileNotFoundError when the path is not a regular file.
Scenario parse_scenario(const std::filesystem::path& path);

// Builds the library objects.  Construction failures (zero-norm state,
// non-Hermitian dense matrix, mismatched dimensions, bad grid bounds) come
// back as SchemaError naming the offending field.
ResolvedScenario resolve_scenario(const Scenario& s);

// parse_scenario followed by resolve_scenario.
ResolvedScenario load_scenario(const std::filesystem::path& path);

}  // namespace weaklens
