#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "testutil.hpp"
#include "weaklens/scenario.hpp"

using namespace weaklens;
using testutil::close;

namespace {

const char* kWorkedScenario = R"({
  "pre_state": {"a_param": 3.0},
  "post_state": {"a_param": 3.0},
  "observable": {"a": [0.0, 0.0, 1.0], "scale": 0.5},
  "copies": 20,
  "theta_grid": {"min": -0.2, "max": 0.2, "count": 400},
  "spectrum_check": {"period": 6.283185307179586, "samples": 256}
})";

// Smallest scenario that parses: everything else is defaulted.
const char* kMinimalScenario = R"({
  "pre_state": {"re": [1.0, 0.0]},
  "post_state": {"re": [1.0, 1.0]},
  "observable": {"a": [0.0, 0.0, 1.0]},
  "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
})";

ResolvedScenario resolve(const std::string& text) {
    return resolve_scenario(parse_scenario_text(text));
}

}  // namespace

TEST_CASE("the worked lens scenario resolves to the expected objects") {
    ResolvedScenario rs = resolve(kWorkedScenario);

    const double r = 1.0 / std::sqrt(2.0);
    CHECK(close(rs.pre[0], Complex(r, 0.0)));
    CHECK(close(rs.pre[1], Complex(r, 0.0)));
    // (1 + a, 1 - a)/norm with a = 3: (2, -1)/sqrt(5).
    CHECK(close(rs.post[0], Complex(0.8944271909999159, 0.0)));
    CHECK(close(rs.post[1], Complex(-0.4472135954999579, 0.0)));

    CHECK(close(rs.observable.matrix()(0, 0), Complex(0.5, 0.0)));
    CHECK(close(rs.observable.matrix()(1, 1), Complex(-0.5, 0.0)));
    CHECK(close(rs.observable.matrix()(0, 1), Complex(0.0, 0.0)));
    REQUIRE(rs.pauli_axis.has_value());
    CHECK(rs.pauli_axis->a[2] == doctest::Approx(0.5));

    CHECK(rs.copies == 20);
    CHECK(rs.grid.min_value() == -0.2);
    CHECK(rs.grid.max_value() == 0.2);
    CHECK(rs.grid.count() == 400);
    REQUIRE(rs.spectrum.has_value());
    CHECK(rs.spectrum->period == doctest::Approx(2.0 * M_PI));
    CHECK(rs.spectrum->samples == 256);
    CHECK(!rs.observable2.has_value());
}

TEST_CASE("defaults: copies 1, no second observable, no spectrum") {
    ResolvedScenario rs = resolve(kMinimalScenario);
    CHECK(rs.copies == 1);
    CHECK(!rs.observable2.has_value());
    CHECK(!rs.spectrum.has_value());
    // Amplitudes arrive normalized even when written unnormalized.
    ResolvedScenario scaled = resolve(R"({
      "pre_state": {"re": [3.0, 4.0]},
      "post_state": {"re": [1.0, 0.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })");
    CHECK(close(scaled.pre[0], Complex(0.6, 0.0)));
    CHECK(close(scaled.pre[1], Complex(0.8, 0.0)));
}

TEST_CASE("state variants: explicit amplitudes, bloch angles, lens roles") {
    ResolvedScenario rs = resolve(R"({
      "pre_state": {"re": [1.0, 0.0], "im": [0.0, 1.0]},
      "post_state": {"theta": 1.5707963267948966, "phi": 0.0},
      "observable": {"a": [1.0, 0.0, 0.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })");
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(close(rs.pre[0], Complex(r, 0.0)));
    CHECK(close(rs.pre[1], Complex(0.0, r)));
    CHECK(close(rs.post[0], Complex(r, 0.0)));
    CHECK(close(rs.post[1], Complex(r, 0.0)));

    // The lens spec is role-aware: pre always |+x>, post tilts with a.
    ResolvedScenario lens = resolve(kWorkedScenario);
    WeakContext ctx(lens.pre, lens.post);
    CHECK(pole_proximity(ctx) == doctest::Approx(0.31622776601683794));
}

TEST_CASE("operator variants: pauli combo and dense matrix") {
    ResolvedScenario rs = resolve(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"re": [[0.0, 1.0], [1.0, 0.0]]},
      "observable2": {"re": [[0.0, 0.0], [0.0, 0.0]], "im": [[0.0, -1.0], [1.0, 0.0]]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })");
    // Dense specs carry no pauli axis even when they happen to equal one.
    CHECK(!rs.pauli_axis.has_value());
    CHECK(close(rs.observable.matrix()(0, 1), Complex(1.0, 0.0)));
    REQUIRE(rs.observable2.has_value());
    CHECK(close(rs.observable2->matrix()(0, 1), Complex(0.0, -1.0)));
    CHECK(close(rs.observable2->matrix()(1, 0), Complex(0.0, 1.0)));

    // Pauli combo without scale defaults to 1.
    ResolvedScenario p = resolve(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 2.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })");
    CHECK(close(p.observable.matrix()(0, 0), Complex(2.0, 0.0)));
    REQUIRE(p.pauli_axis.has_value());
    CHECK(p.pauli_axis->a[2] == doctest::Approx(2.0));
}

TEST_CASE("broken JSON is malformed, wrong shapes are schema errors") {
    CHECK_THROWS_AS(parse_scenario_text("{not json"), MalformedInputError);
    CHECK_THROWS_AS(parse_scenario_text(""), MalformedInputError);
    CHECK_THROWS_AS(parse_scenario_text("[1, 2]"), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text("42"), SchemaError);
}

TEST_CASE("schema: missing and unknown fields") {
    CHECK_THROWS_AS(parse_scenario_text(R"({
      "post_state": {"re": [1.0, 0.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);

    CHECK_THROWS_AS(parse_scenario_text(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 0.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);

    // theta_grid is required even when only the weak value is wanted.
    CHECK_THROWS_AS(parse_scenario_text(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]}
    })"), SchemaError);

    CHECK_THROWS_AS(parse_scenario_text(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2},
      "extra": true
    })"), SchemaError);

    // Mixing state variants in one object.
    CHECK_THROWS_AS(parse_scenario_text(R"({
      "pre_state": {"re": [1.0, 0.0], "theta": 0.5},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);

    CHECK_THROWS_AS(parse_scenario_text(R"({
      "pre_state": {"flavor": "up"},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);
}

TEST_CASE("schema: malformed values inside recognized fields") {
    auto with_pre = [](const std::string& pre) {
        return std::string(R"({"pre_state": )") + pre + R"(,
          "post_state": {"re": [1.0, 1.0]},
          "observable": {"a": [0.0, 0.0, 1.0]},
          "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}})";
    };
    CHECK_THROWS_AS(parse_scenario_text(with_pre(R"({"re": [1.0]})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_pre(R"({"re": [1.0, 0.0], "im": [0.0]})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_pre(R"({"re": ["x", "y"]})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_pre(R"({"a_param": -1.0})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_pre(R"("plus")")), SchemaError);

    auto with_obs = [](const std::string& obs) {
        return std::string(R"({"pre_state": {"re": [1.0, 0.0]},
          "post_state": {"re": [1.0, 1.0]},
          "observable": )") + obs + R"(,
          "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}})";
    };
    CHECK_THROWS_AS(parse_scenario_text(with_obs(R"({"a": [1.0, 0.0]})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_obs(R"({"scale": 2.0})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_obs(R"({"re": [[1.0, 0.0]]})")), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_obs(R"({"re": [[1.0]]})")), SchemaError);
    CHECK_THROWS_AS(
        parse_scenario_text(with_obs(R"({"re": [[1.0, 0.0], [0.0, 1.0]], "im": [[0.0]]})")),
        SchemaError);
}

TEST_CASE("schema: copies, grid, and spectrum bounds") {
    auto with_tail = [](const std::string& tail) {
        return std::string(R"({"pre_state": {"re": [1.0, 0.0]},
          "post_state": {"re": [1.0, 1.0]},
          "observable": {"a": [0.0, 0.0, 1.0]},)") + tail + "}";
    };
    const std::string grid_ok = R"("theta_grid": {"min": 0.0, "max": 1.0, "count": 2})";

    CHECK_THROWS_AS(parse_scenario_text(with_tail(R"("copies": 0,)" + grid_ok)), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_tail(R"("copies": -3,)" + grid_ok)), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_tail(R"("copies": 1.5,)" + grid_ok)), SchemaError);

    CHECK_THROWS_AS(
        parse_scenario_text(with_tail(R"("theta_grid": {"min": 0.0, "max": 1.0, "count": 1})")),
        SchemaError);
    CHECK_THROWS_AS(
        parse_scenario_text(with_tail(R"("theta_grid": {"min": 0.0, "max": 1.0, "count": 2.5})")),
        SchemaError);
    CHECK_THROWS_AS(
        parse_scenario_text(with_tail(R"("theta_grid": {"min": 0.0, "max": 1.0})")), SchemaError);

    CHECK_THROWS_AS(parse_scenario_text(with_tail(
                        grid_ok + R"(, "spectrum_check": {"period": -1.0, "samples": 64})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_tail(
                        grid_ok + R"(, "spectrum_check": {"period": 1.0, "samples": 0})")),
                    SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(with_tail(
                        grid_ok + R"(, "spectrum_check": {"period": 1.0})")),
                    SchemaError);
}

TEST_CASE("resolution failures surface as schema errors naming the field") {
    // Inverted grid parses but cannot build.
    CHECK_THROWS_AS(resolve(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 1.0, "max": 0.0, "count": 2}
    })"), SchemaError);

    // Zero vector cannot be normalized.
    CHECK_THROWS_AS(resolve(R"({
      "pre_state": {"re": [0.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);

    // Dense matrix that is not Hermitian.
    CHECK_THROWS_AS(resolve(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"re": [[0.0, 1.0], [2.0, 0.0]]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);

    // Bloch angle off the sphere.
    CHECK_THROWS_AS(resolve(R"({
      "pre_state": {"theta": 4.0, "phi": 0.0},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);

    // Dimension disagreements across fields.
    CHECK_THROWS_AS(resolve(R"({
      "pre_state": {"re": [1.0, 0.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);
    CHECK_THROWS_AS(resolve(R"({
      "pre_state": {"re": [1.0, 0.0, 0.0]},
      "post_state": {"re": [1.0, 1.0, 0.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);
    CHECK_THROWS_AS(resolve(R"({
      "pre_state": {"re": [1.0, 0.0]},
      "post_state": {"re": [1.0, 1.0]},
      "observable": {"a": [0.0, 0.0, 1.0]},
      "observable2": {"re": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]},
      "theta_grid": {"min": 0.0, "max": 1.0, "count": 2}
    })"), SchemaError);
}

TEST_CASE("file loading distinguishes absent files from bad content") {
    namespace fs = std::filesystem;
    CHECK_THROWS_AS(parse_scenario("/no/such/scenario.json"), FileNotFoundError);
    CHECK_THROWS_AS(parse_scenario(fs::temp_directory_path()), FileNotFoundError);

    const fs::path path = fs::temp_directory_path() / "weaklens_scenario_test.json";
    {
        std::ofstream out(path);
        out << kWorkedScenario;
    }
    ResolvedScenario rs = load_scenario(path);
    CHECK(rs.copies == 20);

    {
        std::ofstream out(path);
        out << "{broken";
    }
    CHECK_THROWS_AS(parse_scenario(path), MalformedInputError);
    fs::remove(path);
}
