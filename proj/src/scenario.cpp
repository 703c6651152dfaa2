#include "weaklens/scenario.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace weaklens {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw SchemaError("scenario: " + msg);
}

void check_object(const json& v, const char* ctx) {
    if (!v.is_object()) fail(std::string(ctx) + " must be a JSON object");
}

const json& member(const json& obj, const char* ctx, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(std::string(ctx) + " is missing required field \"" + key + "\"");
    }
    return *it;
}

void check_known_keys(const json& obj, const char* ctx,
                      std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* name : allowed) {
            if (item.key() == name) {
                known = true;
                break;
            }
        }
        if (!known) fail(std::string(ctx) + " has unknown key \"" + item.key() + "\"");
    }
}

double as_number(const json& v, const std::string& what) {
    if (!v.is_number()) fail(what + " must be a number");
    return v.get<double>();
}

double number_field(const json& obj, const char* ctx, const char* key) {
    return as_number(member(obj, ctx, key), std::string(ctx) + "." + key);
}

std::int64_t integer_field(const json& obj, const char* ctx, const char* key) {
    const json& v = member(obj, ctx, key);
    if (!v.is_number_integer()) fail(std::string(ctx) + "." + key + " must be an integer");
    return v.get<std::int64_t>();
}

std::vector<double> number_array(const json& v, const std::string& what) {
    if (!v.is_array()) fail(what + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const json& e : v) out.push_back(as_number(e, what + " entry"));
    return out;
}

std::vector<std::vector<double>> number_matrix(const json& v, const std::string& what) {
    if (!v.is_array()) fail(what + " must be an array of rows");
    std::vector<std::vector<double>> out;
    out.reserve(v.size());
    for (const json& row : v) out.push_back(number_array(row, what + " row"));
    return out;
}

StateSpec parse_state(const json& v, const char* ctx) {
    check_object(v, ctx);
    if (v.contains("re") || v.contains("im")) {
        check_known_keys(v, ctx, {"re", "im"});
        AmplitudesSpec am;
        am.re = number_array(member(v, ctx, "re"), std::string(ctx) + ".re");
        if (am.re.size() < 2) fail(std::string(ctx) + " needs at least 2 amplitudes");
        if (v.contains("im")) {
            am.im = number_array(v.at("im"), std::string(ctx) + ".im");
            if (am.im.size() != am.re.size()) {
                fail(std::string(ctx) + ": re and im have different lengths");
            }
        } else {
            am.im.assign(am.re.size(), 0.0);
        }
        return am;
    }
    if (v.contains("theta") || v.contains("phi")) {
        check_known_keys(v, ctx, {"theta", "phi"});
        return BlochSpec{number_field(v, ctx, "theta"), number_field(v, ctx, "phi")};
    }
    if (v.contains("a_param")) {
        check_known_keys(v, ctx, {"a_param"});
        const double a = number_field(v, ctx, "a_param");
        if (!(a >= 0.0)) fail(std::string(ctx) + ".a_param must be >= 0");
        return LensSpec{a};
    }
    fail(std::string(ctx) + " must be one of {re, im}, {theta, phi}, {a_param}");
}

OperatorSpec parse_operator(const json& v, const char* ctx) {
    check_object(v, ctx);
    if (v.contains("a") || v.contains("scale")) {
        check_known_keys(v, ctx, {"a", "scale"});
        const std::vector<double> comps =
            number_array(member(v, ctx, "a"), std::string(ctx) + ".a");
        if (comps.size() != 3) fail(std::string(ctx) + ".a must have exactly 3 components");
        PauliSpec p;
        p.a = {comps[0], comps[1], comps[2]};
        if (v.contains("scale")) p.scale = as_number(v.at("scale"), std::string(ctx) + ".scale");
        return p;
    }
    if (v.contains("re") || v.contains("im")) {
        check_known_keys(v, ctx, {"re", "im"});
        DenseSpec d;
        d.re = number_matrix(member(v, ctx, "re"), std::string(ctx) + ".re");
        const std::size_t n = d.re.size();
        if (n < 2) fail(std::string(ctx) + ".re must be at least 2x2");
        for (const auto& row : d.re) {
            if (row.size() != n) fail(std::string(ctx) + ".re must be square");
        }
        if (v.contains("im")) {
            d.im = number_matrix(v.at("im"), std::string(ctx) + ".im");
            if (d.im.size() != n) fail(std::string(ctx) + ": re and im have different shapes");
            for (const auto& row : d.im) {
                if (row.size() != n) fail(std::string(ctx) + ": re and im have different shapes");
            }
        } else {
            d.im.assign(n, std::vector<double>(n, 0.0));
        }
        return d;
    }
    fail(std::string(ctx) + " must be a pauli combo {a, scale} or a dense matrix {re, im}");
}

PureState resolve_state(const StateSpec& spec, bool post_role, const char* field) {
    try {
        if (const auto* am = std::get_if<AmplitudesSpec>(&spec)) {
            std::vector<Complex> v(am->re.size());
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(am->re[i], am->im[i]);
            return normalize(v);
        }
        if (const auto* b = std::get_if<BlochSpec>(&spec)) {
            return state_from_angles(BlochPoint(b->theta, b->phi));
        }
        const auto& lens = std::get<LensSpec>(spec);
        if (post_role) {
            return normalize({Complex(1.0 + lens.a_param), Complex(1.0 - lens.a_param)});
        }
        return normalize({Complex(1.0), Complex(1.0)});
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError("scenario: " + std::string(field) + ": " + e.what());
    }
}

HermitianObservable resolve_operator(const OperatorSpec& spec, const char* field) {
    try {
        if (const auto* p = std::get_if<PauliSpec>(&spec)) {
            return pauli_observable(p->a, p->scale);
        }
        const auto& d = std::get<DenseSpec>(spec);
        const std::size_t n = d.re.size();
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(d.re[i][j], d.im[i][j]);
        }
        return HermitianObservable(std::move(m));
    } catch (const std::exception& e) {
        throw SchemaError("scenario: " + std::string(field) + ": " + e.what());
    }
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInputError(std::string("scenario: ") + e.what());
    }
    if (!root.is_object()) fail("top level must be a JSON object");
    check_known_keys(root, "scenario",
                     {"pre_state", "post_state", "observable", "observable2", "copies",
                      "theta_grid", "spectrum_check"});

    Scenario s;
    s.pre_state = parse_state(member(root, "scenario", "pre_state"), "pre_state");
    s.post_state = parse_state(member(root, "scenario", "post_state"), "post_state");
    s.observable = parse_operator(member(root, "scenario", "observable"), "observable");
    if (root.contains("observable2")) {
        s.observable2 = parse_operator(root.at("observable2"), "observable2");
    }
    if (root.contains("copies")) {
        const std::int64_t c = integer_field(root, "scenario", "copies");
        if (c < 1) fail("copies must be a positive integer");
        if (c > std::numeric_limits<int>::max()) fail("copies is too large");
        s.copies = int(c);
    }

    const json& tg = member(root, "scenario", "theta_grid");
    check_object(tg, "theta_grid");
    check_known_keys(tg, "theta_grid", {"min", "max", "count"});
    s.theta_grid.min = number_field(tg, "theta_grid", "min");
    s.theta_grid.max = number_field(tg, "theta_grid", "max");
    const std::int64_t count = integer_field(tg, "theta_grid", "count");
    if (count < 2) fail("theta_grid.count must be at least 2");
    s.theta_grid.count = std::size_t(count);

    if (root.contains("spectrum_check")) {
        const json& sp = root.at("spectrum_check");
        check_object(sp, "spectrum_check");
        check_known_keys(sp, "spectrum_check", {"period", "samples"});
        const double period = number_field(sp, "spectrum_check", "period");
        if (!(period > 0.0)) fail("spectrum_check.period must be positive");
        const std::int64_t samples = integer_field(sp, "spectrum_check", "samples");
        if (samples < 1) fail("spectrum_check.samples must be positive");
        s.spectrum_check = SpectrumSpec{period, std::size_t(samples)};
    }
    return s;
}

Scenario parse_scenario(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw FileNotFoundError("scenario file not found: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFoundError("scenario file not readable: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

ResolvedScenario resolve_scenario(const Scenario& s) {
    PureState pre = resolve_state(s.pre_state, false, "pre_state");
    PureState post = resolve_state(s.post_state, true, "post_state");
    HermitianObservable obs = resolve_operator(s.observable, "observable");
    std::optional<HermitianObservable> obs2;
    if (s.observable2) obs2 = resolve_operator(*s.observable2, "observable2");

    if (pre.dim() != post.dim()) {
        fail("pre_state and post_state have different dimensions");
    }
    if (obs.dim() != pre.dim()) {
        fail("observable dimension does not match the states");
    }
    if (obs2 && obs2->dim() != pre.dim()) {
        fail("observable2 dimension does not match the states");
    }

    std::optional<PauliAxis> axis;
    if (const auto* p = std::get_if<PauliSpec>(&s.observable)) {
        axis = PauliAxis{{p->a[0] * p->scale, p->a[1] * p->scale, p->a[2] * p->scale}};
    }

    try {
        ThetaGrid grid(s.theta_grid.min, s.theta_grid.max, s.theta_grid.count);
        return ResolvedScenario{std::move(pre),  std::move(post), std::move(obs),
                                std::move(obs2), axis,            s.copies,
                                grid,            s.spectrum_check};
    } catch (const std::invalid_argument& e) {
        throw SchemaError("scenario: theta_grid: " + std::string(e.what()));
    }
}

ResolvedScenario load_scenario(const std::filesystem::path& path) {
    return resolve_scenario(parse_scenario(path));
}

}  // namespace weaklens
