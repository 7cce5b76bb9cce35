#include "hspace/config.hpp"

#include <algorithm>
#include <fstream>

#include "hspace/errors.hpp"

namespace hspace {

using nlohmann::json;

ParamFn parse_param_fn(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError(field, field + ": expected an object with a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "polynomial") {
        if (!j.contains("coeffs") || !j.at("coeffs").is_array())
            throw ValidationError(field, field + ": polynomial needs a \"coeffs\" array");
        return ParamFn::polynomial(j.at("coeffs").get<std::vector<double>>());
    }
    if (kind == "sinusoid")
        return ParamFn::sinusoid(j.value("amplitude", 1.0), j.value("omega", 1.0),
                                 j.value("phase", 0.0), j.value("offset", 0.0));
    if (kind == "constant") {
        if (!j.contains("value"))
            throw ValidationError(field, field + ": constant needs a \"value\"");
        return ParamFn::constant(j.at("value").get<double>());
    }
    throw ValidationError(field, field + ": unknown kind \"" + kind + "\"");
}

json param_fn_to_json(const ParamFn& f) {
    switch (f.kind) {
        case ParamFn::Kind::Polynomial:
            return {{"kind", "polynomial"}, {"coeffs", f.coeffs}};
        case ParamFn::Kind::Sinusoid:
            return {{"kind", "sinusoid"},
                    {"amplitude", f.amplitude},
                    {"omega", f.omega},
                    {"phase", f.phase},
                    {"offset", f.offset}};
        case ParamFn::Kind::Constant:
            return {{"kind", "constant"}, {"value", f.value}};
    }
    return {};
}

RunConfig parse_config(const json& j) {
    RunConfig cfg;

    if (!j.contains("type")) throw ValidationError("type", "missing \"type\"");
    const std::string tag = j.at("type").get<std::string>();
    const auto type = parse_type(tag);
    if (!type) throw ValidationError("type", "unknown type tag \"" + tag + "\"");
    cfg.spec.type = *type;

    cfg.spec.eps = j.value("eps", 0);
    if (type_has_eps_tilde(cfg.spec.type)) cfg.spec.eps_tilde = j.value("eps_tilde", 0);
    cfg.spec.a = j.value("a", 0.0);
    cfg.spec.relax_eps_constraint = j.value("relax_eps_constraint", false);

    if (j.contains("signs")) {
        if (!j.at("signs").is_object())
            throw ValidationError("signs", "\"signs\" must map e<i> to +/-1");
        for (const auto& [key, val] : j.at("signs").items()) {
            if (key.size() != 2 || key[0] != 'e' || key[1] < '1' || key[1] > '6')
                throw ValidationError("signs", "bad sign key \"" + key + "\" (e1..e6)");
            cfg.spec.signs[static_cast<size_t>(key[1] - '1')] = val.get<int>();
        }
    }
    if (j.contains("theta")) cfg.spec.theta = parse_param_fn(j.at("theta"), "theta");
    if (j.contains("omega")) cfg.spec.omega = parse_param_fn(j.at("omega"), "omega");
    if (j.contains("f")) {
        if (!j.at("f").is_object())
            throw ValidationError("f", "\"f\" must map simple-root labels to functions");
        for (const auto& [key, val] : j.at("f").items()) {
            if (key.size() != 1 || key[0] < '1' || key[0] > '6')
                throw ValidationError("f", "bad simple-root label \"" + key + "\" (1..6)");
            cfg.spec.f_simple[key[0] - '1'] = parse_param_fn(val, "f." + key);
        }
    }

    if (j.contains("sampler")) {
        const auto& s = j.at("sampler");
        if (s.contains("box")) {
            const auto& box = s.at("box");
            if (!box.is_array() || box.size() != kDim)
                throw ValidationError("sampler.box", "box must list 6 [low, high] pairs");
            for (int i = 0; i < kDim; ++i) {
                const auto& b = box.at(static_cast<size_t>(i));
                if (!b.is_array() || b.size() != 2)
                    throw ValidationError("sampler.box", "box entries are [low, high] pairs");
                cfg.sampler.box[static_cast<size_t>(i)] = {b.at(0).get<double>(),
                                                           b.at(1).get<double>()};
            }
        }
        cfg.sampler.count = s.value("count", cfg.sampler.count);
        cfg.sampler.seed = s.value("seed", cfg.sampler.seed);
        cfg.sampler.margin = s.value("margin", cfg.sampler.margin);
    }

    cfg.a1 = j.value("a1", 1.0);
    cfg.planes_per_point = j.value("planes_per_point", 10);
    cfg.include_timing = j.value("timings", false);

    if (j.contains("suites")) {
        cfg.suites = j.at("suites").get<std::vector<std::string>>();
        if (cfg.suites.empty())
            throw ValidationError("suites", "at least one suite must be selected");
        for (const auto& s : cfg.suites)
            if (std::find(kSuiteNames.begin(), kSuiteNames.end(), s) == kSuiteNames.end())
                throw ValidationError("suites", "unknown suite \"" + s + "\"");
    }
    if (j.contains("tolerances")) {
        for (const auto& [key, val] : j.at("tolerances").items()) {
            const double t = val.get<double>();
            if (!(t > 0.0))
                throw ValidationError("tolerances", "tolerance for \"" + key + "\" must be > 0");
            cfg.tolerances[key] = t;
        }
    }
    if (j.contains("expected_signature")) {
        const auto& e = j.at("expected_signature");
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("expected_signature", "expected [n_plus, n_minus]");
        cfg.expected_signature = {e.at(0).get<int>(), e.at(1).get<int>()};
    }

    validate_spec(cfg.spec);

    // normalized echo for the report
    json echo;
    echo["type"] = to_string(cfg.spec.type);
    echo["eps"] = cfg.spec.eps;
    if (type_has_eps_tilde(cfg.spec.type)) echo["eps_tilde"] = cfg.spec.eps_tilde;
    echo["a"] = cfg.spec.a;
    {
        json signs;
        for (int idx : sign_indices_of(cfg.spec.type))
            signs["e" + std::to_string(idx + 1)] = cfg.spec.signs[static_cast<size_t>(idx)];
        echo["signs"] = signs;
    }
    echo["theta"] = param_fn_to_json(cfg.spec.theta);
    if (type_has_eps_tilde(cfg.spec.type)) echo["omega"] = param_fn_to_json(cfg.spec.omega);
    {
        json fs;
        for (const auto& [coord, fn] : cfg.spec.f_simple)
            fs[std::to_string(coord + 1)] = param_fn_to_json(fn);
        echo["f"] = fs;
    }
    echo["relax_eps_constraint"] = cfg.spec.relax_eps_constraint;
    echo["sampler"] = {{"box", cfg.sampler.box},
                       {"count", cfg.sampler.count},
                       {"seed", cfg.sampler.seed},
                       {"margin", cfg.sampler.margin}};
    echo["a1"] = cfg.a1;
    echo["suites"] = cfg.suites;
    echo["tolerances"] = cfg.tolerances;
    echo["planes_per_point"] = cfg.planes_per_point;
    echo["expected_signature"] = {cfg.expected_signature.first, cfg.expected_signature.second};
    cfg.echo = echo;
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("path", "cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("json", std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

}  // namespace hspace
