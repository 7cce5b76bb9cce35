#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hspace/metrics.hpp"

namespace hspace {

inline const std::vector<std::string> kSuiteNames = {
    "metric", "tensors", "eisenhart", "integrability", "vanishing", "proof_ids", "curvature"};

struct RunConfig {
    HSpaceSpec spec;
    SamplerConfig sampler;
    std::vector<std::string> suites = kSuiteNames;
    double a1 = 1.0;
    std::map<std::string, double> tolerances;  // suite name -> override
    int planes_per_point = 10;
    std::pair<int, int> expected_signature{2, 4};
    bool include_timing = false;
    nlohmann::json echo;  // normalized config for the report
};

/// Parses and validates a config document. Throws ValidationError naming the
/// offending field; malformed JSON surfaces as ValidationError("json", ...)
/// with the parser's line/position message.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

ParamFn parse_param_fn(const nlohmann::json& j, const std::string& field);
nlohmann::json param_fn_to_json(const ParamFn& f);

}  // namespace hspace
