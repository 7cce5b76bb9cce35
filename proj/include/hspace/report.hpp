#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hspace/config.hpp"

namespace hspace {

inline constexpr const char* kVersion = "hspace-verify 1.0.0";

struct SuiteResult {
    std::string name;
    bool pass = false;
    double tolerance = 0.0;
    double worst = 0.0;
    Point worst_point{};
    bool has_worst_point = false;
    std::map<std::string, double> details;
    std::vector<std::string> errors;
};

struct Calibration {
    double riemann_sign = 1.0;
    std::string t321_g66;
    std::string t411_tail;
    std::string t33_atilde;
    std::string shift_orientation = "toward_lower_index";
};

struct RunReport {
    nlohmann::json config_echo;
    Calibration calibration;
    std::vector<SuiteResult> suites;
    bool all_pass = false;
    double wall_clock_ms = 0.0;
    std::string version = kVersion;
};

/// json: canonical bytes (sorted keys, floats as shortest-exact %.17g);
/// text: one PASS/FAIL line per suite. Timing is included only in text or
/// when the config opted in (byte determinism of the json report).
std::string emit_report(const RunReport& r, const std::string& format, bool include_timing);

/// Canonical JSON serialization used by emit_report ("json" format).
std::string canonical_json(const nlohmann::json& j);

}  // namespace hspace
