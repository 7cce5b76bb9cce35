#include "hspace/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hspace {

using nlohmann::json;

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void append_number(std::string& out, double v) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void write(std::string& out, const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann objects are key-sorted
                if (!first) out += ',';
                first = false;
                append_escaped(out, it.key());
                out += ':';
                write(out, it.value());
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                write(out, j[i]);
            }
            out += ']';
            break;
        }
        case json::value_t::string:
            append_escaped(out, j.get<std::string>());
            break;
        case json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            break;
        case json::value_t::number_float:
            append_number(out, j.get<double>());
            break;
        default:
            out += "null";
    }
}

json suite_to_json(const SuiteResult& s) {
    json j;
    j["pass"] = s.pass;
    j["tolerance"] = s.tolerance;
    j["worst"] = s.worst;
    if (s.has_worst_point) j["worst_point"] = s.worst_point.x;
    j["details"] = s.details;
    j["errors"] = s.errors;
    return j;
}

}  // namespace

std::string canonical_json(const json& j) {
    std::string out;
    write(out, j);
    out += '\n';
    return out;
}

std::string emit_report(const RunReport& r, const std::string& format, bool include_timing) {
    if (format == "json") {
        json j;
        j["version"] = r.version;
        j["config"] = r.config_echo;
        j["calibration"] = {{"riemann_sign", r.calibration.riemann_sign},
                            {"t321_g66", r.calibration.t321_g66},
                            {"t411_tail", r.calibration.t411_tail},
                            {"t33_atilde", r.calibration.t33_atilde},
                            {"shift_orientation", r.calibration.shift_orientation}};
        json suites;
        for (const auto& s : r.suites) suites[s.name] = suite_to_json(s);
        j["suites"] = suites;
        j["pass"] = r.all_pass;
        if (include_timing) j["wall_clock_ms"] = r.wall_clock_ms;
        return canonical_json(j);
    }
    if (format != "text") throw ValidationError("format", "unknown format \"" + format + "\"");

    std::ostringstream os;
    os << r.version << "\n";
    os << "config: " << r.config_echo.value("type", std::string("?"))
       << "  points=" << r.config_echo["sampler"].value("count", 0)
       << "  seed=" << r.config_echo["sampler"].value("seed", 0) << "\n";
    os << "calibration: riemann_sign=" << (r.calibration.riemann_sign > 0 ? "+1" : "-1")
       << " t321_g66=" << r.calibration.t321_g66 << " t411_tail=" << r.calibration.t411_tail
       << " t33_atilde=" << r.calibration.t33_atilde << "\n";
    for (const auto& s : r.suites) {
        char line[256];
        std::snprintf(line, sizeof line, "suite %-14s %s  worst %.3e  tol %.1e\n", s.name.c_str(),
                      s.pass ? "PASS" : "FAIL", s.worst, s.tolerance);
        os << line;
        for (const auto& e : s.errors) os << "    error: " << e << "\n";
    }
    os << "overall: " << (r.all_pass ? "PASS" : "FAIL");
    os << "  (wall " << static_cast<long>(r.wall_clock_ms) << " ms)";
    os << "\n";
    return os.str();
}

}  // namespace hspace
