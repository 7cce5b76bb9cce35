#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hspace/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitSamplingExhausted = 3;

#ifndef HSPACE_FIXTURES_DIR
#define HSPACE_FIXTURES_DIR "fixtures"
#endif

std::vector<fs::path> fixture_files(const std::string& dir) {
    std::vector<fs::path> out;
    if (!fs::is_directory(dir)) return out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

int run_one(const std::string& config_path, const std::string& out_path,
            const std::string& format, const std::vector<std::string>& suites, long seed,
            int points, bool timings) {
    hspace::RunConfig cfg;
    try {
        cfg = hspace::load_config(config_path);
        if (!suites.empty()) {
            for (const auto& s : suites)
                if (std::find(hspace::kSuiteNames.begin(), hspace::kSuiteNames.end(), s) ==
                    hspace::kSuiteNames.end())
                    throw hspace::ValidationError("suites", "unknown suite \"" + s + "\"");
            cfg.suites = suites;
            cfg.echo["suites"] = suites;
        }
        if (seed >= 0) {
            cfg.sampler.seed = static_cast<std::uint64_t>(seed);
            cfg.echo["sampler"]["seed"] = cfg.sampler.seed;
        }
        if (points > 0) {
            cfg.sampler.count = points;
            cfg.echo["sampler"]["count"] = points;
        }
        if (timings) cfg.include_timing = true;
    } catch (const hspace::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }

    hspace::RunReport rep;
    try {
        rep = hspace::run_verify(cfg);
    } catch (const hspace::SamplingError& e) {
        std::cerr << "sampling exhausted: " << e.what() << "\n";
        return kExitSamplingExhausted;
    } catch (const hspace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    const std::string bytes = hspace::emit_report(rep, format, cfg.include_timing);
    if (out_path.empty()) {
        std::cout << bytes;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write report to " << out_path << "\n";
            return kExitConfigError;
        }
        out << bytes;
    }
    return rep.all_pass ? kExitPass : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for the six-dimensional canonical metric families"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json", fixtures_dir = HSPACE_FIXTURES_DIR;
    std::vector<std::string> suites;
    long seed = -1;
    int points = 0;
    bool timings = false;

    auto* verify = app.add_subcommand("verify", "run the verification suites on one config");
    verify->add_option("config", config_path, "config JSON file")->required();
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--suite", suites, "subset of suites to run");
    verify->add_option("--seed", seed, "override sampler seed");
    verify->add_option("--points", points, "override sampler count");
    verify->add_flag("--timings", timings, "include wall-clock in the JSON report");

    auto* fixtures = app.add_subcommand("fixtures", "operate on the shipped fixture set");
    fixtures->require_subcommand(1);
    auto* flist = fixtures->add_subcommand("list", "list shipped fixtures");
    flist->add_option("--dir", fixtures_dir, "fixtures directory");
    auto* frun = fixtures->add_subcommand("run-all", "run every shipped fixture");
    frun->add_option("--dir", fixtures_dir, "fixtures directory");
    frun->add_option("--points", points, "override sampler count");
    frun->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    if (*flist) {
        for (const auto& f : fixture_files(fixtures_dir)) std::cout << f.stem().string() << "\n";
        return kExitPass;
    }
    if (*frun) {
        const auto files = fixture_files(fixtures_dir);
        if (files.empty()) {
            std::cerr << "no fixtures found under " << fixtures_dir << "\n";
            return kExitConfigError;
        }
        int rc = kExitPass;
        for (const auto& f : files) {
            std::cout << "== " << f.stem().string() << "\n";
            const int one = run_one(f.string(), "", "text", {}, -1, points, false);
            if (one != kExitPass) rc = one;
        }
        return rc;
    }
    return run_one(config_path, out_path, format, suites, seed, points, timings);
}
