// Acceptance suite: runs every shipped fixture through the verification
// engine and prints one PASS/FAIL line per criterion. Exit code 0 iff all
// criteria pass.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hspace/curvature.hpp"
#include "hspace/solution.hpp"
#include "hspace/verify.hpp"

using namespace hspace;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d: %-34s %s  (%s)\n", num, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fixture_path(const std::string& stem) {
    return std::string(HSPACE_FIXTURES_DIR) + "/" + stem + ".json";
}

const std::vector<std::string> kGeneric = {"t2211_generic", "t321_generic", "t33_generic",
                                           "t411_generic", "t51_generic"};
const std::vector<std::string> kConstant = {"t2211_constcurv", "t321_constcurv",
                                            "t33_constcurv", "t411_constcurv",
                                            "t51_constcurv"};

const SuiteResult* find(const RunReport& rep, const std::string& name) {
    for (const auto& s : rep.suites)
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace

int main() {
    std::map<std::string, RunReport> generic_reports;
    for (const auto& stem : kGeneric) {
        RunConfig cfg = load_config(fixture_path(stem));
        cfg.suites = {"metric", "tensors", "eisenhart", "integrability", "vanishing",
                      "proof_ids"};
        generic_reports[stem] = run_verify(cfg);
    }

    auto worst_of = [&](const std::string& suite, double* worst_out) {
        bool pass = true;
        double worst = 0.0;
        for (const auto& stem : kGeneric) {
            const SuiteResult* s = find(generic_reports[stem], suite);
            pass = pass && s && s->pass;
            if (s) worst = std::max(worst, s->worst);
        }
        *worst_out = worst;
        return pass;
    };

    double worst;
    {
        const bool pass = worst_of("eisenhart", &worst);
        char d[96];
        std::snprintf(d, sizeof d, "worst residual %.2e, tol 1e-8, 100 pts x 5 fixtures", worst);
        criterion(1, "projective-pair exactness", pass, d);
    }
    {
        bool pass = worst_of("integrability", &worst);
        double flip = 1e300;
        for (const auto& stem : kGeneric) {
            const SuiteResult* s = find(generic_reports[stem], "integrability");
            if (s && s->details.count("flip_witness"))
                flip = std::min(flip, s->details.at("flip_witness"));
        }
        pass = pass && flip > 1e-2;
        char d[96];
        std::snprintf(d, sizeof d, "worst %.2e, tol 1e-7; sign-flip witness %.2e > 1e-2", worst,
                      flip);
        criterion(2, "integrability exactness", pass, d);
    }
    {
        const bool pass = worst_of("vanishing", &worst);
        char d[96];
        std::snprintf(d, sizeof d, "worst %.2e, tol 1e-9, zero pattern + plain partials", worst);
        criterion(3, "vanishing conditions", pass, d);
    }
    {
        const bool pass = worst_of("proof_ids", &worst);
        char d[96];
        std::snprintf(d, sizeof d, "worst %.2e over the curated identity set, tol 1e-8", worst);
        criterion(4, "proof identities", pass, d);
    }
    {
        bool pass = true;
        double wspread_c = 0.0, wspread_g = 1e300;
        for (const auto& stem : kConstant) {
            RunConfig cfg = load_config(fixture_path(stem));
            cfg.suites = {"curvature"};
            const RunReport rep = run_verify(cfg);
            const SuiteResult* s = find(rep, "curvature");
            pass = pass && s && s->pass && s->details.at("predicate") == 1.0;
            if (s) wspread_c = std::max(wspread_c, s->worst);
        }
        for (const auto& stem : kGeneric) {
            RunConfig cfg = load_config(fixture_path(stem));
            cfg.suites = {"curvature"};
            const RunReport rep = run_verify(cfg);
            const SuiteResult* s = find(rep, "curvature");
            pass = pass && s && s->pass && s->details.at("predicate") == 0.0;
            if (s) wspread_g = std::min(wspread_g, s->worst);
        }
        char d[120];
        std::snprintf(d, sizeof d,
                      "constant: spread <= %.2e (tol 1e-8); generic: spread >= %.2e (min 1e-3)",
                      wspread_c, wspread_g);
        criterion(5, "constant-curvature equivalence", pass, d);
    }
    {
        bool pass = true;
        double wfd = 0.0;
        for (const auto& stem : kGeneric) {
            const SuiteResult* s = find(generic_reports[stem], "metric");
            pass = pass && s && s->pass;
            if (s) wfd = std::max(wfd, s->details.at("fd_agreement"));
        }
        pass = pass && wfd <= 1e-6;
        char d[96];
        std::snprintf(d, sizeof d, "jet vs central differences (h=1e-4): worst %.2e, tol 1e-6",
                      wfd);
        criterion(6, "differentiation engine", pass, d);
    }
    {
        bool pass = true;
        double wcompat = 0.0, wsym = 0.0;
        for (const auto& stem : kGeneric) {
            const SuiteResult* s = find(generic_reports[stem], "tensors");
            pass = pass && s && s->pass;
            if (s) {
                wcompat = std::max(wcompat, s->details.at("metric_compatibility"));
                wsym = std::max(wsym, s->details.at("riemann_identities"));
            }
        }
        char d[96];
        std::snprintf(d, sizeof d, "compat %.2e (tol 1e-12); curvature identities %.2e (1e-10)",
                      wcompat, wsym);
        criterion(7, "tensor identities", pass, d);
    }
    {
        bool pass = true;
        double worst_resid = 0.0;
        for (const auto& stem : kGeneric) {
            RunConfig base = load_config(fixture_path(stem));
            base.suites = {"eisenhart", "integrability", "vanishing", "proof_ids"};
            const Point p = sample_points(base.spec, base.sampler)[0];
            const MetricField m = metric_at(base.spec, p);
            const Jet2 phi1 = build_canonical_solution(base.spec, m, 1.0).phi;
            for (double a1 : {1.0, 2.0, -3.0}) {
                RunConfig cfg = base;
                cfg.a1 = a1;
                const RunReport rep = run_verify(cfg);
                for (const auto& s : rep.suites) {
                    pass = pass && s.pass;
                    worst_resid = std::max(worst_resid, s.worst);
                }
                // linear scaling of the defining function in all jet slots
                const Jet2 phia = build_canonical_solution(base.spec, m, a1).phi;
                auto near = [&](double x, double y) {
                    return std::fabs(x - a1 * y) <= 1e-12 * std::max(1.0, std::fabs(x));
                };
                pass = pass && near(phia.val, phi1.val);
                for (int i = 0; i < kDim; ++i) pass = pass && near(phia.grad[i], phi1.grad[i]);
                for (int i = 0; i < kDim * kDim; ++i)
                    pass = pass && near(phia.hess[i], phi1.hess[i]);
            }
        }
        char d[96];
        std::snprintf(d, sizeof d, "a1 in {1, 2, -3}: linear jets, suites pass (worst %.2e)",
                      worst_resid);
        criterion(8, "scale covariance", pass, d);
    }
    {
        RunConfig cfg = load_config(fixture_path("t2211_generic"));
        cfg.sampler.count = 25;
        cfg.echo["sampler"]["count"] = 25;
        const std::string b1 = emit_report(run_verify(cfg), "json", false);
        const std::string b2 = emit_report(run_verify(cfg), "json", false);
        char d[64];
        std::snprintf(d, sizeof d, "two runs, %zu bytes each", b1.size());
        criterion(9, "byte-identical reports", b1 == b2 && !b1.empty(), d);
    }

    if (g_failures == 0)
        std::printf("all acceptance criteria PASS\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
