#include "hspace/verify.hpp"

#include <chrono>
#include <cmath>

#include "hspace/curvature.hpp"
#include "hspace/solution.hpp"
#include "hspace/tensor.hpp"

namespace hspace {

namespace {

constexpr double kFloor = 1e-30;

double tol_or(const RunConfig& cfg, const std::string& key, double dflt) {
    auto it = cfg.tolerances.find(key);
    return it == cfg.tolerances.end() ? dflt : it->second;
}

void record_error(SuiteResult& s, const std::exception& e) {
    if (s.errors.size() < 8) s.errors.push_back(e.what());
    s.pass = false;
}

void track_worst(SuiteResult& s, double value, const Point& p) {
    if (value > s.worst || !s.has_worst_point) {
        s.worst = std::max(s.worst, value);
        if (value >= s.worst) {
            s.worst_point = p;
            s.has_worst_point = true;
        }
    }
}

SuiteResult metric_suite(const RunConfig& cfg, const std::vector<Point>& samples,
                         const MetricOptions& opts) {
    SuiteResult s;
    s.name = "metric";
    s.tolerance = tol_or(cfg, "metric", 1e-12);
    const double fd_tol = tol_or(cfg, "metric_fd", 1e-6);
    const double h = 1e-4;
    s.pass = true;
    double worst_inv = 0.0, worst_fd = 0.0, worst_asym = 0.0;
    bool signature_ok = true;
    const size_t fd_points = std::min<size_t>(samples.size(), 20);

    for (size_t n = 0; n < samples.size(); ++n) {
        const Point& p = samples[n];
        try {
            const MetricField m = metric_at(cfg.spec, p, opts);
            double gmax = 0.0;
            for (int i = 0; i < kDim * kDim; ++i)
                gmax = std::max(gmax, std::fabs(m.g[static_cast<size_t>(i)].val));
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j)
                    worst_asym = std::max(
                        worst_asym, std::fabs(m.at(i, j).val - m.at(j, i).val) / std::max(gmax, 1.0));
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j) {
                    double prod = 0.0;
                    for (int k = 0; k < kDim; ++k) prod += m.at(i, k).val * m.inv(k, j).val;
                    const double r = std::fabs(prod - (i == j ? 1.0 : 0.0));
                    if (r > worst_inv) {
                        worst_inv = r;
                        track_worst(s, r, p);
                    }
                }
            if (check_signature(values_of(m.g)) !=
                std::make_pair(cfg.expected_signature.first, cfg.expected_signature.second))
                signature_ok = false;

            if (n < fd_points) {
                for (int i = 0; i < kDim; ++i)
                    for (int j = i; j < kDim; ++j) {
                        auto field = [&](const Point& q) {
                            return metric_at(cfg.spec, q, opts).at(i, j).val;
                        };
                        const Jet2 fd = fd_oracle(field, p, h);
                        const Jet2& jet = m.at(i, j);
                        const double scale = std::max(1.0, std::fabs(jet.val));
                        for (int k = 0; k < kDim; ++k)
                            worst_fd =
                                std::max(worst_fd, std::fabs(jet.grad[static_cast<size_t>(k)] -
                                                             fd.grad[static_cast<size_t>(k)]) /
                                                       std::max({scale,
                                                                 std::fabs(fd.grad[static_cast<size_t>(k)]),
                                                                 std::fabs(jet.grad[static_cast<size_t>(k)])}));
                        for (int k = 0; k < kDim; ++k)
                            for (int l = k; l < kDim; ++l)
                                worst_fd = std::max(
                                    worst_fd,
                                    std::fabs(jet.h(k, l) - fd.h(k, l)) /
                                        std::max({scale, std::fabs(fd.h(k, l)),
                                                  std::fabs(jet.h(k, l))}));
                    }
            }
        } catch (const Error& e) {
            record_error(s, e);
        }
    }
    s.worst = worst_inv;
    s.details["asymmetry"] = worst_asym;
    s.details["fd_agreement"] = worst_fd;
    s.details["signature_ok"] = signature_ok ? 1.0 : 0.0;
    if (worst_inv > s.tolerance || worst_fd > fd_tol || !signature_ok || worst_asym != 0.0)
        s.pass = false;
    return s;
}

SuiteResult tensors_suite(const RunConfig& cfg, const std::vector<Point>& samples,
                          const MetricOptions& opts) {
    SuiteResult s;
    s.name = "tensors";
    s.tolerance = tol_or(cfg, "tensors", 1e-10);
    const double compat_tol = tol_or(cfg, "tensors_compat", 1e-12);
    s.pass = true;
    double worst_compat = 0.0, worst_sym = 0.0;

    for (const Point& p : samples) {
        try {
            const MetricField m = metric_at(cfg.spec, p, opts);
            const Christoffel c = christoffel(m);

            double num = 0.0, den = 0.0;
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j)
                    for (int k = 0; k < kDim; ++k) {
                        const double pd = m.at(i, j).grad[static_cast<size_t>(k)];
                        double gb1 = 0.0, gb2 = 0.0;
                        for (int q = 0; q < kDim; ++q) {
                            gb1 += c.g(q, i, k) * m.at(q, j).val;
                            gb2 += c.g(q, j, k) * m.at(i, q).val;
                        }
                        num = std::max(num, std::fabs(pd - gb1 - gb2));
                        den = std::max({den, std::fabs(pd), std::fabs(gb1), std::fabs(gb2)});
                    }
            const double compat = num / std::max(den, kFloor);
            if (compat > worst_compat) {
                worst_compat = compat;
                track_worst(s, compat, p);
            }

            const RiemannTensor r = riemann(c, m);
            double rmax = 0.0, gmax = 0.0, gam_max = 0.0, dgam_max = 0.0;
            for (double v : r.low) rmax = std::max(rmax, std::fabs(v));
            for (int i = 0; i < kDim * kDim; ++i)
                gmax = std::max(gmax, std::fabs(m.g[static_cast<size_t>(i)].val));
            for (double v : c.gamma) gam_max = std::max(gam_max, std::fabs(v));
            for (double v : c.dgamma) dgam_max = std::max(dgam_max, std::fabs(v));
            // scale of the assembly terms: covers the identically-flat case
            const double scale =
                std::max({rmax, gmax * (dgam_max + gam_max * gam_max), kFloor});
            double sym = 0.0;
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j)
                    for (int k = 0; k < kDim; ++k)
                        for (int l = 0; l < kDim; ++l) {
                            const double v = r.lo(i, j, k, l);
                            sym = std::max(sym, std::fabs(v + r.lo(j, i, k, l)));
                            sym = std::max(sym, std::fabs(v + r.lo(i, j, l, k)));
                            sym = std::max(sym, std::fabs(v - r.lo(k, l, i, j)));
                            sym = std::max(sym,
                                           std::fabs(v + r.lo(i, k, l, j) + r.lo(i, l, j, k)));
                        }
            worst_sym = std::max(worst_sym, sym / scale);
        } catch (const Error& e) {
            record_error(s, e);
        }
    }
    s.worst = worst_sym;
    s.details["metric_compatibility"] = worst_compat;
    s.details["riemann_identities"] = worst_sym;
    if (worst_sym > s.tolerance || worst_compat > compat_tol) s.pass = false;
    return s;
}

SuiteResult residual_suite(const RunConfig& cfg, const std::vector<Point>& samples,
                           const MetricOptions& opts, const std::string& name) {
    SuiteResult s;
    s.name = name;
    const double dflt = name == "eisenhart" ? 1e-8 : name == "integrability" ? 1e-7 : 1e-9;
    s.tolerance = tol_or(cfg, name, dflt);
    s.pass = true;
    for (size_t n = 0; n < samples.size(); ++n) {
        const Point& p = samples[n];
        try {
            const MetricField m = metric_at(cfg.spec, p, opts);
            const Christoffel c = christoffel(m);
            const CanonicalSolution sol = build_canonical_solution(cfg.spec, m, cfg.a1, opts);
            double r = 0.0;
            if (name == "eisenhart") {
                r = eisenhart_residual(sol, m, c);
            } else if (name == "integrability") {
                r = integrability_residual(sol, m, c);
                if (n == 0) {
                    const double flipped = integrability_residual(sol, m, c, -kRiemannSign);
                    s.details["flip_witness"] = flipped;
                    if (flipped < tol_or(cfg, "integrability_flip_min", 1e-2)) s.pass = false;
                }
            } else {
                r = vanishing_checks(cfg.spec, sol, m, c);
            }
            track_worst(s, r, p);
        } catch (const Error& e) {
            record_error(s, e);
        }
    }
    if (s.worst > s.tolerance) s.pass = false;
    return s;
}

SuiteResult proof_ids_suite(const RunConfig& cfg, const std::vector<Point>& samples,
                            const MetricOptions& opts) {
    SuiteResult s;
    s.name = "proof_ids";
    s.tolerance = tol_or(cfg, "proof_ids", 1e-8);
    s.pass = true;
    for (const Point& p : samples) {
        try {
            const MetricField m = metric_at(cfg.spec, p, opts);
            const CanonicalSolution sol = build_canonical_solution(cfg.spec, m, cfg.a1, opts);
            for (const auto& [label, r] : proof_relation_checks(cfg.spec, sol, m)) {
                auto& slot = s.details[label];
                slot = std::max(slot, r);
                track_worst(s, r, p);
            }
        } catch (const Error& e) {
            record_error(s, e);
        }
    }
    if (s.worst > s.tolerance) s.pass = false;
    return s;
}

SuiteResult curvature_suite(const RunConfig& cfg, const std::vector<Point>& samples,
                            const MetricOptions& opts) {
    SuiteResult s;
    s.name = "curvature";
    const double spread_tol = tol_or(cfg, "curvature", 1e-8);
    const double spread_min = tol_or(cfg, "curvature_spread_min", 1e-3);
    const double pred_tol = tol_or(cfg, "curvature_predicate", 1e-10);
    s.pass = true;
    try {
        const auto pred = constant_curvature_predicate(cfg.spec, samples, pred_tol, opts);
        const auto cross = cross_validate_constant_curvature(
            cfg.spec, samples, cfg.planes_per_point, cfg.sampler.seed ^ 0x9e3779b97f4a7c15ULL,
            opts);
        s.worst = cross.spread;
        s.tolerance = pred.holds ? spread_tol : spread_min;
        s.details["predicate"] = pred.holds ? 1.0 : 0.0;
        s.details["k_min"] = cross.k_min;
        s.details["k_max"] = cross.k_max;
        s.details["planes_used"] = cross.planes_used;
        s.details["degenerate_report"] = cross.degenerate_report ? 1.0 : 0.0;
        for (const auto& [k, v] : pred.parts) s.details["cond_" + k] = v;
        s.pass = pred.holds ? cross.spread <= spread_tol : cross.spread >= spread_min;
    } catch (const Error& e) {
        record_error(s, e);
    }
    return s;
}

}  // namespace

RunReport run_verify(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.config_echo = cfg.echo;
    const MetricOptions opts;  // frozen calibrated readings
    rep.calibration.riemann_sign = kRiemannSign;
    rep.calibration.t321_g66 = to_string(opts.t321_g66);
    rep.calibration.t411_tail = to_string(opts.t411_tail);
    rep.calibration.t33_atilde = to_string(opts.t33_atilde);

    const auto samples = sample_points(cfg.spec, cfg.sampler, opts);

    rep.all_pass = true;
    for (const auto& name : cfg.suites) {
        SuiteResult r;
        if (name == "metric")
            r = metric_suite(cfg, samples, opts);
        else if (name == "tensors")
            r = tensors_suite(cfg, samples, opts);
        else if (name == "eisenhart" || name == "integrability" || name == "vanishing")
            r = residual_suite(cfg, samples, opts, name);
        else if (name == "proof_ids")
            r = proof_ids_suite(cfg, samples, opts);
        else
            r = curvature_suite(cfg, samples, opts);
        rep.all_pass = rep.all_pass && r.pass;
        rep.suites.push_back(std::move(r));
    }
    rep.wall_clock_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return rep;
}

}  // namespace hspace
