#include "hspace/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hspace/tensor.hpp"

namespace hspace {

namespace {

struct SimpleRootData {
    int coord;
    double f, fp, fpp, gss;
};

// block eigen-coordinates entering the rho formulas, per type
std::vector<int> rho_p_coords(HSpaceType t) {
    switch (t) {
        case HSpaceType::T2211: return {1, 3};
        case HSpaceType::T411: return {3};
        default: return {};
    }
}

}  // namespace

CurvatureReport curvature_quantities(const HSpaceSpec& spec, const Point& p,
                                     const MetricOptions& opts) {
    CurvatureReport rep;
    rep.point = p;
    const auto pcs = rho_p_coords(spec.type);
    if (pcs.empty()) return rep;

    const auto f = eigenvalue_functions(spec, p);
    const MetricField m = metric_at(spec, p, opts);
    auto fval = [&](int i) { return f[static_cast<size_t>(i)].val; };

    std::vector<SimpleRootData> sig;
    for (int s : simple_roots_of(spec.type))
        sig.push_back({s, fval(s), f[static_cast<size_t>(s)].grad[static_cast<size_t>(s)],
                       f[static_cast<size_t>(s)].h(s, s), m.at(s, s).val});

    auto rho_pair = [&](int pc, int qc) {
        double s = 0.0;
        for (const auto& sr : sig)
            s += sr.fp * sr.fp / ((sr.f - fval(pc)) * (sr.f - fval(qc)) * sr.gss);
        return -0.25 * s;
    };

    for (int pc : pcs) rep.rho_p[pc] = rho_pair(pc, pc);
    for (int pc : pcs)
        for (int qc : pcs)
            if (pc != qc) rep.rho_pq[{pc, qc}] = rho_pair(pc, qc);

    for (const auto& sr : sig)
        for (int pc : pcs) {
            // isolated sigma term, written so f'_sigma = 0 stays finite
            double bracket = 2.0 * sr.fpp - sr.fp * sr.fp / (sr.f - fval(pc));
            double isum = 0.0;
            for (int i = 0; i < kDim; ++i)
                if (i != sr.coord) isum += 1.0 / (fval(i) - sr.f);
            bracket += sr.fp * sr.fp * isum;
            double v = -0.25 * bracket / ((sr.f - fval(pc)) * sr.gss);
            for (const auto& other : sig)
                if (other.coord != sr.coord)
                    v += -0.25 * other.fp * other.fp /
                         ((other.f - fval(pc)) * (other.f - sr.f) * other.gss);
            rep.rho_sigma_p[{sr.coord, pc}] = v;
        }

    if (spec.type == HSpaceType::T411) {
        rep.has_gamma = true;
        double g1 = 0.0, g2 = 0.0;
        for (const auto& sr : sig) {
            const double d = sr.f - fval(3);
            g1 += sr.fp * sr.fp / (d * d * d * sr.gss);
            g2 += sr.fp * sr.fp / (d * d * d * d * sr.gss);
        }
        rep.gamma1 = -0.25 * g1;
        rep.gamma2 = -0.25 * g2;
    }
    return rep;
}

PredicateReport constant_curvature_predicate(const HSpaceSpec& spec,
                                             const std::vector<Point>& samples, double tol,
                                             const MetricOptions& opts) {
    PredicateReport rep;
    auto worst_of = [&](const std::string& name, double v) {
        auto& slot = rep.parts[name];
        slot = std::max(slot, std::fabs(v));
    };

    rep.parts["eps"] = std::fabs(double(spec.eps));
    if (type_has_eps_tilde(spec.type)) rep.parts["eps_tilde"] = std::fabs(double(spec.eps_tilde));

    for (const Point& p : samples) {
        switch (spec.type) {
            case HSpaceType::T2211: {
                const auto q = curvature_quantities(spec, p, opts);
                for (const auto& [pc, rp] : q.rho_p) {
                    for (const auto& [key, rsp] : q.rho_sigma_p)
                        if (key.second == pc)
                            worst_of("rho_p-rho_sigma_p", rp - rsp);
                    for (const auto& [key, rpq] : q.rho_pq)
                        if (key.first == pc) worst_of("rho_p-rho_pq", rp - rpq);
                }
                break;
            }
            case HSpaceType::T411: {
                const auto q = curvature_quantities(spec, p, opts);
                for (const auto& [pc, rp] : q.rho_p)
                    for (const auto& [key, rsp] : q.rho_sigma_p)
                        if (key.second == pc) worst_of("rho_p-rho_sigma_p", rp - rsp);
                worst_of("gamma1", q.gamma1);
                worst_of("gamma2", q.gamma2);
                break;
            }
            case HSpaceType::T321:
            case HSpaceType::T51: {
                const auto f = eigenvalue_functions(spec, p);
                worst_of("f6_prime", f[5].grad[5]);
                break;
            }
            case HSpaceType::T33:
                break;
        }
    }

    rep.worst = 0.0;
    for (const auto& [name, v] : rep.parts) {
        (void)name;
        rep.worst = std::max(rep.worst, v);
    }
    rep.holds = rep.worst <= tol;
    return rep;
}

CrossValidationReport cross_validate_constant_curvature(const HSpaceSpec& spec,
                                                        const std::vector<Point>& samples,
                                                        int planes_per_point, std::uint64_t seed,
                                                        const MetricOptions& opts) {
    CrossValidationReport rep;
    rep.predicate = constant_curvature_predicate(spec, samples, 1e-10, opts).holds;

    std::mt19937_64 eng(seed);
    auto uniform = [&eng]() { return 2.0 * (double(eng() >> 11) * 0x1.0p-53) - 1.0; };

    double kmin = std::numeric_limits<double>::infinity();
    double kmax = -std::numeric_limits<double>::infinity();
    int used = 0;
    for (const Point& p : samples) {
        const MetricField m = metric_at(spec, p, opts);
        const RiemannTensor r = riemann(christoffel(m), m);
        int got = 0, tries = 0;
        while (got < planes_per_point && tries < 100 * planes_per_point) {
            ++tries;
            std::array<double, kDim> u, v;
            for (int i = 0; i < kDim; ++i) {
                u[static_cast<size_t>(i)] = uniform();
                v[static_cast<size_t>(i)] = uniform();
            }
            try {
                // generous margin keeps the K quotient well conditioned
                const double K = sectional_curvature(r, m, u, v, 5e-2);
                kmin = std::min(kmin, K);
                kmax = std::max(kmax, K);
                ++got;
                ++used;
            } catch (const DegeneracyError&) {
                continue;  // resample the plane
            }
        }
        if (got < planes_per_point)
            throw SamplingError("could not draw enough admissible planes", "plane denominator");
    }
    rep.planes_used = used;
    rep.degenerate_report = used < 2;
    rep.k_min = used ? kmin : 0.0;
    rep.k_max = used ? kmax : 0.0;
    rep.spread = used ? kmax - kmin : 0.0;
    return rep;
}

}  // namespace hspace
