#pragma once

// Shared in-code fixtures: one generic (curved) and one constant-curvature
// configuration per metric family, matching the shipped JSON fixtures.

#include "hspace/metrics.hpp"

namespace hspace::testfix {

inline HSpaceSpec generic(HSpaceType t) {
    HSpaceSpec s;
    s.type = t;
    s.eps = 1;
    s.eps_tilde = 0;
    s.a = 4.0;
    s.theta = ParamFn::polynomial({0.0, 0.0, 0.1});
    s.omega = ParamFn::polynomial({1.0, 0.5});
    switch (t) {
        case HSpaceType::T2211:
            // compressed branch ranges keep the prefactors small so the
            // sectional-curvature spread stays decisively nonzero
            s.a = 3.5;
            s.theta = ParamFn::polynomial({0.0, 0.0, 0.25});
            s.signs = {1, 1, 1, 1, -1, 1};
            s.f_simple[4] = ParamFn::polynomial({3.0, 1.0});
            s.f_simple[5] = ParamFn::polynomial({5.0, 2.0});
            break;
        case HSpaceType::T321:
            s.signs = {1, 1, -1, 1, 1, 1};
            s.f_simple[5] = ParamFn::polynomial({8.0, 3.0});
            break;
        case HSpaceType::T33:
            s.signs = {1, 1, -1, 1, 1, 1};
            break;
        case HSpaceType::T411:
            s.signs = {1, 1, 1, 1, -1, 1};
            s.f_simple[4] = ParamFn::polynomial({4.0, 1.0});
            s.f_simple[5] = ParamFn::polynomial({6.0, 3.0});
            break;
        case HSpaceType::T51:
            s.signs = {1, 1, 1, 1, -1, 1};
            s.f_simple[5] = ParamFn::polynomial({4.0, 3.0});
            break;
    }
    return s;
}

inline HSpaceSpec constant_curvature(HSpaceType t) {
    HSpaceSpec s;
    s.type = t;
    s.eps = 0;
    s.eps_tilde = 0;
    s.a = 3.0;
    s.relax_eps_constraint = true;
    s.theta = ParamFn::polynomial({1.0, 0.25});
    s.omega = ParamFn::polynomial({1.0, 0.5});
    switch (t) {
        case HSpaceType::T2211:
            s.signs = {1, 1, 1, 1, -1, 1};
            s.f_simple[4] = ParamFn::constant(7.0);
            s.f_simple[5] = ParamFn::constant(12.0);
            break;
        case HSpaceType::T321:
            s.signs = {1, 1, -1, 1, 1, 1};
            s.f_simple[5] = ParamFn::constant(7.0);
            break;
        case HSpaceType::T33:
            s.signs = {1, 1, -1, 1, 1, 1};
            break;
        case HSpaceType::T411:
            s.signs = {1, 1, 1, 1, -1, 1};
            s.f_simple[4] = ParamFn::constant(3.0);
            s.f_simple[5] = ParamFn::constant(7.0);
            break;
        case HSpaceType::T51:
            s.signs = {1, 1, 1, 1, -1, 1};
            s.f_simple[5] = ParamFn::constant(5.0);
            break;
    }
    return s;
}

inline const std::vector<HSpaceType>& all_types() {
    static const std::vector<HSpaceType> k = {HSpaceType::T2211, HSpaceType::T321,
                                              HSpaceType::T33, HSpaceType::T411,
                                              HSpaceType::T51};
    return k;
}

inline SamplerConfig small_sampler(int count = 10, std::uint64_t seed = 7) {
    SamplerConfig c;
    c.count = count;
    c.seed = seed;
    return c;
}

/// T33 with every parameter constant: the metric has no coordinate dependence.
inline HSpaceSpec all_constant_t33() {
    HSpaceSpec s = constant_curvature(HSpaceType::T33);
    s.theta = ParamFn::constant(1.5);
    s.omega = ParamFn::constant(2.0);
    return s;
}

}  // namespace hspace::testfix
