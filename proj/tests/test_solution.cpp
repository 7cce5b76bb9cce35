#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hspace/solution.hpp"

using namespace hspace;
using namespace hspace::testfix;

namespace {

Point pt(std::initializer_list<double> v) {
    Point p;
    int i = 0;
    for (double x : v) p[i++] = x;
    return p;
}

HSpaceSpec worked_t2211() {
    HSpaceSpec s;
    s.type = HSpaceType::T2211;
    s.eps = 1;
    s.eps_tilde = 0;
    s.a = 2.0;
    s.theta = ParamFn::constant(0.0);
    s.omega = ParamFn::constant(1.0);
    s.f_simple[4] = ParamFn::polynomial({0.0, 1.0});
    s.f_simple[5] = ParamFn::polynomial({0.0, 3.0});
    return s;
}

}  // namespace

TEST_CASE("jordan operator structure") {
    const HSpaceSpec spec = generic(HSpaceType::T51);
    const Point p = sample_points(spec, small_sampler(1, 2))[0];
    const auto B = jordan_operator(spec, p);
    const auto f = eigenvalue_functions(spec, p);

    Jet2 tr(0.0), fsum(0.0);
    for (int i = 0; i < kDim; ++i) {
        tr += B[i * kDim + i];
        fsum += f[i];
    }
    CHECK(tr.val == doctest::Approx(5.0 * p[4] + f[5].val));  // 5-block + simple root
    for (int k = 0; k < kDim; ++k) CHECK(tr.grad[k] == doctest::Approx(fsum.grad[k]));

    // simple-root rows and columns carry only the eigenvalue
    for (int i = 0; i < kDim; ++i) {
        if (i != 5) {
            CHECK(B[5 * kDim + i].val == 0.0);
            CHECK(B[i * kDim + 5].val == 0.0);
        }
    }
    CHECK(B[5 * kDim + 5].val == f[5].val);

    // constant configuration: trace gradient vanishes
    const HSpaceSpec cc = all_constant_t33();
    const auto Bc = jordan_operator(cc, p);
    Jet2 trc(0.0);
    for (int i = 0; i < kDim; ++i) trc += Bc[i * kDim + i];
    for (double g : trc.grad) CHECK(g == 0.0);
}

TEST_CASE("contraction with the metric is symmetric, zero pattern respected") {
    for (HSpaceType t : all_types()) {
        const HSpaceSpec spec = generic(t);
        const Point p = sample_points(spec, small_sampler(1, 23))[0];
        const MetricField m = metric_at(spec, p);
        const auto B = jordan_operator(spec, p);
        const auto b = canonical_b(m, B);  // must not throw OrientationError

        const auto f = eigenvalue_functions(spec, p);
        for (int s : simple_roots_of(t))
            CHECK(b[s * kDim + s].val ==
                  doctest::Approx(f[s].val * m.at(s, s).val).epsilon(1e-13));

        double bmax = 0.0;
        for (const auto& e : b) bmax = std::max(bmax, std::fabs(e.val));
        for (const auto& [i, j] : zero_pattern(t)) {
            if (t == HSpaceType::T51 && i == 3 && j == 3) {
                // the one slot the equation pins to a constant instead of zero
                CHECK(b[3 * kDim + 3].val == doctest::Approx(-spec.signs[4]).epsilon(1e-13));
                continue;
            }
            CHECK(std::fabs(b[i * kDim + j].val) <= 1e-12 * bmax);
        }
    }
}

TEST_CASE("flipped shift orientation is rejected") {
    const HSpaceSpec spec = generic(HSpaceType::T321);
    const Point p = sample_points(spec, small_sampler(1, 29))[0];
    const MetricField m = metric_at(spec, p);
    auto B = jordan_operator(spec, p);
    // transpose the nilpotent part: move every off-diagonal entry below
    auto flipped = B;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (i != j) {
                flipped[j * kDim + i] = B[i * kDim + j];
                if (j > i) flipped[i * kDim + j] = Jet2(0.0);
            }
    CHECK_THROWS_AS(canonical_b(m, flipped), OrientationError);
}

TEST_CASE("defining function value, flatness, scaling") {
    const Point p = pt({1, 0.5, 1, 1, 1, 1});
    const Jet2 phi = defining_function(worked_t2211(), 1.0, p);
    CHECK(phi.val == doctest::Approx(4.5));  // (0.5+0.5+2+2+1+3)/2

    const Jet2 phic = defining_function(all_constant_t33(), 1.0, p);
    for (double g : phic.grad) CHECK(g == 0.0);
    for (double h : phic.hess) CHECK(h == 0.0);

    const Jet2 phi2 = defining_function(worked_t2211(), 2.0, p);
    CHECK(phi2.val == doctest::Approx(2.0 * phi.val));
    for (int i = 0; i < kDim; ++i) CHECK(phi2.grad[i] == doctest::Approx(2.0 * phi.grad[i]));
    for (int i = 0; i < kDim * kDim; ++i)
        CHECK(phi2.hess[i] == doctest::Approx(2.0 * phi.hess[i]));
}

TEST_CASE("eisenhart residual vanishes for the canonical pair on every family") {
    for (HSpaceType t : all_types()) {
        const HSpaceSpec spec = generic(t);
        for (const Point& p : sample_points(spec, small_sampler(8))) {
            const MetricField m = metric_at(spec, p);
            const Christoffel c = christoffel(m);
            const CanonicalSolution sol = build_canonical_solution(spec, m);
            CHECK(eisenhart_residual(sol, m, c) < 1e-8);
        }
    }
}

TEST_CASE("metric itself solves the equation with zero scalar") {
    const HSpaceSpec spec = generic(HSpaceType::T33);
    const Point p = sample_points(spec, small_sampler(1, 31))[0];
    const MetricField m = metric_at(spec, p);
    const Christoffel c = christoffel(m);
    CanonicalSolution sol;
    sol.b = m.g;
    sol.phi = Jet2(0.0);
    sol.a1 = 0.0;
    CHECK(eisenhart_residual(sol, m, c) < 1e-12);
}

TEST_CASE("perturbation sensitivity: every component is load-bearing") {
    for (HSpaceType t : all_types()) {
        const HSpaceSpec spec = generic(t);
        const Point p = sample_points(spec, small_sampler(1, 37))[0];
        const MetricField m = metric_at(spec, p);
        const Christoffel c = christoffel(m);
        const CanonicalSolution sol = build_canonical_solution(spec, m);
        double scale = 0.0;
        REQUIRE(eisenhart_residual(sol, m, c, &scale) < 1e-8);

        // perturbations are measured against the residual's own
        // normalization scale, so the 1e-4 detector floor is scale-free
        for (int i = 0; i < kDim; ++i)
            for (int j = i; j < kDim; ++j) {
                CanonicalSolution mod = sol;
                mod.b[i * kDim + j].val += 1e-3 * scale;
                if (i != j) mod.b[j * kDim + i].val += 1e-3 * scale;
                CHECK(eisenhart_residual(mod, m, c) > 1e-4);
            }
        double gmax = 0.0;
        for (const auto& e : m.g) gmax = std::max(gmax, std::fabs(e.val));
        for (int k = 0; k < kDim; ++k) {
            CanonicalSolution mod = sol;
            mod.phi.grad[k] += 1e-3 * scale / (2.0 * gmax);
            CHECK(eisenhart_residual(mod, m, c) > 1e-4);
        }
    }
}

TEST_CASE("integrability residual and the curvature-sign witness") {
    for (HSpaceType t : all_types()) {
        const HSpaceSpec spec = generic(t);
        for (const Point& p : sample_points(spec, small_sampler(6))) {
            const MetricField m = metric_at(spec, p);
            const Christoffel c = christoffel(m);
            const CanonicalSolution sol = build_canonical_solution(spec, m);
            CHECK(integrability_residual(sol, m, c) < 1e-7);
        }
        const Point p = sample_points(spec, small_sampler(1, 41))[0];
        const MetricField m = metric_at(spec, p);
        const Christoffel c = christoffel(m);
        const CanonicalSolution sol = build_canonical_solution(spec, m);
        CHECK(integrability_residual(sol, m, c, -kRiemannSign) > 1e-2);
    }

    // flat constant metric with b = g, phi = 0
    const Point p = pt({1.2, 1.5, 1.8, 1.1, 1.4, 1.7});
    const MetricField flat = metric_at(all_constant_t33(), p);
    CanonicalSolution sol;
    sol.b = flat.g;
    sol.phi = Jet2(0.0);
    CHECK(integrability_residual(sol, flat, christoffel(flat)) == 0.0);
}

TEST_CASE("vanishing conditions on the zero pattern") {
    for (HSpaceType t : all_types()) {
        const HSpaceSpec spec = generic(t);
        for (const Point& p : sample_points(spec, small_sampler(5))) {
            const MetricField m = metric_at(spec, p);
            const Christoffel c = christoffel(m);
            const CanonicalSolution sol = build_canonical_solution(spec, m);
            CHECK(vanishing_checks(spec, sol, m, c) < 1e-9);
        }
    }

    // constant configuration: the scalar hessian is trivially flat
    const HSpaceSpec cc = all_constant_t33();
    const Point p = pt({1.2, 1.5, 1.8, 1.1, 1.4, 1.7});
    const MetricField m = metric_at(cc, p);
    const Christoffel c = christoffel(m);
    const CanonicalSolution sol = build_canonical_solution(cc, m);
    CHECK(vanishing_checks(cc, sol, m, c) < 1e-12);
}

TEST_CASE("proof relation residuals on generic fixtures") {
    for (HSpaceType t : all_types()) {
        const HSpaceSpec spec = generic(t);
        for (const Point& p : sample_points(spec, small_sampler(4))) {
            const MetricField m = metric_at(spec, p);
            const CanonicalSolution sol = build_canonical_solution(spec, m);
            for (const auto& [label, r] : proof_relation_checks(spec, sol, m)) {
                INFO(to_string(t), " ", label);
                CHECK(r < 1e-8);
            }
        }
    }
}

TEST_CASE("proof relations: degenerate branches still balance") {
    // eps = 0 on the first block: both sides of the proportionality vanish
    HSpaceSpec spec = generic(HSpaceType::T2211);
    spec.eps = 0;
    spec.eps_tilde = 1;
    const Point p = sample_points(spec, small_sampler(1, 43))[0];
    const MetricField m = metric_at(spec, p);
    const CanonicalSolution sol = build_canonical_solution(spec, m);
    const auto checks = proof_relation_checks(spec, sol, m);
    CHECK(checks.at("proportionality_x2_t5") < 1e-12);
    CHECK(checks.at("proportionality_x2_t6") < 1e-12);

    // gradient components that must vanish exactly for T51
    const HSpaceSpec t51 = generic(HSpaceType::T51);
    const Point q = sample_points(t51, small_sampler(1, 47))[0];
    const MetricField m51 = metric_at(t51, q);
    const CanonicalSolution s51 = build_canonical_solution(t51, m51);
    const auto c51 = proof_relation_checks(t51, s51, m51);
    for (const char* label : {"grad_zero_x1", "grad_zero_x2", "grad_zero_x3", "grad_zero_x4"})
        CHECK(c51.at(label) < 1e-12);
}

TEST_CASE("scale invariance of residuals in a1") {
    const HSpaceSpec spec = generic(HSpaceType::T411);
    const Point p = sample_points(spec, small_sampler(1, 53))[0];
    const MetricField m = metric_at(spec, p);
    const Christoffel c = christoffel(m);
    const CanonicalSolution base = build_canonical_solution(spec, m, 1.0);
    for (double a1 : {1.0, 2.0, -3.0}) {
        const CanonicalSolution sol = build_canonical_solution(spec, m, a1);
        CHECK(eisenhart_residual(sol, m, c) < 1e-8);
        CHECK(integrability_residual(sol, m, c) < 1e-7);
        CHECK(vanishing_checks(spec, sol, m, c) < 1e-9);
        for (int i = 0; i < kDim; ++i)
            CHECK(sol.phi.grad[i] == doctest::Approx(a1 * base.phi.grad[i]));
        for (const auto& [label, r] : proof_relation_checks(spec, sol, m)) {
            INFO(label);
            CHECK(r < 1e-8);
        }
    }
}
