#include "hspace/solution.hpp"

#include <cmath>

namespace hspace {

namespace {

constexpr double kFloor = 1e-30;

double ratio(double num, double den) { return num / std::max(den, kFloor); }

// mixed absolute/relative residual of an identity lhs == rhs
double identity_residual(double lhs, double rhs) {
    return std::fabs(lhs - rhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

}  // namespace

std::array<Jet2, kDim * kDim> jordan_operator(const HSpaceSpec& spec, const Point& p,
                                              const MetricOptions& opts) {
    const auto f = eigenvalue_functions(spec, p);
    std::array<Jet2, kDim * kDim> B;
    for (auto& e : B) e = Jet2(0.0);
    auto set = [&](int i, int j, const Jet2& v) { B[static_cast<size_t>(i * kDim + j)] = v; };
    for (int i = 0; i < kDim; ++i) set(i, i, f[static_cast<size_t>(i)]);

    const auto& blocks = blocks_of(spec.type);
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& b = blocks[bi];
        const int u = b.start, k = b.size, last = b.start + k - 1;
        const double eps_p = bi == 0 ? double(spec.eps) : double(spec.eps_tilde);
        const Jet2 A = block_a_function(spec, p, static_cast<int>(bi), opts);
        for (int li = 0; li + 2 < k; ++li) {
            set(u + li, u + li + 1, Jet2(1.0));
            set(u + li, last, double(li + 1) * (eps_p * seed_coordinate(p, u + li)));
        }
        set(last - 1, last, double(k - 1) * A);
    }
    return B;
}

std::array<Jet2, kDim * kDim> canonical_b(const MetricField& m,
                                          const std::array<Jet2, kDim * kDim>& B,
                                          double sym_tol) {
    std::array<Jet2, kDim * kDim> b;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Jet2 s(0.0);
            for (int q = 0; q < kDim; ++q)
                s += m.at(i, q) * B[static_cast<size_t>(q * kDim + j)];
            b[static_cast<size_t>(i * kDim + j)] = s;
        }
    double bmax = 0.0, asym = 0.0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            bmax = std::max(bmax, std::fabs(b[static_cast<size_t>(i * kDim + j)].val));
            asym = std::max(asym, std::fabs(b[static_cast<size_t>(i * kDim + j)].val -
                                            b[static_cast<size_t>(j * kDim + i)].val));
        }
    if (asym > sym_tol * std::max(bmax, 1.0))
        throw OrientationError(
            "g*B is asymmetric: nilpotent shift orientation does not match the metric");
    return b;
}

Jet2 defining_function(const HSpaceSpec& spec, double a1, const Point& p) {
    const auto f = eigenvalue_functions(spec, p);
    Jet2 s(0.0);
    for (const auto& fi : f) s += fi;
    return (0.5 * a1) * s;
}

CanonicalSolution build_canonical_solution(const HSpaceSpec& spec, const MetricField& m,
                                           double a1, const MetricOptions& opts) {
    const Jet2 phihat = defining_function(spec, 1.0, m.point);
    auto B = jordan_operator(spec, m.point, opts);
    for (int i = 0; i < kDim; ++i)
        B[static_cast<size_t>(i * kDim + i)] += 2.0 * phihat;
    auto b = canonical_b(m, B);
    CanonicalSolution sol;
    for (int i = 0; i < kDim * kDim; ++i)
        sol.b[static_cast<size_t>(i)] = a1 * b[static_cast<size_t>(i)];
    sol.phi = a1 * phihat;
    sol.a1 = a1;
    return sol;
}

double eisenhart_residual(const CanonicalSolution& sol, const MetricField& m,
                          const Christoffel& c, double* scale_out) {
    double num = 0.0, den = 0.0;
    const auto& phi = sol.phi;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                const double pd = sol.bat(i, j).grad[static_cast<size_t>(k)];
                double gb1 = 0.0, gb2 = 0.0;
                for (int q = 0; q < kDim; ++q) {
                    gb1 += c.g(q, i, k) * sol.bat(q, j).val;
                    gb2 += c.g(q, j, k) * sol.bat(i, q).val;
                }
                const double t1 = 2.0 * m.at(i, j).val * phi.grad[static_cast<size_t>(k)];
                const double t2 = m.at(i, k).val * phi.grad[static_cast<size_t>(j)];
                const double t3 = m.at(j, k).val * phi.grad[static_cast<size_t>(i)];
                num = std::max(num, std::fabs(pd - gb1 - gb2 - t1 - t2 - t3));
                den = std::max({den, std::fabs(pd), std::fabs(gb1), std::fabs(gb2),
                                std::fabs(t1), std::fabs(t2), std::fabs(t3)});
            }
    if (scale_out) *scale_out = den;
    return ratio(num, den);
}

double integrability_residual(const CanonicalSolution& sol, const MetricField& m,
                              const Christoffel& c, double riemann_sign) {
    const RiemannTensor r = riemann(c, m);
    const auto hphi = covariant_hessian_scalar(sol.phi, c);
    auto hp = [&](int i, int j) { return hphi[static_cast<size_t>(i * kDim + j)]; };
    double num = 0.0, den = 0.0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l) {
                    double t1 = 0.0, t2 = 0.0;
                    for (int q = 0; q < kDim; ++q) {
                        t1 += sol.bat(q, i).val * r.u(q, j, k, l);
                        t2 += sol.bat(q, j).val * r.u(q, i, k, l);
                    }
                    t1 *= riemann_sign;
                    t2 *= riemann_sign;
                    const double u1 = m.at(i, k).val * hp(j, l);
                    const double u2 = m.at(j, k).val * hp(i, l);
                    const double u3 = m.at(l, i).val * hp(j, k);
                    const double u4 = m.at(l, j).val * hp(i, k);
                    num = std::max(num, std::fabs(t1 + t2 - u1 - u2 + u3 + u4));
                    den = std::max({den, std::fabs(t1), std::fabs(t2), std::fabs(u1),
                                    std::fabs(u2), std::fabs(u3), std::fabs(u4)});
                }
    return ratio(num, den);
}

namespace {

const std::map<HSpaceType, std::vector<std::pair<int, int>>>& plain_partial_pairs() {
    // mixed plain second partials the proof asserts to vanish (0-based pairs)
    static const std::map<HSpaceType, std::vector<std::pair<int, int>>> k = {
        {HSpaceType::T2211, {{4, 5}, {1, 4}, {1, 5}, {1, 3}, {3, 4}, {3, 5}}},
        {HSpaceType::T321, {{2, 5}, {2, 4}}},
        {HSpaceType::T33, {{2, 5}}},
        {HSpaceType::T411, {{4, 5}, {3, 4}, {3, 5}}},
        {HSpaceType::T51, {{4, 5}}},
    };
    return k;
}

}  // namespace

double vanishing_checks(const HSpaceSpec& spec, const CanonicalSolution& sol,
                        const MetricField& m, const Christoffel& c) {
    const HSpaceType type = spec.type;
    const auto hphi = covariant_hessian_scalar(sol.phi, c);
    double bmax = 0.0, hmax = 0.0, pmax = 0.0;
    for (int i = 0; i < kDim * kDim; ++i) {
        bmax = std::max(bmax, std::fabs(sol.b[static_cast<size_t>(i)].val));
        hmax = std::max(hmax, std::fabs(hphi[static_cast<size_t>(i)]));
        pmax = std::max(pmax, std::fabs(sol.phi.hess[static_cast<size_t>(i)]));
    }
    double worst = 0.0;
    for (const auto& [i, j] : zero_pattern(type)) {
        double b_defect = std::fabs(sol.bat(i, j).val);
        // [51] slot (4,4): the Eisenhart equation itself forces the constant
        // -a1*e5 here, so the vanishing claim sharpens to that exact value.
        if (type == HSpaceType::T51 && i == 3 && j == 3)
            b_defect = std::fabs(sol.bat(3, 3).val + sol.a1 * double(spec.signs[4]));
        worst = std::max(worst, ratio(b_defect, std::max(bmax, std::fabs(sol.a1))));
        worst = std::max(worst, ratio(std::fabs(hphi[static_cast<size_t>(i * kDim + j)]), hmax));
    }
    for (const auto& [i, j] : plain_partial_pairs().at(type))
        worst = std::max(worst, ratio(std::fabs(sol.phi.h(i, j)), std::max(pmax, hmax)));
    return worst;
}

std::map<std::string, double> proof_relation_checks(const HSpaceSpec& spec,
                                                    const CanonicalSolution& sol,
                                                    const MetricField& m) {
    std::map<std::string, double> out;
    const Point& p = m.point;
    const auto f = eigenvalue_functions(spec, p);
    const double eps = spec.eps, epst = spec.eps_tilde;
    const double a1 = sol.a1;
    const auto& phi = sol.phi;

    auto fval = [&](int i) { return f[static_cast<size_t>(i)].val; };
    auto fp = [&](int s) { return f[static_cast<size_t>(s)].grad[static_cast<size_t>(s)]; };
    auto fpp = [&](int s) { return f[static_cast<size_t>(s)].h(s, s); };
    auto dphi = [&](int i) { return phi.grad[static_cast<size_t>(i)]; };
    auto bratio = [&](int i, int j) { return sol.bat(i, j).val / m.at(i, j).val; };
    auto coord = [](int i) { return std::to_string(i + 1); };

    auto grad_zero = [&](int i) { out["grad_zero_x" + coord(i)] = identity_residual(dphi(i), 0.0); };
    auto mixed_partial = [&](int i, int j) {
        out["mixed_partial_x" + coord(i) + "x" + coord(j)] = identity_residual(phi.h(i, j), 0.0);
    };
    // sum over i != s of 1/(f_i - f_s), branch multiplicities included
    auto recip_sum = [&](int s) {
        double r = 0.0;
        for (int i = 0; i < kDim; ++i)
            if (i != s) r += 1.0 / (fval(i) - fval(s));
        return r;
    };
    auto diag_derivative = [&](int t) {
        const double lhs = sol.bat(t, t).grad[static_cast<size_t>(t)] / m.at(t, t).val;
        const double rhs = -fp(t) * recip_sum(t) * bratio(t, t) + 4.0 * dphi(t);
        out["diag_derivative_t" + coord(t)] = identity_residual(lhs, rhs);
    };
    auto second_order = [&](int t) {
        out["second_order_t" + coord(t)] =
            identity_residual(fp(t) * phi.h(t, t), fpp(t) * dphi(t));
    };
    auto pair_ratio = [&](int s, int t) {
        const double P = 0.5 * (bratio(t, t) - bratio(s, s)) / (fval(t) - fval(s));
        out["pair_ratio_s" + coord(s) + "_t" + coord(t)] =
            identity_residual(dphi(s), fp(s) * P);
    };
    // phi_,t and the block-coordinate gradient expressed through the ratio
    // (b_tt/g_tt - b_block/g_block) / (f_t - f_block)
    auto simple_vs_block = [&](const std::string& label, int t, int fblk, int bi, int bj,
                               double half_fp_coeff) {
        const double X = (bratio(t, t) - bratio(bi, bj)) / (fval(t) - fval(fblk));
        out[label] = identity_residual(dphi(t), half_fp_coeff * fp(t) * X);
    };
    auto block_grad = [&](const std::string& label, int gcoord, int t, int fblk, int bi, int bj,
                          double coeff) {
        const double X = (bratio(t, t) - bratio(bi, bj)) / (fval(t) - fval(fblk));
        out[label] = identity_residual(dphi(gcoord), coeff * X);
    };

    switch (spec.type) {
        case HSpaceType::T2211: {
            grad_zero(0);
            grad_zero(2);
            mixed_partial(4, 5);
            mixed_partial(1, 3);
            for (int t : {4, 5}) {
                const int s = t == 4 ? 5 : 4;
                pair_ratio(s, t);
                simple_vs_block("simple_vs_block1_t" + coord(t), t, 1, 0, 1, 0.5);
                block_grad("block1_grad_t" + coord(t), 1, t, 1, 0, 1, eps);
                diag_derivative(t);
                second_order(t);
                out["proportionality_x2_t" + coord(t)] =
                    identity_residual(2.0 * eps * dphi(t), fp(t) * dphi(1));
                out["proportionality_x4_t" + coord(t)] =
                    identity_residual(2.0 * epst * dphi(t), fp(t) * dphi(3));
                mixed_partial(1, t);
                mixed_partial(3, t);
                out["closed_form_t" + coord(t)] =
                    identity_residual(dphi(t), 0.5 * a1 * fp(t));
            }
            {
                const double X = (bratio(2, 3) - bratio(0, 1)) / (fval(3) - fval(1));
                out["cross_block_x2"] = identity_residual(dphi(1), eps * X);
                out["cross_block_x4"] = identity_residual(dphi(3), epst * X);
            }
            out["closed_form_x2"] = identity_residual(dphi(1), a1 * eps);
            out["closed_form_x4"] = identity_residual(dphi(3), a1 * epst);
            break;
        }
        case HSpaceType::T321: {
            grad_zero(0);
            grad_zero(1);
            grad_zero(3);
            simple_vs_block("simple_vs_block1_t6", 5, 2, 0, 2, 0.5);
            block_grad("block1_grad_t6", 2, 5, 2, 0, 2, 1.5 * eps);
            diag_derivative(5);
            second_order(5);
            out["proportionality_x3_t6"] =
                identity_residual(3.0 * eps * dphi(5), fp(5) * dphi(2));
            mixed_partial(2, 5);
            simple_vs_block("simple_vs_block2_t6", 5, 4, 3, 4, 0.5);
            block_grad("block2_grad_t6", 4, 5, 4, 3, 4, epst);
            out["proportionality_x5_t6"] =
                identity_residual(2.0 * epst * dphi(5), fp(5) * dphi(4));
            {
                const double X = (bratio(3, 4) - bratio(0, 2)) / (fval(4) - fval(2));
                out["cross_block_x3"] = identity_residual(dphi(2), 1.5 * eps * X);
                out["cross_block_x5"] = identity_residual(dphi(4), epst * X);
            }
            out["proportionality_blocks"] =
                identity_residual(3.0 * eps * dphi(4), 2.0 * epst * dphi(2));
            mixed_partial(2, 4);
            break;
        }
        case HSpaceType::T33: {
            grad_zero(0);
            grad_zero(1);
            grad_zero(3);
            grad_zero(4);
            {
                const double X = (bratio(3, 5) - bratio(0, 2)) / (fval(5) - fval(2));
                out["block1_grad"] = identity_residual(dphi(2), 1.5 * eps * X);
                out["block2_grad"] = identity_residual(dphi(5), 1.5 * epst * X);
            }
            out["proportionality_blocks"] =
                identity_residual(epst * dphi(2), eps * dphi(5));
            mixed_partial(2, 5);
            break;
        }
        case HSpaceType::T411: {
            grad_zero(0);
            grad_zero(1);
            grad_zero(2);
            mixed_partial(4, 5);
            for (int t : {4, 5}) {
                const int s = t == 4 ? 5 : 4;
                pair_ratio(s, t);
                simple_vs_block("simple_vs_block_t" + coord(t), t, 3, 0, 3, 0.5);
                block_grad("block_grad_t" + coord(t), 3, t, 3, 0, 3, 2.0 * eps);
                diag_derivative(t);
                second_order(t);
                out["proportionality_x4_t" + coord(t)] =
                    identity_residual(4.0 * eps * dphi(t), fp(t) * dphi(3));
                mixed_partial(3, t);
            }
            break;
        }
        case HSpaceType::T51: {
            grad_zero(0);
            grad_zero(1);
            grad_zero(2);
            grad_zero(3);
            simple_vs_block("simple_vs_block_t6", 5, 4, 0, 4, 0.5);
            block_grad("block_grad_t6", 4, 5, 4, 0, 4, 2.5 * eps);
            diag_derivative(5);
            second_order(5);
            out["proportionality_x5_t6"] =
                identity_residual(5.0 * eps * dphi(5), fp(5) * dphi(4));
            mixed_partial(4, 5);
            break;
        }
    }
    return out;
}

double eisenhart_residual(const HSpaceSpec& spec, const CanonicalSolution& sol, const Point& p,
                          const MetricOptions& opts) {
    const MetricField m = metric_at(spec, p, opts);
    return eisenhart_residual(sol, m, christoffel(m));
}

double integrability_residual(const HSpaceSpec& spec, const CanonicalSolution& sol,
                              const Point& p, const MetricOptions& opts, double riemann_sign) {
    const MetricField m = metric_at(spec, p, opts);
    return integrability_residual(sol, m, christoffel(m), riemann_sign);
}

double vanishing_checks(const HSpaceSpec& spec, const CanonicalSolution& sol, const Point& p,
                        const MetricOptions& opts) {
    const MetricField m = metric_at(spec, p, opts);
    return vanishing_checks(spec, sol, m, christoffel(m));
}

}  // namespace hspace
