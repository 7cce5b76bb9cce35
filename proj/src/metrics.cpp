#include "hspace/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

namespace hspace {

namespace {

using Mat6 = std::array<double, kDim * kDim>;

double& at(Mat6& m, int i, int j) { return m[static_cast<size_t>(i * kDim + j)]; }
double get(const Mat6& m, int i, int j) { return m[static_cast<size_t>(i * kDim + j)]; }

Mat6 mul66(const Mat6& a, const Mat6& b) {
    Mat6 r{};
    for (int i = 0; i < kDim; ++i)
        for (int k = 0; k < kDim; ++k) {
            const double aik = get(a, i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < kDim; ++j) r[i * kDim + j] += aik * get(b, k, j);
        }
    return r;
}

double norm_inf(const Mat6& m) {
    double best = 0.0;
    for (int i = 0; i < kDim; ++i) {
        double row = 0.0;
        for (int j = 0; j < kDim; ++j) row += std::fabs(get(m, i, j));
        best = std::max(best, row);
    }
    return best;
}

// Gauss-Jordan with partial pivoting.
bool inverse66(Mat6 m, Mat6& out) {
    Mat6 inv{};
    for (int i = 0; i < kDim; ++i) at(inv, i, i) = 1.0;
    for (int col = 0; col < kDim; ++col) {
        int piv = col;
        for (int r = col + 1; r < kDim; ++r)
            if (std::fabs(get(m, r, col)) > std::fabs(get(m, piv, col))) piv = r;
        if (get(m, piv, col) == 0.0) return false;
        if (piv != col)
            for (int j = 0; j < kDim; ++j) {
                std::swap(at(m, piv, j), at(m, col, j));
                std::swap(at(inv, piv, j), at(inv, col, j));
            }
        const double d = 1.0 / get(m, col, col);
        for (int j = 0; j < kDim; ++j) {
            at(m, col, j) *= d;
            at(inv, col, j) *= d;
        }
        for (int r = 0; r < kDim; ++r) {
            if (r == col) continue;
            const double f = get(m, r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < kDim; ++j) {
                at(m, r, j) -= f * get(m, col, j);
                at(inv, r, j) -= f * get(inv, col, j);
            }
        }
    }
    out = inv;
    return true;
}

struct TypeInfo {
    std::vector<Block> blocks;
    std::vector<int> simple;
    std::vector<int> sign_indices;
    bool eps_tilde;
};

const TypeInfo& info(HSpaceType t) {
    static const std::map<HSpaceType, TypeInfo> k = {
        {HSpaceType::T2211, {{{0, 2}, {2, 2}}, {4, 5}, {1, 3, 4, 5}, true}},
        {HSpaceType::T321, {{{0, 3}, {3, 2}}, {5}, {2, 4, 5}, true}},
        {HSpaceType::T33, {{{0, 3}, {3, 3}}, {}, {2, 5}, true}},
        {HSpaceType::T411, {{{0, 4}}, {4, 5}, {3, 4, 5}, false}},
        {HSpaceType::T51, {{{0, 5}}, {5}, {4, 5}, false}},
    };
    return k.at(t);
}

void set_sym(std::array<Jet2, kDim * kDim>& g, int i, int j, const Jet2& v) {
    g[static_cast<size_t>(i * kDim + j)] = v;
    g[static_cast<size_t>(j * kDim + i)] = v;
}

}  // namespace

const std::vector<Block>& blocks_of(HSpaceType t) { return info(t).blocks; }
const std::vector<int>& simple_roots_of(HSpaceType t) { return info(t).simple; }
bool type_has_eps_tilde(HSpaceType t) { return info(t).eps_tilde; }
const std::vector<int>& sign_indices_of(HSpaceType t) { return info(t).sign_indices; }

std::string to_string(HSpaceType t) {
    switch (t) {
        case HSpaceType::T2211: return "T2211";
        case HSpaceType::T321: return "T321";
        case HSpaceType::T33: return "T33";
        case HSpaceType::T411: return "T411";
        case HSpaceType::T51: return "T51";
    }
    return "?";
}

std::optional<HSpaceType> parse_type(const std::string& tag) {
    if (tag == "T2211") return HSpaceType::T2211;
    if (tag == "T321") return HSpaceType::T321;
    if (tag == "T33") return HSpaceType::T33;
    if (tag == "T411") return HSpaceType::T411;
    if (tag == "T51") return HSpaceType::T51;
    return std::nullopt;
}

std::string to_string(T321G66Variant v) {
    return v == T321G66Variant::CrossBlock ? "cross_block" : "literal";
}
std::string to_string(T411TailVariant v) {
    switch (v) {
        case T411TailVariant::OutsideDoubled: return "outside_doubled";
        case T411TailVariant::OutsidePrinted: return "outside_printed";
        case T411TailVariant::InsideBraces: return "inside_braces";
    }
    return "?";
}
std::string to_string(T33AtildeVariant v) {
    return v == T33AtildeVariant::Mirror ? "mirror" : "literal";
}

const HSpaceSpec& validate_spec(const HSpaceSpec& spec) {
    const TypeInfo& ti = info(spec.type);
    if (spec.eps != 0 && spec.eps != 1)
        throw ValidationError("eps", "eps must be 0 or 1");
    if (ti.eps_tilde) {
        if (spec.eps_tilde != 0 && spec.eps_tilde != 1)
            throw ValidationError("eps_tilde", "eps_tilde must be 0 or 1");
        if (!spec.relax_eps_constraint && spec.eps == spec.eps_tilde)
            throw ValidationError("eps",
                                  "eps and eps_tilde must differ (set relax_eps_constraint "
                                  "to allow the constant-curvature configurations)");
        if (spec.eps_tilde == 0 && spec.a == 0.0)
            throw ValidationError("a", "a must be nonzero when eps_tilde = 0");
    }
    for (int idx : ti.sign_indices)
        if (spec.signs[static_cast<size_t>(idx)] != 1 && spec.signs[static_cast<size_t>(idx)] != -1)
            throw ValidationError("signs", "sign e" + std::to_string(idx + 1) + " must be +1 or -1");
    for (int s : ti.simple)
        if (!spec.f_simple.count(s))
            throw ValidationError("f", "missing simple-root function f" + std::to_string(s + 1));
    for (const auto& [coord, fn] : spec.f_simple) {
        (void)fn;
        if (std::find(ti.simple.begin(), ti.simple.end(), coord) == ti.simple.end())
            throw ValidationError("f", "f" + std::to_string(coord + 1) +
                                           " is not a simple-root coordinate of " +
                                           to_string(spec.type));
    }
    return spec;
}

std::array<Jet2, kDim> eigenvalue_functions(const HSpaceSpec& spec, const Point& p) {
    std::array<Jet2, kDim> f;
    const TypeInfo& ti = info(spec.type);
    for (size_t bi = 0; bi < ti.blocks.size(); ++bi) {
        const Block& b = ti.blocks[bi];
        const int last = b.start + b.size - 1;
        Jet2 fb = (bi == 0) ? double(spec.eps) * seed_coordinate(p, last)
                            : double(spec.eps_tilde) * seed_coordinate(p, last) + spec.a;
        for (int i = b.start; i <= last; ++i) f[static_cast<size_t>(i)] = fb;
    }
    for (int s : ti.simple)
        f[static_cast<size_t>(s)] = eval_param_fn(spec.f_simple.at(s), seed_coordinate(p, s));
    return f;
}

Jet2 block_a_function(const HSpaceSpec& spec, const Point& p, int block_index,
                      const MetricOptions& opts) {
    const TypeInfo& ti = info(spec.type);
    const Block& b = ti.blocks[static_cast<size_t>(block_index)];
    const int last = b.start + b.size - 1;
    const double eps_p = block_index == 0 ? double(spec.eps) : double(spec.eps_tilde);
    const ParamFn& chi = block_index == 0 ? spec.theta : spec.omega;
    int lin = last - 1;
    if (spec.type == HSpaceType::T33 && block_index == 1 &&
        opts.t33_atilde == T33AtildeVariant::Literal)
        lin = b.start;  // the transcription's reading; breaks the block mirror
    return eps_p * seed_coordinate(p, lin) + eval_param_fn(chi, seed_coordinate(p, last));
}

namespace {

// Product of (f_i - f_ref) over i outside the given coordinate set.
Jet2 cross_product_factor(const std::array<Jet2, kDim>& f, int lo, int hi, const Jet2& fref) {
    Jet2 r(1.0);
    for (int i = 0; i < kDim; ++i)
        if (i < lo || i > hi) r = r * (f[static_cast<size_t>(i)] - fref);
    return r;
}

Jet2 cross_recip_sum(const std::array<Jet2, kDim>& f, int lo, int hi, const Jet2& fref, int power) {
    Jet2 r(0.0);
    for (int i = 0; i < kDim; ++i)
        if (i < lo || i > hi) r += recip(pow_int(f[static_cast<size_t>(i)] - fref, power));
    return r;
}

}  // namespace

MetricField metric_at(const HSpaceSpec& spec, const Point& p, const MetricOptions& opts) {
    const TypeInfo& ti = info(spec.type);
    const auto f = eigenvalue_functions(spec, p);

    MetricField m;
    m.point = p;
    for (auto& e : m.g) e = Jet2(0.0);

    for (size_t bi = 0; bi < ti.blocks.size(); ++bi) {
        const Block& b = ti.blocks[bi];
        const int u = b.start, last = b.start + b.size - 1;
        const Jet2& fp = f[static_cast<size_t>(u)];
        const double sgn = spec.signs[static_cast<size_t>(last)];
        const Jet2 U = sgn * cross_product_factor(f, u, last, fp);
        const Jet2 S1 = cross_recip_sum(f, u, last, fp, 1);
        const Jet2 A = block_a_function(spec, p, static_cast<int>(bi), opts);
        if (A.val == 0.0)
            throw PoleError("block affine factor vanishes at the sample point", p.x);
        const double eps_p = bi == 0 ? double(spec.eps) : double(spec.eps_tilde);

        if (b.size == 2) {
            set_sym(m.g, u, u + 1, U * A);
            set_sym(m.g, u + 1, u + 1, -(U * A * A * S1));
        } else if (b.size == 3) {
            const Jet2 S2 = cross_recip_sum(f, u, last, fp, 2);
            const Jet2 S3 = (S1 * S1 - S2) / 2.0;
            const Jet2 c1 = eps_p * seed_coordinate(p, u);
            set_sym(m.g, u + 1, u + 1, U);
            set_sym(m.g, u, u + 2, 2.0 * A * U);
            set_sym(m.g, u + 1, u + 2, U * (c1 - 2.0 * A * S1));
            set_sym(m.g, u + 2, u + 2, U * (c1 * c1 - 4.0 * c1 * A * S1 + 4.0 * A * A * S3));
        } else if (b.size == 4) {
            const Jet2 c1 = eps_p * seed_coordinate(p, u);
            const Jet2 c2 = eps_p * seed_coordinate(p, u + 1);
            set_sym(m.g, u, u + 3, 3.0 * A * U);
            set_sym(m.g, u + 1, u + 2, U);
            set_sym(m.g, u + 1, u + 3, U * (2.0 * c2 - 3.0 * A * S1));
            set_sym(m.g, u + 2, u + 2, -(U * S1));
            Jet2 g34 = U * (c1 - 2.0 * c2 * S1);
            const double s1sq_sign = opts.t411_tail == T411TailVariant::OutsideDoubled ? -1.0 : 1.0;
            Jet2 g44 = 4.0 * (U * (s1sq_sign * c2 * c2 * S1 + c1 * c2 - 1.5 * c1 * A * S1));
            switch (opts.t411_tail) {
                case T411TailVariant::OutsideDoubled:
                    g34 += 3.0 * A;
                    g44 += 12.0 * c2 * A;
                    break;
                case T411TailVariant::OutsidePrinted:
                    g34 += 1.5 * A;
                    g44 += 12.0 * c2 * A;
                    break;
                case T411TailVariant::InsideBraces:
                    g34 += 1.5 * (A * U);
                    g44 += 12.0 * (c2 * A * U);
                    break;
            }
            set_sym(m.g, u + 2, u + 3, g34);
            set_sym(m.g, u + 3, u + 3, g44);
        } else {  // size 5
            const Jet2 c1 = eps_p * seed_coordinate(p, u);
            const Jet2 c2 = eps_p * seed_coordinate(p, u + 1);
            const Jet2 c3 = eps_p * seed_coordinate(p, u + 2);
            set_sym(m.g, u, u + 4, 4.0 * A * U);
            set_sym(m.g, u + 1, u + 3, U);
            set_sym(m.g, u + 1, u + 4, U * (3.0 * c3 - 4.0 * A * S1));
            set_sym(m.g, u + 2, u + 2, U);
            set_sym(m.g, u + 2, u + 3, -(U * S1));
            set_sym(m.g, u + 2, u + 4, U * (2.0 * c2 - 3.0 * c3 * S1));
            set_sym(m.g, u + 3, u + 4, U * (c1 - 2.0 * c2 * S1));
            set_sym(m.g, u + 4, u + 4,
                    4.0 * (U * (1.5 * c1 * c3 + c2 * c2 - 2.0 * c1 * A * S1 - 3.0 * c2 * c3 * S1)));
        }
    }

    for (int s : ti.simple) {
        const Jet2& fs = f[static_cast<size_t>(s)];
        Jet2 prod = spec.signs[static_cast<size_t>(s)] * cross_product_factor(f, s, s, fs);
        if (spec.type == HSpaceType::T321 && s == 5 &&
            opts.t321_g66 == T321G66Variant::Literal)
            prod = spec.signs[5] * pow_int(f[4] - fs, 5);
        set_sym(m.g, s, s, prod);
    }

    m.g_inv = invert_jet_matrix(m.g);
    return m;
}

std::array<Jet2, kDim * kDim> invert_jet_matrix(const std::array<Jet2, kDim * kDim>& m,
                                                double cond_cap) {
    Mat6 V;
    Mat6 val;
    for (int i = 0; i < kDim * kDim; ++i) val[static_cast<size_t>(i)] = m[static_cast<size_t>(i)].val;
    if (!inverse66(val, V)) throw DegeneracyError("singular jet matrix");
    const double cond = norm_inf(val) * norm_inf(V);
    if (!std::isfinite(cond) || cond > cond_cap)
        throw DegeneracyError("jet matrix condition estimate " + std::to_string(cond) +
                              " exceeds cap");

    std::array<Mat6, kDim> dM;
    for (int k = 0; k < kDim; ++k)
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                at(dM[static_cast<size_t>(k)], i, j) =
                    m[static_cast<size_t>(i * kDim + j)].grad[static_cast<size_t>(k)];

    std::array<Mat6, kDim> dV;
    std::array<Mat6, kDim> VdM;  // V * dM_k, reused
    for (int k = 0; k < kDim; ++k) {
        VdM[static_cast<size_t>(k)] = mul66(V, dM[static_cast<size_t>(k)]);
        Mat6 t = mul66(VdM[static_cast<size_t>(k)], V);
        for (auto& e : t) e = -e;
        dV[static_cast<size_t>(k)] = t;
    }

    std::array<Jet2, kDim * kDim> out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Jet2& e = out[static_cast<size_t>(i * kDim + j)];
            e = Jet2(get(V, i, j));
            for (int k = 0; k < kDim; ++k)
                e.grad[static_cast<size_t>(k)] = get(dV[static_cast<size_t>(k)], i, j);
        }

    for (int k = 0; k < kDim; ++k)
        for (int l = k; l < kDim; ++l) {
            Mat6 H;
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j)
                    at(H, i, j) = m[static_cast<size_t>(i * kDim + j)].h(k, l);
            Mat6 t1 = mul66(V, mul66(H, V));
            Mat6 t2 = mul66(VdM[static_cast<size_t>(k)], mul66(VdM[static_cast<size_t>(l)], V));
            Mat6 t3 = mul66(VdM[static_cast<size_t>(l)], mul66(VdM[static_cast<size_t>(k)], V));
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j)
                    out[static_cast<size_t>(i * kDim + j)].set_h(
                        k, l, -get(t1, i, j) + get(t2, i, j) + get(t3, i, j));
        }
    return out;
}

double admissibility_margin(const HSpaceSpec& spec, const Point& p, const MetricOptions& opts,
                            std::string* tightest) {
    const TypeInfo& ti = info(spec.type);
    const auto f = eigenvalue_functions(spec, p);

    // group coordinates by eigenvalue branch: blocks first, then simple roots
    std::vector<std::pair<std::string, double>> branch;
    for (size_t bi = 0; bi < ti.blocks.size(); ++bi)
        branch.emplace_back("f(block " + std::to_string(bi + 1) + ")",
                            f[static_cast<size_t>(ti.blocks[bi].start)].val);
    for (int s : ti.simple)
        branch.emplace_back("f" + std::to_string(s + 1), f[static_cast<size_t>(s)].val);

    double best = std::numeric_limits<double>::infinity();
    std::string name = "none";
    auto consider = [&](double v, const std::string& n) {
        if (v < best) {
            best = v;
            name = n;
        }
    };
    for (size_t i = 0; i < branch.size(); ++i)
        for (size_t j = i + 1; j < branch.size(); ++j)
            consider(std::fabs(branch[i].second - branch[j].second),
                     "|" + branch[i].first + " - " + branch[j].first + "|");
    for (size_t bi = 0; bi < ti.blocks.size(); ++bi)
        consider(std::fabs(block_a_function(spec, p, static_cast<int>(bi), opts).val),
                 bi == 0 ? "|A|" : "|A~|");

    // an exact collision would pole the metric assembly below
    if (best > 0.0) {
        try {
            MetricField m = metric_at(spec, p, opts);
            consider(std::fabs(det6(values_of(m.g))), "|det g|");
        } catch (const Error&) {
            consider(0.0, "ill-conditioned metric");
        }
    }

    if (tightest) *tightest = name;
    return best;
}

std::vector<Point> sample_points(const HSpaceSpec& spec, const SamplerConfig& cfg,
                                 const MetricOptions& opts) {
    validate_spec(spec);
    if (cfg.count < 1) throw ValidationError("sampler.count", "count must be >= 1");
    if (!(cfg.margin > 0.0)) throw ValidationError("sampler.margin", "margin must be positive");
    for (int i = 0; i < kDim; ++i)
        if (!(cfg.box[static_cast<size_t>(i)][0] < cfg.box[static_cast<size_t>(i)][1]))
            throw ValidationError("sampler.box", "box bounds must satisfy low < high");

    std::mt19937_64 eng(cfg.seed);
    // explicit 53-bit mapping: identical bytes on every platform
    auto uniform01 = [&eng]() { return double(eng() >> 11) * 0x1.0p-53; };

    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(cfg.count));
    std::map<std::string, int> reject_counts;
    const long cap = std::max(20000L, 2000L * cfg.count);
    for (long attempt = 0; attempt < cap && pts.size() < static_cast<size_t>(cfg.count);
         ++attempt) {
        Point p;
        for (int i = 0; i < kDim; ++i) {
            const auto& b = cfg.box[static_cast<size_t>(i)];
            p[i] = b[0] + uniform01() * (b[1] - b[0]);
        }
        try {
            std::string binding;
            if (admissibility_margin(spec, p, opts, &binding) >= cfg.margin)
                pts.push_back(p);
            else
                ++reject_counts[binding];
        } catch (const Error&) {
            ++reject_counts["pole"];
        }
    }
    if (pts.size() < static_cast<size_t>(cfg.count)) {
        std::string worst = "unknown";
        int n = -1;
        for (const auto& [k, v] : reject_counts)
            if (v > n) {
                n = v;
                worst = k;
            }
        throw SamplingError("sampler exhausted after retry cap; tightest constraint: " + worst,
                            worst);
    }
    return pts;
}

std::array<double, kDim * kDim> values_of(const std::array<Jet2, kDim * kDim>& m) {
    std::array<double, kDim * kDim> v;
    for (int i = 0; i < kDim * kDim; ++i) v[static_cast<size_t>(i)] = m[static_cast<size_t>(i)].val;
    return v;
}

double det6(const std::array<double, kDim * kDim>& m_in) {
    Mat6 m = m_in;
    double det = 1.0;
    for (int col = 0; col < kDim; ++col) {
        int piv = col;
        for (int r = col + 1; r < kDim; ++r)
            if (std::fabs(get(m, r, col)) > std::fabs(get(m, piv, col))) piv = r;
        if (get(m, piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < kDim; ++j) std::swap(at(m, piv, j), at(m, col, j));
            det = -det;
        }
        det *= get(m, col, col);
        for (int r = col + 1; r < kDim; ++r) {
            const double f = get(m, r, col) / get(m, col, col);
            for (int j = col; j < kDim; ++j) at(m, r, j) -= f * get(m, col, j);
        }
    }
    return det;
}

std::array<double, kDim> sym_eigenvalues(std::array<double, kDim * kDim> m) {
    // cyclic Jacobi; plenty for 6x6 symmetric
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < kDim; ++p)
            for (int q = p + 1; q < kDim; ++q) off += get(m, p, q) * get(m, p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < kDim; ++p)
            for (int q = p + 1; q < kDim; ++q) {
                const double apq = get(m, p, q);
                if (apq == 0.0) continue;
                const double theta = (get(m, q, q) - get(m, p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < kDim; ++k) {
                    const double mkp = get(m, k, p), mkq = get(m, k, q);
                    at(m, k, p) = c * mkp - s * mkq;
                    at(m, k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < kDim; ++k) {
                    const double mpk = get(m, p, k), mqk = get(m, q, k);
                    at(m, p, k) = c * mpk - s * mqk;
                    at(m, q, k) = s * mpk + c * mqk;
                }
            }
    }
    std::array<double, kDim> ev;
    for (int i = 0; i < kDim; ++i) ev[static_cast<size_t>(i)] = get(m, i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::pair<int, int> check_signature(const std::array<double, kDim * kDim>& g_value) {
    double norm = 0.0;
    for (double v : g_value) norm = std::max(norm, std::fabs(v));
    const auto ev = sym_eigenvalues(g_value);
    const double tol = 1e-10 * std::max(norm, 1e-300);
    int np = 0, nm = 0;
    for (double l : ev) {
        if (std::fabs(l) <= tol)
            throw DegeneracyError("near-zero metric eigenvalue " + std::to_string(l));
        (l > 0 ? np : nm)++;
    }
    return {np, nm};
}

const std::vector<std::pair<int, int>>& zero_pattern(HSpaceType t) {
    static const std::map<HSpaceType, std::vector<std::pair<int, int>>> k = [] {
        std::map<HSpaceType, std::vector<std::pair<int, int>>> out;
        const std::map<HSpaceType, std::vector<std::pair<int, int>>> nonzero = {
            {HSpaceType::T2211, {{0, 1}, {1, 1}, {2, 3}, {3, 3}, {4, 4}, {5, 5}}},
            {HSpaceType::T321, {{0, 2}, {1, 1}, {1, 2}, {2, 2}, {3, 4}, {4, 4}, {5, 5}}},
            {HSpaceType::T33, {{1, 1}, {0, 2}, {1, 2}, {2, 2}, {4, 4}, {3, 5}, {4, 5}, {5, 5}}},
            {HSpaceType::T411,
             {{0, 3}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {4, 4}, {5, 5}}},
            {HSpaceType::T51,
             {{0, 4}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 4}, {5, 5}}},
        };
        for (const auto& [t_, nz] : nonzero) {
            std::vector<std::pair<int, int>> zeros;
            for (int i = 0; i < kDim; ++i)
                for (int j = i; j < kDim; ++j)
                    if (std::find(nz.begin(), nz.end(), std::make_pair(i, j)) == nz.end())
                        zeros.emplace_back(i, j);
            out[t_] = zeros;
        }
        return out;
    }();
    return k.at(t);
}

}  // namespace hspace
