#include "hspace/tensor.hpp"

#include <cmath>

#include "hspace/errors.hpp"

namespace hspace {

Christoffel christoffel(const MetricField& m) {
    Christoffel c;
    // dg[k][i][j] = d_k g_ij ; ddg symmetric second partials from the jets
    auto dg = [&](int k, int i, int j) { return m.at(i, j).grad[static_cast<size_t>(k)]; };
    auto ddg = [&](int l, int k, int i, int j) { return m.at(i, j).h(l, k); };
    auto ginv = [&](int i, int j) { return m.inv(i, j).val; };
    auto dginv = [&](int l, int i, int j) { return m.inv(i, j).grad[static_cast<size_t>(l)]; };

    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = j; k < kDim; ++k) {
                double s = 0.0;
                for (int l = 0; l < kDim; ++l)
                    s += ginv(i, l) * (dg(j, l, k) + dg(k, j, l) - dg(l, j, k));
                c.gamma[static_cast<size_t>(idx3(i, j, k))] = 0.5 * s;
                c.gamma[static_cast<size_t>(idx3(i, k, j))] = 0.5 * s;
            }

    for (int m_ = 0; m_ < kDim; ++m_)
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = j; k < kDim; ++k) {
                    double s = 0.0;
                    for (int l = 0; l < kDim; ++l) {
                        s += dginv(m_, i, l) * (dg(j, l, k) + dg(k, j, l) - dg(l, j, k));
                        s += ginv(i, l) *
                             (ddg(m_, j, l, k) + ddg(m_, k, j, l) - ddg(m_, l, j, k));
                    }
                    c.dgamma[static_cast<size_t>(idx4(m_, i, j, k))] = 0.5 * s;
                    c.dgamma[static_cast<size_t>(idx4(m_, i, k, j))] = 0.5 * s;
                }
    return c;
}

RiemannTensor riemann(const Christoffel& c, const MetricField& m) {
    RiemannTensor r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l) {
                    double v = c.dg(k, i, j, l) - c.dg(l, i, j, k);
                    for (int p = 0; p < kDim; ++p)
                        v += c.g(i, k, p) * c.g(p, j, l) - c.g(i, l, p) * c.g(p, j, k);
                    r.up[static_cast<size_t>(idx4(i, j, k, l))] = v;
                }
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l) {
                    double v = 0.0;
                    for (int p = 0; p < kDim; ++p)
                        v += m.at(i, p).val * r.u(p, j, k, l);
                    r.low[static_cast<size_t>(idx4(i, j, k, l))] = v;
                }
    return r;
}

std::array<double, kDim * kDim * kDim> covariant_derivative_2tensor(
    const std::array<Jet2, kDim * kDim>& b, const Christoffel& c) {
    std::array<double, kDim * kDim * kDim> out{};
    auto bv = [&](int i, int j) { return b[static_cast<size_t>(i * kDim + j)].val; };
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                double v = b[static_cast<size_t>(i * kDim + j)].grad[static_cast<size_t>(k)];
                for (int p = 0; p < kDim; ++p)
                    v -= c.g(p, i, k) * bv(p, j) + c.g(p, j, k) * bv(i, p);
                out[static_cast<size_t>(idx3(i, j, k))] = v;
            }
    return out;
}

std::array<double, kDim * kDim> covariant_hessian_scalar(const Jet2& phi, const Christoffel& c) {
    std::array<double, kDim * kDim> out{};
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            double v = phi.h(i, j);
            for (int p = 0; p < kDim; ++p) v -= c.g(p, i, j) * phi.grad[static_cast<size_t>(p)];
            out[static_cast<size_t>(i * kDim + j)] = v;
        }
    return out;
}

double sectional_curvature(const RiemannTensor& r, const MetricField& m,
                           const std::array<double, kDim>& u, const std::array<double, kDim>& v,
                           double rel_tol) {
    auto inner = [&](const std::array<double, kDim>& a, const std::array<double, kDim>& b) {
        double s = 0.0;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                s += m.at(i, j).val * a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        return s;
    };
    const double guu = inner(u, u), gvv = inner(v, v), guv = inner(u, v);
    const double den = guu * gvv - guv * guv;
    const double scale = std::fabs(guu * gvv) + guv * guv + 1e-300;
    if (std::fabs(den) < rel_tol * scale)
        throw DegeneracyError("degenerate plane: |g(u,u)g(v,v) - g(u,v)^2| below tolerance");
    double num = 0.0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l)
                    num += r.lo(i, j, k, l) * u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)] *
                           u[static_cast<size_t>(k)] * v[static_cast<size_t>(l)];
    return num / den;
}

}  // namespace hspace
