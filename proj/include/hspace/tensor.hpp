#pragma once

#include <array>

#include "hspace/metrics.hpp"

namespace hspace {

inline int idx3(int i, int j, int k) { return (i * kDim + j) * kDim + k; }
inline int idx4(int l, int i, int j, int k) { return ((l * kDim + i) * kDim + j) * kDim + k; }

/// Levi-Civita connection coefficients and their first partials.
struct Christoffel {
    std::array<double, kDim * kDim * kDim> gamma{};    // gamma[idx3(i,j,k)] = G^i_{jk}
    std::array<double, kDim * kDim * kDim * kDim> dgamma{};  // dgamma[idx4(l,i,j,k)] = d_l G^i_{jk}

    double g(int i, int j, int k) const { return gamma[static_cast<size_t>(idx3(i, j, k))]; }
    double dg(int l, int i, int j, int k) const {
        return dgamma[static_cast<size_t>(idx4(l, i, j, k))];
    }
};

struct RiemannTensor {
    std::array<double, kDim * kDim * kDim * kDim> up{};   // R^i_{jkl}
    std::array<double, kDim * kDim * kDim * kDim> low{};  // R_{ijkl}

    double u(int i, int j, int k, int l) const { return up[static_cast<size_t>(idx4(i, j, k, l))]; }
    double lo(int i, int j, int k, int l) const {
        return low[static_cast<size_t>(idx4(i, j, k, l))];
    }
};

Christoffel christoffel(const MetricField& m);

/// R^i_{jkl} = d_k G^i_{jl} - d_l G^i_{jk} + G^i_{km} G^m_{jl} - G^i_{lm} G^m_{jk};
/// lowered form by contraction with g.
RiemannTensor riemann(const Christoffel& c, const MetricField& m);

/// b_{ij,k} = d_k b_ij - G^m_{ik} b_mj - G^m_{jk} b_im.
std::array<double, kDim * kDim * kDim> covariant_derivative_2tensor(
    const std::array<Jet2, kDim * kDim>& b, const Christoffel& c);

/// phi_{,ij} = hess(phi) - G^m_{ij} grad(phi)_m (symmetric).
std::array<double, kDim * kDim> covariant_hessian_scalar(const Jet2& phi, const Christoffel& c);

/// K = R(u,v,u,v) / (g(u,u) g(v,v) - g(u,v)^2); a plane with denominator below
/// rel_tol * scale throws DegeneracyError (null or collinear directions).
double sectional_curvature(const RiemannTensor& r, const MetricField& m,
                           const std::array<double, kDim>& u, const std::array<double, kDim>& v,
                           double rel_tol = 1e-6);

}  // namespace hspace
