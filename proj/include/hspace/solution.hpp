#pragma once

#include <map>
#include <string>

#include "hspace/metrics.hpp"
#include "hspace/tensor.hpp"

namespace hspace {

// Calibrated curvature-convention constant: the integrability residual of the
// canonical solution vanishes with this sign and fails by orders of magnitude
// with the opposite one (asserted by tests).
inline constexpr double kRiemannSign = 1.0;

/// The projective-motion pair at one point: b (jets), defining function phi
/// (jet), and the overall scale a1.
struct CanonicalSolution {
    std::array<Jet2, kDim * kDim> b;
    Jet2 phi;
    double a1 = 1.0;

    const Jet2& bat(int i, int j) const { return b[static_cast<size_t>(i * kDim + j)]; }
};

struct ResidualReport {
    Point point;
    double eisenhart_max = 0.0;
    double integrability_max = 0.0;
    double vanishing_max = 0.0;
    std::map<std::string, double> proof_ids_max;
};

/// Jordan operator B^i_j: block eigenvalue on the diagonal plus the nilpotent
/// shift. The shift orientation (toward the lower index) and its
/// coordinate-dependent weights are fixed by the b-symmetry calibration:
/// unit chain on the first k-1 block coordinates, last column carrying
/// i*eps_p*y^i and (k-1)*A_p. trace(B) = sum of the eigenvalues.
std::array<Jet2, kDim * kDim> jordan_operator(const HSpaceSpec& spec, const Point& p,
                                              const MetricOptions& opts = {});

/// b_ij = sum_m g_im B^m_j. Throws OrientationError when the contraction is
/// asymmetric beyond sym_tol * max|b| (wrong shift orientation).
std::array<Jet2, kDim * kDim> canonical_b(const MetricField& m,
                                          const std::array<Jet2, kDim * kDim>& B,
                                          double sym_tol = 1e-12);

/// phi = a1 * (1/2) * sum_i f_i as a jet.
Jet2 defining_function(const HSpaceSpec& spec, double a1, const Point& p);

/// Assembles the Eisenhart-exact pair: b = a1 * g (B_jordan + 2*phihat*I),
/// phi = a1 * phihat.
CanonicalSolution build_canonical_solution(const HSpaceSpec& spec, const MetricField& m,
                                           double a1 = 1.0, const MetricOptions& opts = {});

// Residuals are scale-free: worst absolute defect divided by the largest
// magnitude among the equation's individual terms at the point (floor 1e-30).

double eisenhart_residual(const CanonicalSolution& sol, const MetricField& m,
                          const Christoffel& c, double* scale_out = nullptr);
double integrability_residual(const CanonicalSolution& sol, const MetricField& m,
                              const Christoffel& c, double riemann_sign = kRiemannSign);
double vanishing_checks(const HSpaceSpec& spec, const CanonicalSolution& sol,
                        const MetricField& m, const Christoffel& c);
std::map<std::string, double> proof_relation_checks(const HSpaceSpec& spec,
                                                    const CanonicalSolution& sol,
                                                    const MetricField& m);

// Convenience wrappers matching the per-point call shape.
double eisenhart_residual(const HSpaceSpec& spec, const CanonicalSolution& sol, const Point& p,
                          const MetricOptions& opts = {});
double integrability_residual(const HSpaceSpec& spec, const CanonicalSolution& sol,
                              const Point& p, const MetricOptions& opts = {},
                              double riemann_sign = kRiemannSign);
double vanishing_checks(const HSpaceSpec& spec, const CanonicalSolution& sol, const Point& p,
                        const MetricOptions& opts = {});

}  // namespace hspace
