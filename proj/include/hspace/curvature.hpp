#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hspace/metrics.hpp"

namespace hspace {

/// Scalar curvature combinations built from the simple-root functions and
/// their first two derivatives, evaluated at one point.
struct CurvatureReport {
    Point point;
    std::map<int, double> rho_p;                       // key: block eigen-coordinate (0-based)
    std::map<std::pair<int, int>, double> rho_pq;      // key: (p, q)
    std::map<std::pair<int, int>, double> rho_sigma_p; // key: (sigma, p)
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    bool has_gamma = false;
};

CurvatureReport curvature_quantities(const HSpaceSpec& spec, const Point& p,
                                     const MetricOptions& opts = {});

struct PredicateReport {
    bool holds = false;
    double worst = 0.0;                    // worst |condition value| over the samples
    std::map<std::string, double> parts;   // per-condition worst values
};

/// Per-type constant-curvature conditions, certified by sampling: every
/// function-valued condition must stay within tol at every sample.
PredicateReport constant_curvature_predicate(const HSpaceSpec& spec,
                                             const std::vector<Point>& samples,
                                             double tol = 1e-10, const MetricOptions& opts = {});

struct CrossValidationReport {
    bool predicate = false;
    double spread = 0.0;
    double k_min = 0.0;
    double k_max = 0.0;
    int planes_used = 0;
    bool degenerate_report = false;  // fewer than 2 (point, plane) pairs
};

/// Measures sectional curvature over random admissible planes at each sample
/// and reports the spread; the plane stream is seeded, hence deterministic.
CrossValidationReport cross_validate_constant_curvature(const HSpaceSpec& spec,
                                                        const std::vector<Point>& samples,
                                                        int planes_per_point, std::uint64_t seed,
                                                        const MetricOptions& opts = {});

}  // namespace hspace
