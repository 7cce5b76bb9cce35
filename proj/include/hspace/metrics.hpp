#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hspace/jets.hpp"

namespace hspace {

enum class HSpaceType { T2211, T321, T33, T411, T51 };

struct Block {
    int start;  // 0-based first coordinate
    int size;
};

const std::vector<Block>& blocks_of(HSpaceType t);
const std::vector<int>& simple_roots_of(HSpaceType t);  // 0-based coordinates
bool type_has_eps_tilde(HSpaceType t);
const std::vector<int>& sign_indices_of(HSpaceType t);  // 0-based coords carrying e_i
std::string to_string(HSpaceType t);
std::optional<HSpaceType> parse_type(const std::string& tag);

/// Full parameterization of one canonical metric.
struct HSpaceSpec {
    HSpaceType type = HSpaceType::T2211;
    int eps = 0;
    int eps_tilde = 0;                    // ignored for T411/T51
    double a = 0.0;                       // second-block eigenvalue offset
    std::array<int, kDim> signs{1, 1, 1, 1, 1, 1};
    ParamFn theta;
    ParamFn omega;                        // ignored for T411/T51
    std::map<int, ParamFn> f_simple;      // keyed by 0-based simple-root coordinate
    bool relax_eps_constraint = false;
};

/// Checks the parameter constraints; throws ValidationError naming the field.
const HSpaceSpec& validate_spec(const HSpaceSpec& spec);

// Candidate readings where the source formulas are ambiguous. Defaults are
// the residual-calibrated winners; the alternatives stay selectable so the
// calibration can be demonstrated and recorded.
enum class T321G66Variant { CrossBlock, Literal };
enum class T411TailVariant { OutsideDoubled, OutsidePrinted, InsideBraces };
enum class T33AtildeVariant { Mirror, Literal };

struct MetricOptions {
    T321G66Variant t321_g66 = T321G66Variant::CrossBlock;
    T411TailVariant t411_tail = T411TailVariant::OutsideDoubled;
    T33AtildeVariant t33_atilde = T33AtildeVariant::Mirror;
};

std::string to_string(T321G66Variant v);
std::string to_string(T411TailVariant v);
std::string to_string(T33AtildeVariant v);

struct MetricField {
    std::array<Jet2, kDim * kDim> g;
    std::array<Jet2, kDim * kDim> g_inv;
    Point point;

    const Jet2& at(int i, int j) const { return g[static_cast<size_t>(i * kDim + j)]; }
    const Jet2& inv(int i, int j) const { return g_inv[static_cast<size_t>(i * kDim + j)]; }
};

/// Block eigenvalue functions f_1..f_6 as jets at p.
std::array<Jet2, kDim> eigenvalue_functions(const HSpaceSpec& spec, const Point& p);

/// Per-block affine factor (eps_p * y_{k-1} + chi_p(y_k)) as a jet.
Jet2 block_a_function(const HSpaceSpec& spec, const Point& p, int block_index,
                      const MetricOptions& opts = {});

/// Assembles the metric and its inverse with full jet propagation.
MetricField metric_at(const HSpaceSpec& spec, const Point& p, const MetricOptions& opts = {});

/// Value = m^-1, first partials from -m^-1 (dm) m^-1, second partials from
/// differentiating that identity again. Throws DegeneracyError when the
/// value-level condition estimate exceeds cond_cap.
std::array<Jet2, kDim * kDim> invert_jet_matrix(const std::array<Jet2, kDim * kDim>& m,
                                                double cond_cap = 1e12);

struct SamplerConfig {
    std::array<std::array<double, 2>, kDim> box{{{1.0, 2.0},
                                                 {1.0, 2.0},
                                                 {1.0, 2.0},
                                                 {1.0, 2.0},
                                                 {1.0, 2.0},
                                                 {1.0, 2.0}}};
    int count = 100;
    std::uint64_t seed = 1;
    double margin = 0.1;
};

/// Deterministic rejection sampler: exactly cfg.count points, identical for
/// identical (spec, cfg). Throws SamplingError naming the tightest constraint
/// when the admissible set is too thin.
std::vector<Point> sample_points(const HSpaceSpec& spec, const SamplerConfig& cfg,
                                 const MetricOptions& opts = {});

/// Smallest admissibility margin at p (cross-block eigenvalue separations,
/// |A| factors, |det g|); optionally names the binding constraint.
double admissibility_margin(const HSpaceSpec& spec, const Point& p,
                            const MetricOptions& opts = {},
                            std::string* tightest = nullptr);

/// Counts of (positive, negative) eigenvalues; near-zero eigenvalue (within
/// 1e-10 * ||g||) throws DegeneracyError.
std::pair<int, int> check_signature(const std::array<double, kDim * kDim>& g_value);

/// Index pairs (i <= j, 0-based) where g is identically zero for the type.
const std::vector<std::pair<int, int>>& zero_pattern(HSpaceType t);

// value-level helpers
std::array<double, kDim * kDim> values_of(const std::array<Jet2, kDim * kDim>& m);
double det6(const std::array<double, kDim * kDim>& m);
std::array<double, kDim> sym_eigenvalues(std::array<double, kDim * kDim> m);

}  // namespace hspace
