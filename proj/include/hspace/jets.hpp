#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "hspace/errors.hpp"

namespace hspace {

inline constexpr int kDim = 6;

struct Point {
    std::array<double, kDim> x{};

    double operator[](int i) const { return x[static_cast<size_t>(i)]; }
    double& operator[](int i) { return x[static_cast<size_t>(i)]; }
    bool finite() const;
};

/// Order-2 Taylor data of a scalar field at a point: value, gradient and
/// (exactly symmetric) Hessian with respect to the 6 coordinates.
struct Jet2 {
    double val = 0.0;
    std::array<double, kDim> grad{};
    std::array<double, kDim * kDim> hess{};

    Jet2() = default;
    explicit Jet2(double v) : val(v) {}

    double h(int i, int j) const { return hess[static_cast<size_t>(i * kDim + j)]; }
    void set_h(int i, int j, double v) {
        hess[static_cast<size_t>(i * kDim + j)] = v;
        hess[static_cast<size_t>(j * kDim + i)] = v;
    }

    Jet2 operator-() const;
    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
};

/// Coordinate seed: value p.x[axis], unit gradient on `axis`, zero Hessian.
/// axis is 0-based; out of range throws ValidationError.
Jet2 seed_coordinate(const Point& p, int axis);

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);

Jet2 operator+(const Jet2& a, double s);
Jet2 operator+(double s, const Jet2& a);
Jet2 operator-(const Jet2& a, double s);
Jet2 operator-(double s, const Jet2& a);
Jet2 operator*(const Jet2& a, double s);
Jet2 operator*(double s, const Jet2& a);
Jet2 operator/(const Jet2& a, double s);
Jet2 operator/(double s, const Jet2& a);

/// 1/a; throws PoleError when a.val == 0.
Jet2 recip(const Jet2& a);

/// Integer power by repeated multiplication (negative n via recip).
Jet2 pow_int(const Jet2& a, int n);

struct ParamEval {
    double f;
    double df;
    double ddf;
};

/// Univariate parameter function closed under two derivatives.
struct ParamFn {
    enum class Kind { Polynomial, Sinusoid, Constant };

    Kind kind = Kind::Constant;
    std::vector<double> coeffs;  // polynomial: sum_i coeffs[i] * t^i
    double amplitude = 0.0, omega = 0.0, phase = 0.0, offset = 0.0;
    double value = 0.0;

    ParamEval eval(double t) const;

    static ParamFn polynomial(std::vector<double> coeffs);
    static ParamFn sinusoid(double amplitude, double omega, double phase, double offset);
    static ParamFn constant(double value);
};

/// Univariate chain rule to order 2: f(t) with t a jet.
Jet2 eval_param_fn(const ParamFn& f, const Jet2& t);

/// Central-difference gradient and Hessian of a scalar field, O(h^2).
/// Test oracle; independent of the jet propagation rules.
Jet2 fd_oracle(const std::function<double(const Point&)>& field, const Point& p, double h);

}  // namespace hspace
