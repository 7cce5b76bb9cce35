#include "hspace/jets.hpp"

#include <cmath>
#include <string>

namespace hspace {

bool Point::finite() const {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

Jet2 seed_coordinate(const Point& p, int axis) {
    if (axis < 0 || axis >= kDim)
        throw ValidationError("axis", "coordinate axis " + std::to_string(axis) +
                                          " out of range [0," + std::to_string(kDim - 1) + "]");
    Jet2 j(p[axis]);
    j.grad[static_cast<size_t>(axis)] = 1.0;
    return j;
}

Jet2 Jet2::operator-() const {
    Jet2 r(-val);
    for (int i = 0; i < kDim; ++i) r.grad[i] = -grad[i];
    for (int i = 0; i < kDim * kDim; ++i) r.hess[i] = -hess[i];
    return r;
}

Jet2& Jet2::operator+=(const Jet2& o) {
    val += o.val;
    for (int i = 0; i < kDim; ++i) grad[i] += o.grad[i];
    for (int i = 0; i < kDim * kDim; ++i) hess[i] += o.hess[i];
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
    val -= o.val;
    for (int i = 0; i < kDim; ++i) grad[i] -= o.grad[i];
    for (int i = 0; i < kDim * kDim; ++i) hess[i] -= o.hess[i];
    return *this;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r += b;
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r -= b;
    return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.val * b.val);
    for (int i = 0; i < kDim; ++i) r.grad[i] = a.grad[i] * b.val + b.grad[i] * a.val;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            // grouped so the result is symmetric to the bit
            r.hess[i * kDim + j] = (a.hess[i * kDim + j] * b.val + b.hess[i * kDim + j] * a.val) +
                                   (a.grad[i] * b.grad[j] + b.grad[i] * a.grad[j]);
    return r;
}

Jet2 recip(const Jet2& a) {
    if (a.val == 0.0) throw PoleError("division by zero jet value");
    const double w = 1.0 / a.val;
    const double w2 = w * w;
    const double w3 = w2 * w;
    Jet2 r(w);
    for (int i = 0; i < kDim; ++i) r.grad[i] = -w2 * a.grad[i];
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            r.hess[i * kDim + j] =
                -w2 * a.hess[i * kDim + j] + 2.0 * w3 * a.grad[i] * a.grad[j];
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

Jet2 operator+(const Jet2& a, double s) {
    Jet2 r = a;
    r.val += s;
    return r;
}
Jet2 operator+(double s, const Jet2& a) { return a + s; }
Jet2 operator-(const Jet2& a, double s) { return a + (-s); }
Jet2 operator-(double s, const Jet2& a) { return -a + s; }

Jet2 operator*(const Jet2& a, double s) {
    Jet2 r(a.val * s);
    for (int i = 0; i < kDim; ++i) r.grad[i] = a.grad[i] * s;
    for (int i = 0; i < kDim * kDim; ++i) r.hess[i] = a.hess[i] * s;
    return r;
}
Jet2 operator*(double s, const Jet2& a) { return a * s; }
Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
Jet2 operator/(double s, const Jet2& a) { return recip(a) * s; }

Jet2 pow_int(const Jet2& a, int n) {
    if (n < 0) return recip(pow_int(a, -n));
    Jet2 r(1.0);
    Jet2 base = a;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

ParamEval ParamFn::eval(double t) const {
    switch (kind) {
        case Kind::Polynomial: {
            // Horner for f, f', f''
            double f = 0.0, df = 0.0, ddf = 0.0;
            for (size_t k = coeffs.size(); k-- > 0;) {
                ddf = ddf * t + 2.0 * df;
                df = df * t + f;
                f = f * t + coeffs[k];
            }
            return {f, df, ddf};
        }
        case Kind::Sinusoid: {
            const double arg = omega * t + phase;
            const double s = std::sin(arg), c = std::cos(arg);
            return {amplitude * s + offset, amplitude * omega * c,
                    -amplitude * omega * omega * s};
        }
        case Kind::Constant:
            return {value, 0.0, 0.0};
    }
    return {0.0, 0.0, 0.0};
}

ParamFn ParamFn::polynomial(std::vector<double> coeffs) {
    ParamFn p;
    p.kind = Kind::Polynomial;
    p.coeffs = std::move(coeffs);
    return p;
}

ParamFn ParamFn::sinusoid(double amplitude, double omega, double phase, double offset) {
    ParamFn p;
    p.kind = Kind::Sinusoid;
    p.amplitude = amplitude;
    p.omega = omega;
    p.phase = phase;
    p.offset = offset;
    return p;
}

ParamFn ParamFn::constant(double value) {
    ParamFn p;
    p.kind = Kind::Constant;
    p.value = value;
    return p;
}

Jet2 eval_param_fn(const ParamFn& f, const Jet2& t) {
    const ParamEval e = f.eval(t.val);
    Jet2 r(e.f);
    for (int i = 0; i < kDim; ++i) r.grad[i] = e.df * t.grad[i];
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            r.hess[i * kDim + j] =
                e.ddf * t.grad[i] * t.grad[j] + e.df * t.hess[i * kDim + j];
    return r;
}

Jet2 fd_oracle(const std::function<double(const Point&)>& field, const Point& p, double h) {
    if (!(h > 0.0)) throw ValidationError("h", "finite-difference step must be positive");
    auto at = [&](int i, double di, int j, double dj) {
        Point q = p;
        q[i] += di;
        if (j >= 0) q[j] += dj;
        return field(q);
    };
    Jet2 r(field(p));
    for (int i = 0; i < kDim; ++i) {
        const double fp = at(i, h, -1, 0.0), fm = at(i, -h, -1, 0.0);
        r.grad[i] = (fp - fm) / (2.0 * h);
        r.set_h(i, i, (fp - 2.0 * r.val + fm) / (h * h));
    }
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) {
            const double fpp = at(i, h, j, h), fpm = at(i, h, j, -h);
            const double fmp = at(i, -h, j, h), fmm = at(i, -h, j, -h);
            r.set_h(i, j, (fpp - fpm - fmp + fmm) / (4.0 * h * h));
        }
    return r;
}

}  // namespace hspace
