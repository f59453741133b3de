#pragma once

// Double-exponential quadrature: tanh-sinh on [a,b], exp-sinh on [a,inf).
// Each level halves the step and only evaluates the new (odd) nodes.
// The error estimate is the magnitude of the last refinement increment.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

#include "types.hpp"

namespace zetalab {

struct Domain {
    enum class Kind { Finite, SemiInfinite };
    Kind kind = Kind::SemiInfinite;
    double a = 0.0;
    double b = std::numeric_limits<double>::infinity();
};

inline Domain finite(double a, double b)
{
    if (!(a < b)) throw DomainError("integrate: require a < b");
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: finite bounds required");
    return {Domain::Kind::Finite, a, b};
}

inline Domain semi_infinite(double a)
{
    if (!std::isfinite(a)) throw DomainError("integrate: finite lower bound required");
    return {Domain::Kind::SemiInfinite, a, std::numeric_limits<double>::infinity()};
}

inline Domain positive_reals() { return semi_infinite(0.0); }

namespace detail {

inline constexpr double half_pi = pi / 2.0;
inline constexpr double de_h0 = 0.5;
inline constexpr double de_tmax_finite = 6.1;
inline constexpr double de_tmax_semi = 6.7;
inline constexpr double de_negligible = 1e-20;

struct Node {
    double x;
    double w;
    bool ok;
};

inline Node de_node(const Domain& d, double t)
{
    double v = half_pi * std::sinh(t);
    if (d.kind == Domain::Kind::Finite) {
        double width = d.b - d.a;
        double e = std::exp(-2.0 * std::fabs(v));
        double dist = width * e / (1.0 + e);
        double x = t < 0 ? d.a + dist : (t > 0 ? d.b - dist : 0.5 * (d.a + d.b));
        double w = 0.5 * width * half_pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        bool ok = x > d.a && x < d.b && w > 0.0;
        return {x, w, ok};
    }
    double ev = std::exp(v);
    double x = d.a + ev;
    double w = half_pi * std::cosh(t) * ev;
    bool ok = x > d.a && std::isfinite(x) && std::isfinite(w) && w > 0.0;
    return {x, w, ok};
}

template <class F>
Complex call_integrand(F& f, double x)
{
    if constexpr (std::is_convertible_v<std::invoke_result_t<F&, double>, Complex>)
        return Complex(f(x));
    else
        return f(x);
}

// Sums w*f over nodes t = (start + j*stride)*h on one side of zero, walking outward
// until the contribution stays negligible relative to the largest one seen and the
// walk has passed the last significant node of earlier levels (extent).
template <class F>
Complex de_side(F& f, const Domain& d, double h, int start, int stride, int sign, double tmax,
                double& peak, double& extent, std::int64_t& evals)
{
    Complex sum = 0.0;
    int quiet = 0;
    for (int j = start;; j += stride) {
        double t = sign * j * h;
        if (std::fabs(t) > tmax) break;
        Node n = de_node(d, t);
        if (!n.ok) break;
        Complex fx = call_integrand(f, n.x);
        ++evals;
        if (!is_finite(fx))
            throw NonFiniteIntegrand("integrate: non-finite integrand at x = " + std::to_string(n.x));
        Complex c = n.w * fx;
        double m = std::abs(c);
        sum += c;
        if (m > peak) peak = m;
        if (peak > 0.0 && m <= de_negligible * peak) {
            if (++quiet >= 2 && std::fabs(t) > extent) break;
        } else {
            quiet = 0;
            if (std::fabs(t) > extent) extent = std::fabs(t);
        }
    }
    return sum;
}

} // namespace detail

// Returns the estimate with converged = false when max_levels is exhausted.
template <class F>
EvalResult integrate_partial(F&& f, const Domain& d, const QuadratureSpec& spec = {})
{
    using namespace detail;
    double tmax = d.kind == Domain::Kind::Finite ? de_tmax_finite : de_tmax_semi;
    EvalResult r;
    double peak = 0.0;
    double extent_pos = 0.0, extent_neg = 0.0;
    double h = de_h0;

    Complex sum = 0.0;
    {
        Node n0 = de_node(d, 0.0);
        if (n0.ok) {
            Complex fx = call_integrand(f, n0.x);
            ++r.evaluations;
            if (!is_finite(fx))
                throw NonFiniteIntegrand("integrate: non-finite integrand at x = " + std::to_string(n0.x));
            sum = n0.w * fx;
            peak = std::abs(sum);
        }
    }
    sum += de_side(f, d, h, 1, 1, +1, tmax, peak, extent_pos, r.evaluations);
    sum += de_side(f, d, h, 1, 1, -1, tmax, peak, extent_neg, r.evaluations);
    Complex estimate = h * sum;
    double err = std::numeric_limits<double>::infinity();

    for (int level = 1; level <= spec.max_levels; ++level) {
        h *= 0.5;
        Complex odd = de_side(f, d, h, 1, 2, +1, tmax, peak, extent_pos, r.evaluations);
        odd += de_side(f, d, h, 1, 2, -1, tmax, peak, extent_neg, r.evaluations);
        sum += odd;
        Complex next = h * sum;
        err = std::abs(next - estimate);
        estimate = next;
        if (level >= 2 && err <= spec.tolerance_for(std::abs(estimate))) {
            r.value = estimate;
            r.err_estimate = err;
            r.converged = true;
            return r;
        }
    }
    r.value = estimate;
    r.err_estimate = err;
    r.converged = false;
    return r;
}

template <class F>
EvalResult integrate(F&& f, const Domain& d, const QuadratureSpec& spec = {})
{
    EvalResult r = integrate_partial(std::forward<F>(f), d, spec);
    if (!r.converged)
        throw NonConvergence("integrate: max_levels exhausted", r.value.real(), r.value.imag(),
                             r.err_estimate);
    return r;
}

} // namespace zetalab
