#pragma once

#include <cmath>

#include "types.hpp"

namespace zetalab {

namespace detail {

inline constexpr double psi_modular_threshold = 0.05;

struct SeriesSum {
    double value;
    std::int64_t terms;
};

inline SeriesSum psi_direct(double x, double tail_tol, std::int64_t max_terms)
{
    double sum = 0.0;
    std::int64_t n = 1;
    for (; n <= max_terms; ++n) {
        double term = std::exp(-double(n) * double(n) * pi * x);
        if (n > 1 && term < tail_tol * (sum + 1.0)) break;
        sum += term;
    }
    if (n > max_terms) throw NonConvergence("psi: max_terms reached", sum, 0.0, 0.0);
    return {sum, n - 1};
}

inline SeriesSum psi_sum(double x, double tail_tol, std::int64_t max_terms)
{
    if (x >= psi_modular_threshold) return psi_direct(x, tail_tol, max_terms);
    // psi(x) = -1/2 + x^{-1/2} (psi(1/x) + 1/2)
    SeriesSum inv = psi_direct(1.0 / x, tail_tol, max_terms);
    return {-0.5 + (inv.value + 0.5) / std::sqrt(x), inv.terms};
}

// Plain value used inside integrands.
inline double psi_value(double x) { return psi_sum(x, 1e-17, 1000000).value; }

} // namespace detail

inline EvalResult psi(double x, const QuadratureSpec& spec = {})
{
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("psi: require x > 0");
    auto s = detail::psi_sum(x, spec.series_tail_tol, spec.max_terms);
    EvalResult r;
    r.value = s.value;
    r.err_estimate = spec.series_tail_tol * (s.value + 1.0);
    r.evaluations = s.terms;
    return r;
}

inline EvalResult big_theta(double v, const QuadratureSpec& spec = {})
{
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("big_theta: require v > 0");
    EvalResult r = psi(v, spec);
    r.value = 1.0 + 2.0 * r.value.real();
    r.err_estimate *= 2.0;
    return r;
}

// 1 + 2 sum_{n>=1} q^{n^2} cos(2 pi n z)
inline EvalResult jacobi_theta3(Complex z, Complex q, const QuadratureSpec& spec = {})
{
    double aq = std::abs(q);
    if (!(aq < 1.0)) throw DomainError("jacobi_theta3: require |q| < 1");
    EvalResult r;
    r.value = 1.0;
    if (aq == 0.0) return r;
    double log_aq = std::log(aq);
    double grow = 2.0 * pi * std::fabs(z.imag());
    Complex sum = 0.0;
    double last = 0.0;
    std::int64_t n = 1;
    for (; n <= spec.max_terms; ++n) {
        double dn = double(n);
        Complex qn = std::exp(dn * dn * std::log(q));
        Complex term = 2.0 * qn * std::cos(2.0 * pi * dn * z);
        sum += term;
        last = std::abs(term);
        bool decreasing = 2.0 * dn * log_aq + grow < 0.0;
        double bound = 2.0 * std::exp(dn * dn * log_aq + grow * dn);
        if (decreasing && bound < spec.series_tail_tol * (std::abs(1.0 + sum) + 1.0)) break;
    }
    if (n > spec.max_terms) throw NonConvergence("jacobi_theta3: max_terms reached");
    r.value = 1.0 + sum;
    r.err_estimate = last;
    r.evaluations = n;
    return r;
}

inline double theta_modular_residual(double v, const QuadratureSpec& spec = {})
{
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("theta_modular_residual: require v > 0");
    double lhs = big_theta(1.0 / v, spec).value.real();
    double rhs = std::sqrt(v) * big_theta(v, spec).value.real();
    return std::fabs(lhs - rhs);
}

} // namespace zetalab
