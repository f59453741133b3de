#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include "errors.hpp"

namespace zetalab {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_levels = 12;
    double series_tail_tol = 1e-16;
    std::int64_t max_terms = 1000000;

    void validate() const
    {
        auto unit = [](double v) { return v > 0.0 && v < 1.0; };
        if (!unit(abs_tol) || !unit(rel_tol) || !unit(series_tail_tol))
            throw DomainError("QuadratureSpec: tolerances must lie in (0, 1)");
        if (max_levels < 1) throw DomainError("QuadratureSpec: max_levels must be >= 1");
        if (max_terms < 1) throw DomainError("QuadratureSpec: max_terms must be >= 1");
    }

    double tolerance_for(double magnitude) const { return std::max(abs_tol, rel_tol * magnitude); }
};

struct EvalResult {
    Complex value{};
    double err_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = true;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// sin(pi x) and cos(pi x) with exact zeros at the integers / half-integers.
inline double sin_pi(double x)
{
    if (!std::isfinite(x)) return std::nan("");
    double r = std::fmod(x, 2.0);
    if (r < -1.0) r += 2.0;
    else if (r > 1.0) r -= 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(pi * r);
}

inline double cos_pi(double x)
{
    if (!std::isfinite(x)) return std::nan("");
    double r = std::fmod(std::fabs(x), 2.0);
    if (r == 0.5 || r == 1.5) return 0.0;
    if (r == 0.0) return 1.0;
    if (r == 1.0) return -1.0;
    return std::cos(pi * r);
}

inline Complex sin_pi(Complex z)
{
    double y = pi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

inline Complex cos_pi(Complex z)
{
    double y = pi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

// x^w for positive real x, defined through the real logarithm.
inline Complex real_pow(double x, Complex w) { return std::exp(w * std::log(x)); }

} // namespace zetalab
