#pragma once

// Modified Bessel function of the second kind K_nu(z) for complex order, from
// K_nu(z) = int_0^inf exp(-z cosh u) cosh(nu u) du  (Re z > 0).
// The factor exp(-z) is taken outside so the tolerance applies to an O(1) integral.

#include <cmath>

#include "quadrature.hpp"
#include "types.hpp"

namespace zetalab {

namespace detail {

inline EvalResult bessel_k_impl(Complex nu, Complex z, const QuadratureSpec& spec)
{
    double anu = std::fabs(nu.real());
    double zr = z.real();
    auto f = [nu, z, anu, zr](double u) -> Complex {
        if (u > 700.0) return 0.0;
        double sh = std::sinh(0.5 * u);
        double c1 = 2.0 * sh * sh; // cosh u - 1
        if (zr * c1 - anu * u > 745.0) return 0.0;
        Complex e = -z * c1;
        return 0.5 * (std::exp(e + nu * u) + std::exp(e - nu * u));
    };
    EvalResult r = integrate_partial(f, positive_reals(), spec);
    Complex scale = std::exp(-z);
    r.value *= scale;
    r.err_estimate *= std::abs(scale);
    if (!r.converged)
        throw NonConvergence("bessel_k: quadrature did not converge", r.value.real(), r.value.imag(),
                             r.err_estimate);
    return r;
}

} // namespace detail

inline EvalResult bessel_k(Complex nu, double z, const QuadratureSpec& spec = {})
{
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("bessel_k: require z > 0");
    return detail::bessel_k_impl(nu, Complex(z, 0.0), spec);
}

// Complex argument with Re z > 0, used where the regularisation parameter is complex.
inline EvalResult bessel_k(Complex nu, Complex z, const QuadratureSpec& spec = {})
{
    if (z.imag() == 0.0) return bessel_k(nu, z.real(), spec);
    if (!(z.real() > 0.0) || !is_finite(z)) throw DomainError("bessel_k: require Re z > 0");
    return detail::bessel_k_impl(nu, z, spec);
}

} // namespace zetalab
