#pragma once

// Heat kernels on R^d and H^d (unit diffusion constant, curvature -1) and their
// Laplace transforms.

#include <cmath>
#include <map>
#include <tuple>

#include "bessel.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"
#include "types.hpp"
#include "zeta_regularized.hpp"

namespace zetalab {

inline double heat_kernel_rd(double t, double r, double d)
{
    if (!(t > 0.0)) throw DomainError("heat_kernel_rd: require t > 0");
    if (!(r >= 0.0)) throw DomainError("heat_kernel_rd: require r >= 0");
    if (!(d >= 1.0)) throw DomainError("heat_kernel_rd: require d >= 1");
    return std::exp(-0.5 * d * std::log(4.0 * pi * t) - r * r / (4.0 * t));
}

// The displayed resolvent 2/(2 pi)^{(d-2)/2} (sqrt(2 alpha)/r)^{(d-2)/2} K_{(d-2)/2}(sqrt(2 alpha) r).
inline EvalResult resolvent_rd_bessel(Complex alpha, double r, Complex d, const QuadratureSpec& q = {})
{
    if (!(alpha.real() > 0.0)) throw DomainError("resolvent_rd_bessel: require Re alpha > 0");
    if (!(r > 0.0)) throw DomainError("resolvent_rd_bessel: require r > 0");
    Complex m = 0.5 * (d - 2.0);
    Complex root = std::sqrt(2.0 * alpha);
    EvalResult k = bessel_k(m, root * r, q);
    Complex pre = 2.0 * std::exp(-m * std::log(2.0 * pi) + m * std::log(root / r));
    k.value *= pre;
    k.err_estimate *= std::abs(pre);
    return k;
}

// int_0^inf (4 pi t)^{-d/2} e^{-(alpha t + r^2/(4t))} dt
inline EvalResult resolvent_rd_quad(Complex alpha, double r, double d, const QuadratureSpec& q = {})
{
    if (!(alpha.real() > 0.0)) throw DomainError("resolvent_rd_quad: require Re alpha > 0");
    if (!(r >= 0.0)) throw DomainError("resolvent_rd_quad: require r >= 0");
    if (!(d >= 1.0)) throw DomainError("resolvent_rd_quad: require d >= 1");
    if (r == 0.0 && !(d < 2.0)) throw DomainError("resolvent_rd_quad: r = 0 diverges for d >= 2");
    double b = r * r / 4.0;
    double c = -0.5 * d * std::log(4.0 * pi);
    auto f = [alpha, b, d, c](double t) -> Complex {
        Complex e = c - 0.5 * d * std::log(t) - (alpha * t + b / t);
        return e.real() < -745.0 ? Complex(0.0) : std::exp(e);
    };
    return integrate(f, positive_reals(), q);
}

// resolvent_rd_bessel(alpha) / resolvent_rd_quad(2 alpha): the displayed resolvent uses the
// (2 pi t)^{-d/2} e^{-r^2/2t} kernel, i.e. time rescaled by 2, and this ratio is 4 pi for all r, d.
inline Complex resolvent_normalization_ratio(Complex alpha, double r, double d, const QuadratureSpec& q = {})
{
    return resolvent_rd_bessel(alpha, r, d, q).value / resolvent_rd_quad(2.0 * alpha, r, d, q).value;
}

inline double heat_kernel_h3(double t, double rho)
{
    if (!(t > 0.0)) throw DomainError("heat_kernel_h3: require t > 0");
    if (!(rho >= 0.0)) throw DomainError("heat_kernel_h3: require rho >= 0");
    double log_ratio; // log(rho / sinh rho)
    if (rho < 1e-4) log_ratio = -rho * rho / 6.0;
    else log_ratio = std::log(2.0 * rho) - rho - std::log1p(-std::exp(-2.0 * rho));
    return std::exp(-1.5 * std::log(4.0 * pi * t) + log_ratio - t - rho * rho / (4.0 * t));
}

namespace detail {

// coef * rho^a cosh^b(rho) sinh^c(rho), all multiplied by exp(-m^2 t - rho^2/4t)
using HypTerms = std::map<std::tuple<int, int, int>, double>;

inline HypTerms apply_sinh_derivative(const HypTerms& in, double t)
{
    HypTerms out;
    auto add = [&out](int a, int b, int c, double v) {
        if (v != 0.0) out[{a, b, c}] += v;
    };
    for (const auto& [key, coef] : in) {
        auto [a, b, c] = key;
        if (a != 0) add(a - 1, b, c - 1, coef * a);
        if (b != 0) add(a, b - 1, c, coef * b);
        if (c != 0) add(a, b + 1, c - 2, coef * c);
        add(a + 1, b, c - 1, -coef / (2.0 * t));
    }
    return out;
}

} // namespace detail

// ((-1)^k / (2 pi)^k) (4 pi t)^{-1/2} [(1/sinh rho) d/drho]^k e^{-k^2 t - rho^2/4t}, k = (d-1)/2
inline double heat_kernel_hyperbolic_odd(double t, double rho, int d)
{
    if (d < 3 || d % 2 == 0) throw DomainError("heat_kernel_hyperbolic_odd: require odd d >= 3");
    if (!(t > 0.0)) throw DomainError("heat_kernel_hyperbolic_odd: require t > 0");
    if (!(rho > 0.0)) throw DomainError("heat_kernel_hyperbolic_odd: require rho > 0");
    const int k = (d - 1) / 2;
    detail::HypTerms terms{{{0, 0, 0}, 1.0}};
    for (int i = 0; i < k; ++i) terms = detail::apply_sinh_derivative(terms, t);

    const double log_e = -double(k) * double(k) * t - rho * rho / (4.0 * t);
    const double log_pre = -double(k) * std::log(2.0 * pi) - 0.5 * std::log(4.0 * pi * t);
    const double lr = std::log(rho);
    const double lc = rho + std::log1p(std::exp(-2.0 * rho)) - std::log(2.0);
    const double ls = rho + std::log1p(-std::exp(-2.0 * rho)) - std::log(2.0);
    double sum = 0.0;
    for (const auto& [key, coef] : terms) {
        auto [a, b, c] = key;
        double l = std::log(std::fabs(coef)) + a * lr + b * lc + c * ls + log_e + log_pre;
        sum += (coef < 0.0 ? -1.0 : 1.0) * std::exp(l);
    }
    return (k % 2 == 0 ? 1.0 : -1.0) * sum;
}

// int_0^inf e^{-alpha t} p_3(t, rho) dt
inline EvalResult laplace_hyperbolic(Complex alpha, double rho, const QuadratureSpec& q = {})
{
    if (!((alpha + 1.0).real() > 0.0)) throw DomainError("laplace_hyperbolic: require Re(alpha + 1) > 0");
    if (!(rho > 0.0)) throw DomainError("laplace_hyperbolic: require rho > 0");
    auto f = [alpha, rho](double t) -> Complex {
        double p = heat_kernel_h3(t, rho);
        if (p == 0.0) return 0.0;
        return std::exp(-alpha * t + std::log(p));
    };
    return integrate(f, positive_reals(), q);
}

// Completed two-parameter zeta at (2 - d, alpha, r^2/4) against the four-term
// expansion into Laplace-transformed heat kernels; returns |lhs - rhs| / |lhs|.
inline double euclidean_identification_residual(double d, double alpha, double r, const QuadratureSpec& q = {},
                                                bool limit_free = false)
{
    if (!(alpha > 0.0) || !(r > 0.0)) throw DomainError("euclidean_identification_residual: require alpha, r > 0");
    double half = 1.0 - 0.5 * d;
    if (!limit_free && half <= 0.0 && std::floor(half) == half)
        throw PoleError("euclidean_identification_residual: Gamma(1 - d/2) has a pole at even d >= 2");
    const double l2 = r * r / 4.0;
    const Complex s = 2.0 - d;
    Complex lhs = zeta_regularized(s, CutoffSpec::two_param(alpha, l2), q).completed;

    using detail::exp_moment;
    const Complex p_a = -0.5 * d;          // t^{-d/2}
    const Complex p_b = -(2.0 - 0.5 * d);  // t^{-(2 - d/2)}
    const Complex p_c = -0.5 * (1.0 + d);  // t^{-(1+d)/2}
    Complex rhs = -0.25 * (exp_moment(p_a, alpha, l2, q).value + exp_moment(p_b, alpha, l2, q).value);
    auto lattice = [&](double n) {
        double b = (r * r + 4.0 * pi * n * n) / 4.0;
        return exp_moment(p_c, alpha, b, q).value + exp_moment(p_b, alpha, b, q).value;
    };
    Complex series = lattice(0.0);
    int quiet = 0;
    for (std::int64_t n = 1; n <= q.max_terms; ++n) {
        Complex term = 2.0 * lattice(double(n));
        series += term;
        if (std::abs(term) < q.series_tail_tol * std::abs(series)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    rhs += 0.25 * series;
    return std::abs(lhs - rhs) / std::abs(lhs);
}

// First integral term of the two-parameter zeta at (s, l1, l2) = (-1, 1 + alpha, rho^2/4)
// against the hyperbolic Laplace transform; returns the relative residual.
inline double hyperbolic_identification_residual(double alpha, double rho, const QuadratureSpec& q = {})
{
    if (!(rho > 0.0)) throw DomainError("hyperbolic_identification_residual: require rho > 0");
    if (!(alpha > -1.0)) throw DomainError("hyperbolic_identification_residual: require alpha > -1");
    Complex first = -0.25 * detail::exp_moment(-1.5, 1.0 + alpha, rho * rho / 4.0, q).value;
    double sinh_over_rho = rho < 1e-4 ? 1.0 + rho * rho / 6.0 : std::sinh(rho) / rho;
    Complex other = -0.25 * std::pow(4.0 * pi, 1.5) * sinh_over_rho * laplace_hyperbolic(alpha, rho, q).value;
    return std::abs(first - other) / std::abs(first);
}

} // namespace zetalab
