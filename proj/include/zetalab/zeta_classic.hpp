#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "gamma.hpp"
#include "quadrature.hpp"
#include "theta.hpp"
#include "types.hpp"

namespace zetalab {

namespace detail {

inline constexpr int em_terms = 30;

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
inline const std::array<double, em_terms + 1>& em_coefficients()
{
    static const std::array<double, em_terms + 1> table = [] {
        std::array<double, em_terms + 1> c{};
        for (int k = 1; k <= em_terms; ++k) {
            double z2k;
            if (k == 1) z2k = pi * pi / 6.0;
            else if (k == 2) z2k = std::pow(pi, 4) / 90.0;
            else {
                z2k = 0.0;
                for (int n = 2000; n >= 1; --n) z2k += std::pow(double(n), -2.0 * k);
            }
            double sign = (k % 2 == 1) ? 1.0 : -1.0;
            c[k] = sign * 2.0 * z2k * std::pow(2.0 * pi, -2.0 * k);
        }
        return c;
    }();
    return table;
}

inline Complex log_cos(Complex w)
{
    // log cos w = -+ i w - log 2 + log(1 + e^{+-2 i w}), choosing the decaying exponential
    const Complex i(0.0, 1.0);
    if (w.imag() >= 0.0) return -i * w - std::log(2.0) + std::log(1.0 + std::exp(2.0 * i * w));
    return i * w - std::log(2.0) + std::log(1.0 + std::exp(-2.0 * i * w));
}

inline Complex log_sin(Complex w) { return log_cos(w - pi / 2.0); }

} // namespace detail

// (2 pi)^s / (2 Gamma(s) cos(pi s / 2)), continued through the reflected form for Re s < 1/2.
inline Complex chi_factor(Complex s)
{
    if (s.imag() == 0.0 && s.real() >= 1.0 && std::floor(s.real()) == s.real() &&
        std::fmod(s.real(), 2.0) == 1.0)
        throw PoleError("chi_factor: pole at odd positive integer");
    if (s.imag() == 0.0 && s.real() <= 0.0 && std::fmod(s.real(), 2.0) == 0.0) return 0.0;
    const double l2p = std::log(2.0 * pi);
    if (s.real() >= 0.5)
        return std::exp(s * l2p - std::log(2.0) - log_gamma_complex(s) -
                        detail::log_cos(0.5 * pi * s));
    // 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s)
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) + detail::log_sin(0.5 * pi * s) +
                    log_gamma_complex(1.0 - s));
}

namespace detail {

inline EvalResult zeta_em_direct(Complex s)
{
    const auto& c = detail::em_coefficients();
    const int N = 10 + int(std::ceil((std::abs(s) + 2.0 * detail::em_terms) / pi));
    Complex sum = 0.0;
    double mag = 0.0;
    for (int n = 1; n < N; ++n) {
        Complex term = std::exp(-s * std::log(double(n)));
        sum += term;
        mag += std::abs(term);
    }
    const double lnN = std::log(double(N));
    Complex nms = std::exp(-s * lnN);
    sum += nms * double(N) / (s - 1.0) + 0.5 * nms;
    mag += std::abs(nms) * (double(N) / std::abs(s - 1.0) + 0.5);

    Complex poch = s;
    Complex power = nms / double(N);
    double last = 0.0;
    for (int k = 1; k <= detail::em_terms; ++k) {
        Complex term = c[k] * poch * power;
        sum += term;
        last = std::abs(term);
        if (last <= 1e-18 * std::abs(sum)) break;
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        power /= double(N) * double(N);
    }
    EvalResult r;
    r.value = sum;
    r.err_estimate = last + 4.0 * std::numeric_limits<double>::epsilon() * mag;
    r.evaluations = N;
    return r;
}

} // namespace detail

// Euler-Maclaurin summation, valid for every s != 1. For Re s < 0 the partial sums
// cancel badly, so the value comes from zeta(1 - s) through the chi factor.
inline EvalResult zeta_euler_maclaurin(Complex s)
{
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    if (s.real() >= 0.0) return detail::zeta_em_direct(s);
    Complex chi = chi_factor(s);
    EvalResult r = detail::zeta_em_direct(1.0 - s);
    r.value *= chi;
    r.err_estimate = std::abs(chi) * r.err_estimate + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
    return r;
}

inline EvalResult zeta_series(Complex s, const QuadratureSpec& spec = {})
{
    if (!(s.real() > 1.0)) throw DomainError("zeta_series: require Re s > 1");
    EvalResult r = zeta_euler_maclaurin(s);
    r.converged = r.err_estimate <= spec.tolerance_for(std::abs(r.value));
    return r;
}

namespace detail {

// int_1^inf psi(x) (x^{(s-2)/2} + x^{-(s+1)/2}) dx written in w = s - 1/2 so that
// s and 1 - s produce bitwise identical integrands.
inline EvalResult theta_tail_integral(Complex s, const QuadratureSpec& spec)
{
    Complex half_w = 0.5 * (s - 0.5);
    auto f = [half_w](double x) -> Complex {
        double lx = std::log(x);
        return psi_value(x) * 2.0 * std::exp(-0.75 * lx) * std::cosh(half_w * lx);
    };
    return integrate_partial(f, semi_infinite(1.0), spec);
}

inline Complex s_times_s_minus_1(Complex s)
{
    Complex w = s - 0.5;
    return w * w - 0.25;
}

} // namespace detail

// Analytic continuation through the theta integral.
inline EvalResult zeta_analytic(Complex s, const QuadratureSpec& spec = {})
{
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    EvalResult I = detail::theta_tail_integral(s, spec);
    if (!I.converged)
        throw NonConvergence("zeta_analytic: quadrature did not converge", 0.0, 0.0, I.err_estimate);
    Complex pis = std::exp(0.5 * s * std::log(pi));
    Complex rg = rgamma(0.5 * s);
    Complex first = rgamma(0.5 * s + 1.0) / (2.0 * (s - 1.0));
    Complex second = I.value * rg;
    EvalResult r;
    r.value = pis * (first + second);
    double eps = std::numeric_limits<double>::epsilon();
    double mag = std::abs(pis) * (std::abs(first) + std::abs(second));
    r.err_estimate = std::abs(pis) * std::abs(rg) * I.err_estimate + 8.0 * eps * mag;
    r.evaluations = I.evaluations;
    r.converged = r.err_estimate <= spec.tolerance_for(std::abs(r.value));
    return r;
}

// xi(s) = s(s-1) pi^{-s/2} Gamma(s/2) zeta(s) = 1 + s(s-1) int_1^inf ...
inline EvalResult xi_entire(Complex s, const QuadratureSpec& spec = {})
{
    EvalResult I = detail::theta_tail_integral(s, spec);
    Complex ss1 = detail::s_times_s_minus_1(s);
    EvalResult r;
    r.value = 1.0 + ss1 * I.value;
    r.err_estimate = std::abs(ss1) * I.err_estimate +
                     4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(ss1 * I.value));
    r.evaluations = I.evaluations;
    r.converged = I.converged && r.err_estimate <= spec.tolerance_for(std::abs(r.value));
    if (!I.converged)
        throw NonConvergence("xi_entire: quadrature did not converge", r.value.real(), r.value.imag(),
                             r.err_estimate);
    return r;
}

inline double riemann_siegel_theta(double t)
{
    return log_gamma_complex(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(pi);
}

inline EvalResult hardy_z(double t, const QuadratureSpec& spec = {})
{
    if (!std::isfinite(t)) throw DomainError("hardy_z: require finite t");
    EvalResult z = zeta_euler_maclaurin(Complex(0.5, t));
    Complex phase = std::polar(1.0, riemann_siegel_theta(t));
    EvalResult r;
    r.value = phase * z.value;
    r.err_estimate = std::max(z.err_estimate, std::fabs(r.value.imag()));
    r.evaluations = z.evaluations;
    r.converged = r.err_estimate <= spec.tolerance_for(std::abs(r.value));
    return r;
}

struct ZeroBracket {
    double t_lo;
    double t_hi;
    double z_lo;
    double z_hi;
    double refined_t;
};

inline constexpr double zero_scan_limit = 500.0;

inline std::vector<ZeroBracket> find_zeros(double t_min, double t_max, double step,
                                           const QuadratureSpec& spec = {})
{
    if (!(t_min < t_max)) throw DomainError("find_zeros: require t_min < t_max");
    if (!(step > 0.0) || step > 1.0) throw DomainError("find_zeros: require 0 < step <= 1");
    if (std::fabs(t_min) > zero_scan_limit || std::fabs(t_max) > zero_scan_limit)
        throw DomainError("find_zeros: |t| must not exceed 500");
    auto z = [&spec](double t) { return hardy_z(t, spec).value.real(); };

    std::vector<ZeroBracket> out;
    const auto count = std::int64_t(std::ceil((t_max - t_min) / step - 1e-9));
    double t_prev = t_min;
    double z_prev = z(t_prev);
    for (std::int64_t i = 1; i <= count; ++i) {
        double t = i == count ? t_max : t_min + double(i) * step;
        double zt = z(t);
        if (z_prev * zt < 0.0) {
            double lo = t_prev, hi = t, zlo = z_prev, zhi = zt;
            while (hi - lo >= 1e-8) {
                double mid = 0.5 * (lo + hi);
                double zm = z(mid);
                if (zm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((zm < 0.0) == (zlo < 0.0)) {
                    lo = mid;
                    zlo = zm;
                } else {
                    hi = mid;
                    zhi = zm;
                }
            }
            out.push_back({lo, hi, zlo, zhi, 0.5 * (lo + hi)});
        }
        t_prev = t;
        z_prev = zt;
    }
    return out;
}

// x^{-sigma} + t^{1/2 - sigma} y^{sigma - 1}
inline double approx_functional_bound_shape(Complex s, double x, double y)
{
    double sigma = s.real();
    return std::pow(x, -sigma) + std::pow(s.imag(), 0.5 - sigma) * std::pow(y, sigma - 1.0);
}

// sum_{n<=x} n^{-s} + chi(s) sum_{n<=y} n^{s-1}; err_estimate is the observed
// distance to zeta(s).
inline EvalResult approx_functional_sum(Complex s, double x, double y, const QuadratureSpec& = {})
{
    double sigma = s.real(), t = s.imag();
    if (!(sigma >= 0.0 && sigma < 1.0)) throw DomainError("approx_functional_sum: require 0 <= Re s < 1");
    if (!(t > 0.0)) throw DomainError("approx_functional_sum: require Im s > 0");
    if (!(x >= 1.0) || !(y >= 1.0)) throw DomainError("approx_functional_sum: require x, y >= 1");
    double target = t / (2.0 * pi);
    if (std::fabs(x * y - target) > 1e-9 * target)
        throw DomainError("approx_functional_sum: require x * y = t / (2 pi)");
    Complex a = 0.0, b = 0.0;
    auto nx = std::int64_t(std::floor(x));
    auto ny = std::int64_t(std::floor(y));
    for (std::int64_t n = 1; n <= nx; ++n) a += std::exp(-s * std::log(double(n)));
    for (std::int64_t n = 1; n <= ny; ++n) b += std::exp((s - 1.0) * std::log(double(n)));
    EvalResult r;
    r.value = a + chi_factor(s) * b;
    r.err_estimate = std::abs(r.value - zeta_euler_maclaurin(s).value);
    r.evaluations = nx + ny;
    return r;
}

} // namespace zetalab
