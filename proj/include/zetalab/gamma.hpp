#pragma once

// Complex gamma via the Lanczos approximation (g = 607/128, 15 terms, Godfrey's set)
// with reflection for Re s < 1/2.

#include <array>
#include <cmath>

#include "types.hpp"

namespace zetalab {

namespace detail {

inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

inline constexpr double half_log_two_pi = 0.91893853320467274178032973640562;

// log Gamma(z) for Re z >= 1/2, continuous branch.
inline Complex lanczos_log_gamma(Complex z)
{
    Complex zm = z - 1.0;
    Complex a = lanczos_c[0];
    for (std::size_t k = 1; k < lanczos_c.size(); ++k) a += lanczos_c[k] / (zm + double(k));
    Complex t = zm + lanczos_g + 0.5;
    return half_log_two_pi + (zm + 0.5) * std::log(t) - t + std::log(a);
}

inline bool is_nonpositive_integer(Complex s)
{
    return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

} // namespace detail

inline Complex gamma_complex(Complex s)
{
    if (detail::is_nonpositive_integer(s)) throw PoleError("gamma: pole at non-positive integer");
    if (s.real() >= 0.5) return std::exp(detail::lanczos_log_gamma(s));
    // Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
    return pi / (sin_pi(s) * std::exp(detail::lanczos_log_gamma(1.0 - s)));
}

// Principal branch on Re s > 0 (continuous, real on the positive axis).
inline Complex log_gamma_complex(Complex s)
{
    if (!(s.real() > 0.0)) throw DomainError("log_gamma: require Re s > 0");
    if (s.real() >= 0.5) return detail::lanczos_log_gamma(s);
    // log Gamma(s) = log Gamma(s + 1) - log s keeps the branch continuous
    return detail::lanczos_log_gamma(s + 1.0) - std::log(s);
}

// 1/Gamma(s), entire; exact zeros at the poles of Gamma.
inline Complex rgamma(Complex s)
{
    if (detail::is_nonpositive_integer(s)) return 0.0;
    if (s.real() >= 0.5) return std::exp(-detail::lanczos_log_gamma(s));
    return sin_pi(s) * std::exp(detail::lanczos_log_gamma(1.0 - s)) / pi;
}

} // namespace zetalab
