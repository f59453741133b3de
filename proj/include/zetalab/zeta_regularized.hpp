#pragma once

#include <cmath>
#include <utility>

#include "bessel.hpp"
#include "cutoff.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"
#include "theta.hpp"
#include "types.hpp"
#include "zeta_classic.hpp"

namespace zetalab {

enum class Representation { Quadrature, BesselSeries, BoundaryForm };

inline const char* to_string(Representation r)
{
    switch (r) {
    case Representation::Quadrature: return "quadrature";
    case Representation::BesselSeries: return "bessel-series";
    case Representation::BoundaryForm: return "boundary-form";
    }
    return "?";
}

struct RegZetaValue {
    Complex completed{};
    Complex bare{};
    Representation representation = Representation::Quadrature;
    double err_estimate = 0.0;
    std::int64_t evaluations = 0;
    std::int64_t terms = 0;
    bool converged = true;
};

// completed * pi^{s/2} / Gamma(s/2)
inline Complex bare_from_completed(Complex s, Complex completed)
{
    return completed * std::exp(0.5 * s * std::log(pi)) * rgamma(0.5 * s);
}

namespace detail {

inline RegZetaValue make_reg(Complex s, const EvalResult& r, Representation rep, std::int64_t terms = 0)
{
    RegZetaValue v;
    v.completed = r.value;
    v.bare = bare_from_completed(s, r.value);
    v.representation = rep;
    v.err_estimate = r.err_estimate;
    v.evaluations = r.evaluations;
    v.terms = terms;
    v.converged = r.converged;
    return v;
}

inline void accumulate(EvalResult& into, const EvalResult& r, Complex factor = 1.0)
{
    into.value += factor * r.value;
    into.err_estimate += std::abs(factor) * r.err_estimate;
    into.evaluations += r.evaluations;
    into.converged = into.converged && r.converged;
}

struct BesselSeries {
    EvalResult sum;
    std::int64_t terms = 0;
};

// sum_{n>=1} (b/(a + n^2 pi))^{s/4} K_{s/2}(2 sqrt(b (a + n^2 pi)))
inline BesselSeries k_series(Complex s, Complex a, Complex b, const QuadratureSpec& q)
{
    BesselSeries out;
    out.sum.value = 0.0;
    const Complex nu = 0.5 * s;
    const double nu_abs = std::abs(nu);
    int quiet = 0;
    std::int64_t n = 1;
    for (; n <= q.max_terms; ++n) {
        double n2pi = double(n) * double(n) * pi;
        Complex an = a + n2pi;
        Complex z = 2.0 * std::sqrt(b * an);
        Complex pw = std::exp(0.25 * s * std::log(b / an));
        EvalResult k = bessel_k(nu, z, q);
        Complex term = pw * k.value;
        out.sum.value += term;
        out.sum.err_estimate += std::abs(pw) * k.err_estimate;
        out.sum.evaluations += k.evaluations;
        double m = std::abs(term);
        if (m < q.series_tail_tol * std::abs(out.sum.value) && z.real() > nu_abs + 5.0) {
            if (++quiet >= 3) {
                out.sum.err_estimate += m;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    out.terms = n;
    if (n > q.max_terms)
        throw NonConvergence("Bessel series: max_terms reached", out.sum.value.real(),
                             out.sum.value.imag(), out.sum.err_estimate);
    return out;
}

// int_0^inf t^{p} e^{-(a t + b / t)} dt by quadrature.
inline EvalResult exp_moment(Complex p, Complex a, Complex b, const QuadratureSpec& q)
{
    auto f = [p, a, b](double t) -> Complex {
        Complex e = p * std::log(t) - (a * t + b / t);
        return e.real() < -745.0 ? Complex(0.0) : std::exp(e);
    };
    return integrate(f, positive_reals(), q);
}

} // namespace detail

// pi^{-s/2} Gamma(s/2) zeta_h(s) = int_0^inf psi(x) h(x) x^{s/2 - 1} dx
inline RegZetaValue zeta_regularized(Complex s, const CutoffSpec& c, const QuadratureSpec& q = {})
{
    if (c.kind == CutoffKind::None && !(s.real() > 1.0))
        throw DomainError("zeta_regularized: no cut-off requires Re s > 1");
    Complex p = 0.5 * s - 1.0;
    auto f = [&c, p](double x) -> Complex {
        Complex w = cutoff_weight(c, x, p);
        return w == Complex(0.0) ? w : detail::psi_value(x) * w;
    };
    EvalResult r = integrate(f, positive_reals(), q);
    return detail::make_reg(s, r, Representation::Quadrature);
}

// 2 sum_{n>=1} (lambda/(lambda + n^2 pi))^{s/4} K_{s/2}(2 sqrt(lambda^2 + lambda n^2 pi))
inline RegZetaValue zeta_exp_bessel_series(Complex s, Complex lambda, const QuadratureSpec& q = {})
{
    if (!(lambda.real() > 0.0)) throw DomainError("zeta_exp_bessel_series: require Re lambda > 0");
    auto ser = detail::k_series(s, lambda, lambda, q);
    ser.sum.value *= 2.0;
    ser.sum.err_estimate *= 2.0;
    ser.sum.converged = ser.sum.err_estimate <= q.tolerance_for(std::abs(ser.sum.value));
    return detail::make_reg(s, ser.sum, Representation::BesselSeries, ser.terms);
}

// I1 = (1/2) int_0^1 e^{-lambda(x+1/x)} x^{(s-3)/2},  I2 = -(1/2) int_0^1 e^{-lambda(x+1/x)} x^{(s-2)/2}
inline std::pair<EvalResult, EvalResult> boundary_integrals(Complex s, double lambda,
                                                            const QuadratureSpec& q = {})
{
    if (!(lambda > 0.0)) throw DomainError("boundary_integrals: require lambda > 0");
    CutoffSpec c = CutoffSpec::exp_symmetric(lambda);
    auto i1 = integrate([&](double x) { return 0.5 * cutoff_weight(c, x, 0.5 * (s - 3.0)); },
                        finite(0.0, 1.0), q);
    auto i2 = integrate([&](double x) { return -0.5 * cutoff_weight(c, x, 0.5 * (s - 2.0)); },
                        finite(0.0, 1.0), q);
    return {i1, i2};
}

// Four-piece representation valid on the whole s-plane.
inline RegZetaValue zeta_exp_boundary_form(Complex s, double lambda, const QuadratureSpec& q = {})
{
    if (!(lambda > 0.0)) throw DomainError("zeta_exp_boundary_form: require lambda > 0");
    CutoffSpec c = CutoffSpec::exp_symmetric(lambda);
    EvalResult total;
    auto [i1, i2] = boundary_integrals(s, lambda, q);
    detail::accumulate(total, i1);
    detail::accumulate(total, i2);
    Complex pa = 0.5 * (s - 2.0), pb = -0.5 * (s + 1.0);
    auto inner = integrate(
        [&](double x) -> Complex {
            Complex w = cutoff_weight(c, x, pa) + cutoff_weight(c, x, pb);
            return w == Complex(0.0) ? w : detail::psi_value(x) * w;
        },
        finite(0.0, 1.0), q);
    detail::accumulate(total, inner, -1.0);
    auto k1 = detail::k_series(s, lambda, lambda, q);
    auto k2 = detail::k_series(1.0 - s, lambda, lambda, q);
    detail::accumulate(total, k1.sum, 2.0);
    detail::accumulate(total, k2.sum, 2.0);
    total.converged = total.err_estimate <= q.tolerance_for(std::abs(total.value));
    return detail::make_reg(s, total, Representation::BoundaryForm, k1.terms + k2.terms);
}

// sum_{n>=1} [ (l2/(l1+n^2 pi))^{s/4} K_{s/2}(2 sqrt(l2 (l1+n^2 pi)))
//            + (l1/(l2+n^2 pi))^{s/4} K_{s/2}(2 sqrt(l1 (l2+n^2 pi))) ]
inline RegZetaValue zeta_two_param_series(Complex s, Complex l1, Complex l2, const QuadratureSpec& q = {})
{
    CutoffSpec::two_param(l1, l2);
    auto a = detail::k_series(s, l1, l2, q);
    auto b = detail::k_series(s, l2, l1, q);
    EvalResult total;
    detail::accumulate(total, a.sum);
    detail::accumulate(total, b.sum);
    total.converged = total.err_estimate <= q.tolerance_for(std::abs(total.value));
    return detail::make_reg(s, total, Representation::BesselSeries, a.terms + b.terms);
}

// The displayed diffusion form: two boundary integrals by quadrature plus the
// Z-indexed K sums (including n = 0).
inline RegZetaValue zeta_two_param_diffusion_form(Complex s, Complex l1, Complex l2,
                                                  const QuadratureSpec& q = {})
{
    CutoffSpec::two_param(l1, l2);
    Complex p = 0.5 * s - 1.0;
    EvalResult total;
    detail::accumulate(total, detail::exp_moment(p, l1, l2, q), -0.25);
    detail::accumulate(total, detail::exp_moment(p, l2, l1, q), -0.25);
    auto zero_term = [&](Complex a, Complex b) {
        EvalResult k = bessel_k(0.5 * s, 2.0 * std::sqrt(b * a), q);
        Complex pw = std::exp(0.25 * s * std::log(b / a));
        k.value *= pw;
        k.err_estimate *= std::abs(pw);
        return k;
    };
    detail::accumulate(total, zero_term(l1, l2), 0.5);
    detail::accumulate(total, zero_term(l2, l1), 0.5);
    auto a = detail::k_series(s, l1, l2, q);
    auto b = detail::k_series(s, l2, l1, q);
    detail::accumulate(total, a.sum);
    detail::accumulate(total, b.sum);
    total.converged = total.err_estimate <= q.tolerance_for(std::abs(total.value));
    return detail::make_reg(s, total, Representation::BesselSeries, a.terms + b.terms);
}

// F(s, lambda) = sum_{n>=1} n^{-s} e^{-lambda pi n^2}
inline EvalResult smooth_F(Complex s, double lambda, const QuadratureSpec& q = {})
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("smooth_F: require lambda >= 0");
    if (lambda == 0.0) {
        if (!(s.real() > 1.0)) throw DomainError("smooth_F: lambda = 0 requires Re s > 1");
        EvalResult r = zeta_euler_maclaurin(s);
        r.converged = r.err_estimate <= q.tolerance_for(std::abs(r.value));
        return r;
    }
    // terms n^{-sigma} e^{-lambda pi n^2} peak where n^2 = -sigma / (2 lambda pi)
    double n_peak = s.real() < 0.0 ? std::sqrt(-s.real() / (2.0 * lambda * pi)) : 0.0;
    EvalResult r;
    r.value = 0.0;
    std::int64_t n = 1;
    double last = 0.0;
    for (; n <= q.max_terms; ++n) {
        double dn = double(n);
        Complex e = -s * std::log(dn) - lambda * pi * dn * dn;
        Complex term = e.real() < -745.0 ? Complex(0.0) : std::exp(e);
        r.value += term;
        last = std::abs(term);
        if (dn > n_peak && last < q.series_tail_tol * std::abs(r.value)) break;
    }
    if (n > q.max_terms) throw NonConvergence("smooth_F: max_terms reached", r.value.real(), r.value.imag(), last);
    r.err_estimate = last + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.evaluations = n;
    return r;
}

struct ABCDTerms {
    EvalResult A, B, C, D;
};

// The four integrals of the F decomposition, written in u = y - lambda.
inline ABCDTerms abcd_terms(Complex s, double lambda, const QuadratureSpec& q = {})
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("abcd_terms: require lambda >= 0");
    if (!(s.real() > 0.0)) throw DomainError("abcd_terms: require Re s > 0");
    if (lambda == 0.0 && !(s.real() > 1.0))
        throw DomainError("abcd_terms: lambda = 0 requires Re s > 1");
    Complex p = 0.5 * (s - 2.0);
    auto upow = [p](double u) { return std::exp(p * std::log(u)); };
    ABCDTerms out;
    out.A = integrate([&](double u) { return upow(u) * detail::psi_value(u + lambda); }, semi_infinite(1.0), q);
    out.B = integrate(
        [&](double u) {
            double y = u + lambda;
            return upow(u) * detail::psi_value(1.0 / y) / std::sqrt(y);
        },
        finite(0.0, 1.0), q);
    out.C = integrate([&](double u) { return -0.5 * upow(u); }, finite(0.0, 1.0), q);
    out.D = integrate([&](double u) { return 0.5 * upow(u) / std::sqrt(u + lambda); }, finite(0.0, 1.0), q);
    return out;
}

// |(F(s, l+h) - F(s, l-h)) / 2h + pi F(s-2, l)|
inline double pde_residual_F(Complex s, double lambda, double h, const QuadratureSpec& q = {})
{
    if (!(h > 0.0) || !(lambda > h)) throw DomainError("pde_residual_F: require lambda > h > 0");
    Complex fp = smooth_F(s, lambda + h, q).value;
    Complex fm = smooth_F(s, lambda - h, q).value;
    Complex f2 = smooth_F(s - 2.0, lambda, q).value;
    return std::abs((fp - fm) / (2.0 * h) + pi * f2);
}

// s(s-1) sum_{n>=1} (lambda/(lambda+n^2 pi))^{s/4} K_{s/2}(2 sqrt(lambda^2 + lambda n^2 pi))
inline EvalResult xi_lambda(Complex s, double lambda, const QuadratureSpec& q = {})
{
    if (!(lambda > 0.0)) throw DomainError("xi_lambda: require lambda > 0");
    auto ser = detail::k_series(s, lambda, lambda, q);
    Complex f = detail::s_times_s_minus_1(s);
    EvalResult r = ser.sum;
    r.value *= f;
    r.err_estimate *= std::abs(f);
    r.converged = r.err_estimate <= q.tolerance_for(std::abs(r.value));
    return r;
}

// (1/2) s (s-1) [completed zeta(s, lambda) + K_{s/2}(2 lambda)]
inline EvalResult omega(Complex s, double lambda, const QuadratureSpec& q = {})
{
    if (!(lambda > 0.0)) throw DomainError("omega: require lambda > 0");
    RegZetaValue z = zeta_exp_bessel_series(s, lambda, q);
    EvalResult k = bessel_k(0.5 * s, 2.0 * lambda, q);
    Complex f = 0.5 * detail::s_times_s_minus_1(s);
    EvalResult r;
    r.value = f * (z.completed + k.value);
    r.err_estimate = std::abs(f) * (z.err_estimate + k.err_estimate);
    r.evaluations = z.evaluations + k.evaluations;
    r.converged = r.err_estimate <= q.tolerance_for(std::abs(r.value));
    return r;
}

} // namespace zetalab
