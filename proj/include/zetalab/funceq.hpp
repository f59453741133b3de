#pragma once

#include <algorithm>
#include <cmath>

#include "bessel.hpp"
#include "cutoff.hpp"
#include "gamma.hpp"
#include "types.hpp"
#include "zeta_classic.hpp"
#include "zeta_regularized.hpp"

namespace zetalab {

enum class FunctionalEqKind { RiemannClassic, GenericH, ExpSymmetric, ExpAlpha, QuarterAlphaSingleK, TwoParam };

inline const char* to_string(FunctionalEqKind k)
{
    switch (k) {
    case FunctionalEqKind::RiemannClassic: return "riemann-classic";
    case FunctionalEqKind::GenericH: return "generic-h";
    case FunctionalEqKind::ExpSymmetric: return "exp-symmetric";
    case FunctionalEqKind::ExpAlpha: return "exp-alpha";
    case FunctionalEqKind::QuarterAlphaSingleK: return "quarter-alpha";
    case FunctionalEqKind::TwoParam: return "two-param";
    }
    return "?";
}

struct FunctionalEqReport {
    FunctionalEqKind kind{};
    Complex s{};
    CutoffSpec params;
    Complex lhs{};
    Complex rhs{};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
};

inline FunctionalEqReport make_report(FunctionalEqKind kind, Complex s, const CutoffSpec& params, Complex lhs,
                                      Complex rhs)
{
    FunctionalEqReport r;
    r.kind = kind;
    r.s = s;
    r.params = params;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual = r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return r;
}

namespace detail {

// pi^{-s/2} Gamma(s/2) zeta(s) from the Euler-Maclaurin zeta.
inline Complex completed_riemann(Complex s)
{
    return std::exp(-0.5 * s * std::log(pi)) * gamma_complex(0.5 * s) * zeta_euler_maclaurin(s).value;
}

inline Complex scaled_k(Complex nu, Complex z, Complex factor, const QuadratureSpec& q)
{
    return factor * bessel_k(nu, z, q).value;
}

// (1/2) int_0^inf h(x) x^{nu - 1} dx, closed form for the exponential kinds.
inline Complex half_moment_closed(const CutoffSpec& c, Complex nu, const QuadratureSpec& q)
{
    switch (c.kind) {
    case CutoffKind::ExpSymmetric: return bessel_k(nu, 2.0 * c.lambda, q).value;
    case CutoffKind::ExpAlpha: {
        double a = std::fabs(c.alpha);
        return scaled_k(nu / a, 2.0 * c.lambda, 1.0 / a, q);
    }
    case CutoffKind::TwoParam: {
        Complex l1 = c.lambda1, l2 = c.lambda2;
        Complex f = 0.5 * (std::exp(0.5 * nu * std::log(l2 / l1)) + std::exp(0.5 * nu * std::log(l1 / l2)));
        return scaled_k(nu, 2.0 * std::sqrt(l1 * l2), f, q);
    }
    default: break;
    }
    throw DomainError("half_moment_closed: cut-off is not exponential");
}

inline void require_decay(const CutoffSpec& c, Complex p, const QuadratureSpec& q)
{
    for (double x : {1e-30, 1e30}) {
        double tail = std::abs(cutoff_weight(c, x, p + 1.0));
        if (!(tail <= q.abs_tol))
            throw DomainError("functional equation: cut-off does not decay at the truncation boundary");
    }
}

inline Complex half_moment_quadrature(const CutoffSpec& c, Complex nu, const QuadratureSpec& q)
{
    Complex p = nu - 1.0;
    require_decay(c, p, q);
    return 0.5 * integrate([&](double x) { return cutoff_weight(c, x, p); }, positive_reals(), q).value;
}

inline void require_kind(const CutoffSpec& c, CutoffKind k, FunctionalEqKind fk)
{
    if (c.kind != k)
        throw DomainError(std::string("verify(") + to_string(fk) + "): expected cut-off kind " + to_string(k));
}

inline void require_symmetric(const CutoffSpec& c)
{
    if (c.kind == CutoffKind::Custom && (!c.declared_symmetric || !passes_symmetry_spot_check(c)))
        throw SymmetryViolation("cut-off '" + c.name + "' fails the h(x) = h(1/x) spot-check");
}

} // namespace detail

inline FunctionalEqReport verify(FunctionalEqKind kind, Complex s, const CutoffSpec& params,
                                 const QuadratureSpec& q = {})
{
    const Complex s1 = 1.0 - s;
    const Complex nu_s = 0.5 * s;
    const Complex nu_1s = 0.5 * s1;
    switch (kind) {
    case FunctionalEqKind::RiemannClassic: {
        detail::require_kind(params, CutoffKind::None, kind);
        if (detail::is_nonpositive_integer(nu_s) || detail::is_nonpositive_integer(nu_1s))
            throw PoleError("verify(riemann-classic): completed zeta has a pole at s = 0 or s = 1");
        return make_report(kind, s, params, detail::completed_riemann(s), detail::completed_riemann(s1));
    }
    case FunctionalEqKind::ExpSymmetric: {
        detail::require_kind(params, CutoffKind::ExpSymmetric, kind);
        Complex z = 2.0 * params.lambda;
        Complex lhs = zeta_exp_bessel_series(s1, params.lambda, q).completed + bessel_k(nu_1s, z, q).value;
        Complex rhs = zeta_exp_bessel_series(s, params.lambda, q).completed + bessel_k(nu_s, z, q).value;
        return make_report(kind, s, params, lhs, rhs);
    }
    case FunctionalEqKind::ExpAlpha: {
        detail::require_kind(params, CutoffKind::ExpAlpha, kind);
        Complex lhs = zeta_regularized(s1, params, q).completed + detail::half_moment_closed(params, nu_1s, q);
        Complex rhs = zeta_regularized(s, params, q).completed + detail::half_moment_closed(params, nu_s, q);
        return make_report(kind, s, params, lhs, rhs);
    }
    case FunctionalEqKind::QuarterAlphaSingleK: {
        detail::require_kind(params, CutoffKind::ExpAlpha, kind);
        if (params.alpha != 0.25) throw DomainError("verify(quarter-alpha): require alpha = 1/4");
        double lambda = params.lambda.real();
        Complex lhs = zeta_regularized(s1, params, q).completed - zeta_regularized(s, params, q).completed;
        Complex rhs = -4.0 * ((1.0 - 2.0 * s) / lambda) * bessel_k(1.0 - 2.0 * s, 2.0 * lambda, q).value;
        return make_report(kind, s, params, lhs, rhs);
    }
    case FunctionalEqKind::TwoParam: {
        detail::require_kind(params, CutoffKind::TwoParam, kind);
        Complex lhs = zeta_regularized(s1, params, q).completed + detail::half_moment_quadrature(params, nu_1s, q);
        Complex rhs = zeta_regularized(s, params, q).completed + detail::half_moment_quadrature(params, nu_s, q);
        return make_report(kind, s, params, lhs, rhs);
    }
    case FunctionalEqKind::GenericH: {
        if (params.kind == CutoffKind::None)
            throw DomainError("verify(generic-h): a cut-off is required");
        detail::require_symmetric(params);
        bool closed = params.kind == CutoffKind::ExpSymmetric || params.kind == CutoffKind::ExpAlpha ||
                      params.kind == CutoffKind::TwoParam;
        auto half = [&](Complex nu) {
            return closed ? detail::half_moment_closed(params, nu, q)
                          : detail::half_moment_quadrature(params, nu, q);
        };
        Complex lhs = zeta_regularized(s1, params, q).completed + half(nu_1s);
        Complex rhs = zeta_regularized(s, params, q).completed + half(nu_s);
        return make_report(kind, s, params, lhs, rhs);
    }
    }
    throw DomainError("verify: unknown kind");
}

struct QuarterAlphaResiduals {
    double residual_displayed_form = 0.0;
    double residual_corrected_form = 0.0;
    Complex difference{};     // completed(1-s) - completed(s) by quadrature
    Complex displayed_rhs{};      // +2 ((1-2s)/lambda) K_{1-2s}(2 lambda)
    Complex corrected_rhs{};  // -4 ((1-2s)/lambda) K_{1-2s}(2 lambda)
};

inline QuarterAlphaResiduals quarter_alpha_residual(Complex s, double lambda, const QuadratureSpec& q = {})
{
    CutoffSpec c = CutoffSpec::exp_alpha(lambda, 0.25);
    QuarterAlphaResiduals r;
    r.difference = zeta_regularized(1.0 - s, c, q).completed - zeta_regularized(s, c, q).completed;
    Complex base = ((1.0 - 2.0 * s) / lambda) * bessel_k(1.0 - 2.0 * s, 2.0 * lambda, q).value;
    r.displayed_rhs = 2.0 * base;
    r.corrected_rhs = -4.0 * base;
    r.residual_displayed_form = std::abs(r.difference - r.displayed_rhs);
    r.residual_corrected_form = std::abs(r.difference - r.corrected_rhs);
    return r;
}

inline double omega_symmetry_residual(Complex s, double lambda, const QuadratureSpec& q = {})
{
    return std::abs(omega(s, lambda, q).value - omega(1.0 - s, lambda, q).value);
}

} // namespace zetalab
