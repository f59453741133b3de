#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "types.hpp"

namespace zetalab {

enum class CutoffKind { None, ExpSymmetric, ExpAlpha, TwoParam, TwoParamNu, Custom };

inline const char* to_string(CutoffKind k)
{
    switch (k) {
    case CutoffKind::None: return "none";
    case CutoffKind::ExpSymmetric: return "exp";
    case CutoffKind::ExpAlpha: return "exp-alpha";
    case CutoffKind::TwoParam: return "two-param";
    case CutoffKind::TwoParamNu: return "two-param-nu";
    case CutoffKind::Custom: return "custom";
    }
    return "?";
}

// Immutable description of the cut-off h(x) in force. Build through the factories.
struct CutoffSpec {
    CutoffKind kind = CutoffKind::None;
    Complex lambda{};  // ExpSymmetric, ExpAlpha (real)
    double alpha = 1.0; // ExpAlpha
    Complex lambda1{}; // TwoParam, TwoParamNu
    Complex lambda2{};
    double nu = 1.0; // TwoParamNu
    std::function<Complex(double)> custom;
    bool declared_symmetric = false;
    std::string name;

    static CutoffSpec none() { return {}; }

    static CutoffSpec exp_symmetric(Complex lambda)
    {
        if (!(lambda.real() > 0.0) || !is_finite(lambda))
            throw DomainError("cutoff exp: require Re lambda > 0");
        CutoffSpec c;
        c.kind = CutoffKind::ExpSymmetric;
        c.lambda = lambda;
        return c;
    }

    static CutoffSpec exp_alpha(double lambda, double alpha)
    {
        if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("cutoff exp-alpha: require lambda > 0");
        if (alpha == 0.0 || !std::isfinite(alpha)) throw DomainError("cutoff exp-alpha: require alpha != 0");
        CutoffSpec c;
        c.kind = CutoffKind::ExpAlpha;
        c.lambda = lambda;
        c.alpha = alpha;
        return c;
    }

    static CutoffSpec two_param(Complex l1, Complex l2)
    {
        if (!(l1.real() > 0.0) || !(l2.real() > 0.0) || !is_finite(l1) || !is_finite(l2))
            throw DomainError("cutoff two-param: require Re lambda1 > 0 and Re lambda2 > 0");
        CutoffSpec c;
        c.kind = CutoffKind::TwoParam;
        c.lambda1 = l1;
        c.lambda2 = l2;
        return c;
    }

    static CutoffSpec two_param_nu(Complex l1, Complex l2, double nu)
    {
        if (!(l1.real() > 0.0) || !(l2.real() > 0.0) || !is_finite(l1) || !is_finite(l2))
            throw DomainError("cutoff two-param-nu: require Re lambda1 > 0 and Re lambda2 > 0");
        if (nu == 0.0 || !std::isfinite(nu)) throw DomainError("cutoff two-param-nu: require nu != 0");
        CutoffSpec c;
        c.kind = CutoffKind::TwoParamNu;
        c.lambda1 = l1;
        c.lambda2 = l2;
        c.nu = nu;
        return c;
    }

    static CutoffSpec custom_fn(std::string name, std::function<Complex(double)> h, bool symmetric)
    {
        if (!h) throw DomainError("cutoff custom: empty function");
        CutoffSpec c;
        c.kind = CutoffKind::Custom;
        c.custom = std::move(h);
        c.declared_symmetric = symmetric;
        c.name = std::move(name);
        return c;
    }

    bool structurally_symmetric() const { return kind != CutoffKind::Custom; }
};

// log h(x) + p log x, kept in log form so that neither factor overflows on its own.
inline Complex cutoff_log_weight(const CutoffSpec& c, double x, Complex p)
{
    double lx = std::log(x);
    Complex base = p * lx;
    switch (c.kind) {
    case CutoffKind::None: return base;
    case CutoffKind::ExpSymmetric: return base - c.lambda * (x + 1.0 / x);
    case CutoffKind::ExpAlpha: return base - c.lambda * (2.0 * std::cosh(c.alpha * lx));
    default: break;
    }
    throw DomainError("cutoff_log_weight: kind has no single-exponential form");
}

// h(x) x^p
inline Complex cutoff_weight(const CutoffSpec& c, double x, Complex p)
{
    switch (c.kind) {
    case CutoffKind::None:
    case CutoffKind::ExpSymmetric:
    case CutoffKind::ExpAlpha: {
        Complex e = cutoff_log_weight(c, x, p);
        return e.real() < -745.0 ? Complex(0.0) : std::exp(e);
    }
    case CutoffKind::TwoParam:
    case CutoffKind::TwoParamNu: {
        double lx = std::log(x);
        double xa = c.kind == CutoffKind::TwoParam ? x : std::exp(c.nu * lx);
        Complex base = p * lx;
        Complex e1 = base - (c.lambda1 * xa + c.lambda2 / xa);
        Complex e2 = base - (c.lambda1 / xa + c.lambda2 * xa);
        Complex v = 0.0;
        if (e1.real() > -745.0) v += std::exp(e1);
        if (e2.real() > -745.0) v += std::exp(e2);
        return 0.5 * v;
    }
    case CutoffKind::Custom: {
        Complex h = c.custom(x);
        if (h == Complex(0.0)) return 0.0;
        return h * std::exp(p * std::log(x));
    }
    }
    return 0.0;
}

inline Complex cutoff_value(const CutoffSpec& c, double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("cutoff_value: require x > 0");
    return cutoff_weight(c, x, 0.0);
}

inline bool passes_symmetry_spot_check(const CutoffSpec& c)
{
    if (c.structurally_symmetric()) return true;
    for (double x : {2.0, 5.0, 10.0})
        if (!(std::abs(cutoff_value(c, x) - cutoff_value(c, 1.0 / x)) < 1e-12)) return false;
    return true;
}

} // namespace zetalab
