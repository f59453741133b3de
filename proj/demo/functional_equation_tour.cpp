// Prints functional-equation residuals for each cutoff family at a few points.

#include <cstdio>

#include "zetalab/zetalab.hpp"

using namespace zetalab;

namespace {

void show(const char* label, FunctionalEqKind kind, Complex s, const CutoffSpec& c)
{
    auto r = verify(kind, s, c);
    std::printf("%-28s s = %5.2f%+6.2fi  |lhs| = %.6e  rel residual = %.2e\n", label, s.real(), s.imag(), std::abs(r.lhs),
                r.rel_residual);
}

} // namespace

int main()
{
    std::printf("zetalab %s\n\n", version);
    for (Complex s : {Complex(0.3, 0.0), Complex(0.5, 14.1), Complex(0.8, -3.0)}) {
        show("riemann-classic", FunctionalEqKind::RiemannClassic, s, CutoffSpec::none());
        show("exp-symmetric lambda=0.5", FunctionalEqKind::ExpSymmetric, s, CutoffSpec::exp_symmetric(0.5));
        show("exp-alpha lambda=1 alpha=2", FunctionalEqKind::ExpAlpha, s, CutoffSpec::exp_alpha(1.0, 2.0));
        show("two-param (1, 0.7)", FunctionalEqKind::TwoParam, s, CutoffSpec::two_param(1.0, 0.7));
        std::printf("%-28s s = %5.2f%+6.2fi  residual = %.2e\n\n", "Omega symmetry lambda=0.5", s.real(), s.imag(),
                    omega_symmetry_residual(s, 0.5));
    }
    auto q = quarter_alpha_residual(0.3, 0.8);
    std::printf("alpha = 1/4, s = 0.3, lambda = 0.8: residual with -4 K term %.2e, with +2 K term %.2e\n",
                q.residual_corrected_form, q.residual_displayed_form);
}
