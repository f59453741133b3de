#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/fixtures.hpp"
#include "oracles/oracles.hpp"
#include "zetalab/bessel.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/quadrature.hpp"

using namespace zetalab;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Quadrature, ExponentialOnHalfLine)
{
    auto r = integrate([](double x) { return std::exp(-x); }, positive_reals());
    EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
    EXPECT_TRUE(r.converged);
}

TEST(Quadrature, EndpointSingularityGivesSqrtPi)
{
    auto r = integrate([](double x) { return std::exp(-x) / std::sqrt(x); }, positive_reals());
    EXPECT_NEAR(r.value.real(), std::sqrt(pi), 1e-10);
}

TEST(Quadrature, TwoSidedExponentialMatchesK0)
{
    auto r = integrate([](double x) { return std::exp(-(x + 1.0 / x)) / x; }, positive_reals());
    EXPECT_NEAR(r.value.real(), fixtures::two_k0_of_2, 1e-12);
}

TEST(Quadrature, FiniteIntervalWithAlgebraicEndpoints)
{
    EXPECT_NEAR(integrate([](double x) { return 1.0 / std::sqrt(x); }, finite(0.0, 1.0)).value.real(), 2.0, 1e-12);
    EXPECT_NEAR(integrate([](double x) { return std::pow(x, -0.9); }, finite(0.0, 1.0)).value.real(), 10.0, 1e-9);
    EXPECT_NEAR(integrate([](double x) { return std::log(x); }, finite(0.0, 1.0)).value.real(), -1.0, 1e-12);
    // at the right end 1 - x carries only the absolute precision of x
    auto r = integrate_partial([](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, finite(0.0, 1.0));
    EXPECT_NEAR(r.value.real(), pi, 1e-7);
}

TEST(Quadrature, ErrorEstimateBoundsTrueErrorOnKnownIntegrands)
{
    struct Case {
        std::function<double(double)> f;
        Domain d;
        double exact;
    };
    std::vector<Case> cases = {
        {[](double x) { return std::exp(-x); }, positive_reals(), 1.0},
        {[](double x) { return x * x * std::exp(-x); }, positive_reals(), 2.0},
        {[](double x) { return std::cos(x); }, finite(0.0, 1.0), std::sin(1.0)},
        {[](double x) { return std::log(x); }, finite(0.0, 1.0), -1.0},
        {[](double x) { return 1.0 / (1.0 + x * x); }, positive_reals(), pi / 2},
    };
    QuadratureSpec q;
    for (const auto& c : cases) {
        auto r = integrate(c.f, c.d, q);
        ASSERT_TRUE(r.converged);
        EXPECT_LE(r.err_estimate, q.tolerance_for(std::abs(r.value)));
        EXPECT_LE(std::abs(r.value.real() - c.exact), std::max(r.err_estimate, 1e-14 * std::fabs(c.exact)));
    }
}

TEST(Quadrature, OffCentrePeakIsFound)
{
    // peak near x = 9; the odd nodes close to x = 1 are negligible against it
    auto r = integrate([](double x) { return std::exp(-(x + 78.8 / x)) / std::sqrt(x); }, positive_reals());
    double exact = std::sqrt(pi) * std::exp(-2.0 * std::sqrt(78.8));
    EXPECT_LT(rel(r.value, exact), 1e-11);
}

TEST(Quadrature, Errors)
{
    EXPECT_THROW(finite(1.0, 1.0), DomainError);
    EXPECT_THROW(finite(2.0, 1.0), DomainError);
    EXPECT_THROW(integrate([](double) { return std::nan(""); }, positive_reals()), NonFiniteIntegrand);
    QuadratureSpec tight;
    tight.max_levels = 2;
    tight.abs_tol = tight.rel_tol = 1e-15;
    EXPECT_THROW(integrate([](double x) { return std::sin(50.0 * x) * std::exp(-x); }, positive_reals(), tight),
                 NonConvergence);
    auto partial =
        integrate_partial([](double x) { return std::sin(50.0 * x) * std::exp(-x); }, positive_reals(), tight);
    EXPECT_FALSE(partial.converged);
}

TEST(QuadratureSpecTest, Validation)
{
    QuadratureSpec q;
    EXPECT_NO_THROW(q.validate());
    q.abs_tol = 0.0;
    EXPECT_THROW(q.validate(), DomainError);
    q = {};
    q.max_levels = 0;
    EXPECT_THROW(q.validate(), DomainError);
}

TEST(Gamma, ClassicalValues)
{
    EXPECT_NEAR(gamma_complex(1.0).real(), 1.0, 1e-15);
    EXPECT_NEAR(gamma_complex(0.5).real(), std::sqrt(pi), 1e-14);
    EXPECT_NEAR(gamma_complex(5.0).real(), 24.0, 1e-12);
    EXPECT_NEAR(gamma_complex(-0.5).real(), -2.0 * std::sqrt(pi), 1e-13);
}

TEST(Gamma, CriticalLineAgainstFixtureAndStirling)
{
    Complex s(0.5, 14.13);
    Complex g = gamma_complex(s);
    EXPECT_LT(rel(g, fixtures::gamma_half_plus_14_13i), 1e-12);
    EXPECT_LT(rel(g, oracle::gamma_stirling(s)), 1e-12);
}

TEST(Gamma, PolesAndReciprocal)
{
    for (double n : {0.0, -1.0, -2.0, -7.0}) {
        EXPECT_THROW(gamma_complex(n), PoleError);
        EXPECT_EQ(rgamma(n), Complex(0.0));
    }
}

TEST(Gamma, RecurrenceOnRandomStrip)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-10.0, 10.0), im(-30.0, 30.0);
    for (int k = 0; k < 100; ++k) {
        Complex s(re(rng), im(rng));
        EXPECT_LT(rel(gamma_complex(s + 1.0), s * gamma_complex(s)), 1e-12) << s;
    }
}

TEST(Gamma, MatchesStirlingOracleInWorkingBox)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(-20.0, 20.0), im(-60.0, 60.0);
    for (int k = 0; k < 200; ++k) {
        Complex s(re(rng), im(rng));
        EXPECT_LT(rel(gamma_complex(s), oracle::gamma_stirling(s)), 1e-13) << s;
    }
}

TEST(LogGamma, ValuesAndConsistency)
{
    EXPECT_NEAR(std::abs(log_gamma_complex(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(log_gamma_complex(10.0).real(), std::log(362880.0), 1e-13);
    Complex s(0.25, 7.0665);
    Complex g = gamma_complex(s);
    EXPECT_LT(std::abs(std::exp(log_gamma_complex(s)) - g), 1e-12 * std::abs(g));
    EXPECT_LT(rel(log_gamma_complex(s), fixtures::log_gamma_quarter_plus_7_0665i), 1e-13);
    EXPECT_THROW(log_gamma_complex(0.0), DomainError);
    EXPECT_THROW(log_gamma_complex(Complex(-1.0, 2.0)), DomainError);
}

TEST(LogGamma, ContinuousAlongVerticalLine)
{
    Complex prev = log_gamma_complex(Complex(0.25, 0.0));
    for (int k = 1; k <= 2000; ++k) {
        Complex cur = log_gamma_complex(Complex(0.25, 0.05 * k));
        EXPECT_LT(std::fabs(cur.imag() - prev.imag()), 0.5);
        prev = cur;
    }
}

TEST(BesselK, HalfOrderClosedForm)
{
    auto r = bessel_k(0.5, 2.0);
    EXPECT_NEAR(r.value.real(), std::sqrt(pi / 4.0) * std::exp(-2.0), 1e-15);
    EXPECT_NEAR(r.value.real(), 0.1199377, 1e-7);
}

TEST(BesselK, RecurrenceCorrectSign)
{
    Complex nu(0.3, 2.0);
    double z = 1.0;
    Complex res = bessel_k(nu - 1.0, z).value - bessel_k(nu + 1.0, z).value + (2.0 * nu / z) * bessel_k(nu, z).value;
    EXPECT_LT(std::abs(res), 1e-10);
}

TEST(BesselK, SmallArgumentLaw)
{
    double law = 0.5 * std::tgamma(1.0) / (0.01 / 2.0);
    EXPECT_NEAR(bessel_k(1.0, 0.01).value.real() / law, 1.0, 0.01);
}

TEST(BesselK, SymmetricInOrderOnRandomGrid)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (double z : {0.1, 1.0, 10.0})
        for (int k = 0; k < 50; ++k) {
            Complex nu(u(rng), u(rng));
            Complex a = bessel_k(nu, z).value, b = bessel_k(-nu, z).value;
            EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(a));
            Complex res = bessel_k(nu - 1.0, z).value - bessel_k(nu + 1.0, z).value +
                          (2.0 * nu / z) * bessel_k(nu, z).value;
            EXPECT_LT(std::abs(res), 1e-10) << nu << " " << z;
        }
}

TEST(BesselK, AgreesWithTrapezoidOracle)
{
    for (Complex nu : {Complex(0.0), Complex(0.5), Complex(1.0), Complex(0.25, 0.5), Complex(2.5, -1.0)})
        for (double z : {0.1, 1.0, 4.0}) EXPECT_LT(rel(bessel_k(nu, z).value, oracle::bessel_k_trapezoid(nu, z)), 1e-12);
}

TEST(BesselK, TwoIntegralRepresentationsAgree)
{
    for (double beta : {0.5, 1.0, 3.0})
        for (double gam : {0.5, 1.0, 3.0})
            for (Complex nu : {Complex(0.0), Complex(0.5), Complex(1.0), Complex(0.25, 0.5)}) {
                auto f = [&](double x) { return std::exp((nu - 1.0) * std::log(x) - beta / x - gam * x); };
                Complex integral = integrate(f, positive_reals()).value;
                Complex rhs = 0.5 * std::exp(0.5 * nu * std::log(gam / beta)) * integral;
                EXPECT_LT(rel(bessel_k(nu, 2.0 * std::sqrt(beta * gam)).value, rhs), 1e-10);
            }
}

TEST(BesselK, ComplexArgumentReducesToReal)
{
    Complex a = bessel_k(Complex(0.7, 0.2), Complex(1.3, 0.0)).value;
    Complex b = bessel_k(Complex(0.7, 0.2), 1.3).value;
    EXPECT_LT(rel(a, b), 1e-14);
    // K_{1/2}(z) = sqrt(pi/(2z)) e^{-z} for complex z as well
    Complex z(1.0, 0.7);
    EXPECT_LT(rel(bessel_k(0.5, z).value, std::sqrt(pi / (2.0 * z)) * std::exp(-z)), 1e-12);
}

TEST(BesselK, Domain)
{
    EXPECT_THROW(bessel_k(0.5, 0.0), DomainError);
    EXPECT_THROW(bessel_k(0.5, -1.0), DomainError);
}
