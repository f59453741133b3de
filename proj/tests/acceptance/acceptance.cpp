// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: zetalab_acceptance [--criterion N]   (no argument runs all fourteen)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles/fixtures.hpp"
#include "oracles/oracles.hpp"
#include "zetalab/cli/record.hpp"
#include "zetalab/zetalab.hpp"

using namespace zetalab;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

std::vector<Complex> verification_grid()
{
    std::vector<Complex> out;
    for (double sigma : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (double t : {0.0, 5.0, 14.0}) out.emplace_back(sigma, t);
    return out;
}

std::vector<Complex> strip_grid_40()
{
    std::vector<Complex> out;
    for (double sigma : {0.1, 0.3, 0.7, 0.9})
        for (int k = 0; k < 10; ++k) out.emplace_back(sigma, -30.0 + k * (60.0 / 9.0));
    return out;
}

Complex completed(Complex s)
{
    return std::exp(-0.5 * s * std::log(pi)) * gamma_complex(0.5 * s) * zeta_euler_maclaurin(s).value;
}

Verdict c1()
{
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) worst = std::max(worst, theta_modular_residual(0.05 * std::pow(400.0, k / 49.0)));
    return {worst < 1e-12, "max |Theta(1/v) - sqrt(v) Theta(v)| = " + fmt(worst) + " (< 1e-12)"};
}

Verdict c2()
{
    double e0 = std::abs(zeta_analytic(0.0).value - Complex(-0.5));
    double e1 = std::abs(zeta_analytic(-1.0).value - Complex(-1.0 / 12.0));
    double e2 = std::abs(zeta_analytic(2.0).value - Complex(pi * pi / 6.0));
    // the classical values agree with the independent Euler-Maclaurin oracle as well
    double o = std::max({std::abs(oracle::zeta_em(0.0) + 0.5), std::abs(oracle::zeta_em(-1.0) + 1.0 / 12.0),
                         std::abs(oracle::zeta_em(2.0) - pi * pi / 6.0)});
    double worst = std::max({e0, e1, e2});
    return {worst < 1e-10 && o < 1e-12, "errors at s = 0, -1, 2: " + fmt(e0) + ", " + fmt(e1) + ", " + fmt(e2) + " (< 1e-10)"};
}

Verdict c3()
{
    double fe = 0.0, xi = 0.0;
    for (Complex s : strip_grid_40()) {
        fe = std::max(fe, std::abs(completed(s) - completed(1.0 - s)));
        Complex a = xi_entire(s).value, b = xi_entire(1.0 - s).value;
        xi = std::max(xi, std::abs(a - b) / std::abs(a));
    }
    return {fe < 1e-9 && xi < 1e-10, "max functional-equation residual " + fmt(fe) + " (< 1e-9), xi symmetry " + fmt(xi) + " (< 1e-10)"};
}

Verdict c4()
{
    auto zs = find_zeros(10.0, 40.0, 0.05);
    const double expected[] = {14.1347, 21.0220, 25.0109, 30.4249, 32.9351, 37.5862};
    double worst = zs.size() == 6 ? 0.0 : INFINITY;
    for (std::size_t k = 0; k < std::min<std::size_t>(zs.size(), 6); ++k)
        worst = std::max(worst, std::fabs(zs[k].refined_t - expected[k]));
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    double im = 0.0;
    for (int k = 0; k < 50; ++k) im = std::max(im, std::fabs(hardy_z(u(rng)).value.imag()));
    return {zs.size() == 6 && worst < 1e-4 && im < 1e-9,
            std::to_string(zs.size()) + " zeros, max deviation " + fmt(worst) + " (< 1e-4), max |Im Z| " + fmt(im) + " (< 1e-9)"};
}

Verdict c5()
{
    double worst = 0.0;
    for (Complex s : verification_grid())
        for (double lambda : {0.2, 1.0, 3.0})
            worst = std::max(worst, verify(FunctionalEqKind::ExpSymmetric, s, CutoffSpec::exp_symmetric(lambda)).rel_residual);
    return {worst < 1e-8, "max relative residual " + fmt(worst) + " over 45 points (< 1e-8)"};
}

Verdict c6()
{
    double worst = 0.0;
    for (Complex s : verification_grid())
        for (double lambda : {0.5, 1.0})
            for (double alpha : {0.25, 0.5, 1.0, 2.0})
                worst = std::max(worst, verify(FunctionalEqKind::ExpAlpha, s, CutoffSpec::exp_alpha(lambda, alpha)).rel_residual);
    // verdict recorded in the fixture: which prefactor the quadrature oracle supports
    double fixture_corrected = std::fabs(fixtures::quarter_alpha_difference_s03_l08 + 4.0 * fixtures::quarter_alpha_k_term_s03_l08);
    double fixture_displayed = std::fabs(fixtures::quarter_alpha_difference_s03_l08 - 2.0 * fixtures::quarter_alpha_k_term_s03_l08);
    bool fixture_says_corrected = fixture_corrected < 1e-9 && fixture_displayed > 1e-9;
    auto q = quarter_alpha_residual(0.3, 0.8);
    bool library_agrees = q.residual_corrected_form < 1e-9 && q.residual_displayed_form > 1e-9;
    return {worst < 1e-8 && fixture_says_corrected && library_agrees,
            "max relative residual " + fmt(worst) + " over 120 points (< 1e-8); alpha = 1/4 single-K form: oracle supports "
                "prefactor -4 (residual " + fmt(q.residual_corrected_form) + "), displayed +2 fails (residual " +
                fmt(q.residual_displayed_form) + ")"};
}

Verdict c7()
{
    double worst = 0.0;
    for (Complex s : verification_grid())
        for (auto [l1, l2] : {std::pair<Complex, Complex>{1.0, 0.7}, {Complex(1.0, 0.5), 0.7}, {0.3, 2.0}})
            worst = std::max(worst, verify(FunctionalEqKind::TwoParam, s, CutoffSpec::two_param(l1, l2)).rel_residual);
    return {worst < 1e-8, "max relative residual " + fmt(worst) + " over 45 points (< 1e-8)"};
}

Verdict c8()
{
    double worst = 0.0;
    for (Complex s : {Complex(-1.0), Complex(0.0), Complex(0.5, 7.0), Complex(2.0)})
        for (double lambda : {0.1, 0.5, 2.0}) {
            Complex a = zeta_regularized(s, CutoffSpec::exp_symmetric(lambda)).completed;
            Complex b = zeta_exp_bessel_series(s, lambda).completed;
            Complex c = zeta_exp_boundary_form(s, lambda).completed;
            worst = std::max({worst, rel(a, b), rel(a, c), rel(b, c)});
        }
    return {worst < 1e-9, "max pairwise relative difference " + fmt(worst) + " (< 1e-9)"};
}

Verdict c9()
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> sig(0.5, 3.0), tt(-5.0, 5.0), lam(1e-3, 2.0);
    double abcd = 0.0, cform = 0.0;
    for (int k = 0; k < 10; ++k) {
        Complex s(sig(rng), tt(rng));
        double lambda = lam(rng);
        auto t = abcd_terms(s, lambda);
        Complex sum = t.A.value + t.B.value + t.C.value + t.D.value;
        Complex expected = std::exp(-0.5 * s * std::log(pi)) * gamma_complex(0.5 * s) * smooth_F(s, lambda).value;
        abcd = std::max(abcd, std::abs(sum - expected));
        cform = std::max(cform, std::abs(t.C.value + 1.0 / s));
    }
    std::uniform_real_distribution<double> psig(-2.0, 4.0), pt(-3.0, 3.0), plam(0.3, 2.0);
    double lo = INFINITY, hi = 0.0;
    for (int k = 0; k < 5; ++k) {
        Complex s(psig(rng), pt(rng));
        double lambda = plam(rng);
        double ratio = pde_residual_F(s, lambda, 2e-2) / pde_residual_F(s, lambda, 1e-2);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {abcd < 1e-9 && cform < 1e-12 && lo >= 3.5 && hi <= 4.5,
            "A+B+C+D max error " + fmt(abcd) + " (< 1e-9), C + 1/s " + fmt(cform) + " (< 1e-12), PDE ratios in [" +
                fmt(lo) + ", " + fmt(hi) + "] (within [3.5, 4.5])"};
}

Verdict c10()
{
    double worst = 0.0;
    for (Complex s : verification_grid())
        for (double lambda : {0.2, 1.0})
            worst = std::max(worst, omega_symmetry_residual(s, lambda) / std::abs(omega(s, lambda).value));
    // divergence of Omega as lambda -> 0 at s = 0.4: both Bessel terms follow the small-argument law
    const double s = 0.4;
    auto law_term = [](double nu, double x) { return std::pow(2.0, nu - 1.0) * std::tgamma(nu) * std::pow(x, -nu); };
    double regular = 0.5 * xi_entire(s).value.real();
    const double lams[] = {1e-2, 1e-3, 1e-4};
    double ly[3], lz[3];
    for (int k = 0; k < 3; ++k) {
        double om = omega(s, lams[k]).value.real();
        double law = 0.5 * s * (s - 1.0) * (law_term(0.5 * s, 2.0 * lams[k]) + law_term(0.5 * (1.0 - s), 2.0 * lams[k]));
        ly[k] = std::log(std::fabs(om - regular));
        lz[k] = std::log(std::fabs(law));
    }
    double span = std::log(lams[2]) - std::log(lams[0]);
    double obs = (ly[2] - ly[0]) / span, pred = (lz[2] - lz[0]) / span;
    double mismatch = std::fabs(obs / pred - 1.0);
    return {worst < 1e-9 && mismatch < 0.05,
            "max relative Omega asymmetry " + fmt(worst) + " (< 1e-9); divergence exponent " + fmt(obs) + " vs law " +
                fmt(pred) + " (mismatch " + fmt(mismatch) + " < 0.05)"};
}

Verdict c11()
{
    const double lams[] = {1e-2, 1e-3, 1e-4, 1e-6};
    double dev[4];
    bool monotone = true;
    for (int k = 0; k < 4; ++k) {
        dev[k] = std::abs(zeta_regularized(2.0, CutoffSpec::exp_symmetric(lams[k])).bare - pi * pi / 6.0);
        if (k > 0 && !(dev[k] < dev[k - 1])) monotone = false;
    }
    return {monotone && dev[3] < 2e-4,
            std::string("monotone decrease ") + (monotone ? "holds" : "fails") + "; |zeta(2, 1e-6) - pi^2/6| = " +
                fmt(dev[3]) + " (required < 2e-4; the deviation scales like pi^{3/2} sqrt(lambda))"};
}

Verdict c12()
{
    double norm_rd = 0.0;
    for (double d : {1.0, 2.0, 3.0})
        for (double t : {0.1, 1.0, 10.0}) {
            double area = 2.0 * std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d);
            double v = integrate([&](double r) { return heat_kernel_rd(t, r, d) * area * std::pow(r, d - 1.0); },
                                 positive_reals()).value.real();
            norm_rd = std::max(norm_rd, std::fabs(v - 1.0));
        }
    double res = 0.0;
    for (double alpha : {0.25, 1.0, 4.0})
        for (double r : {0.5, 1.0, 3.0})
            res = std::max(res, rel(resolvent_rd_quad(alpha, r, 3.0).value, std::exp(-std::sqrt(alpha) * r) / (4.0 * pi * r)));
    double norm_h3 = 0.0;
    for (double t : {0.1, 1.0, 5.0}) {
        double v = integrate(
                       [t](double rho) {
                           double p = heat_kernel_h3(t, rho);
                           return p == 0.0 ? 0.0 : p * 4.0 * pi * std::pow(std::sinh(rho), 2);
                       },
                             positive_reals()).value.real();
        norm_h3 = std::max(norm_h3, std::fabs(v - 1.0));
    }
    double ident = std::max({euclidean_identification_residual(1.0, 1.0, 1.0), euclidean_identification_residual(1.5, 1.0, 1.0),
                             hyperbolic_identification_residual(0.5, 1.0), hyperbolic_identification_residual(2.0, 0.1)});
    Complex ratio0 = resolvent_normalization_ratio(0.5, 0.5, 3.0);
    double drift = 0.0;
    for (double r : {1.0, 2.0, 4.0}) drift = std::max(drift, rel(resolvent_normalization_ratio(0.5, r, 3.0), ratio0));
    bool pass = norm_rd < 1e-10 && res < 1e-10 && norm_h3 < 1e-8 && ident < 1e-8 && drift < 1e-6;
    return {pass, "R^d normalization " + fmt(norm_rd) + ", resolvent closed form " + fmt(res) + ", H^3 normalization " +
                      fmt(norm_h3) + ", identifications " + fmt(ident) + ", displayed-resolvent ratio " +
                      fmt(ratio0.real()) + " (4 pi) with drift " + fmt(drift)};
}

Verdict c13()
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double sym = 0.0, rec = 0.0;
    for (double z : {0.1, 1.0, 10.0})
        for (int k = 0; k < 50; ++k) {
            Complex nu(u(rng), u(rng));
            Complex a = bessel_k(nu, z).value;
            sym = std::max(sym, std::abs(a - bessel_k(-nu, z).value) / std::abs(a));
            rec = std::max(rec, std::abs(bessel_k(nu - 1.0, z).value - bessel_k(nu + 1.0, z).value + (2.0 * nu / z) * a));
        }
    double two = 0.0;
    for (double beta : {0.5, 1.0, 3.0})
        for (double gam : {0.5, 1.0, 3.0})
            for (Complex nu : {Complex(0.0), Complex(0.5), Complex(1.0), Complex(0.25, 0.5)}) {
                auto f = [&](double x) { return std::exp((nu - 1.0) * std::log(x) - beta / x - gam * x); };
                Complex rhs = 0.5 * std::exp(0.5 * nu * std::log(gam / beta)) * integrate(f, positive_reals()).value;
                two = std::max(two, rel(bessel_k(nu, 2.0 * std::sqrt(beta * gam)).value, rhs));
            }
    return {sym < 1e-10 && rec < 1e-10 && two < 1e-10,
            "symmetry " + fmt(sym) + ", recurrence " + fmt(rec) + ", integral representations " + fmt(two) + " (each < 1e-10)"};
}

Verdict c14()
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("zetalab_accept_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    const std::string grid = "--format csv grid --fn zeta-reg --cutoff exp --sigma 0:1:0.1 --t 14.1 --lambda 0.1,1";
    auto g1 = testcli::run_tool(grid, dir), g2 = testcli::run_tool(grid + " --jobs 4", dir);
    expect(g1.code == 0 && g1.out == g2.out && std::count(g1.out.begin(), g1.out.end(), '\n') == 23, "grid determinism");
    auto j1 = testcli::run_tool("verify --kind exp-symmetric --lambda 0.2,1,3 --s-grid strip-default", dir);
    auto j2 = testcli::run_tool("verify --kind exp-symmetric --lambda 0.2,1,3 --s-grid strip-default", dir);
    expect(j1.code == 0 && j1.out == j2.out, "verify determinism");

    expect(testcli::run_tool("eval --fn zeta --s 2+0i", dir).code == 0, "exit 0");
    expect(testcli::run_tool("eval --fn zeta --s 2 --lambda 1", dir).code == 1, "exit 1 usage");
    expect(testcli::run_tool("scan --t 40:10", dir).code == 1, "exit 1 range");
    expect(testcli::run_tool("eval --fn zeta --s 1+0i", dir).code == 2, "exit 2 pole");
    expect(testcli::run_tool("verify --kind generic-h --cutoff custom:asymmetric", dir).code == 3, "exit 3");
    expect(testcli::run_tool("eval --fn zeta --s 2 --out " + (dir / "no" / "x").string(), dir).code == 4, "exit 4");
    auto scan = testcli::run_tool("scan --t 10:40 --step 0.05", dir);
    expect(scan.code == 0, "scan");

    try {
        using namespace zetalab::cli;
        expect(serialize_json(parse_json(j1.out)) == j1.out, "json round-trip (verify)");
        expect(serialize_json(parse_json(scan.out)) == scan.out, "json round-trip (scan)");
        expect(serialize_csv(parse_csv(g1.out)) == g1.out, "csv round-trip (grid)");
    } catch (const std::exception& e) {
        failures.push_back(std::string("round-trip threw: ") + e.what());
    }
    fs::remove_all(dir);
    std::string detail = "determinism, exit codes 0-4, JSON/CSV round-trip";
    if (!failures.empty()) {
        detail += "; failed:";
        for (const auto& f : failures) detail += " [" + f + "]";
    }
    return {failures.empty(), detail};
}

const std::vector<std::pair<std::string, std::function<Verdict()>>>& criteria()
{
    static const std::vector<std::pair<std::string, std::function<Verdict()>>> list = {
        {"theta modularity", c1},
        {"classical continuation", c2},
        {"classical functional equation", c3},
        {"critical-line zeros", c4},
        {"exp-symmetric functional equation", c5},
        {"alpha family", c6},
        {"two-parameter family", c7},
        {"representation agreement", c8},
        {"F(s, lambda) structure", c9},
        {"Omega symmetry and divergence", c10},
        {"small-lambda recovery", c11},
        {"diffusion", c12},
        {"Bessel layer", c13},
        {"command line", c14},
    };
    return list;
}

bool run_one(int n)
{
    const auto& [name, fn] = criteria().at(n - 1);
    Verdict v;
    try {
        v = fn();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %-34s %s  %s\n", n, name.c_str(), v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    return v.pass;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            int n = std::atoi(argv[++i]);
            if (n < 1 || n > 14) {
                std::fprintf(stderr, "--criterion: expected 1..14\n");
                return 2;
            }
            which.push_back(n);
        } else {
            std::fprintf(stderr, "usage: zetalab_acceptance [--criterion N]\n");
            return 2;
        }
    }
    if (which.empty())
        for (int n = 1; n <= 14; ++n) which.push_back(n);
    bool all = true;
    for (int n : which) all = run_one(n) && all;
    return all ? 0 : 1;
}
