#pragma once

// The four subcommands (eval, verify, scan, grid) as functions of a RunConfig.
// Parameters are validated against the selector's signature before any computation.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../zetalab.hpp"
#include "cache.hpp"
#include "parse.hpp"
#include "pool.hpp"
#include "record.hpp"

namespace zetalab::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_nonconvergence = 2,
    exit_symmetry = 3,
    exit_io = 4,
    exit_residual = 5,
};

struct RunConfig {
    std::string command;  // eval | verify | scan | grid
    std::string selector; // --fn for eval/grid, --kind for verify
    std::vector<std::pair<std::string, std::string>> params;
    QuadratureSpec quadrature;
    std::string format = "json";
    std::optional<std::string> out;
    std::optional<std::string> cache_dir;
    int jobs = 1;
    bool timing = false;
    double threshold = 1e-8;
};

struct RunOutcome {
    std::vector<ResultRecord> records;
    int exit_code = exit_ok;
    std::string summary;      // printed on stderr
    bool single = false;      // eval emits one object rather than an array
    bool scan_layout = false; // scan emits its own CSV columns
};

enum class ParamType { Real, Complex, Text };

struct ParamDef {
    ParamDef(std::string n, ParamType t, std::optional<std::string> f = std::nullopt, bool opt = false)
        : name(std::move(n)), type(t), fallback(std::move(f)), optional(opt) {}

    std::string name;
    ParamType type;
    std::optional<std::string> fallback; // absent: required unless optional
    bool optional;
};

inline const std::map<std::string, std::vector<ParamDef>>& eval_signatures()
{
    using T = ParamType;
    static const std::map<std::string, std::vector<ParamDef>> table = {
        {"zeta", {{"s", T::Complex}, {"method", T::Text, "em"}}},
        {"zeta-reg",
         {{"s", T::Complex},
          {"cutoff", T::Text, "exp"},
          {"lambda", T::Complex, std::nullopt, true},
          {"alpha", T::Real, std::nullopt, true},
          {"lambda1", T::Complex, std::nullopt, true},
          {"lambda2", T::Complex, std::nullopt, true},
          {"nu", T::Real, std::nullopt, true},
          {"repr", T::Text, "quadrature"},
          {"part", T::Text, "completed"}}},
        {"bessel-k", {{"nu", T::Complex}, {"z", T::Complex}}},
        {"gamma", {{"s", T::Complex}}},
        {"theta", {{"v", T::Real}}},
        {"psi", {{"x", T::Real}}},
        {"theta3", {{"z", T::Complex}, {"q", T::Complex}}},
        {"heat-kernel", {{"space", T::Text, "rd"}, {"t", T::Real}, {"r", T::Real}, {"d", T::Real, "3"}}},
        {"resolvent", {{"alpha", T::Complex}, {"r", T::Real}, {"d", T::Real, "3"}, {"method", T::Text, "quad"}}},
        {"laplace-hyperbolic", {{"alpha", T::Complex}, {"rho", T::Real}}},
        {"omega", {{"s", T::Complex}, {"lambda", T::Real}}},
        {"xi-lambda", {{"s", T::Complex}, {"lambda", T::Real}}},
        {"xi", {{"s", T::Complex}}},
        {"chi", {{"s", T::Complex}}},
        {"hardy-z", {{"t", T::Real}}},
        {"smooth-f", {{"s", T::Complex}, {"lambda", T::Real}}},
    };
    return table;
}

using Inputs = std::vector<std::pair<std::string, InputValue>>;

namespace detail {

inline const InputValue* lookup(const Inputs& in, const std::string& key)
{
    for (const auto& [k, v] : in)
        if (k == key) return &v;
    return nullptr;
}

inline Complex get_c(const Inputs& in, const std::string& key)
{
    const InputValue* v = lookup(in, key);
    if (!v) throw UsageError("missing --" + key);
    if (auto d = std::get_if<double>(v)) return *d;
    return std::get<Complex>(*v);
}

inline double get_r(const Inputs& in, const std::string& key)
{
    const InputValue* v = lookup(in, key);
    if (!v) throw UsageError("missing --" + key);
    if (auto z = std::get_if<Complex>(v)) {
        if (z->imag() != 0.0) throw UsageError("--" + key + ": must be real");
        return z->real();
    }
    return std::get<double>(*v);
}

inline std::string get_s(const Inputs& in, const std::string& key)
{
    const InputValue* v = lookup(in, key);
    if (!v) throw UsageError("missing --" + key);
    return std::get<std::string>(*v);
}

inline bool has(const Inputs& in, const std::string& key) { return lookup(in, key) != nullptr; }

inline InputValue parse_typed(const ParamDef& def, const std::string& text)
{
    switch (def.type) {
    case ParamType::Real: return parse_real(text, def.name);
    case ParamType::Complex: return parse_complex(text, def.name);
    case ParamType::Text: return text;
    }
    return text;
}

inline const std::vector<ParamDef>& signature(const std::string& fn)
{
    const auto& table = eval_signatures();
    auto it = table.find(fn);
    if (it == table.end()) {
        std::string names;
        for (const auto& [k, v] : table) names += (names.empty() ? "" : ", ") + k;
        throw UsageError("--fn: unknown function '" + fn + "' (one of: " + names + ")");
    }
    return it->second;
}

inline void reject_unknown(const std::vector<std::pair<std::string, std::string>>& raw,
                           const std::vector<std::string>& allowed, const std::string& owner)
{
    for (const auto& [k, v] : raw) {
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == k;
        if (!ok) throw UsageError("--" + k + " is not a parameter of " + owner);
    }
}

inline const std::string* raw_value(const std::vector<std::pair<std::string, std::string>>& raw,
                                    const std::string& key)
{
    for (const auto& [k, v] : raw)
        if (k == key) return &v;
    return nullptr;
}

} // namespace detail

// Validates the raw flags of `eval --fn <fn>` and returns the typed inputs in signature
// order, defaults filled in. The selector itself leads as "fn".
inline Inputs validate_eval_params(const std::string& fn, const std::vector<std::pair<std::string, std::string>>& raw)
{
    const auto& sig = detail::signature(fn);
    std::vector<std::string> allowed;
    for (const auto& d : sig) allowed.push_back(d.name);
    detail::reject_unknown(raw, allowed, "--fn " + fn);
    Inputs in{{"fn", fn}};
    for (const auto& d : sig) {
        const std::string* text = detail::raw_value(raw, d.name);
        if (text) in.emplace_back(d.name, detail::parse_typed(d, *text));
        else if (d.fallback) in.emplace_back(d.name, detail::parse_typed(d, *d.fallback));
        else if (!d.optional) throw UsageError("--fn " + fn + " requires --" + d.name);
    }
    return in;
}

// Named non-exponential cut-offs available from the command line.
inline CutoffSpec named_custom_cutoff(const std::string& name, double lambda)
{
    if (!(lambda > 0.0)) throw DomainError("cutoff " + name + ": require lambda > 0");
    if (name == "custom:asymmetric")
        return CutoffSpec::custom_fn(
            name, [lambda](double x) { return Complex(std::exp(-lambda * x)); }, false);
    if (name == "custom:log-gaussian")
        return CutoffSpec::custom_fn(
            name,
            [lambda](double x) {
                double l = std::log(x);
                return Complex(std::exp(-lambda * l * l));
            },
            true);
    throw UsageError("--cutoff: unknown cut-off '" + name + "'");
}

inline CutoffSpec cutoff_from_inputs(const Inputs& in, const std::string& name)
{
    using detail::get_c;
    using detail::get_r;
    using detail::has;
    auto need = [&](const char* key) {
        if (!has(in, key)) throw UsageError("--cutoff " + name + " requires --" + key);
    };
    if (name == "none") return CutoffSpec::none();
    if (name == "exp") {
        need("lambda");
        return CutoffSpec::exp_symmetric(get_c(in, "lambda"));
    }
    if (name == "exp-alpha") {
        need("lambda");
        need("alpha");
        return CutoffSpec::exp_alpha(get_r(in, "lambda"), get_r(in, "alpha"));
    }
    if (name == "two-param") {
        need("lambda1");
        need("lambda2");
        return CutoffSpec::two_param(get_c(in, "lambda1"), get_c(in, "lambda2"));
    }
    if (name == "two-param-nu") {
        need("lambda1");
        need("lambda2");
        need("nu");
        return CutoffSpec::two_param_nu(get_c(in, "lambda1"), get_c(in, "lambda2"), get_r(in, "nu"));
    }
    if (name.rfind("custom:", 0) == 0) {
        need("lambda");
        return named_custom_cutoff(name, get_r(in, "lambda"));
    }
    throw UsageError("--cutoff: unknown cut-off '" + name + "'");
}

namespace detail {

inline ResultRecord from_eval(const Inputs& in, const EvalResult& r)
{
    ResultRecord rec;
    rec.input = in;
    rec.value = r.value;
    rec.err_estimate = r.err_estimate;
    rec.converged = r.converged;
    return rec;
}

inline ResultRecord eval_zeta_reg(const Inputs& in, const QuadratureSpec& q)
{
    Complex s = get_c(in, "s");
    std::string cut = get_s(in, "cutoff");
    std::string repr = get_s(in, "repr");
    std::string part = get_s(in, "part");
    if (part != "completed" && part != "bare") throw UsageError("--part: expected completed or bare");
    CutoffSpec c = cutoff_from_inputs(in, cut);
    RegZetaValue v;
    if (repr == "quadrature") {
        v = zeta_regularized(s, c, q);
    } else if (repr == "bessel-series") {
        if (c.kind == CutoffKind::ExpSymmetric) v = zeta_exp_bessel_series(s, c.lambda, q);
        else if (c.kind == CutoffKind::TwoParam) v = zeta_two_param_series(s, c.lambda1, c.lambda2, q);
        else throw UsageError("--repr bessel-series is not available for --cutoff " + cut);
    } else if (repr == "boundary-form") {
        if (c.kind == CutoffKind::ExpSymmetric) {
            if (c.lambda.imag() != 0.0) throw UsageError("--repr boundary-form: --lambda must be real");
            v = zeta_exp_boundary_form(s, c.lambda.real(), q);
        } else if (c.kind == CutoffKind::TwoParam) {
            v = zeta_two_param_diffusion_form(s, c.lambda1, c.lambda2, q);
        } else {
            throw UsageError("--repr boundary-form is not available for --cutoff " + cut);
        }
    } else {
        throw UsageError("--repr: expected quadrature, bessel-series or boundary-form");
    }
    EvalResult r;
    r.value = part == "completed" ? v.completed : v.bare;
    r.err_estimate = v.err_estimate;
    if (part == "bare" && std::abs(v.completed) > 0.0)
        r.err_estimate *= std::abs(v.bare) / std::abs(v.completed);
    r.converged = v.converged;
    return from_eval(in, r);
}

inline ResultRecord eval_heat_kernel(const Inputs& in)
{
    std::string space = get_s(in, "space");
    double t = get_r(in, "t"), r = get_r(in, "r"), d = get_r(in, "d");
    EvalResult e;
    if (space == "rd") e.value = heat_kernel_rd(t, r, d);
    else if (space == "h3") e.value = heat_kernel_h3(t, r);
    else if (space == "hyperbolic") {
        if (std::floor(d) != d) throw UsageError("--d: hyperbolic kernel needs an odd integer dimension");
        e.value = heat_kernel_hyperbolic_odd(t, r, int(d));
    } else
        throw UsageError("--space: expected rd, h3 or hyperbolic");
    return from_eval(in, e);
}

} // namespace detail

// Evaluates one validated point. Library exceptions propagate to the caller.
inline ResultRecord evaluate(const Inputs& in, const QuadratureSpec& q)
{
    using namespace detail;
    const std::string fn = get_s(in, "fn");
    if (fn == "zeta") {
        std::string m = get_s(in, "method");
        Complex s = get_c(in, "s");
        if (m == "em") {
            EvalResult r = zeta_euler_maclaurin(s);
            r.converged = r.err_estimate <= q.tolerance_for(std::abs(r.value));
            return from_eval(in, r);
        }
        if (m == "analytic") return from_eval(in, zeta_analytic(s, q));
        if (m == "series") return from_eval(in, zeta_series(s, q));
        throw UsageError("--method: expected em, analytic or series");
    }
    if (fn == "zeta-reg") return eval_zeta_reg(in, q);
    if (fn == "bessel-k") return from_eval(in, bessel_k(get_c(in, "nu"), get_c(in, "z"), q));
    if (fn == "gamma") {
        EvalResult r;
        r.value = gamma_complex(get_c(in, "s"));
        return from_eval(in, r);
    }
    if (fn == "theta") return from_eval(in, big_theta(get_r(in, "v"), q));
    if (fn == "psi") return from_eval(in, psi(get_r(in, "x"), q));
    if (fn == "theta3") return from_eval(in, jacobi_theta3(get_c(in, "z"), get_c(in, "q"), q));
    if (fn == "heat-kernel") return eval_heat_kernel(in);
    if (fn == "resolvent") {
        std::string m = get_s(in, "method");
        Complex a = get_c(in, "alpha");
        double r = get_r(in, "r"), d = get_r(in, "d");
        if (m == "quad") return from_eval(in, resolvent_rd_quad(a, r, d, q));
        if (m == "bessel") return from_eval(in, resolvent_rd_bessel(a, r, d, q));
        throw UsageError("--method: expected quad or bessel");
    }
    if (fn == "laplace-hyperbolic") return from_eval(in, laplace_hyperbolic(get_c(in, "alpha"), get_r(in, "rho"), q));
    if (fn == "omega") return from_eval(in, omega(get_c(in, "s"), get_r(in, "lambda"), q));
    if (fn == "xi-lambda") return from_eval(in, xi_lambda(get_c(in, "s"), get_r(in, "lambda"), q));
    if (fn == "xi") return from_eval(in, xi_entire(get_c(in, "s"), q));
    if (fn == "chi") {
        EvalResult r;
        r.value = chi_factor(get_c(in, "s"));
        return from_eval(in, r);
    }
    if (fn == "hardy-z") return from_eval(in, hardy_z(get_r(in, "t"), q));
    if (fn == "smooth-f") return from_eval(in, smooth_F(get_c(in, "s"), get_r(in, "lambda"), q));
    throw UsageError("--fn: unknown function '" + fn + "'");
}

namespace detail {

inline void finish(ResultRecord& r, const QuadratureSpec& q)
{
    r.version = zetalab::version;
    r.quadrature = q;
}

// Cached evaluation with optional wall-time stamping (never stored in the cache).
inline ResultRecord timed_point(RecordCache& cache, const Inputs& in, const QuadratureSpec& q, bool timing,
                                const std::function<ResultRecord()>& compute)
{
    auto start = std::chrono::steady_clock::now();
    ResultRecord r = cache.get_or_compute(cache_key_text(in, q, zetalab::version), [&] {
        ResultRecord x = compute();
        finish(x, q);
        return x;
    });
    if (timing)
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::optional<std::filesystem::path> cache_path(const RunConfig& cfg)
{
    if (cfg.cache_dir) return std::filesystem::path(*cfg.cache_dir);
    return std::nullopt;
}

} // namespace detail

inline RunOutcome run_eval(const RunConfig& cfg)
{
    cfg.quadrature.validate();
    Inputs in = validate_eval_params(cfg.selector, cfg.params);
    RecordCache cache(detail::cache_path(cfg));
    RunOutcome out;
    out.single = true;
    out.records.push_back(
        detail::timed_point(cache, in, cfg.quadrature, cfg.timing, [&] { return evaluate(in, cfg.quadrature); }));
    if (!out.records.front().converged) {
        out.exit_code = exit_nonconvergence;
        out.summary = "error: evaluation did not reach the requested tolerance";
    }
    return out;
}

// ---- verify ----

inline FunctionalEqKind parse_kind(const std::string& name)
{
    for (auto k : {FunctionalEqKind::RiemannClassic, FunctionalEqKind::GenericH, FunctionalEqKind::ExpSymmetric,
                   FunctionalEqKind::ExpAlpha, FunctionalEqKind::QuarterAlphaSingleK, FunctionalEqKind::TwoParam})
        if (name == to_string(k)) return k;
    throw UsageError("--kind: unknown functional equation '" + name + "'");
}

// s in {0.1, 0.3, 0.5, 0.7, 0.9} x {0, 5i, 14i}
inline std::vector<Complex> strip_default_grid()
{
    std::vector<Complex> out;
    for (double sigma : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (double t : {0.0, 5.0, 14.0}) out.emplace_back(sigma, t);
    return out;
}

inline std::vector<Complex> s_values(const std::vector<std::pair<std::string, std::string>>& raw)
{
    const std::string* s = detail::raw_value(raw, "s");
    const std::string* grid = detail::raw_value(raw, "s-grid");
    if (s && grid) throw UsageError("--s and --s-grid are mutually exclusive");
    if (s) return parse_complex_list(*s, "s");
    if (grid && *grid != "strip-default") throw UsageError("--s-grid: unknown grid '" + *grid + "'");
    return strip_default_grid();
}

inline RunOutcome run_verify(const RunConfig& cfg)
{
    cfg.quadrature.validate();
    const FunctionalEqKind kind = parse_kind(cfg.selector);
    struct Axis {
        std::string name;
        std::string fallback;
        bool real;
    };
    std::vector<Axis> axes;
    switch (kind) {
    case FunctionalEqKind::RiemannClassic: break;
    case FunctionalEqKind::ExpSymmetric: axes = {{"lambda", "0.2,1,3", false}}; break;
    case FunctionalEqKind::ExpAlpha: axes = {{"lambda", "0.5,1", true}, {"alpha", "0.25,0.5,1,2", true}}; break;
    case FunctionalEqKind::QuarterAlphaSingleK: axes = {{"lambda", "0.5,1", true}}; break;
    case FunctionalEqKind::TwoParam: axes = {{"lambda1", "1", false}, {"lambda2", "0.7", false}}; break;
    case FunctionalEqKind::GenericH:
        axes = {{"lambda", "1", false}, {"alpha", "1", true}, {"lambda1", "1", false}, {"lambda2", "0.7", false}};
        break;
    }
    std::vector<std::string> allowed = {"s", "s-grid"};
    if (kind == FunctionalEqKind::GenericH) allowed.push_back("cutoff");
    for (const auto& a : axes) allowed.push_back(a.name);
    detail::reject_unknown(cfg.params, allowed, "--kind " + cfg.selector);

    std::string cut = "exp";
    if (auto c = detail::raw_value(cfg.params, "cutoff")) cut = *c;
    if (kind == FunctionalEqKind::GenericH) {
        // keep only the axes the chosen cut-off uses
        std::vector<std::string> used;
        if (cut == "exp" || cut.rfind("custom:", 0) == 0) used = {"lambda"};
        else if (cut == "exp-alpha") used = {"lambda", "alpha"};
        else if (cut == "two-param") used = {"lambda1", "lambda2"};
        else throw UsageError("--cutoff: unknown or unsupported cut-off '" + cut + "'");
        std::vector<Axis> kept;
        for (const auto& a : axes)
            for (const auto& u : used)
                if (a.name == u) kept.push_back(a);
        for (const auto& [k, v] : cfg.params) {
            bool is_axis = false, is_used = false;
            for (const auto& a : axes) is_axis = is_axis || a.name == k;
            for (const auto& u : used) is_used = is_used || u == k;
            if (is_axis && !is_used) throw UsageError("--" + k + " is not a parameter of --cutoff " + cut);
        }
        axes = kept;
    }

    std::vector<std::vector<Complex>> values;
    for (const auto& a : axes) {
        const std::string* text = detail::raw_value(cfg.params, a.name);
        auto v = parse_complex_list(text ? *text : a.fallback, a.name);
        if (a.real)
            for (auto z : v)
                if (z.imag() != 0.0) throw UsageError("--" + a.name + ": must be real");
        values.push_back(v);
    }
    const std::vector<Complex> svals = s_values(cfg.params);

    std::vector<Inputs> points;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        for (Complex s : svals) {
            Inputs in{{"kind", cfg.selector}};
            if (kind == FunctionalEqKind::GenericH) in.emplace_back("cutoff", cut);
            for (std::size_t k = 0; k < axes.size(); ++k) {
                Complex v = values[k][idx[k]];
                if (axes[k].real) in.emplace_back(axes[k].name, v.real());
                else in.emplace_back(axes[k].name, v);
            }
            in.emplace_back("s", s);
            points.push_back(std::move(in));
        }
        std::size_t k = axes.size();
        bool done = true;
        while (k-- > 0) {
            if (++idx[k] < values[k].size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (done) break;
    }

    auto compute = [&](const Inputs& in) {
        using detail::get_c;
        using detail::get_r;
        using detail::has;
        CutoffSpec c;
        switch (kind) {
        case FunctionalEqKind::RiemannClassic: break;
        case FunctionalEqKind::ExpSymmetric: c = CutoffSpec::exp_symmetric(get_c(in, "lambda")); break;
        case FunctionalEqKind::ExpAlpha: c = CutoffSpec::exp_alpha(get_r(in, "lambda"), get_r(in, "alpha")); break;
        case FunctionalEqKind::QuarterAlphaSingleK: c = CutoffSpec::exp_alpha(get_r(in, "lambda"), 0.25); break;
        case FunctionalEqKind::TwoParam: c = CutoffSpec::two_param(get_c(in, "lambda1"), get_c(in, "lambda2")); break;
        case FunctionalEqKind::GenericH: c = cutoff_from_inputs(in, cut); break;
        }
        FunctionalEqReport rep = verify(kind, get_c(in, "s"), c, cfg.quadrature);
        ResultRecord r;
        r.input = in;
        r.value = rep.lhs;
        r.err_estimate = rep.abs_residual;
        r.residuals = {{"abs", rep.abs_residual}, {"rel", rep.rel_residual}};
        return r;
    };

    RecordCache cache(detail::cache_path(cfg));
    RunOutcome out;
    out.records = parallel_map<ResultRecord>(points.size(), cfg.jobs, [&](std::size_t i) {
        return detail::timed_point(cache, points[i], cfg.quadrature, cfg.timing, [&] { return compute(points[i]); });
    });
    double worst = 0.0;
    for (const auto& r : out.records) worst = std::max(worst, r.residual("rel").value_or(0.0));
    out.summary = "verify " + cfg.selector + ": " + std::to_string(out.records.size()) +
                  " points, max rel residual " + format_real(worst) + " (threshold " + format_real(cfg.threshold) +
                  ")";
    if (!(worst < cfg.threshold)) out.exit_code = exit_residual;
    return out;
}

// ---- scan ----

inline RunOutcome run_scan(const RunConfig& cfg)
{
    cfg.quadrature.validate();
    detail::reject_unknown(cfg.params, {"t", "step"}, "scan");
    const std::string* t = detail::raw_value(cfg.params, "t");
    if (!t) throw UsageError("scan requires --t a:b");
    RealRange range = parse_range(*t, "t");
    if (range.has_step) throw UsageError("--t: give the step with --step");
    double step = 0.05;
    if (auto s = detail::raw_value(cfg.params, "step")) step = parse_real(*s, "step");
    if (!(step > 0.0) || step > 1.0) throw UsageError("--step: require 0 < step <= 1");
    if (std::fabs(range.lo) > zero_scan_limit || std::fabs(range.hi) > zero_scan_limit)
        throw UsageError("--t: |t| must not exceed 500");

    RunOutcome out;
    out.scan_layout = true;
    auto start = std::chrono::steady_clock::now();
    for (const auto& b : find_zeros(range.lo, range.hi, step, cfg.quadrature)) {
        ResultRecord r;
        r.input = {{"t_lo", b.t_lo}, {"t_hi", b.t_hi}};
        r.value = b.refined_t;
        r.err_estimate = b.t_hi - b.t_lo;
        r.residuals = {{"abs_z", std::abs(hardy_z(b.refined_t, cfg.quadrature).value)}};
        detail::finish(r, cfg.quadrature);
        out.records.push_back(r);
    }
    if (cfg.timing) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        for (auto& r : out.records) r.wall_ms = ms;
    }
    out.summary = "scan: " + std::to_string(out.records.size()) + " zeros";
    return out;
}

inline std::string serialize_scan_csv(const std::vector<ResultRecord>& rs)
{
    std::string out = "t_lo,t_hi,refined_t,|Z(refined_t)|\n";
    for (const auto& r : rs) {
        out += format_real(std::get<double>(*r.find_input("t_lo"))) + "," +
               format_real(std::get<double>(*r.find_input("t_hi"))) + "," + format_real(r.value.real()) + "," +
               format_real(r.residual("abs_z").value_or(0.0)) + "\n";
    }
    return out;
}

// ---- grid ----

// Cartesian grid over the selector's parameters; for selectors taking s, --sigma and --t
// may replace --s. Rows are ordered lexicographically with the first axis slowest.
inline std::vector<Inputs> grid_points(const std::string& fn,
                                       const std::vector<std::pair<std::string, std::string>>& raw)
{
    const auto& sig = detail::signature(fn);
    bool takes_s = false;
    for (const auto& d : sig) takes_s = takes_s || d.name == "s";
    std::vector<std::string> allowed;
    for (const auto& d : sig) allowed.push_back(d.name);
    if (takes_s) {
        allowed.push_back("sigma");
        if (std::find(allowed.begin(), allowed.end(), "t") == allowed.end()) allowed.push_back("t");
    }
    detail::reject_unknown(raw, allowed, "--fn " + fn);

    bool split_s = takes_s && (detail::raw_value(raw, "sigma") || detail::raw_value(raw, "t"));
    if (split_s && detail::raw_value(raw, "s")) throw UsageError("--s cannot be combined with --sigma/--t");

    struct Axis {
        std::string name;
        std::vector<InputValue> values;
    };
    std::vector<Axis> axes;
    if (split_s) {
        for (const char* name : {"sigma", "t"}) {
            const std::string* text = detail::raw_value(raw, name);
            Axis a{name, {}};
            for (Complex z : parse_axis(text ? *text : "0", name)) {
                if (z.imag() != 0.0) throw UsageError(std::string("--") + name + ": must be real");
                a.values.emplace_back(z.real());
            }
            axes.push_back(std::move(a));
        }
    }
    for (const auto& d : sig) {
        if (split_s && d.name == "s") continue;
        const std::string* text = detail::raw_value(raw, d.name);
        if (!text && !d.fallback) {
            if (d.optional) continue;
            throw UsageError("--fn " + fn + " requires --" + d.name);
        }
        Axis a{d.name, {}};
        if (d.type == ParamType::Text) {
            for (const auto& item : split(text ? *text : *d.fallback, ',')) a.values.emplace_back(item);
        } else {
            for (Complex z : parse_axis(text ? *text : *d.fallback, d.name)) {
                if (d.type == ParamType::Real) {
                    if (z.imag() != 0.0) throw UsageError("--" + d.name + ": must be real");
                    a.values.emplace_back(z.real());
                } else {
                    a.values.emplace_back(z);
                }
            }
        }
        axes.push_back(std::move(a));
    }

    std::vector<Inputs> out;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        Inputs in{{"fn", fn}};
        double sigma = 0.0, t = 0.0;
        for (std::size_t k = 0; k < axes.size(); ++k) {
            const InputValue& v = axes[k].values[idx[k]];
            if (split_s && axes[k].name == "sigma") sigma = std::get<double>(v);
            else if (split_s && axes[k].name == "t") t = std::get<double>(v);
            else in.emplace_back(axes[k].name, v);
        }
        if (split_s) in.insert(in.begin() + 1, {"s", Complex(sigma, t)});
        out.push_back(std::move(in));
        std::size_t k = axes.size();
        bool done = true;
        while (k-- > 0) {
            if (++idx[k] < axes[k].values.size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (done) break;
    }
    return out;
}

inline RunOutcome run_grid(const RunConfig& cfg)
{
    cfg.quadrature.validate();
    std::vector<Inputs> points = grid_points(cfg.selector, cfg.params);
    RecordCache cache(detail::cache_path(cfg));
    RunOutcome out;
    out.records = parallel_map<ResultRecord>(points.size(), cfg.jobs, [&](std::size_t i) {
        return detail::timed_point(cache, points[i], cfg.quadrature, cfg.timing,
                                   [&] { return evaluate(points[i], cfg.quadrature); });
    });
    out.summary = "grid " + cfg.selector + ": " + std::to_string(out.records.size()) + " rows";
    return out;
}

inline RunOutcome run(const RunConfig& cfg)
{
    if (cfg.jobs < 1) throw UsageError("--jobs: require N >= 1");
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format: expected json or csv");
    if (cfg.command == "eval") return run_eval(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "scan") return run_scan(cfg);
    if (cfg.command == "grid") return run_grid(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
}

inline std::string render(const RunOutcome& out, const std::string& format)
{
    if (format == "csv") return out.scan_layout ? serialize_scan_csv(out.records) : serialize_csv(out.records);
    if (out.single && out.records.size() == 1) return serialize_json(out.records.front());
    return serialize_json(out.records);
}

// Maps an exception to (exit code, message).
inline std::pair<int, std::string> classify(const std::exception& e)
{
    if (dynamic_cast<const UsageError*>(&e)) return {exit_usage, std::string("usage: ") + e.what()};
    if (dynamic_cast<const DomainError*>(&e)) return {exit_usage, std::string("domain error: ") + e.what()};
    if (dynamic_cast<const PoleError*>(&e)) return {exit_nonconvergence, std::string("PoleError: ") + e.what()};
    if (dynamic_cast<const NonConvergence*>(&e))
        return {exit_nonconvergence, std::string("NonConvergence: ") + e.what()};
    if (dynamic_cast<const NonFiniteIntegrand*>(&e))
        return {exit_nonconvergence, std::string("NonFiniteIntegrand: ") + e.what()};
    if (dynamic_cast<const SymmetryViolation*>(&e))
        return {exit_symmetry, std::string("SymmetryViolation: ") + e.what()};
    if (dynamic_cast<const IoError*>(&e)) return {exit_io, std::string("I/O error: ") + e.what()};
    return {exit_usage, std::string("error: ") + e.what()};
}

} // namespace zetalab::cli
