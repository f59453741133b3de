#pragma once

// Command-line value syntax: complex numbers as a+bi / a-bi (no spaces),
// lists as a,b,c and real ranges as a:b or a:b:step.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "../types.hpp"

namespace zetalab::cli {

class UsageError : public Error {
public:
    using Error::Error;
};

inline double parse_real(std::string_view text, std::string_view flag)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
        throw UsageError("--" + std::string(flag) + ": cannot parse '" + std::string(text) + "' as a real number");
    return v;
}

inline Complex parse_complex(std::string_view text, std::string_view flag)
{
    auto fail = [&]() -> Complex {
        throw UsageError("--" + std::string(flag) + ": cannot parse '" + std::string(text) +
                         "' as a complex number (expected a+bi)");
    };
    if (text.empty()) return fail();
    if (text.back() != 'i') return {parse_real(text, flag), 0.0};

    std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view v) -> double {
        if (v.empty() || v == "+") return 1.0;
        if (v == "-") return -1.0;
        return parse_real(v, flag);
    };
    try {
        if (split == std::string_view::npos) return {0.0, imag_part(body)};
        return {parse_real(body.substr(0, split), flag), imag_part(body.substr(split))};
    } catch (const UsageError&) {
        return fail();
    }
}

inline std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t k = text.find(sep, start);
        out.emplace_back(text.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
        if (k == std::string_view::npos) break;
        start = k + 1;
    }
    return out;
}

inline std::vector<Complex> parse_complex_list(std::string_view text, std::string_view flag)
{
    std::vector<Complex> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_complex(item, flag));
    return out;
}

struct RealRange {
    double lo = 0.0;
    double hi = 0.0;
    bool has_step = false;
    double step = 0.0;
};

// a:b or a:b:step; requires a < b and step > 0.
inline RealRange parse_range(std::string_view text, std::string_view flag)
{
    auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3)
        throw UsageError("--" + std::string(flag) + ": expected a range a:b or a:b:step, got '" +
                         std::string(text) + "'");
    RealRange r;
    r.lo = parse_real(parts[0], flag);
    r.hi = parse_real(parts[1], flag);
    if (!(r.lo < r.hi))
        throw UsageError("--" + std::string(flag) + ": range must satisfy lower < upper, got '" +
                         std::string(text) + "'");
    if (parts.size() == 3) {
        r.has_step = true;
        r.step = parse_real(parts[2], flag);
        if (!(r.step > 0.0)) throw UsageError("--" + std::string(flag) + ": step must be positive");
    }
    return r;
}

// Points lo, lo + step, ... up to hi (inclusive within a relative slack of 1e-9 steps).
inline std::vector<double> expand_range(const RealRange& r, std::string_view flag)
{
    if (!r.has_step) throw UsageError("--" + std::string(flag) + ": range needs a step (a:b:step)");
    double count = std::floor((r.hi - r.lo) / r.step + 1e-9);
    if (count > 1e6) throw UsageError("--" + std::string(flag) + ": range has too many points");
    std::vector<double> out;
    for (long k = 0; k <= long(count); ++k) out.push_back(r.lo + double(k) * r.step);
    return out;
}

// A grid axis: a single value, a comma list, or a range a:b:step.
inline std::vector<Complex> parse_axis(std::string_view text, std::string_view flag)
{
    if (text.find(':') != std::string_view::npos) {
        std::vector<Complex> out;
        for (double v : expand_range(parse_range(text, flag), flag)) out.emplace_back(v, 0.0);
        return out;
    }
    return parse_complex_list(text, flag);
}

inline std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_complex(Complex z)
{
    std::string im = format_real(z.imag());
    if (im[0] != '-') im = "+" + im;
    return format_real(z.real()) + im + "i";
}

} // namespace zetalab::cli
