#pragma once

// ResultRecord and its JSON / CSV encodings.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "../types.hpp"
#include "parse.hpp"

namespace zetalab::cli {

using InputValue = std::variant<std::string, double, Complex>;

struct ResultRecord {
    std::vector<std::pair<std::string, InputValue>> input;
    Complex value{};
    double err_estimate = 0.0;
    bool converged = true;
    std::vector<std::pair<std::string, double>> residuals;
    std::optional<double> wall_ms;
    std::string version;
    QuadratureSpec quadrature;

    const InputValue* find_input(const std::string& key) const
    {
        for (const auto& [k, v] : input)
            if (k == key) return &v;
        return nullptr;
    }

    std::optional<double> residual(const std::string& key) const
    {
        for (const auto& [k, v] : residuals)
            if (k == key) return v;
        return std::nullopt;
    }
};

inline bool operator==(const QuadratureSpec& a, const QuadratureSpec& b)
{
    return a.abs_tol == b.abs_tol && a.rel_tol == b.rel_tol && a.max_levels == b.max_levels &&
           a.series_tail_tol == b.series_tail_tol && a.max_terms == b.max_terms;
}

inline bool operator==(const ResultRecord& a, const ResultRecord& b)
{
    return a.input == b.input && a.value == b.value && a.err_estimate == b.err_estimate &&
           a.converged == b.converged && a.residuals == b.residuals && a.wall_ms == b.wall_ms &&
           a.version == b.version && a.quadrature == b.quadrature;
}

using json = nlohmann::ordered_json;

inline json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json quadrature_json(const QuadratureSpec& q)
{
    return json{{"abs_tol", q.abs_tol},
                {"rel_tol", q.rel_tol},
                {"max_levels", q.max_levels},
                {"series_tail_tol", q.series_tail_tol},
                {"max_terms", q.max_terms}};
}

inline json to_json(const ResultRecord& r)
{
    json in = json::object();
    for (const auto& [k, v] : r.input) {
        if (auto s = std::get_if<std::string>(&v)) in[k] = *s;
        else if (auto d = std::get_if<double>(&v)) in[k] = *d;
        else in[k] = complex_json(std::get<Complex>(v));
    }
    json j;
    j["input"] = std::move(in);
    j["value"] = complex_json(r.value);
    j["err_estimate"] = r.err_estimate;
    j["converged"] = r.converged;
    if (!r.residuals.empty()) {
        json res = json::object();
        for (const auto& [k, v] : r.residuals) res[k] = v;
        j["residuals"] = std::move(res);
    }
    json meta;
    meta["version"] = r.version;
    if (r.wall_ms) meta["wall_ms"] = *r.wall_ms;
    meta["quadrature"] = quadrature_json(r.quadrature);
    j["meta"] = std::move(meta);
    return j;
}

inline Complex complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

inline ResultRecord from_json(const json& j)
{
    ResultRecord r;
    for (const auto& [k, v] : j.at("input").items()) {
        if (v.is_string()) r.input.emplace_back(k, v.get<std::string>());
        else if (v.is_object()) r.input.emplace_back(k, complex_from_json(v));
        else r.input.emplace_back(k, v.get<double>());
    }
    r.value = complex_from_json(j.at("value"));
    r.err_estimate = j.at("err_estimate").get<double>();
    r.converged = j.at("converged").get<bool>();
    if (j.contains("residuals"))
        for (const auto& [k, v] : j.at("residuals").items()) r.residuals.emplace_back(k, v.get<double>());
    const json& meta = j.at("meta");
    r.version = meta.at("version").get<std::string>();
    if (meta.contains("wall_ms")) r.wall_ms = meta.at("wall_ms").get<double>();
    const json& q = meta.at("quadrature");
    r.quadrature.abs_tol = q.at("abs_tol").get<double>();
    r.quadrature.rel_tol = q.at("rel_tol").get<double>();
    r.quadrature.max_levels = q.at("max_levels").get<int>();
    r.quadrature.series_tail_tol = q.at("series_tail_tol").get<double>();
    r.quadrature.max_terms = q.at("max_terms").get<std::int64_t>();
    return r;
}

inline std::string serialize_json(const ResultRecord& r) { return to_json(r).dump(2) + "\n"; }

inline std::string serialize_json(const std::vector<ResultRecord>& rs)
{
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

inline std::vector<ResultRecord> parse_json(const std::string& text)
{
    json j = json::parse(text);
    std::vector<ResultRecord> out;
    if (j.is_array())
        for (const auto& e : j) out.push_back(from_json(e));
    else
        out.push_back(from_json(j));
    return out;
}

// CSV: one column per real input ("in:x"), two per complex input ("in:s.re", "in:s.im"),
// one per residual ("res:rel"), then the fixed value / meta columns.
namespace detail {

inline std::vector<std::string> csv_columns(const std::vector<ResultRecord>& rs)
{
    std::vector<std::string> cols;
    auto add = [&cols](const std::string& c) {
        for (const auto& e : cols)
            if (e == c) return;
        cols.push_back(c);
    };
    for (const auto& r : rs)
        for (const auto& [k, v] : r.input) {
            if (std::holds_alternative<Complex>(v)) {
                add("in:" + k + ".re");
                add("in:" + k + ".im");
            } else {
                add("in:" + k);
            }
        }
    for (const char* c : {"value.re", "value.im", "err_estimate", "converged"}) add(c);
    for (const auto& r : rs)
        for (const auto& [k, v] : r.residuals) add("res:" + k);
    bool timed = false;
    for (const auto& r : rs) timed = timed || r.wall_ms.has_value();
    if (timed) add("wall_ms");
    for (const char* c : {"version", "abs_tol", "rel_tol", "max_levels", "series_tail_tol", "max_terms"}) add(c);
    return cols;
}

inline std::string csv_cell(const ResultRecord& r, const std::string& col)
{
    if (col.rfind("in:", 0) == 0) {
        std::string key = col.substr(3);
        for (const auto& [k, v] : r.input) {
            if (auto s = std::get_if<std::string>(&v); s && k == key) return *s;
            if (auto d = std::get_if<double>(&v); d && k == key) return format_real(*d);
            if (auto z = std::get_if<Complex>(&v)) {
                if (key == k + ".re") return format_real(z->real());
                if (key == k + ".im") return format_real(z->imag());
            }
        }
        return "";
    }
    if (col.rfind("res:", 0) == 0) {
        auto v = r.residual(col.substr(4));
        return v ? format_real(*v) : "";
    }
    if (col == "value.re") return format_real(r.value.real());
    if (col == "value.im") return format_real(r.value.imag());
    if (col == "err_estimate") return format_real(r.err_estimate);
    if (col == "converged") return r.converged ? "true" : "false";
    if (col == "wall_ms") return r.wall_ms ? format_real(*r.wall_ms) : "";
    if (col == "version") return r.version;
    if (col == "abs_tol") return format_real(r.quadrature.abs_tol);
    if (col == "rel_tol") return format_real(r.quadrature.rel_tol);
    if (col == "max_levels") return std::to_string(r.quadrature.max_levels);
    if (col == "series_tail_tol") return format_real(r.quadrature.series_tail_tol);
    if (col == "max_terms") return std::to_string(r.quadrature.max_terms);
    return "";
}

inline std::string join(const std::vector<std::string>& cells)
{
    std::string line;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) line += ',';
        line += cells[k];
    }
    return line;
}

inline bool looks_numeric(const std::string& s)
{
    try {
        parse_real(s, "");
        return true;
    } catch (const UsageError&) {
        return false;
    }
}

} // namespace detail

inline std::string serialize_csv(const std::vector<ResultRecord>& rs)
{
    auto cols = detail::csv_columns(rs);
    std::string out = detail::join(cols) + "\n";
    for (const auto& r : rs) {
        std::vector<std::string> cells;
        for (const auto& c : cols) cells.push_back(detail::csv_cell(r, c));
        out += detail::join(cells) + "\n";
    }
    return out;
}

inline std::vector<ResultRecord> parse_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw UsageError("csv: missing header row");
    auto cols = split(line, ',');
    std::vector<ResultRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != cols.size()) throw UsageError("csv: row width does not match header");
        ResultRecord r;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const std::string& c = cols[k];
            const std::string& v = cells[k];
            if (c.rfind("in:", 0) == 0) {
                if (v.empty()) continue;
                std::string key = c.substr(3);
                auto tail = key.size() > 3 ? key.substr(key.size() - 3) : std::string();
                if (tail == ".re" || tail == ".im") {
                    std::string base = key.substr(0, key.size() - 3);
                    double d = parse_real(v, c);
                    Complex* z = nullptr;
                    for (auto& [ik, iv] : r.input)
                        if (ik == base) z = std::get_if<Complex>(&iv);
                    if (!z) {
                        r.input.emplace_back(base, Complex{});
                        z = std::get_if<Complex>(&r.input.back().second);
                    }
                    if (tail == ".re") z->real(d);
                    else z->imag(d);
                } else if (detail::looks_numeric(v)) {
                    r.input.emplace_back(key, parse_real(v, c));
                } else {
                    r.input.emplace_back(key, v);
                }
            } else if (c.rfind("res:", 0) == 0) {
                if (!v.empty()) r.residuals.emplace_back(c.substr(4), parse_real(v, c));
            } else if (c == "value.re") r.value.real(parse_real(v, c));
            else if (c == "value.im") r.value.imag(parse_real(v, c));
            else if (c == "err_estimate") r.err_estimate = parse_real(v, c);
            else if (c == "converged") r.converged = v == "true";
            else if (c == "wall_ms") {
                if (!v.empty()) r.wall_ms = parse_real(v, c);
            } else if (c == "version") r.version = v;
            else if (c == "abs_tol") r.quadrature.abs_tol = parse_real(v, c);
            else if (c == "rel_tol") r.quadrature.rel_tol = parse_real(v, c);
            else if (c == "max_levels") r.quadrature.max_levels = int(parse_real(v, c));
            else if (c == "series_tail_tol") r.quadrature.series_tail_tol = parse_real(v, c);
            else if (c == "max_terms") r.quadrature.max_terms = std::int64_t(parse_real(v, c));
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace zetalab::cli
