#pragma once

// Content-addressed record cache. One JSON file per key, written via temp file + rename;
// concurrent requests for the same key inside one process compute once.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "record.hpp"

namespace zetalab::cli {

class IoError : public Error {
public:
    using Error::Error;
};

inline std::uint64_t fnv1a(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Canonical text of (selector inputs, quadrature settings, version).
inline std::string cache_key_text(const std::vector<std::pair<std::string, InputValue>>& input,
                                  const QuadratureSpec& q, const std::string& version)
{
    std::string t = "v=" + version;
    for (const auto& [k, v] : input) {
        t += ";" + k + "=";
        if (auto s = std::get_if<std::string>(&v)) t += *s;
        else if (auto d = std::get_if<double>(&v)) t += format_real(*d);
        else t += format_complex(std::get<Complex>(v));
    }
    t += ";abs_tol=" + format_real(q.abs_tol) + ";rel_tol=" + format_real(q.rel_tol) +
         ";max_levels=" + std::to_string(q.max_levels) + ";series_tail_tol=" + format_real(q.series_tail_tol) +
         ";max_terms=" + std::to_string(q.max_terms);
    return t;
}

class RecordCache {
public:
    explicit RecordCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir))
    {
        if (!dir_) return;
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        if (ec || !std::filesystem::is_directory(*dir_))
            throw IoError("cache: cannot create directory " + dir_->string());
    }

    bool enabled() const { return dir_.has_value(); }

    ResultRecord get_or_compute(const std::string& key_text, const std::function<ResultRecord()>& compute)
    {
        const std::string key = hex64(fnv1a(key_text));
        std::promise<ResultRecord> promise;
        std::shared_future<ResultRecord> fut;
        bool owner = false;
        {
            std::lock_guard lock(mutex_);
            auto it = inflight_.find(key);
            if (it != inflight_.end()) {
                fut = it->second;
            } else {
                fut = promise.get_future().share();
                inflight_.emplace(key, fut);
                owner = true;
            }
        }
        if (!owner) return fut.get();
        try {
            ResultRecord r;
            if (auto hit = load(key)) {
                r = *hit;
                ++hits_;
            } else {
                r = compute();
                store(key, r);
            }
            promise.set_value(r);
            return r;
        } catch (...) {
            promise.set_exception(std::current_exception());
            throw;
        }
    }

    int hits() const { return hits_; }

private:
    std::optional<ResultRecord> load(const std::string& key) const
    {
        if (!dir_) return std::nullopt;
        std::ifstream in(*dir_ / (key + ".json"), std::ios::binary);
        if (!in) return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            auto rs = parse_json(buf.str());
            if (rs.size() == 1) return rs.front();
        } catch (const std::exception&) {
        }
        return std::nullopt; // unreadable entries are recomputed and overwritten
    }

    void store(const std::string& key, const ResultRecord& r) const
    {
        if (!dir_) return;
        auto final_path = *dir_ / (key + ".json");
        std::ostringstream tag;
        tag << std::this_thread::get_id() << '.' << std::random_device{}();
        auto tmp = *dir_ / (key + ".json.tmp." + tag.str());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw IoError("cache: cannot write " + tmp.string());
            out << serialize_json(r);
            if (!out) throw IoError("cache: write failed for " + tmp.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp, final_path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw IoError("cache: cannot rename into " + final_path.string());
        }
    }

    std::optional<std::filesystem::path> dir_;
    std::mutex mutex_;
    std::map<std::string, std::shared_future<ResultRecord>> inflight_;
    std::atomic<int> hits_{0};
};

} // namespace zetalab::cli
