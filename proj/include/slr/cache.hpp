#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "slr/lr.hpp"

namespace slr {

inline constexpr int kCacheVersion = 1;

inline std::string cache_key(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu) {
    return lambda.str() + "|" + mu.str() + "|" + nu.str();
}

// Coefficients keyed by "λ|μ|ν" in a JSON document with a "version" field.
// A missing file, unreadable file or different version starts empty.
class CoefficientCache {
public:
    CoefficientCache() = default;
    explicit CoefficientCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

    static std::optional<std::filesystem::path> path_from_env() {
        if (const char* p = std::getenv("SLR_CACHE"); p && *p) return std::filesystem::path(p);
        return std::nullopt;
    }

    std::optional<std::uint64_t> get(const std::string& key) const {
        std::lock_guard lock(mu_);
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void put(const std::string& key, std::uint64_t value) {
        std::lock_guard lock(mu_);
        entries_[key] = value;
        dirty_ = true;
    }

    std::size_t size() const {
        std::lock_guard lock(mu_);
        return entries_.size();
    }

    void save() {
        std::lock_guard lock(mu_);
        if (path_.empty() || !dirty_) return;
        nlohmann::json j = nlohmann::json::object();
        j["version"] = kCacheVersion;
        for (const auto& [k, v] : entries_) j[k] = v;
        auto tmp = path_;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump(1) << "\n";
        }
        std::filesystem::rename(tmp, path_);
        dirty_ = false;
    }

private:
    void load() {
        std::ifstream in(path_);
        if (!in) return;
        nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object() || j.value("version", -1) != kCacheVersion) return;
        for (const auto& [k, v] : j.items())
            if (k != "version" && v.is_number_unsigned()) entries_[k] = v.get<std::uint64_t>();
    }

    std::filesystem::path path_;
    std::map<std::string, std::uint64_t> entries_;
    mutable std::mutex mu_;
    bool dirty_ = false;
};

// b^ν_{λ,μ}; structural zeros are not cached.
inline std::uint64_t coefficient(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                                 CoefficientCache* cache = nullptr) {
    if (lambda.size() + mu.size() != nu.size() || !nu.contains(mu) || !nu.contains(lambda)) return 0;
    const std::string key = cache_key(lambda, mu, nu);
    if (cache)
        if (auto hit = cache->get(key)) return *hit;
    std::uint64_t b = coefficient_uncached(lambda, mu, nu);
    if (cache) cache->put(key, b);
    return b;
}

// Nonzero coefficients of P_λ P_μ, ν lexicographically descending.
inline std::map<StrictPartition, std::uint64_t, std::greater<>> expand_product(const StrictPartition& lambda,
                                                                               const StrictPartition& mu,
                                                                               CoefficientCache* cache = nullptr) {
    std::map<StrictPartition, std::uint64_t, std::greater<>> out;
    for (const auto& nu : strict_partitions_of(lambda.size() + mu.size()))
        if (auto b = coefficient(lambda, mu, nu, cache)) out[nu] = b;
    return out;
}

}  // namespace slr
