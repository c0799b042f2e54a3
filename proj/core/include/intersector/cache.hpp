#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace intersector {

inline constexpr const char* kEngineVersion = "0.1.0";

struct CacheEntry {
    std::string fingerprint;
    std::string method;
    std::string value;
    std::string engine_version = kEngineVersion;
    long long timestamp = 0;  // seconds since the epoch
};

/// On-disk store of results, one JSON file per fingerprint. Failures to read
/// or write are reported by return value and never thrown.
class ResultCache {
public:
    /// Disabled cache.
    ResultCache() = default;
    explicit ResultCache(std::filesystem::path dir);

    /// Explicit directory, else $INTERSECTOR_CACHE, else ~/.cache/intersector.
    static ResultCache from_environment(const std::optional<std::filesystem::path>& dir);

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& directory() const { return dir_; }

    std::optional<CacheEntry> get(const std::string& fingerprint) const;
    /// Atomic: writes a temporary file in the same directory and renames it.
    bool put(const CacheEntry& entry) const;

private:
    std::filesystem::path dir_;
};

}  // namespace intersector
