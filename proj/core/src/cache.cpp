#include "intersector/cache.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

namespace intersector {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_environment(const std::optional<fs::path>& dir) {
    if (dir) return ResultCache(*dir);
    if (const char* env = std::getenv("INTERSECTOR_CACHE"); env && *env) return ResultCache(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return ResultCache(fs::path(xdg) / "intersector");
    if (const char* home = std::getenv("HOME"); home && *home)
        return ResultCache(fs::path(home) / ".cache" / "intersector");
    return ResultCache();
}

std::optional<CacheEntry> ResultCache::get(const std::string& fingerprint) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(dir_ / (fingerprint + ".json"));
    if (!in) return std::nullopt;
    try {
        auto j = nlohmann::json::parse(in);
        CacheEntry e;
        e.fingerprint = j.at("fingerprint").get<std::string>();
        e.method = j.at("method").get<std::string>();
        e.value = j.at("value").get<std::string>();
        e.engine_version = j.at("engine_version").get<std::string>();
        e.timestamp = j.at("timestamp").get<long long>();
        if (e.fingerprint != fingerprint || e.engine_version != kEngineVersion) return std::nullopt;
        return e;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool ResultCache::put(const CacheEntry& entry) const {
    if (!enabled()) return false;
    static std::atomic<unsigned long> counter{0};
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return false;
    nlohmann::json j{{"fingerprint", entry.fingerprint},
                     {"method", entry.method},
                     {"value", entry.value},
                     {"engine_version", entry.engine_version},
                     {"timestamp", entry.timestamp ? entry.timestamp
                                                   : std::chrono::duration_cast<std::chrono::seconds>(
                                                         std::chrono::system_clock::now().time_since_epoch())
                                                         .count()}};
    std::ostringstream name;
    name << entry.fingerprint << ".json.tmp." << ::getpid() << '.' << counter++ << '.' << std::random_device{}();
    const fs::path tmp = dir_ / name.str();
    {
        std::ofstream out(tmp);
        if (!out) return false;
        out << j.dump();
        if (!out.flush()) {
            fs::remove(tmp, ec);
            return false;
        }
    }
    fs::rename(tmp, dir_ / (entry.fingerprint + ".json"), ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

}  // namespace intersector
