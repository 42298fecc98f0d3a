#include "localpn/cache.hpp"

#include <fstream>
#include <iostream>

namespace localpn {

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path CacheStore::path_for(const std::string& key) const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key)));
    return dir_ / (std::string(buf) + ".json");
}

std::optional<Json> CacheStore::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    const auto p = path_for(key);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (!j.is_object() || j.value("cache_key", "") != key) {
            std::cerr << "warning: cache entry " << p.string() << " does not match its key; recomputing\n";
            return std::nullopt;
        }
        return j.at("value");
    } catch (const std::exception& e) {
        std::cerr << "warning: corrupt cache entry " << p.string() << " (" << e.what()
                  << "); recomputing\n";
        return std::nullopt;
    }
}

void CacheStore::store(const std::string& key, const Json& value) const {
    if (!enabled()) return;
    Json wrapper;
    wrapper["cache_key"] = key;
    wrapper["value"] = value;
    std::ofstream out(path_for(key));
    out << wrapper.dump(1) << "\n";
}

} // namespace localpn
