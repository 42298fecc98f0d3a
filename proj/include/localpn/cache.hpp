#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "localpn/report.hpp"

namespace localpn {

// convention version folded into every cache key; bump when the I-function
// or normalization conventions change so stale entries never resurface
inline constexpr const char* kConventionTag = "iconv-k0-mirrorq-v1";

uint64_t fnv1a64(const std::string& s);

/*
 * Content-addressed JSON blob store: key string -> <dir>/<fnv1a64(key)>.json.
 * A corrupt or unreadable entry is treated as a miss (with a warning on
 * stderr); the caller recomputes and overwrites.
 */
class CacheStore {
public:
    CacheStore() = default; // disabled
    explicit CacheStore(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<Json> load(const std::string& key) const;
    void store(const std::string& key, const Json& value) const;
    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

} // namespace localpn
