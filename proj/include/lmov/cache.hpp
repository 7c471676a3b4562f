#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lmov::cache {

uint64_t fnv1a(std::string_view s);

// One file per key under dir, written atomically via rename. Each file stores
// the full key next to the value, so hash collisions and truncated writes are
// detected and treated as misses.
class DiskCache {
public:
    explicit DiskCache(std::string dir);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

    const std::string& dir() const { return dir_; }

private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

// LMOV_CACHE_DIR if set, otherwise .lmov-cache under the working directory.
std::string default_dir();

}  // namespace lmov::cache
