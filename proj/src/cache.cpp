#include "lmov/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lmov::cache {

namespace fs = std::filesystem;

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
}

std::string DiskCache::path_for(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof(name), "%016llx.json",
                  static_cast<unsigned long long>(fnv1a(key)));
    return (fs::path(dir_) / name).string();
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto j = nlohmann::json::parse(buf.str());
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        return j.at("value").get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt or partial entry: treat as a miss
    }
}

void DiskCache::put(const std::string& key, const std::string& value) const {
    nlohmann::json j;
    j["key"] = key;
    j["value"] = value;
    std::string path = path_for(key);
    std::string tmp = path + "." + std::to_string(::getpid()) + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;  // unwritable cache is a soft failure
        out << j.dump();
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) fs::remove(tmp, ec);
}

std::string default_dir() {
    if (const char* env = std::getenv("LMOV_CACHE_DIR")) return env;
    return ".lmov-cache";
}

}  // namespace lmov::cache
