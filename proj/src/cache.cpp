#include "eqlc/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "eqlc/errors.hpp"

namespace eqlc {

CacheConfig& cache_config() {
    static CacheConfig cfg;
    return cfg;
}

void init_cache(const std::string& dir_override) {
    auto& cfg = cache_config();
    if (!dir_override.empty()) {
        cfg.dir = dir_override;
    } else if (const char* env = std::getenv("EQLC_CACHE_DIR")) {
        cfg.dir = env;
    } else {
        cfg.dir = std::filesystem::path(".eqlc-cache");
    }
    std::filesystem::create_directories(cfg.dir);
    cfg.disk_enabled = true;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace eqlc
