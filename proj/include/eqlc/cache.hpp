#pragma once

#include <filesystem>
#include <string>

namespace eqlc {

// Process-wide cache settings.  The CLI wires --cache-dir / EQLC_CACHE_DIR
// here before doing any work; tests point it at temp dirs or disable it.
struct CacheConfig {
    std::filesystem::path dir;
    bool disk_enabled = false;
};

CacheConfig& cache_config();

// Resolves dir from the environment (EQLC_CACHE_DIR) or the given override
// and enables the disk cache.
void init_cache(const std::string& dir_override);

// Atomic publication: writes to a temporary then renames into place.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace eqlc
