#pragma once

#include <filesystem>
#include <string>

namespace permfact {
namespace cache {

/// Cache directory resolution: an explicit flag value wins, then the
/// PERMFACT_CACHE_DIR environment variable. Empty result disables caching.
std::filesystem::path resolve_dir(const std::string& flag_value);

struct LoadStats {
    bool attempted = false;
    bool loaded = false;
    int characters = 0;    // character table entries installed
    int jack_entries = 0;  // Jack expansions installed
    std::string warning;   // set when a file was present but unusable
};

/// Load the cache file from dir into the process-wide character and Jack
/// tables. A missing file or a format_version mismatch is a clean miss; a
/// corrupt file produces a warning and a cold start. Never throws.
LoadStats load(const std::filesystem::path& dir);

/// Write the process-wide tables back out, deterministically ordered so
/// identical table contents produce identical bytes. Creates the directory
/// if needed. Throws std::runtime_error when the file cannot be written.
void store(const std::filesystem::path& dir);

}  // namespace cache
}  // namespace permfact
