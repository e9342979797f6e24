#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permfact/cache.hpp"
#include "permfact/charalg.hpp"
#include "permfact/jack.hpp"

using namespace permfact;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const char* tag) {
        path = fs::temp_directory_path() / (std::string("permfact-test-") + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("directory resolution order") {
    unsetenv("PERMFACT_CACHE_DIR");
    CHECK(cache::resolve_dir("").empty());
    setenv("PERMFACT_CACHE_DIR", "/via/env", 1);
    CHECK(cache::resolve_dir("") == fs::path("/via/env"));
    CHECK(cache::resolve_dir("/via/flag") == fs::path("/via/flag"));
    unsetenv("PERMFACT_CACHE_DIR");
}

TEST_CASE("round trip preserves both tables") {
    TempDir dir("roundtrip");
    charalg::character_table().clear();
    jack::jack_table().clear();
    charalg::character_table().warm(4);
    jack::jack_table().warm(3);
    auto chars_before = charalg::character_table().snapshot();
    auto jack_before = jack::jack_table().snapshot();
    REQUIRE(!chars_before.empty());
    REQUIRE(!jack_before.first.empty());

    cache::store(dir.path);
    charalg::character_table().clear();
    jack::jack_table().clear();
    CHECK(charalg::character_table().snapshot().empty());

    auto stats = cache::load(dir.path);
    CHECK(stats.attempted);
    CHECK(stats.loaded);
    CHECK(stats.warning.empty());
    CHECK(stats.characters == static_cast<int>(chars_before.size()));
    CHECK(stats.jack_entries == static_cast<int>(jack_before.first.size()));
    CHECK(charalg::character_table().snapshot() == chars_before);
    auto jack_after = jack::jack_table().snapshot();
    CHECK(jack_after.first == jack_before.first);
    CHECK(jack_after.second == jack_before.second);
}

TEST_CASE("identical tables produce identical bytes") {
    TempDir a("bytes-a");
    TempDir b("bytes-b");
    charalg::character_table().clear();
    jack::jack_table().clear();
    charalg::character_table().warm(3);
    jack::jack_table().warm(2);
    cache::store(a.path);
    // reload from scratch, then store again elsewhere
    charalg::character_table().clear();
    jack::jack_table().clear();
    REQUIRE(cache::load(a.path).loaded);
    cache::store(b.path);
    auto bytes_a = file_bytes(a.path / "permfact-cache.json");
    auto bytes_b = file_bytes(b.path / "permfact-cache.json");
    REQUIRE(!bytes_a.empty());
    CHECK(bytes_a == bytes_b);
}

TEST_CASE("missing file is a clean miss") {
    TempDir dir("miss");
    auto stats = cache::load(dir.path);
    CHECK(stats.attempted);
    CHECK_FALSE(stats.loaded);
    CHECK(stats.warning.empty());

    auto off = cache::load(fs::path{});
    CHECK_FALSE(off.attempted);
}

TEST_CASE("corrupt file warns and starts cold") {
    TempDir dir("corrupt");
    std::ofstream(dir.path / "permfact-cache.json") << "{ this is not json";
    auto stats = cache::load(dir.path);
    CHECK(stats.attempted);
    CHECK_FALSE(stats.loaded);
    CHECK(!stats.warning.empty());
    CHECK(stats.characters == 0);
    CHECK(stats.jack_entries == 0);
}

TEST_CASE("unknown format version is a clean miss") {
    TempDir dir("version");
    std::ofstream(dir.path / "permfact-cache.json")
        << "{\"format_version\": 2, \"characters\": [], \"jack\": []}";
    auto stats = cache::load(dir.path);
    CHECK(stats.attempted);
    CHECK_FALSE(stats.loaded);
    CHECK(stats.warning.empty());
}

TEST_CASE("bad entries inside a well-formed file roll back to cold") {
    TempDir dir("badentry");
    // the first entry is valid on its own; the second is junk. Nothing from
    // the file may reach the live table.
    std::ofstream(dir.path / "permfact-cache.json")
        << "{\"format_version\": 1, \"characters\": ["
           "{\"lambda\": \"[1]\", \"theta\": \"[1]\", \"value\": \"1\"},"
           "{\"lambda\": \"[oops]\"}]}";
    charalg::character_table().clear();
    auto stats = cache::load(dir.path);
    CHECK_FALSE(stats.loaded);
    CHECK(!stats.warning.empty());
    CHECK(stats.characters == 0);
    CHECK(charalg::character_table().snapshot().empty());
}

}  // TEST_SUITE
