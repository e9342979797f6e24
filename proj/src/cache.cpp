#include "permfact/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "permfact/charalg.hpp"
#include "permfact/jack.hpp"

namespace permfact {
namespace cache {

namespace {

constexpr int format_version = 1;
constexpr const char* cache_file = "permfact-cache.json";

using ordered_json = nlohmann::ordered_json;

ordered_json poly_to_json(const Poly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

Poly poly_from_json(const ordered_json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_rat(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

ordered_json alpha_rat_to_json(const AlphaRat& f) {
    ordered_json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

AlphaRat alpha_rat_from_json(const ordered_json& j) {
    return AlphaRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace

std::filesystem::path resolve_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PERMFACT_CACHE_DIR"); env && *env) return env;
    return {};
}

LoadStats load(const std::filesystem::path& dir) {
    LoadStats stats;
    if (dir.empty()) return stats;
    stats.attempted = true;
    auto path = dir / cache_file;
    std::ifstream in(path);
    if (!in) return stats;  // no file yet: clean miss
    // Stage everything before touching the live tables: a corrupt tail must
    // not leave a half-installed preload behind.
    std::vector<std::tuple<Partition, Partition, Int>> characters;
    std::vector<std::tuple<Partition, std::map<Partition, AlphaRat>, AlphaRat>> jack_entries;
    try {
        ordered_json j = ordered_json::parse(in);
        if (!j.contains("format_version") || j.at("format_version").get<int>() != format_version)
            return stats;  // version mismatch: clean miss, file left alone
        for (const auto& entry : j.value("characters", ordered_json::array()))
            characters.emplace_back(parse_partition(entry.at("lambda").get<std::string>()),
                                    parse_partition(entry.at("theta").get<std::string>()),
                                    parse_int(entry.at("value").get<std::string>()));
        for (const auto& entry : j.value("jack", ordered_json::array())) {
            std::map<Partition, AlphaRat> expansion;
            for (const auto& term : entry.at("p"))
                expansion.emplace(parse_partition(term.at("rho").get<std::string>()),
                                  alpha_rat_from_json(term));
            jack_entries.emplace_back(parse_partition(entry.at("theta").get<std::string>()),
                                      std::move(expansion),
                                      alpha_rat_from_json(entry.at("norm")));
        }
    } catch (const std::exception& e) {
        stats.warning = std::string("cache file ignored (") + e.what() + "); starting cold";
        return stats;
    }
    for (auto& [lambda, theta, value] : characters) {
        charalg::character_table().insert(lambda, theta, value);
        ++stats.characters;
    }
    for (auto& [theta, expansion, norm_value] : jack_entries) {
        jack::jack_table().insert(theta, std::move(expansion), std::move(norm_value));
        ++stats.jack_entries;
    }
    stats.loaded = true;
    return stats;
}

void store(const std::filesystem::path& dir) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    ordered_json j;
    j["format_version"] = format_version;
    ordered_json chars = ordered_json::array();
    for (const auto& [key, value] : charalg::character_table().snapshot()) {
        ordered_json entry;
        entry["lambda"] = format_partition(key.first);
        entry["theta"] = format_partition(key.second);
        entry["value"] = to_string(value);
        chars.push_back(std::move(entry));
    }
    j["characters"] = std::move(chars);
    auto [expansions, norms] = jack::jack_table().snapshot();
    ordered_json jack_entries = ordered_json::array();
    for (const auto& [theta, expansion] : expansions) {
        auto norm_it = norms.find(theta);
        if (norm_it == norms.end()) continue;
        ordered_json entry;
        entry["theta"] = format_partition(theta);
        entry["norm"] = alpha_rat_to_json(norm_it->second);
        ordered_json terms = ordered_json::array();
        for (const auto& [rho, coeff] : expansion) {
            ordered_json term = alpha_rat_to_json(coeff);
            term.emplace("rho", format_partition(rho));
            terms.push_back(std::move(term));
        }
        entry["p"] = std::move(terms);
        jack_entries.push_back(std::move(entry));
    }
    j["jack"] = std::move(jack_entries);

    auto path = dir / cache_file;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file " + path.string());
    out << j.dump(1) << "\n";
    if (!out) throw std::runtime_error("write failed for cache file " + path.string());
}

}  // namespace cache
}  // namespace permfact
