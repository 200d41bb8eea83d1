#include "padic2/config.hpp"

#include <fstream>

#include "padic2/errors.hpp"

namespace padic2 {

Config Config::from_file(const std::string& path) {
    Config cfg;
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (key == "precision_bits")
            cfg.precision_bits = std::stol(val);
        else if (key == "series_degree")
            cfg.series_degree = std::stol(val);
        else if (key == "n_max")
            cfg.n_max = std::stol(val);
        else if (key == "cache_dir")
            cfg.cache_dir = val;
        else if (key == "k_min")
            cfg.k_min = std::stol(val);
        else if (key == "k_max")
            cfg.k_max = std::stol(val);
        else if (key == "seed")
            cfg.seed = std::stoul(val);
        else
            throw DomainError("config: unknown key " + key);
    }
    return cfg;
}

void Config::validate() const {
    if (precision_bits < 64) throw DomainError("config: precision_bits too small");
    if (series_degree < 8) throw DomainError("config: series_degree too small");
    if (n_max < 1) throw DomainError("config: n_max must be positive");
    if (k_min > k_max) throw DomainError("config: empty k range");
}

std::string Config::hurwitz_cache_path() const {
    return cache_dir + "/hurwitz.jsonl";
}

std::string Config::table_cache_path(long n, long precision, long degree) const {
    return cache_dir + "/table_n" + std::to_string(n) + "_p" + std::to_string(precision) +
           "_d" + std::to_string(degree) + ".json";
}

}  // namespace padic2
