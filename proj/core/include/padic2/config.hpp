#ifndef PADIC2_CONFIG_HPP
#define PADIC2_CONFIG_HPP

#include <string>

namespace padic2 {

// Flat key=value configuration; CLI flags override file entries.
struct Config {
    long precision_bits = 512;
    long series_degree = 512;
    long n_max = 5;
    std::string cache_dir = "cache";
    long k_min = 6;
    long k_max = 60;
    unsigned long seed = 20240311;

    static Config from_file(const std::string& path);
    void validate() const;  // series_degree vs precision budget consistency
    std::string hurwitz_cache_path() const;
    std::string table_cache_path(long n_max, long precision, long degree) const;
};

}  // namespace padic2

#endif
