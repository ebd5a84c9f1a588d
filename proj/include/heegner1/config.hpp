#ifndef HEEGNER1_CONFIG_HPP
#define HEEGNER1_CONFIG_HPP

#include <optional>
#include <string>

namespace heegner1 {

struct RunConfig {
    long precBits = 300;
    long tolLog2 = -100;
    std::string cacheDir;
    std::string outputFormat = "json"; // json | text
};

struct ConfigFlags {
    std::optional<long> precBits;
    std::optional<long> tolLog2;
    std::optional<std::string> cacheDir;
    std::optional<std::string> outputFormat;
};

// flags override environment (HEEGNER1_PREC_BITS, HEEGNER1_TOL_LOG2,
// HEEGNER1_CACHE_DIR) override defaults
RunConfig loadConfig(const ConfigFlags& flags);

} // namespace heegner1

#endif
