#include "heegner1/config.hpp"

#include "heegner1/errors.hpp"

#include <cstdlib>
#include <string>

namespace heegner1 {

namespace {

std::optional<long> envLong(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    try {
        return std::stol(v);
    } catch (const std::exception&) {
        throw InvalidConfig(std::string(name) + " is not an integer");
    }
}

} // namespace

RunConfig loadConfig(const ConfigFlags& flags) {
    RunConfig cfg;
    if (auto e = envLong("HEEGNER1_PREC_BITS")) cfg.precBits = *e;
    if (auto e = envLong("HEEGNER1_TOL_LOG2")) cfg.tolLog2 = *e;
    if (const char* d = std::getenv("HEEGNER1_CACHE_DIR"); d != nullptr && *d != '\0') cfg.cacheDir = d;

    if (flags.precBits) cfg.precBits = *flags.precBits;
    if (flags.tolLog2) cfg.tolLog2 = *flags.tolLog2;
    if (flags.cacheDir) cfg.cacheDir = *flags.cacheDir;
    if (flags.outputFormat) cfg.outputFormat = *flags.outputFormat;

    if (cfg.precBits < 64) throw InvalidConfig("precBits must be at least 64");
    if (cfg.tolLog2 >= -16) throw InvalidConfig("tolLog2 must be below -16");
    if (cfg.outputFormat != "json" && cfg.outputFormat != "text")
        throw InvalidConfig("outputFormat must be json or text");
    return cfg;
}

} // namespace heegner1
