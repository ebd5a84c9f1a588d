#include "heegner1/cache.hpp"

#include "heegner1/errors.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace heegner1 {

namespace {

size_t digitsFor(long precBits) {
    // ceil(precBits * log10(2)) plus slack
    return static_cast<size_t>(precBits * 302 / 1000) + 4;
}

} // namespace

std::string cacheFileName(const CacheKey& key) {
    std::ostringstream out;
    out << "point_D" << key.D << "_N" << key.N << "_c" << key.c << "_a" << key.a
        << "_B" << key.precBits << ".json";
    return out.str();
}

std::optional<EvaluatedPoint> cacheLoad(const std::string& cacheDir, const CacheKey& key) {
    std::filesystem::path path = std::filesystem::path(cacheDir) / cacheFileName(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("D").get<long>() != key.D || j.at("N").get<long>() != key.N ||
            j.at("c").at("key").get<long>() != key.c)
            throw CorruptCache("cache entry does not match its key");
    } catch (const CorruptCache&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptCache(std::string("malformed cache entry: ") + e.what());
    }
    try {
        long prec = j.at("precBits").get<long>();
        if (prec != key.precBits || j.at("a").get<long>() != key.a)
            throw CorruptCache("cache entry does not match its key");
        EvaluatedPoint pt;
        pt.precBits = prec;
        pt.tau = j.at("tauDesc").get<std::string>();
        long errExp = j.at("errExp").get<long>();
        long bits = prec + 48;
        pt.b = BigComplex(Real::parse(j.at("b").at("re").get<std::string>(), bits),
                          Real::parse(j.at("b").at("im").get<std::string>(), bits), errExp);
        pt.c = BigComplex(Real::parse(j.at("c").at("re").get<std::string>(), bits),
                          Real::parse(j.at("c").at("im").get<std::string>(), bits), errExp);
        pt.spec = CMPointSpec{key.D, key.c, key.a, key.N};
        return pt;
    } catch (const CorruptCache&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptCache(std::string("malformed cache entry: ") + e.what());
    }
}

void cacheStore(const std::string& cacheDir, const EvaluatedPoint& point) {
    if (!point.spec) throw CorruptCache("point has no CM specification to key on");
    const CMPointSpec& s = *point.spec;
    std::filesystem::create_directories(cacheDir);
    CacheKey key{s.D, s.N, s.c, s.a, point.precBits};
    size_t digits = digitsFor(point.precBits);
    nlohmann::json j = {
        {"D", s.D},
        {"N", s.N},
        {"c", {{"key", s.c}, {"re", point.c.re().str(digits)}, {"im", point.c.im().str(digits)}}},
        {"a", s.a},
        {"tauDesc", point.tau},
        {"precBits", point.precBits},
        {"b", {{"re", point.b.re().str(digits)}, {"im", point.b.im().str(digits)}}},
        {"errExp", std::max(point.b.errExp(), point.c.errExp())},
    };
    std::ofstream out(std::filesystem::path(cacheDir) / cacheFileName(key));
    out << j.dump(2) << "\n";
}

} // namespace heegner1
