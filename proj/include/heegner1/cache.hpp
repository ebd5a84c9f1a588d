#ifndef HEEGNER1_CACHE_HPP
#define HEEGNER1_CACHE_HPP

#include "heegner1/points.hpp"

namespace heegner1 {

struct CacheKey {
    long D, N, c, a;
    long precBits;
};

std::string cacheFileName(const CacheKey& key);

// returns nullopt on a missing entry; throws CorruptCache on schema mismatch
std::optional<EvaluatedPoint> cacheLoad(const std::string& cacheDir, const CacheKey& key);
void cacheStore(const std::string& cacheDir, const EvaluatedPoint& point);

} // namespace heegner1

#endif
