#ifndef HEEGNER1_ERRORS_HPP
#define HEEGNER1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heegner1 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLattice : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct PoleAtZ : Error { using Error::Error; };
struct UnsupportedN : Error { using Error::Error; };
struct DivisionFails : Error { using Error::Error; };
struct InvalidD : Error { using Error::Error; };
struct CaseMismatch : Error { using Error::Error; };
struct SingularBasis : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct MissingBetaQ : Error { using Error::Error; };
struct InvalidC : Error { using Error::Error; };
struct DegenerateLevel : Error { using Error::Error; };
struct PoleAtTorsion : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct CorruptCache : Error { using Error::Error; };

} // namespace heegner1

#endif
