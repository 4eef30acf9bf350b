#ifndef EMBERRY_ERRORS_HPP
#define EMBERRY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emberry {

// Numerical failures are reported by throwing; each condition named in a
// module contract gets its own type so callers can react selectively.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPositiveDefinite : Error { using Error::Error; };
struct ResonanceSingularity : Error { using Error::Error; };
struct EvaluationOutsideDomain : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };
struct NoRootInBracket : Error { using Error::Error; };
struct EvanescentBranch : Error { using Error::Error; };
struct BandNotFound : Error { using Error::Error; };
struct DegeneratePoint : Error { using Error::Error; };
struct NonConvergent : Error { using Error::Error; };
struct PolarSingularity : Error { using Error::Error; };
struct DegeneratePath : Error { using Error::Error; };
struct BelowPlasmaFrequency : Error { using Error::Error; };
struct ImproperSheet : Error { using Error::Error; };
struct PerturbationTooLarge : Error { using Error::Error; };
struct ResolutionInsufficient : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace emberry

#endif
