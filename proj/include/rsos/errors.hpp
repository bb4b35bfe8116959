#pragma once

#include <stdexcept>
#include <string>

namespace rsos {

/// Base class of every error raised by the library. The `kind()` string is
/// stable and is what the CLI prints.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RSOS_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    };

RSOS_DEFINE_ERROR(NonUnitLeadingCoefficient)
RSOS_DEFINE_ERROR(NotAFormalSquare)
RSOS_DEFINE_ERROR(DivergentProduct)
RSOS_DEFINE_ERROR(UnbalancedPrefactor)
RSOS_DEFINE_ERROR(PolarArgument)
RSOS_DEFINE_ERROR(LevelMismatch)
RSOS_DEFINE_ERROR(InadmissibleConfig)
RSOS_DEFINE_ERROR(NoValidJ)
RSOS_DEFINE_ERROR(UnsupportedFusion)
RSOS_DEFINE_ERROR(InvalidPair)
RSOS_DEFINE_ERROR(RegimeViolation)
RSOS_DEFINE_ERROR(DegreeOverflow)
RSOS_DEFINE_ERROR(EmptySpace)
RSOS_DEFINE_ERROR(InadmissiblePair)
RSOS_DEFINE_ERROR(NonUniqueSolution)
RSOS_DEFINE_ERROR(NoSolution)
RSOS_DEFINE_ERROR(InconsistentSystem)
RSOS_DEFINE_ERROR(StabilizationFailure)

#undef RSOS_DEFINE_ERROR

} // namespace rsos
