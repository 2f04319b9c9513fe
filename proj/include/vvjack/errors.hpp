#pragma once

#include <stdexcept>
#include <string>

namespace vvjack {

/// Base of every error raised by the library. `code()` is the stable
/// machine-readable name used in structured CLI error records.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define VVJACK_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

VVJACK_DEFINE_ERROR(InvalidArgument);
VVJACK_DEFINE_ERROR(InvalidShape);
VVJACK_DEFINE_ERROR(IndexOutOfRange);
VVJACK_DEFINE_ERROR(NegativeEntry);
VVJACK_DEFINE_ERROR(NotGraded);
VVJACK_DEFINE_ERROR(BadSupport);
VVJACK_DEFINE_ERROR(LaurentInput);
VVJACK_DEFINE_ERROR(SpectralCollision);
VVJACK_DEFINE_ERROR(NotYetComputable);
VVJACK_DEFINE_ERROR(SingularPoint);
VVJACK_DEFINE_ERROR(PathNearSingular);
VVJACK_DEFINE_ERROR(FormatError);

#undef VVJACK_DEFINE_ERROR

/// Raised when kappa hits a pole of the coefficient recurrence. The witness
/// is recorded as numerator/denominator text so callers can report it
/// without pulling in the rational type.
class PoleExcluded : public Error {
public:
    PoleExcluded(const std::string& what, std::string kappa, std::string witness)
        : Error("PoleExcluded", what), kappa_(std::move(kappa)), witness_(std::move(witness)) {}

    const std::string& kappa() const noexcept { return kappa_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string kappa_;
    std::string witness_;
};

}  // namespace vvjack
