#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symfano {

enum class Errc {
    DimensionMismatch,
    ZeroSpan,
    NotSaturated,
    NotInSpan,
    LinearlyDependent,
    MalformedInput,
    PrecondViolation,
    BadIndex,
    Incomplete,
    NotPrimitiveCollection,
    NonIntegralCoefficients,
    ZeroCycle,
    NotApplicable,
    NoPairs,
    NotFano,
    StructureViolation,
    NonPrimitiveProjection,
    NoSymmetricStructure,
    InternalInconsistency,
    BadDimension,
    DimTooLarge,
    TooLarge,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (and the CLI) can map it to a verdict without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

} // namespace symfano
