#include "symfano/errors.hpp"

namespace symfano {

std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroSpan: return "ZeroSpan";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::LinearlyDependent: return "LinearlyDependent";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::PrecondViolation: return "PrecondViolation";
    case Errc::BadIndex: return "BadIndex";
    case Errc::Incomplete: return "Incomplete";
    case Errc::NotPrimitiveCollection: return "NotPrimitiveCollection";
    case Errc::NonIntegralCoefficients: return "NonIntegralCoefficients";
    case Errc::ZeroCycle: return "ZeroCycle";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NoPairs: return "NoPairs";
    case Errc::NotFano: return "NotFano";
    case Errc::StructureViolation: return "StructureViolation";
    case Errc::NonPrimitiveProjection: return "NonPrimitiveProjection";
    case Errc::NoSymmetricStructure: return "NoSymmetricStructure";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::BadDimension: return "BadDimension";
    case Errc::DimTooLarge: return "DimTooLarge";
    case Errc::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace symfano
