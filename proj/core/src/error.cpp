#include "meshperm/error.hpp"

namespace meshperm {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SameIndex: return "SameIndex";
    case ErrorCode::RaggedColumns: return "RaggedColumns";
    case ErrorCode::DuplicateColumn: return "DuplicateColumn";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotProjective: return "NotProjective";
    case ErrorCode::NotHyperplane: return "NotHyperplane";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::UnrealizableSignature: return "UnrealizableSignature";
    case ErrorCode::RankInfinite: return "RankInfinite";
    case ErrorCode::LengthTooShort: return "LengthTooShort";
    case ErrorCode::SomePatternUnavoidable: return "SomePatternUnavoidable";
    case ErrorCode::HasMinusAntipodalSubset: return "HasMinusAntipodalSubset";
    case ErrorCode::BadAlphabet: return "BadAlphabet";
    case ErrorCode::MissingRequiredSymbol: return "MissingRequiredSymbol";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message)
    , code_(code)
{
}

void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace meshperm
