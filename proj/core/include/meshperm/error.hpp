#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace meshperm {

enum class ErrorCode {
    NotAPermutation,
    DimensionTooSmall,
    DimensionMismatch,
    IndexOutOfRange,
    SameIndex,
    RaggedColumns,
    DuplicateColumn,
    BadSymbol,
    ParseError,
    NotProjective,
    NotHyperplane,
    CapacityExceeded,
    UnrealizableSignature,
    RankInfinite,
    LengthTooShort,
    SomePatternUnavoidable,
    HasMinusAntipodalSubset,
    BadAlphabet,
    MissingRequiredSymbol,
    NotInImage,
    BudgetExceeded,
    UnknownCase,
    TruncationTooShort,
    NotAUnit,
    InvalidArgument,
    InternalError,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for every domain failure; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace meshperm
