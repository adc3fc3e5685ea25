#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hacoh {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    InvalidField,
    DimensionMismatch,
    NotAGroup,
    CharMismatch,
    NotInvertible,
    DegreeUnsupported,
    SearchBudgetExceeded,
    NotACocycle,
    ComponentConditionFailed,
    NotGroupAlgebra,
    NotMeasuring,
    EnumerationInfeasible,
    ActionInvalid,
    ActionNotTrivial,
    NotNormalized,
    InvalidWitness,
    ShapeMismatch,
    NotASubgroup,
    UnitNotBasis,
    ParseError,
    ValidationError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) throw Error(code, what);
}

}  // namespace hacoh
