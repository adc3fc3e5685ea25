#include "hacoh/abelian.hpp"

#include <algorithm>
#include <map>

#include "hacoh/error.hpp"

namespace hacoh {

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
    // prime -> exponents of the primary components
    std::map<std::int64_t, std::vector<int>> primary;
    for (std::int64_t n : orders) {
        require(n >= 1, ErrorCode::ValidationError, "cyclic order must be positive (got " + std::to_string(n) + ")");
        for (std::int64_t p = 2; p * p <= n; ++p) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e > 0) primary[p].push_back(e);
        }
        if (n > 1) primary[n].push_back(1);
    }
    std::size_t rank = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end());
        rank = std::max(rank, exps.size());
    }
    FiniteAbelianGroup g;
    g.factors_.assign(rank, 1);
    for (const auto& [p, exps] : primary) {
        // right-align so the largest primary parts land in the last factor
        std::size_t offset = rank - exps.size();
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (int k = 0; k < exps[i]; ++k) g.factors_[offset + i] *= p;
    }
    return g;
}

std::int64_t FiniteAbelianGroup::order() const noexcept {
    std::int64_t n = 1;
    for (auto d : factors_) n *= d;
    return n;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(factors_[i]);
    }
    return s;
}

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::InfiniteField: return "InfiniteField";
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::CharMismatch: return "CharMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::NotACocycle: return "NotACocycle";
        case ErrorCode::ComponentConditionFailed: return "ComponentConditionFailed";
        case ErrorCode::NotGroupAlgebra: return "NotGroupAlgebra";
        case ErrorCode::NotMeasuring: return "NotMeasuring";
        case ErrorCode::EnumerationInfeasible: return "EnumerationInfeasible";
        case ErrorCode::ActionInvalid: return "ActionInvalid";
        case ErrorCode::ActionNotTrivial: return "ActionNotTrivial";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::InvalidWitness: return "InvalidWitness";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::UnitNotBasis: return "UnitNotBasis";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace hacoh
