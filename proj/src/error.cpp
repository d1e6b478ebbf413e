#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InvalidGenerator: return "InvalidGenerator";
        case ErrorCode::GcdNotOne: return "GcdNotOne";
        case ErrorCode::NonMinimalBasis: return "NonMinimalBasis";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
        case ErrorCode::InvalidBettiTable: return "InvalidBettiTable";
        case ErrorCode::BettiMismatch: return "BettiMismatch";
        case ErrorCode::IdentityViolation: return "IdentityViolation";
        case ErrorCode::InvalidQ: return "InvalidQ";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ZeroWq: return "ZeroWq";
    }
    return "Unknown";
}

}  // namespace numsg
