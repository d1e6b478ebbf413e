#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

enum class ErrorCode {
    EmptyInput,
    InvalidGenerator,
    GcdNotOne,
    NonMinimalBasis,
    ResourceLimit,
    InexactDivision,
    OrderMismatch,
    ConsistencyFailure,
    InvalidBettiTable,
    BettiMismatch,
    IdentityViolation,
    InvalidQ,
    NotCoprime,
    ZeroWq,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for everything the library reports. The code is the stable,
/// machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class NonMinimalBasisError : public Error {
public:
    NonMinimalBasisError(std::int64_t redundant, const std::string& message)
        : Error(ErrorCode::NonMinimalBasis, message), redundant_(redundant) {}

    /// First generator found to be a combination of the smaller ones.
    std::int64_t redundant() const noexcept { return redundant_; }

private:
    std::int64_t redundant_;
};

}  // namespace numsg
