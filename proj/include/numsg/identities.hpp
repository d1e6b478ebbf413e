#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numsg/cyclotomic.hpp"
#include "numsg/polynomial.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

struct BettiEntry {
    std::int64_t homological_index;  // i
    std::int64_t degree;             // j
    Integer multiplicity;            // beta_{i,j}

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Graded Betti numbers supplied from outside (the library never resolves
/// the semigroup ring itself). Validated on construction: indices and degrees
/// nonnegative, multiplicities positive, (i, j) pairs distinct and
/// beta_{0,0} = 1 present.
class BettiTable {
public:
    explicit BettiTable(std::vector<BettiEntry> entries);

    const std::vector<BettiEntry>& entries() const noexcept { return entries_; }
    std::int64_t max_homological_index() const noexcept;

    /// Parses "i j beta" triples, one per line; '#' starts a comment.
    static BettiTable parse(const std::string& text);

private:
    std::vector<BettiEntry> entries_;
};

/// (degree j, c_j) with c_j = sum_i (-1)^i beta_{i,j} != 0, sorted by degree.
class SignedDegreeSequence {
public:
    struct Term {
        std::int64_t degree;
        Integer coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    SignedDegreeSequence() = default;
    explicit SignedDegreeSequence(const IntPolynomial& k);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    IntPolynomial to_polynomial() const;
    std::string to_string() const;

    friend bool operator==(const SignedDegreeSequence&, const SignedDegreeSequence&) = default;

private:
    std::vector<Term> terms_;
};

SignedDegreeSequence signed_sequence(const NumericalSemigroup& s, const Limits& limits = {});
SignedDegreeSequence signed_sequence(const BettiTable& table);
/// Collapses the table and compares it with k(S; z) degree by degree;
/// throws ErrorCode::BettiMismatch on the first disagreement.
SignedDegreeSequence signed_sequence(const BettiTable& table, const NumericalSemigroup& s, const Limits& limits = {});

/// sum_j c_j j^r, with 0^0 = 1.
Integer moment(const SignedDegreeSequence& seq, unsigned r);

enum class CheckKind { Real, Cyclotomic };

struct IdentityCheck {
    CheckKind kind = CheckKind::Real;
    unsigned r = 0;
    std::optional<std::int64_t> q;
    std::optional<std::int64_t> n;
    /// Exact expected value: a decimal integer.
    std::string expected;
    /// Exact computed value: a decimal integer (real) or the reduced coefficient
    /// vector in the basis 1, zeta, ... (cyclotomic).
    std::string computed;
    /// Cyclotomic checks only: the coefficient vector as decimal strings.
    std::vector<std::string> computed_coeffs;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const noexcept;
    void append(const IdentityReport& other);
};

/// Raised when a proved identity fails to hold; carries a full diagnostic dump.
class IdentityViolationError : public Error {
public:
    IdentityViolationError(std::string dump, IdentityReport report)
        : Error(ErrorCode::IdentityViolation, dump), dump_(std::move(dump)), report_(std::move(report)) {}

    const std::string& dump() const noexcept { return dump_; }
    const IdentityReport& report() const noexcept { return report_; }

private:
    std::string dump_;
    IdentityReport report_;
};

/// Power-sum identities: moment r vanishes for 0 <= r <= m-2 and
/// moment m-1 equals (-1)^{m-1} (m-1)! prod d_i.
IdentityReport verify_theorem1(const NumericalSemigroup& s, const Limits& limits = {});
IdentityReport verify_theorem1(const NumericalSemigroup& s, const SignedDegreeSequence& seq);

/// Number of generators divisible by q.
std::int64_t w_count(const NumericalSemigroup& s, std::int64_t q);

/// Cyclotomic identities: sum_j c_j j^r zeta^{n j} = 0 in Z[zeta_q] for
/// 0 <= r < w_q. Requires 2 <= q <= d_m, gcd(n, q) = 1 and w_q > 0.
IdentityReport verify_theorem2(const NumericalSemigroup& s, std::int64_t q, std::int64_t n,
                               const Limits& limits = {});
IdentityReport verify_theorem2(const NumericalSemigroup& s, const SignedDegreeSequence& seq, std::int64_t q,
                               std::int64_t n);

/// Every q in [2, d_m] with w_q > 0 and every 1 <= n < q coprime to q.
/// Checks are sorted by (q, n, r).
IdentityReport verify_theorem2_all(const NumericalSemigroup& s, const Limits& limits = {});
IdentityReport verify_theorem2_all(const NumericalSemigroup& s, const SignedDegreeSequence& seq);

/// sum_j c_j j^r zeta^{n j} as an exact element of Z[zeta_q].
CyclotomicElement cyclotomic_moment(const SignedDegreeSequence& seq, const CyclotomicRing& ring, unsigned r,
                                    std::int64_t n);

}  // namespace numsg
