#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// Apéry, Hilbert or identity code paths; they exist to be compared against.

#include <cstdint>
#include <vector>

#include "numsg/polynomial.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::oracle {

struct EnumeratedSemigroup {
    std::int64_t bound = 0;
    /// membership[x] for 0 <= x <= bound.
    std::vector<bool> membership;

    bool contains(std::int64_t x) const { return x >= 0 && x <= bound && membership[static_cast<std::size_t>(x)]; }
    std::vector<std::int64_t> members() const;
};

/// membership[x] = OR_d membership[x - d], seeded with membership[0].
EnumeratedSemigroup enumerate(const NumericalSemigroup& s, std::int64_t bound, const Limits& limits = {});

std::vector<std::int64_t> oracle_gaps(const NumericalSemigroup& s, std::int64_t bound, const Limits& limits = {});

/// Largest gap, certified by a run of d_1 consecutive members inside the
/// table of size d_1 * d_m. -1 for S = N.
std::int64_t oracle_frobenius(const NumericalSemigroup& s, const Limits& limits = {});

/// k(S; z) rebuilt from the enumerated series times prod (1 - z^{d_i}),
/// after checking that every coefficient between g + sum d_i and the
/// truncation point vanishes.
IntPolynomial oracle_k_polynomial(const NumericalSemigroup& s, const Limits& limits = {});

/// sum_j c_j j^r over oracle_k_polynomial.
Integer oracle_moment(const NumericalSemigroup& s, unsigned r, const Limits& limits = {});

}  // namespace numsg::oracle
