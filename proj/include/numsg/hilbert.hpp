#pragma once

#include <cstdint>

#include "numsg/polynomial.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// Hilbert-series data of a semigroup, every relation between the two
/// numerators already checked by consistency_check.
struct HilbertData {
    /// Numerator over (1 - z).
    IntPolynomial p_poly;
    /// Numerator over prod (1 - z^{d_i}); coefficient of z^j is sum_i (-1)^i beta_{i,j}.
    IntPolynomial k_poly;
    SemigroupProfile profile;
    /// H(S; z) truncated at degree truncation_bound = c(S) + sum d_i.
    IntPolynomial truncated_series;
    std::int64_t truncation_bound = 0;
};

/// (1 - z) * sum_{s in S, s < g} z^s + z^c, built from the membership sweep below g.
IntPolynomial p_polynomial(const NumericalSemigroup& s, const Limits& limits = {});

/// (sum_{w in Ap(S, d_1)} z^w) * prod_{i >= 2} (1 - z^{d_i}).
IntPolynomial k_polynomial(const NumericalSemigroup& s, const Limits& limits = {});
IntPolynomial k_polynomial(const NumericalSemigroup& s, const AperySet& apery);

/// sum_{s in S, s <= bound} z^s
IntPolynomial truncated_hilbert(const NumericalSemigroup& s, std::int64_t bound, const Limits& limits = {});

/// prod_i (1 - z^{d_i})
IntPolynomial generator_denominator(const NumericalSemigroup& s);

/// Computes p and k independently and checks, exactly:
///   k (1 - z) = p prod (1 - z^{d_i});  p(1) = 1;  deg p = c;  deg k = g + sum d_i (m >= 2);
///   k = prod (1 + ... + z^{d_i - 1}) (1 - z)^{m-1} p;
///   k / (1 - z)^{m-1} evaluated at 1 equals prod d_i;
///   the series k / prod (1 - z^{d_i}) agrees with H(S; z) up to c + sum d_i.
/// Throws ErrorCode::ConsistencyFailure naming the first violated relation.
HilbertData consistency_check(const NumericalSemigroup& s, const Limits& limits = {});

}  // namespace numsg
