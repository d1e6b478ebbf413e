#include "numsg/hilbert.hpp"

#include <numeric>

namespace numsg {

namespace {

[[noreturn]] void fail(const NumericalSemigroup& s, const std::string& relation) {
    throw Error(ErrorCode::ConsistencyFailure, s.to_string() + ": " + relation);
}

void check_degree_cap(std::int64_t bound, const Limits& limits) {
    if (bound > limits.max_degree) {
        throw Error(ErrorCode::ResourceLimit, "series degree " + std::to_string(bound) +
                                                  " exceeds the enumeration cap of " +
                                                  std::to_string(limits.max_degree));
    }
}

IntPolynomial p_from_apery(const AperySet& apery, std::int64_t frobenius) {
    IntPolynomial p;
    for (std::int64_t s = 0; s < frobenius; ++s) {
        if (!apery.contains(s)) continue;
        p.add_term(s, 1);
        p.add_term(s + 1, -1);
    }
    p.add_term(frobenius + 1, 1);
    return p;
}

std::int64_t generator_sum(const NumericalSemigroup& s) {
    const auto& g = s.generators();
    return std::accumulate(g.begin(), g.end(), std::int64_t{0});
}

}  // namespace

IntPolynomial p_polynomial(const NumericalSemigroup& s, const Limits& limits) {
    auto apery = apery_set(s, limits);
    const std::int64_t g = apery.frobenius();
    check_degree_cap(g + 1, limits);
    return p_from_apery(apery, g);
}

IntPolynomial k_polynomial(const NumericalSemigroup& s, const AperySet& apery) {
    IntPolynomial k;
    for (std::int64_t w : apery.elements()) k.add_term(w, 1);
    for (std::size_t i = 1; i < s.size(); ++i) k *= one_minus_power(s.generators()[i]);
    return k;
}

IntPolynomial k_polynomial(const NumericalSemigroup& s, const Limits& limits) {
    return k_polynomial(s, apery_set(s, limits));
}

IntPolynomial truncated_hilbert(const NumericalSemigroup& s, std::int64_t bound, const Limits& limits) {
    if (bound < 0) throw std::invalid_argument("truncation bound must be nonnegative");
    check_degree_cap(bound, limits);
    auto apery = apery_set(s, limits);
    IntPolynomial h;
    for (std::int64_t x = 0; x <= bound; ++x)
        if (apery.contains(x)) h.add_term(x, 1);
    return h;
}

IntPolynomial generator_denominator(const NumericalSemigroup& s) {
    IntPolynomial den(1);
    for (std::int64_t d : s.generators()) den *= one_minus_power(d);
    return den;
}

HilbertData consistency_check(const NumericalSemigroup& s, const Limits& limits) {
    const auto apery = apery_set(s, limits);
    HilbertData out;
    out.profile = profile(apery, limits);
    const std::int64_t g = out.profile.frobenius;
    const std::int64_t c = out.profile.conductor;
    const std::int64_t sum_d = generator_sum(s);
    const std::size_t m = s.size();
    out.truncation_bound = c + sum_d;
    check_degree_cap(out.truncation_bound, limits);

    // Route 1: p from the sweep below g. Route 2: k from the Apéry set.
    out.p_poly = p_from_apery(apery, g);
    out.k_poly = k_polynomial(s, apery);
    const IntPolynomial& p = out.p_poly;
    const IntPolynomial& k = out.k_poly;
    const IntPolynomial one_minus_z = one_minus_power(1);

    if (k * one_minus_z != p * generator_denominator(s)) fail(s, "k (1 - z) != p prod (1 - z^d_i)");
    if (p(1) != 1) fail(s, "p(1) != 1");
    if (p.degree() != c) fail(s, "deg p != conductor");
    if (m >= 2) {
        if (k.degree() != g + sum_d) fail(s, "deg k != g + sum d_i");
        if (k(1) != 0) fail(s, "k(1) != 0");
    } else if (k != IntPolynomial(1) || p != IntPolynomial(1)) {
        fail(s, "p = k = 1 expected for S = N");
    }

    // prod (1 + ... + z^{d-1}) (1 - z)^{m-1} p, each geometric factor applied
    // as multiplication by (1 - z^d) followed by exact division by (1 - z).
    IntPolynomial rhs = p;
    for (std::int64_t d : s.generators()) rhs = div_exact(rhs * one_minus_power(d), one_minus_z);
    for (std::size_t i = 1; i < m; ++i) rhs *= one_minus_z;
    if (rhs != k) fail(s, "k != prod (1 + ... + z^{d_i - 1}) (1 - z)^{m-1} p");

    IntPolynomial cofactor = k;
    try {
        for (std::size_t i = 1; i < m; ++i) cofactor = div_exact(cofactor, one_minus_z);
    } catch (const Error&) {
        fail(s, "(1 - z)^{m-1} does not divide k");
    }
    Integer product = 1;
    for (std::int64_t d : s.generators()) product *= Integer(static_cast<long>(d));
    if (cofactor(1) != product) fail(s, "k / (1 - z)^{m-1} at z = 1 != prod d_i");

    out.truncated_series = truncated_hilbert(s, out.truncation_bound, limits);
    auto expansion = series_over_binomials(k, s.generators(), out.truncation_bound);
    if (from_dense(expansion) != out.truncated_series) {
        fail(s, "k / prod (1 - z^d_i) disagrees with H(S; z) below degree " + std::to_string(out.truncation_bound));
    }
    return out;
}

}  // namespace numsg
