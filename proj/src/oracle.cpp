#include "numsg/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace numsg::oracle {

std::vector<std::int64_t> EnumeratedSemigroup::members() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x <= bound; ++x)
        if (membership[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

EnumeratedSemigroup enumerate(const NumericalSemigroup& s, std::int64_t bound, const Limits& limits) {
    if (bound < 0) throw std::invalid_argument("enumeration bound must be nonnegative");
    if (bound > limits.max_degree) {
        throw Error(ErrorCode::ResourceLimit, "enumeration bound " + std::to_string(bound) + " exceeds the cap of " +
                                                  std::to_string(limits.max_degree));
    }
    EnumeratedSemigroup out;
    out.bound = bound;
    out.membership.assign(static_cast<std::size_t>(bound + 1), false);
    out.membership[0] = true;
    for (std::int64_t x = 1; x <= bound; ++x) {
        for (std::int64_t d : s.generators()) {
            if (d <= x && out.membership[static_cast<std::size_t>(x - d)]) {
                out.membership[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    return out;
}

std::vector<std::int64_t> oracle_gaps(const NumericalSemigroup& s, std::int64_t bound, const Limits& limits) {
    auto table = enumerate(s, bound, limits);
    std::vector<std::int64_t> gaps;
    for (std::int64_t x = 0; x <= bound; ++x)
        if (!table.contains(x)) gaps.push_back(x);
    return gaps;
}

std::int64_t oracle_frobenius(const NumericalSemigroup& s, const Limits& limits) {
    const std::int64_t d1 = s.generators().front();
    const std::int64_t bound = d1 * s.generators().back();
    auto table = enumerate(s, bound, limits);
    std::int64_t run = 0;
    std::int64_t last_gap = -1;
    for (std::int64_t x = 0; x <= bound; ++x) {
        if (table.contains(x)) {
            if (++run == d1) return last_gap;
        } else {
            run = 0;
            last_gap = x;
        }
    }
    throw Error(ErrorCode::ConsistencyFailure,
                "no run of " + std::to_string(d1) + " consecutive members below " + std::to_string(bound));
}

IntPolynomial oracle_k_polynomial(const NumericalSemigroup& s, const Limits& limits) {
    const auto& gens = s.generators();
    const std::int64_t sum_d = std::accumulate(gens.begin(), gens.end(), std::int64_t{0});
    const std::int64_t frobenius = oracle_frobenius(s, limits);
    const std::int64_t top = frobenius + sum_d;
    // Coefficients of (truncated series) * prod (1 - z^d) are exact up to the
    // truncation degree, which sits well above the expected top degree.
    const std::int64_t bound = gens.front() * gens.back() + sum_d;
    auto table = enumerate(s, bound, limits);

    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(bound + 1));
    for (std::int64_t x = 0; x <= bound; ++x) coeffs[static_cast<std::size_t>(x)] = table.contains(x) ? 1 : 0;
    for (std::int64_t d : gens) {
        for (std::int64_t x = bound; x >= d; --x) coeffs[static_cast<std::size_t>(x)] -= coeffs[static_cast<std::size_t>(x - d)];
    }
    for (std::int64_t x = top + 1; x <= bound; ++x) {
        if (coeffs[static_cast<std::size_t>(x)] != 0) {
            throw Error(ErrorCode::ConsistencyFailure,
                        s.to_string() + ": oracle numerator has a nonzero coefficient at degree " + std::to_string(x) +
                            " above g + sum d_i = " + std::to_string(top));
        }
    }
    IntPolynomial k;
    for (std::int64_t x = 0; x <= std::min(top, bound); ++x)
        k.add_term(x, Integer(static_cast<long>(coeffs[static_cast<std::size_t>(x)])));
    return k;
}

Integer oracle_moment(const NumericalSemigroup& s, unsigned r, const Limits& limits) {
    Integer sum = 0;
    const auto k = oracle_k_polynomial(s, limits);
    for (const auto& [j, c] : k.terms()) {
        Integer power;
        Integer base(static_cast<long>(j));
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), r);
        sum += c * power;
    }
    return sum;
}

}  // namespace numsg::oracle
