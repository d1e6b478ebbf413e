#include "numsg/sampling.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace numsg {

namespace {
constexpr int kMaxAttempts = 100'000;
}

SemigroupSampler::SemigroupSampler(std::uint64_t seed, std::int64_t m_min, std::int64_t m_max, std::int64_t d_max)
    : engine_(seed), m_min_(m_min), m_max_(m_max), d_max_(d_max) {
    if (m_min < 2 || m_max < m_min) throw std::invalid_argument("embedding dimension range must satisfy 2 <= min <= max");
    if (d_max - 1 < m_max) {
        throw std::invalid_argument("d_max = " + std::to_string(d_max) + " leaves fewer than " +
                                    std::to_string(m_max) + " candidates in [2, d_max]");
    }
}

std::int64_t SemigroupSampler::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

NumericalSemigroup SemigroupSampler::next(const Limits& limits) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const std::int64_t m = uniform(m_min_, m_max_);
        std::vector<std::int64_t> gens;
        while (static_cast<std::int64_t>(gens.size()) < m) {
            std::int64_t d = uniform(2, d_max_);
            if (std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(d);
        }
        try {
            return reduce_basis(gens, limits).semigroup;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::GcdNotOne) throw;
        }
    }
    throw Error(ErrorCode::InvalidGenerator, "no semigroup with gcd 1 found after " + std::to_string(kMaxAttempts) +
                                                 " draws");
}

}  // namespace numsg
