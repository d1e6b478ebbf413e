#pragma once

#include <cstdint>
#include <random>

#include "numsg/semigroup.hpp"

namespace numsg {

/// Reproducible source of random minimal semigroups. Draws m uniformly from
/// [m_min, m_max], then m distinct integers from [2, d_max], minimizes the
/// basis and retries whenever the gcd is not 1. Uses its own bounded draw on
/// top of mt19937_64 so that the stream is identical across standard libraries.
class SemigroupSampler {
public:
    SemigroupSampler(std::uint64_t seed, std::int64_t m_min, std::int64_t m_max, std::int64_t d_max);

    NumericalSemigroup next(const Limits& limits = {});

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
    std::int64_t m_min_;
    std::int64_t m_max_;
    std::int64_t d_max_;
};

}  // namespace numsg
