#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "numsg/cyclotomic.hpp"

using namespace numsg;

namespace {

using Complex = std::complex<long double>;

// Image of a reduced element under zeta -> exp(2 pi i k / q).
Complex embed(const CyclotomicElement& e, std::int64_t k) {
    Complex sum = 0;
    for (std::size_t i = 0; i < e.coefficients().size(); ++i) {
        long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k * static_cast<std::int64_t>(i)) /
                            static_cast<long double>(e.order());
        sum += static_cast<long double>(e.coefficients()[i].get_d()) * std::polar(1.0L, angle);
    }
    return sum;
}

}  // namespace

TEST(RootPower, Examples) {
    EXPECT_EQ(root_power(2, 5), CyclotomicRing(2).one() * Integer(-1));
    EXPECT_EQ(root_power(2, 5).coefficients(), std::vector<Integer>{-1});
    EXPECT_EQ(root_power(4, 2).coefficients(), (std::vector<Integer>{-1, 0}));
    EXPECT_EQ(root_power(3, 3), CyclotomicRing(3).one());
    EXPECT_EQ(root_power(3, -1), root_power(3, 2));
    // zeta^2 = -1 - zeta for q = 3
    EXPECT_EQ(root_power(3, 2).coefficients(), (std::vector<Integer>{-1, -1}));
    EXPECT_THROW(root_power(1, 0), Error);
}

TEST(CyclotomicElement, Examples) {
    CyclotomicRing r3(3), r4(4);
    auto zeta = r3.root_power(1);
    EXPECT_TRUE((zeta + (-zeta)).is_zero());
    EXPECT_TRUE((r3.one() + r3.root_power(1) + r3.root_power(2)).is_zero());
    EXPECT_TRUE((r4.one() + r4.root_power(2)).is_zero());
    EXPECT_FALSE(r4.one().is_zero());
    EXPECT_TRUE(r4.zero().is_zero());
    EXPECT_EQ(r4.rank(), 2u);
    EXPECT_EQ(CyclotomicRing(12).rank(), 4u);
}

TEST(CyclotomicElement, OrderMismatch) {
    CyclotomicRing r3(3), r5(5);
    try {
        auto sum = r3.one() + r5.one();
        FAIL() << sum.to_string();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OrderMismatch);
    }
    EXPECT_THROW(r3.one() - r5.one(), Error);
    EXPECT_THROW(r3.one() * r5.one(), Error);
    EXPECT_FALSE(r3.one() == r5.one());
}

TEST(CyclotomicProperties, QthPowerIsOne) {
    for (std::int64_t q = 2; q <= 50; ++q) {
        CyclotomicRing ring(q);
        for (std::int64_t e = -q; e <= 2 * q; e += 3) {
            auto z = ring.root_power(e);
            auto acc = ring.one();
            for (std::int64_t i = 0; i < q; ++i) acc = acc * z;
            EXPECT_EQ(acc, ring.one()) << "q=" << q << " e=" << e;
        }
        // x applied q times
        auto walk = ring.one();
        for (std::int64_t i = 0; i < q; ++i) walk = walk.mul_x();
        EXPECT_EQ(walk, ring.one()) << "q=" << q;
    }
}

TEST(CyclotomicProperties, GeometricSumVanishes) {
    for (std::int64_t q = 2; q <= 50; ++q) {
        CyclotomicRing ring(q);
        for (std::int64_t n = 1; n < 2 * q; ++n) {
            if (std::gcd(n, q) != 1) continue;
            auto sum = ring.zero();
            for (std::int64_t e = 0; e < q; ++e) sum += ring.root_power(n * e);
            EXPECT_TRUE(sum.is_zero()) << "q=" << q << " n=" << n;
        }
    }
}

TEST(CyclotomicProperties, ReductionMatchesNumericEvaluation) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-1000, 1000);
    for (std::int64_t q : {5, 6, 12, 15, 30, 49}) {
        CyclotomicRing ring(q);
        std::vector<Integer> values(static_cast<std::size_t>(3 * q));
        for (auto& v : values) v = coeff(rng);
        auto reduced = ring.reduce(values);
        for (std::int64_t k = 1; k < q; ++k) {
            if (std::gcd(k, q) != 1) continue;
            Complex direct = 0;
            for (std::size_t t = 0; t < values.size(); ++t) {
                long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k * static_cast<std::int64_t>(t)) /
                                    static_cast<long double>(q);
                direct += static_cast<long double>(values[t].get_d()) * std::polar(1.0L, angle);
            }
            EXPECT_LT(std::abs(direct - embed(reduced, k)), 1e-9L) << "q=" << q << " k=" << k;
        }
    }
}

TEST(CyclotomicProperties, ScaleAndSubtract) {
    CyclotomicRing ring(7);
    auto a = ring.root_power(3) * Integer(5) + ring.root_power(6);
    auto b = a - ring.root_power(6);
    EXPECT_EQ(b, ring.root_power(3) * Integer(5));
    EXPECT_TRUE((b * Integer(0)).is_zero());
}
