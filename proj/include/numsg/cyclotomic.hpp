#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "numsg/polynomial.hpp"

namespace numsg {

namespace detail {
struct CyclotomicModulus;
}

/// Element of Z[x]/Phi_q(x). The class of x plays the role of a primitive
/// q-th root of unity zeta; since every primitive root is a conjugate of
/// every other, an element is zero here iff it vanishes under each
/// embedding x -> exp(2 pi i k / q), gcd(k, q) = 1.
///
/// Coefficients are always fully reduced (length phi(q)).
class CyclotomicElement {
public:
    std::int64_t order() const noexcept;
    /// Euler phi of the order, i.e. the number of stored coefficients.
    std::size_t rank() const noexcept { return coeffs_.size(); }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    /// Multiplication by zeta, reduced immediately.
    CyclotomicElement mul_x() const;

    CyclotomicElement& operator+=(const CyclotomicElement& rhs);
    CyclotomicElement& operator-=(const CyclotomicElement& rhs);
    CyclotomicElement& operator*=(const Integer& scale);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const Integer& s) { return a *= s; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    CyclotomicElement operator-() const;

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    /// "[c0, c1, ...]" in the basis 1, zeta, ..., zeta^(phi(q)-1).
    std::string to_string() const;

private:
    friend class CyclotomicRing;
    CyclotomicElement(std::shared_ptr<const detail::CyclotomicModulus> mod, std::vector<Integer> coeffs)
        : mod_(std::move(mod)), coeffs_(std::move(coeffs)) {}

    void require_same_order(const CyclotomicElement& other) const;

    std::shared_ptr<const detail::CyclotomicModulus> mod_;
    std::vector<Integer> coeffs_;
};

/// Z[x]/Phi_q(x) for a fixed q >= 2. Cheap to copy; elements share the modulus.
class CyclotomicRing {
public:
    explicit CyclotomicRing(std::int64_t q);

    std::int64_t order() const noexcept;
    std::size_t rank() const noexcept;
    const IntPolynomial& modulus() const noexcept;

    CyclotomicElement zero() const;
    CyclotomicElement one() const;
    /// zeta^e for any integer e (negative exponents wrap mod q).
    CyclotomicElement root_power(std::int64_t e) const;

    /// Reduces sum_t values[t] x^t (any length) modulo Phi_q.
    CyclotomicElement reduce(std::vector<Integer> values) const;

private:
    std::shared_ptr<const detail::CyclotomicModulus> mod_;
};

CyclotomicElement root_power(std::int64_t q, std::int64_t e);

}  // namespace numsg
