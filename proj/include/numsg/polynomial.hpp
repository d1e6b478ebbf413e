#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "numsg/error.hpp"

namespace numsg {

using Integer = mpz_class;

/// Sparse univariate polynomial with arbitrary-precision integer
/// coefficients, keyed by nonnegative degree. Zero coefficients are never stored.
class IntPolynomial {
public:
    using Terms = std::map<std::int64_t, Integer>;

    /// Degree reported for the zero polynomial.
    static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

    IntPolynomial() = default;
    IntPolynomial(long constant) { add_term(0, Integer(constant)); }
    explicit IntPolynomial(const Integer& constant) { add_term(0, constant); }

    /// {{degree, coefficient}, ...}; repeated degrees are summed.
    IntPolynomial(std::initializer_list<std::pair<std::int64_t, long>> terms);

    static IntPolynomial monomial(std::int64_t degree, const Integer& coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t degree() const noexcept { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first; }
    Integer coefficient(std::int64_t degree) const;
    const Integer& leading_coefficient() const;

    /// Adds c*z^degree in place, pruning a resulting zero.
    void add_term(std::int64_t degree, const Integer& c);

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const Integer& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.terms_ == b.terms_; }

    /// Exact value at x (Horner over the sorted degrees).
    Integer operator()(const Integer& x) const;

    /// Multiplies by z^shift.
    IntPolynomial shifted(std::int64_t shift) const;

    /// Human-readable form in the given variable, e.g. "1 - z + z^2".
    std::string to_string(char var = 'z') const;

private:
    Terms terms_;
};

/// Quotient of an exact division. Throws ErrorCode::InexactDivision when b
/// does not divide a over the integers (or b is zero).
IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

Integer eval(const IntPolynomial& p, const Integer& x);

/// order-th derivative with respect to the variable.
IntPolynomial derivative(const IntPolynomial& p, unsigned order = 1);

/// 1 - z^d
IntPolynomial one_minus_power(std::int64_t d);

/// Coefficients 0..bound of the power series num/den. den must have constant
/// term +1 or -1 so that the expansion stays integral.
std::vector<Integer> series_quotient(const IntPolynomial& num, const IntPolynomial& den, std::int64_t bound);

/// Coefficients 0..bound of num / prod_i (1 - z^{e_i}); each factor is a
/// strided prefix sum over the dense coefficients.
std::vector<Integer> series_over_binomials(const IntPolynomial& num, std::span<const std::int64_t> exponents,
                                           std::int64_t bound);

/// Builds a polynomial from dense coefficients (index = degree).
IntPolynomial from_dense(const std::vector<Integer>& coeffs);

/// The q-th cyclotomic polynomial, via Phi_q = (x^q - 1) / prod_{d | q, d < q} Phi_d.
IntPolynomial cyclotomic_poly(std::int64_t q);

}  // namespace numsg
