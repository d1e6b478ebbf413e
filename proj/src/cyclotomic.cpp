#include "numsg/cyclotomic.hpp"

#include <sstream>

namespace numsg {

namespace detail {

struct CyclotomicModulus {
    std::int64_t order;
    IntPolynomial phi;
    std::size_t rank;
    // Nonzero coefficients of Phi_q below the (monic) leading term.
    std::vector<std::pair<std::size_t, Integer>> lower;

    explicit CyclotomicModulus(std::int64_t q) : order(q), phi(cyclotomic_poly(q)) {
        rank = static_cast<std::size_t>(phi.degree());
        for (const auto& [d, c] : phi.terms())
            if (static_cast<std::size_t>(d) < rank) lower.emplace_back(static_cast<std::size_t>(d), c);
    }

    // In place: values <- values mod Phi_q, then truncated to `rank` entries.
    void reduce(std::vector<Integer>& values) const {
        for (std::size_t k = values.size(); k-- > rank;) {
            if (sgn(values[k]) == 0) continue;
            const std::size_t base = k - rank;
            for (const auto& [i, c] : lower) values[base + i] -= values[k] * c;
            values[k] = 0;
        }
        values.resize(rank);
    }
};

}  // namespace detail

std::int64_t CyclotomicElement::order() const noexcept { return mod_->order; }

bool CyclotomicElement::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

void CyclotomicElement::require_same_order(const CyclotomicElement& other) const {
    if (order() != other.order()) {
        throw Error(ErrorCode::OrderMismatch, "cyclotomic orders differ: " + std::to_string(order()) + " vs " +
                                                  std::to_string(other.order()));
    }
}

CyclotomicElement CyclotomicElement::mul_x() const {
    std::vector<Integer> shifted(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) shifted[i + 1] = coeffs_[i];
    mod_->reduce(shifted);
    return CyclotomicElement(mod_, std::move(shifted));
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Integer& scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.require_same_order(b);
    std::vector<Integer> product(a.coeffs_.size() + b.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    a.mod_->reduce(product);
    return CyclotomicElement(a.mod_, std::move(product));
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

std::string CyclotomicElement::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ", ";
        out << coeffs_[i];
    }
    out << ']';
    return out.str();
}

CyclotomicRing::CyclotomicRing(std::int64_t q) {
    if (q < 2) throw Error(ErrorCode::InvalidQ, "cyclotomic ring needs order >= 2, got " + std::to_string(q));
    mod_ = std::make_shared<const detail::CyclotomicModulus>(q);
}

std::int64_t CyclotomicRing::order() const noexcept { return mod_->order; }
std::size_t CyclotomicRing::rank() const noexcept { return mod_->rank; }
const IntPolynomial& CyclotomicRing::modulus() const noexcept { return mod_->phi; }

CyclotomicElement CyclotomicRing::zero() const { return CyclotomicElement(mod_, std::vector<Integer>(mod_->rank)); }

CyclotomicElement CyclotomicRing::one() const {
    auto e = zero();
    e.coeffs_[0] = 1;
    return e;
}

CyclotomicElement CyclotomicRing::root_power(std::int64_t e) const {
    const std::int64_t q = mod_->order;
    std::int64_t k = ((e % q) + q) % q;
    std::vector<Integer> values(static_cast<std::size_t>(k) + 1);
    values[static_cast<std::size_t>(k)] = 1;
    if (values.size() < mod_->rank) values.resize(mod_->rank);
    mod_->reduce(values);
    return CyclotomicElement(mod_, std::move(values));
}

CyclotomicElement CyclotomicRing::reduce(std::vector<Integer> values) const {
    if (values.size() < mod_->rank) values.resize(mod_->rank);
    mod_->reduce(values);
    return CyclotomicElement(mod_, std::move(values));
}

CyclotomicElement root_power(std::int64_t q, std::int64_t e) { return CyclotomicRing(q).root_power(e); }

}  // namespace numsg
