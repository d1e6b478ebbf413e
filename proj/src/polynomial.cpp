#include "numsg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace numsg {

namespace {

Integer power(const Integer& base, std::int64_t exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

void prune(IntPolynomial::Terms& terms) {
    std::erase_if(terms, [](const auto& kv) { return sgn(kv.second) == 0; });
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    for (const auto& [d, c] : terms) add_term(d, Integer(c));
}

IntPolynomial IntPolynomial::monomial(std::int64_t degree, const Integer& coeff) {
    IntPolynomial p;
    p.add_term(degree, coeff);
    return p;
}

Integer IntPolynomial::coefficient(std::int64_t degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Integer(0) : it->second;
}

const Integer& IntPolynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

void IntPolynomial::add_term(std::int64_t degree, const Integer& c) {
    if (degree < 0) throw std::invalid_argument("negative degree " + std::to_string(degree));
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& [d, c] : out.terms_) c = -c;
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    for (const auto& [d, c] : rhs.terms_) add_term(d, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const Integer& rhs) {
    if (sgn(rhs) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, c] : terms_) c *= rhs;
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            Integer& slot = out.terms_[da + db];
            slot += ca * cb;
        }
    }
    prune(out.terms_);
    return out;
}

Integer IntPolynomial::operator()(const Integer& x) const {
    Integer acc = 0;
    if (terms_.empty()) return acc;
    std::int64_t prev = terms_.rbegin()->first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        acc *= power(x, prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    return acc * power(x, prev);
}

IntPolynomial IntPolynomial::shifted(std::int64_t shift) const {
    IntPolynomial out;
    for (const auto& [d, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), d + shift, c);
    return out;
}

std::string IntPolynomial::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0 || mag != 1) out << mag;
        if (d > 0) {
            out << var;
            if (d > 1) out << '^' << d;
        }
    }
    return out.str();
}

IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
    const std::int64_t db = b.degree();
    const Integer& lb = b.leading_coefficient();
    IntPolynomial rem = a;
    IntPolynomial quotient;
    while (!rem.is_zero()) {
        const std::int64_t dr = rem.degree();
        Integer lr = rem.leading_coefficient();
        if (dr < db || !mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t())) {
            throw Error(ErrorCode::InexactDivision,
                        "(" + b.to_string() + ") does not divide the degree-" + std::to_string(a.degree()) +
                            " dividend exactly");
        }
        Integer t;
        mpz_divexact(t.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
        quotient.add_term(dr - db, t);
        for (const auto& [d, c] : b.terms()) rem.add_term(d + dr - db, -t * c);
    }
    return quotient;
}

Integer eval(const IntPolynomial& p, const Integer& x) { return p(x); }

IntPolynomial derivative(const IntPolynomial& p, unsigned order) {
    IntPolynomial out;
    for (const auto& [d, c] : p.terms()) {
        if (d < static_cast<std::int64_t>(order)) continue;
        // falling factorial d (d-1) ... (d-order+1)
        Integer factor = c;
        for (unsigned k = 0; k < order; ++k) factor *= Integer(static_cast<long>(d - k));
        out.add_term(d - order, factor);
    }
    return out;
}

IntPolynomial one_minus_power(std::int64_t d) {
    IntPolynomial p(1);
    p.add_term(d, -1);
    return p;
}

std::vector<Integer> series_quotient(const IntPolynomial& num, const IntPolynomial& den, std::int64_t bound) {
    const Integer den0 = den.coefficient(0);
    if (den0 != 1 && den0 != -1) {
        throw Error(ErrorCode::InexactDivision, "series denominator must have constant term +1 or -1");
    }
    std::vector<std::pair<std::int64_t, Integer>> tail;
    for (const auto& [d, c] : den.terms())
        if (d > 0 && d <= bound) tail.emplace_back(d, c);

    std::vector<Integer> h(static_cast<std::size_t>(bound + 1));
    for (std::int64_t n = 0; n <= bound; ++n) {
        Integer acc = num.coefficient(n);
        for (const auto& [d, c] : tail) {
            if (d > n) break;
            acc -= c * h[static_cast<std::size_t>(n - d)];
        }
        h[static_cast<std::size_t>(n)] = acc * den0;
    }
    return h;
}

std::vector<Integer> series_over_binomials(const IntPolynomial& num, std::span<const std::int64_t> exponents,
                                           std::int64_t bound) {
    std::vector<Integer> h(static_cast<std::size_t>(bound + 1));
    for (const auto& [d, c] : num.terms()) {
        if (d > bound) break;
        h[static_cast<std::size_t>(d)] = c;
    }
    for (std::int64_t e : exponents) {
        if (e < 1) throw std::invalid_argument("series factor exponent must be positive");
        for (std::int64_t n = e; n <= bound; ++n) h[static_cast<std::size_t>(n)] += h[static_cast<std::size_t>(n - e)];
    }
    return h;
}

IntPolynomial from_dense(const std::vector<Integer>& coeffs) {
    IntPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<std::int64_t>(i), coeffs[i]);
    return p;
}

IntPolynomial cyclotomic_poly(std::int64_t q) {
    if (q < 1) throw Error(ErrorCode::InvalidQ, "cyclotomic order must be positive, got " + std::to_string(q));
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d * d <= q; ++d) {
        if (q % d) continue;
        divisors.push_back(d);
        if (d * d != q) divisors.push_back(q / d);
    }
    std::sort(divisors.begin(), divisors.end());

    std::map<std::int64_t, IntPolynomial> phi;
    for (std::int64_t d : divisors) {
        IntPolynomial value = IntPolynomial::monomial(d) - IntPolynomial(1);
        for (const auto& [e, phi_e] : phi)
            if (d % e == 0) value = div_exact(value, phi_e);
        phi.emplace(d, std::move(value));
    }
    return phi.at(q);
}

}  // namespace numsg
