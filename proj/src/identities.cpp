#include "numsg/identities.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "numsg/hilbert.hpp"

namespace numsg {

namespace {

Integer pow_int(std::int64_t base, unsigned exp) {
    Integer out;
    Integer b(static_cast<long>(base));
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
    return out;
}

std::string dump_header(const NumericalSemigroup& s, const SignedDegreeSequence& seq) {
    std::ostringstream out;
    out << "identity violation\n"
        << "semigroup: " << s.to_string() << '\n'
        << "sequence: " << seq.to_string() << '\n';
    return out.str();
}

void raise_if_failed(const NumericalSemigroup& s, const SignedDegreeSequence& seq, IdentityReport report) {
    if (report.all_pass()) return;
    std::ostringstream out;
    out << dump_header(s, seq);
    for (const auto& c : report.checks) {
        if (c.pass) continue;
        out << "failed: kind=" << (c.kind == CheckKind::Real ? "real" : "cyclotomic") << " r=" << c.r;
        if (c.q) out << " q=" << *c.q;
        if (c.n) out << " n=" << *c.n;
        out << " expected=" << c.expected << " computed=" << c.computed << '\n';
    }
    throw IdentityViolationError(out.str(), std::move(report));
}

// B_t = sum_{j = t mod q} c_j j^r for t in [0, q).
std::vector<Integer> residue_buckets(const SignedDegreeSequence& seq, std::int64_t q, unsigned r) {
    std::vector<Integer> buckets(static_cast<std::size_t>(q));
    for (const auto& t : seq.terms()) buckets[static_cast<std::size_t>(t.degree % q)] += t.coeff * pow_int(t.degree, r);
    return buckets;
}

// sum_t B_t zeta^{n t}
CyclotomicElement from_buckets(const CyclotomicRing& ring, const std::vector<Integer>& buckets, std::int64_t n) {
    const std::int64_t q = ring.order();
    std::vector<Integer> values(static_cast<std::size_t>(q));
    for (std::int64_t t = 0; t < q; ++t) {
        const auto& b = buckets[static_cast<std::size_t>(t)];
        if (sgn(b) != 0) values[static_cast<std::size_t>((n * t) % q)] += b;
    }
    return ring.reduce(std::move(values));
}

std::int64_t normalize_mod(std::int64_t n, std::int64_t q) { return ((n % q) + q) % q; }

void check_theorem2_preconditions(const NumericalSemigroup& s, std::int64_t q, std::int64_t n) {
    if (q < 2 || q > s.largest_generator()) {
        throw Error(ErrorCode::InvalidQ,
                    "q = " + std::to_string(q) + " is outside [2, " + std::to_string(s.largest_generator()) +
                        "] (q = 1 is excluded: zeta = 1 contradicts the nonzero top power sum)");
    }
    if (std::gcd(normalize_mod(n, q), q) != 1) {
        throw Error(ErrorCode::NotCoprime,
                    "n = " + std::to_string(n) + " is not coprime to q = " + std::to_string(q));
    }
    if (w_count(s, q) == 0) {
        throw Error(ErrorCode::ZeroWq, "w_q = 0 for q = " + std::to_string(q) + ": no generator is divisible by q");
    }
}

IdentityCheck cyclotomic_check(const CyclotomicElement& value, unsigned r, std::int64_t q, std::int64_t n) {
    IdentityCheck check;
    check.kind = CheckKind::Cyclotomic;
    check.r = r;
    check.q = q;
    check.n = n;
    check.expected = "0";
    check.computed = value.to_string();
    for (const auto& c : value.coefficients()) check.computed_coeffs.push_back(c.get_str());
    check.pass = value.is_zero();
    return check;
}

}  // namespace

// ---------------------------------------------------------------------------
// BettiTable

BettiTable::BettiTable(std::vector<BettiEntry> entries) : entries_(std::move(entries)) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    bool has_origin = false;
    for (const auto& e : entries_) {
        if (e.homological_index < 0 || e.degree < 0) {
            throw Error(ErrorCode::InvalidBettiTable, "Betti entry with negative index or degree");
        }
        if (sgn(e.multiplicity) <= 0) {
            throw Error(ErrorCode::InvalidBettiTable, "Betti multiplicities must be positive");
        }
        if (!seen.emplace(e.homological_index, e.degree).second) {
            throw Error(ErrorCode::InvalidBettiTable, "duplicate Betti entry (" + std::to_string(e.homological_index) +
                                                          ", " + std::to_string(e.degree) + ")");
        }
        if (e.homological_index == 0 && e.degree == 0) has_origin = e.multiplicity == 1;
    }
    if (!has_origin) throw Error(ErrorCode::InvalidBettiTable, "Betti table must contain beta_{0,0} = 1");
}

std::int64_t BettiTable::max_homological_index() const noexcept {
    std::int64_t out = 0;
    for (const auto& e : entries_) out = std::max(out, e.homological_index);
    return out;
}

BettiTable BettiTable::parse(const std::string& text) {
    std::vector<BettiEntry> entries;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::int64_t i = 0, j = 0;
        std::string beta;
        if (!(fields >> i)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw Error(ErrorCode::InvalidBettiTable, "line " + std::to_string(lineno) + ": expected 'i j beta'");
        }
        std::string extra;
        if (!(fields >> j >> beta) || (fields >> extra)) {
            throw Error(ErrorCode::InvalidBettiTable, "line " + std::to_string(lineno) + ": expected 'i j beta'");
        }
        Integer value;
        if (value.set_str(beta, 10) != 0) {
            throw Error(ErrorCode::InvalidBettiTable, "line " + std::to_string(lineno) + ": bad multiplicity");
        }
        entries.push_back({i, j, value});
    }
    return BettiTable(std::move(entries));
}

// ---------------------------------------------------------------------------
// SignedDegreeSequence

SignedDegreeSequence::SignedDegreeSequence(const IntPolynomial& k) {
    terms_.reserve(k.term_count());
    for (const auto& [d, c] : k.terms()) terms_.push_back({d, c});
}

IntPolynomial SignedDegreeSequence::to_polynomial() const {
    IntPolynomial p;
    for (const auto& t : terms_) p.add_term(t.degree, t.coeff);
    return p;
}

std::string SignedDegreeSequence::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << ", ";
        out << '(' << terms_[i].degree << ", " << terms_[i].coeff << ')';
    }
    out << '}';
    return out.str();
}

SignedDegreeSequence signed_sequence(const NumericalSemigroup& s, const Limits& limits) {
    return SignedDegreeSequence(k_polynomial(s, limits));
}

SignedDegreeSequence signed_sequence(const BettiTable& table) {
    IntPolynomial collapsed;
    for (const auto& e : table.entries())
        collapsed.add_term(e.degree, e.homological_index % 2 == 0 ? e.multiplicity : Integer(-e.multiplicity));
    return SignedDegreeSequence(collapsed);
}

SignedDegreeSequence signed_sequence(const BettiTable& table, const NumericalSemigroup& s, const Limits& limits) {
    const auto m = static_cast<std::int64_t>(s.size());
    if (table.max_homological_index() > m - 1) {
        throw Error(ErrorCode::InvalidBettiTable, "homological index exceeds m - 1 = " + std::to_string(m - 1) +
                                                      " for " + s.to_string());
    }
    auto from_table = signed_sequence(table);
    const auto k = k_polynomial(s, limits);
    const auto collapsed = from_table.to_polynomial();
    if (collapsed != k) {
        auto diff = collapsed - k;
        std::int64_t j = diff.terms().begin()->first;
        throw Error(ErrorCode::BettiMismatch, "Betti table disagrees with k(S; z) of " + s.to_string() +
                                                  " at degree " + std::to_string(j) + ": table gives " +
                                                  collapsed.coefficient(j).get_str() + ", k gives " +
                                                  k.coefficient(j).get_str());
    }
    return from_table;
}

// ---------------------------------------------------------------------------
// Moments and reports

Integer moment(const SignedDegreeSequence& seq, unsigned r) {
    Integer sum = 0;
    for (const auto& t : seq.terms()) sum += t.coeff * pow_int(t.degree, r);
    return sum;
}

bool IdentityReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

void IdentityReport::append(const IdentityReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

IdentityReport verify_theorem1(const NumericalSemigroup& s, const SignedDegreeSequence& seq) {
    const unsigned m = static_cast<unsigned>(s.size());
    IdentityReport report;
    for (unsigned r = 0; r < m; ++r) {
        Integer expected = 0;
        if (r == m - 1) {
            expected = (m - 1) % 2 == 0 ? 1 : -1;
            for (unsigned k = 2; k < m; ++k) expected *= k;
            for (std::int64_t d : s.generators()) expected *= Integer(static_cast<long>(d));
        }
        Integer computed = moment(seq, r);
        report.checks.push_back(
            {CheckKind::Real, r, std::nullopt, std::nullopt, expected.get_str(), computed.get_str(), {},
             computed == expected});
    }
    raise_if_failed(s, seq, report);
    return report;
}

IdentityReport verify_theorem1(const NumericalSemigroup& s, const Limits& limits) {
    return verify_theorem1(s, signed_sequence(s, limits));
}

std::int64_t w_count(const NumericalSemigroup& s, std::int64_t q) {
    if (q < 1) throw Error(ErrorCode::InvalidQ, "q must be positive, got " + std::to_string(q));
    const auto& g = s.generators();
    return std::count_if(g.begin(), g.end(), [q](std::int64_t d) { return d % q == 0; });
}

CyclotomicElement cyclotomic_moment(const SignedDegreeSequence& seq, const CyclotomicRing& ring, unsigned r,
                                    std::int64_t n) {
    const std::int64_t q = ring.order();
    return from_buckets(ring, residue_buckets(seq, q, r), normalize_mod(n, q));
}

IdentityReport verify_theorem2(const NumericalSemigroup& s, const SignedDegreeSequence& seq, std::int64_t q,
                               std::int64_t n) {
    check_theorem2_preconditions(s, q, n);
    const CyclotomicRing ring(q);
    const std::int64_t reduced_n = normalize_mod(n, q);
    const auto w = static_cast<unsigned>(w_count(s, q));
    IdentityReport report;
    for (unsigned r = 0; r < w; ++r)
        report.checks.push_back(cyclotomic_check(cyclotomic_moment(seq, ring, r, reduced_n), r, q, reduced_n));
    raise_if_failed(s, seq, report);
    return report;
}

IdentityReport verify_theorem2(const NumericalSemigroup& s, std::int64_t q, std::int64_t n, const Limits& limits) {
    check_theorem2_preconditions(s, q, n);
    return verify_theorem2(s, signed_sequence(s, limits), q, n);
}

IdentityReport verify_theorem2_all(const NumericalSemigroup& s, const SignedDegreeSequence& seq) {
    // Only divisors of some generator have w_q > 0.
    std::set<std::int64_t> moduli;
    for (std::int64_t d : s.generators()) {
        for (std::int64_t a = 1; a * a <= d; ++a) {
            if (d % a) continue;
            moduli.insert(a);
            moduli.insert(d / a);
        }
    }
    moduli.erase(1);

    IdentityReport report;
    for (std::int64_t q : moduli) {
        const CyclotomicRing ring(q);
        const auto w = static_cast<unsigned>(w_count(s, q));
        std::vector<std::vector<Integer>> buckets;
        for (unsigned r = 0; r < w; ++r) buckets.push_back(residue_buckets(seq, q, r));
        for (std::int64_t n = 1; n < q; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (unsigned r = 0; r < w; ++r)
                report.checks.push_back(cyclotomic_check(from_buckets(ring, buckets[r], n), r, q, n));
        }
    }
    raise_if_failed(s, seq, report);
    return report;
}

IdentityReport verify_theorem2_all(const NumericalSemigroup& s, const Limits& limits) {
    return verify_theorem2_all(s, signed_sequence(s, limits));
}

}  // namespace numsg
