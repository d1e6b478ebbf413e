// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "numsg/hilbert.hpp"
#include "numsg/identities.hpp"
#include "numsg/oracle.hpp"
#include "numsg/sampling.hpp"

#ifndef NUMSG_TOOL_PATH
#error "NUMSG_TOOL_PATH must point at the numsg executable"
#endif

using namespace numsg;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

NumericalSemigroup sg(std::initializer_list<std::int64_t> g) { return make_semigroup(std::vector<std::int64_t>(g)); }

std::vector<NumericalSemigroup> seeded_instances(std::uint64_t seed, int count, std::int64_t m_max, std::int64_t d_max) {
    SemigroupSampler sampler(seed, 2, m_max, d_max);
    std::vector<NumericalSemigroup> out;
    for (int i = 0; i < count; ++i) out.push_back(sampler.next());
    return out;
}

const std::vector<NumericalSemigroup>& property_instances() {
    static const auto instances = seeded_instances(7, 500, 6, 300);
    return instances;
}

Integer generator_product(const NumericalSemigroup& s) {
    Integer p = 1;
    for (auto d : s.generators()) p *= static_cast<long>(d);
    return p;
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

template <typename F>
bool expect_code(ErrorCode code, F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

// ---- criteria ----

std::string fixture_479() {
    const auto start = Clock::now();
    auto s = sg({4, 7, 9});
    auto k = k_polynomial(s);
    require(k == IntPolynomial{{0, 1}, {16, -1}, {18, -1}, {21, -1}, {25, 1}, {30, 1}}, "k = " + k.to_string());
    auto seq = signed_sequence(s);
    require(moment(seq, 0) == 0, "moment r=0");
    require(moment(seq, 1) == 0, "moment r=1");
    require(moment(seq, 2) == 504, "moment r=2");
    require(Integer(504) == factorial(2) * 4 * 7 * 9, "504 = 2!*4*7*9");
    require(verify_theorem1(s).all_pass(), "verify_theorem1");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    require(secs < 0.1, "runtime " + std::to_string(secs) + " s");
    return "k = " + k.to_string() + ", moments 0, 0, 504, " + std::to_string(secs * 1e3) + " ms";
}

std::string fixture_23() {
    const auto start = Clock::now();
    auto s = sg({2, 3});
    auto prof = profile(s);
    auto p = p_polynomial(s);
    require(p == IntPolynomial{{0, 1}, {1, -1}, {2, 1}}, "p = " + p.to_string());
    require(prof.frobenius == 1 && prof.conductor == 2, "frobenius/conductor");
    require(prof.gaps == std::vector<std::int64_t>{1}, "gaps");
    auto k = k_polynomial(s);
    require(k == IntPolynomial{{0, 1}, {6, -1}}, "k = " + k.to_string());
    require(moment(signed_sequence(s), 1) == -6, "moment r=1");
    require(Integer(-6) == -factorial(1) * 2 * 3, "-6 = (-1)^1 1! 2 3");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    require(secs < 0.1, "runtime " + std::to_string(secs) + " s");
    return "p = " + p.to_string() + ", k = " + k.to_string() + ", " + std::to_string(secs * 1e3) + " ms";
}

std::string theorem1_suite() {
    const auto start = Clock::now();
    std::size_t checks = 0;
    for (const auto& s : property_instances()) {
        auto report = verify_theorem1(s);
        require(report.all_pass(), "verify_theorem1 failed on " + s.to_string());
        require(report.checks.size() == s.size(), "check count on " + s.to_string());
        checks += report.checks.size();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    require(secs < 60, "runtime " + std::to_string(secs) + " s");
    return "500 instances, " + std::to_string(checks) + " exact checks, " + std::to_string(secs) + " s";
}

std::string theorem2_suite() {
    const auto start = Clock::now();
    std::size_t checks = 0;
    for (const auto& s : property_instances()) {
        auto report = verify_theorem2_all(s);
        require(report.all_pass(), "verify_theorem2_all failed on " + s.to_string());
        // every admissible (q, n, r) triple is present
        std::size_t expected = 0;
        for (std::int64_t q = 2; q <= s.largest_generator(); ++q) {
            const auto w = w_count(s, q);
            if (w == 0) continue;
            std::size_t coprime = 0;
            for (std::int64_t n = 1; n < q; ++n)
                if (std::gcd(n, q) == 1) ++coprime;
            expected += coprime * static_cast<std::size_t>(w);
        }
        require(report.checks.size() == expected, "coverage on " + s.to_string());
        checks += report.checks.size();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    require(secs < 300, "runtime " + std::to_string(secs) + " s");
    return "500 instances, " + std::to_string(checks) + " exact cyclotomic checks, " + std::to_string(secs) + " s";
}

void structure_of(const NumericalSemigroup& s) {
    const auto name = s.to_string();
    const auto prof = profile(s);
    const auto p = p_polynomial(s);
    const auto k = k_polynomial(s);
    const auto m = s.size();
    std::int64_t sum_d = 0;
    for (auto d : s.generators()) sum_d += d;

    require(p(1) == 1, name + ": p(1)");
    require(p.degree() == prof.conductor, name + ": deg p");
    if (m >= 2) {
        require(k(1) == 0, name + ": k(1)");
        require(k.degree() == prof.frobenius + sum_d, name + ": deg k");
    }
    require(k * one_minus_power(1) == p * generator_denominator(s), name + ": k(1-z) = p prod");
    IntPolynomial cofactor = k;
    for (std::size_t i = 1; i < m; ++i) cofactor = div_exact(cofactor, one_minus_power(1));
    require(cofactor(1) == generator_product(s), name + ": cofactor at 1");
}

std::string structure_suite() {
    std::size_t n = 0;
    for (auto s : {sg({1}), sg({2, 3}), sg({4, 7, 9}), sg({6, 10, 15}), sg({5, 8, 12, 14})}) {
        structure_of(s);
        ++n;
    }
    for (const auto& s : property_instances()) {
        structure_of(s);
        ++n;
    }
    return std::to_string(n) + " semigroups";
}

std::string oracle_suite() {
    // Larger generators than the property suite; d_1 * d_m stays below 10^6.
    const auto instances = seeded_instances(1009, 100, 5, 1000);
    for (const auto& s : instances) {
        const auto name = s.to_string();
        require(s.multiplicity() * s.largest_generator() <= 1'000'000, name + ": d_1 d_m bound");
        const auto prof = profile(s);
        require(oracle::oracle_frobenius(s) == prof.frobenius, name + ": frobenius");

        std::int64_t sum_d = 0;
        for (auto d : s.generators()) sum_d += d;
        const std::int64_t bound = prof.conductor + sum_d;
        const auto k = k_polynomial(s);
        const auto series = series_quotient(k, generator_denominator(s), bound);
        const auto table = oracle::enumerate(s, bound);
        for (std::int64_t x = 0; x <= bound; ++x)
            require(series[static_cast<std::size_t>(x)] == (table.contains(x) ? 1 : 0), name + ": series at " + std::to_string(x));

        const auto seq = signed_sequence(s);
        for (unsigned r = 0; r < s.size(); ++r)
            require(oracle::oracle_moment(s, r) == moment(seq, r), name + ": moment r=" + std::to_string(r));
    }
    return "100 instances, d <= 1000";
}

std::string edge_contract() {
    require(expect_code(ErrorCode::GcdNotOne, [] { make_semigroup(std::vector<std::int64_t>{2, 4}); }), "gcd 2 accepted");
    require(expect_code(ErrorCode::NonMinimalBasis, [] { make_semigroup(std::vector<std::int64_t>{2, 3, 4}); }),
            "non-minimal accepted");
    auto reduced = reduce_basis(std::vector<std::int64_t>{2, 3, 4});
    require(reduced.semigroup.generators() == std::vector<std::int64_t>{2, 3}, "auto-minimize result");
    require(reduced.removed == std::vector<std::int64_t>{4}, "auto-minimize removed");

    auto s = sg({4, 7, 9});
    require(expect_code(ErrorCode::InvalidQ, [&] { verify_theorem2(s, 1, 1); }), "q = 1 not InvalidQ");
    require(expect_code(ErrorCode::ZeroWq, [&] { verify_theorem2(s, 5, 1); }), "w_q = 0 not ZeroWq");
    require(expect_code(ErrorCode::EmptyInput, [] { make_semigroup(std::vector<std::int64_t>{}); }), "empty input");

    auto one = sg({1});
    auto prof = profile(one);
    require(prof.frobenius == -1 && prof.conductor == 0 && prof.genus == 0 && prof.gaps.empty(), "<1> profile");
    require(p_polynomial(one) == IntPolynomial(1) && k_polynomial(one) == IntPolynomial(1), "<1> numerators");
    auto t1 = verify_theorem1(one);
    require(t1.checks.size() == 1 && t1.all_pass() && t1.checks[0].computed == "1", "<1> theorem 1 at r = 0");
    require(verify_theorem2_all(one).checks.empty(), "<1> has no cyclotomic checks");
    return "gcd, minimality, auto-minimize, InvalidQ, ZeroWq, <1>";
}

std::string determinism() {
    const auto dir = fs::temp_directory_path();
    const std::string tool = NUMSG_TOOL_PATH;
    std::vector<std::string> outputs;
    for (int i = 0; i < 2; ++i) {
        const auto path = dir / ("numsg_acceptance_sweep_" + std::to_string(i) + ".json");
        const std::string cmd = "\"" + tool + "\" sweep --seed 7 --count 500 --format json > \"" + path.string() + "\" 2>/dev/null";
        require(std::system(cmd.c_str()) == 0, "sweep run " + std::to_string(i) + " failed");
        std::ifstream in(path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        outputs.push_back(buf.str());
        fs::remove(path);
    }
    require(!outputs[0].empty(), "empty sweep output");
    require(outputs[0] == outputs[1], "outputs differ");
    return std::to_string(outputs[0].size()) + " identical bytes";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"1 fixture <4,7,9>", fixture_479},
        {"2 fixture <2,3>", fixture_23},
        {"3 theorem 1 property suite", theorem1_suite},
        {"4 theorem 2 property suite", theorem2_suite},
        {"5 structure suite", structure_suite},
        {"6 oracle equivalence", oracle_suite},
        {"7 negative/edge contract", edge_contract},
        {"8 determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        std::string line;
        try {
            line = "PASS  " + name + ": " + check();
        } catch (const Failure& f) {
            line = "FAIL  " + name + ": " + f.what;
            ++failed;
        } catch (const std::exception& e) {
            line = "FAIL  " + name + ": exception: " + e.what();
            ++failed;
        }
        std::cout << line << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
