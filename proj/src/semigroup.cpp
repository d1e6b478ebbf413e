#include "numsg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace numsg {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

void check_node_cap(std::int64_t modulus, const Limits& limits) {
    if (modulus > limits.max_apery_nodes) {
        throw Error(ErrorCode::ResourceLimit,
                    "multiplicity " + std::to_string(modulus) + " exceeds the residue-graph cap of " +
                        std::to_string(limits.max_apery_nodes) + " nodes");
    }
}

// Smallest value reachable in each residue class mod `modulus`, starting at 0
// and stepping by any of `steps`. Classes that cannot be reached keep kUnreachable.
std::vector<std::int64_t> residue_distances(std::int64_t modulus, std::span<const std::int64_t> steps) {
    std::vector<std::int64_t> dist(static_cast<std::size_t>(modulus), kUnreachable);
    using Entry = std::pair<std::int64_t, std::int64_t>;  // (distance, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (std::int64_t step : steps) {
            std::int64_t next = (r + step) % modulus;
            std::int64_t cand = d + step;
            auto& slot = dist[static_cast<std::size_t>(next)];
            if (cand < slot) {
                slot = cand;
                queue.emplace(cand, next);
            }
        }
    }
    return dist;
}

std::string join(std::span<const std::int64_t> values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    return out.str();
}

}  // namespace

std::string NumericalSemigroup::to_string() const {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ',';
        out << gens_[i];
    }
    out << '>';
    return out.str();
}

BasisReduction reduce_basis(std::span<const std::int64_t> raw, const Limits& limits) {
    if (raw.empty()) throw Error(ErrorCode::EmptyInput, "at least one generator is required");
    for (std::int64_t g : raw) {
        if (g < 1 || g > kMaxGenerator) {
            throw Error(ErrorCode::InvalidGenerator,
                        "generator " + std::to_string(g) + " is outside [1, " + std::to_string(kMaxGenerator) + "]");
        }
    }

    std::vector<std::int64_t> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::int64_t g = 0;
    for (std::int64_t d : sorted) g = std::gcd(g, d);
    if (g != 1) {
        throw Error(ErrorCode::GcdNotOne,
                    "gcd must be 1 (gcd of " + join(sorted) + " is " + std::to_string(g) + ")");
    }

    const std::int64_t d1 = sorted.front();
    check_node_cap(d1, limits);

    // Generators are visited in increasing order, so only smaller (already
    // accepted) generators can express the current one.
    std::vector<std::int64_t> accepted{d1};
    std::vector<std::int64_t> removed;
    auto dist = residue_distances(d1, {});
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        std::int64_t d = sorted[i];
        if (dist[static_cast<std::size_t>(d % d1)] <= d) {
            removed.push_back(d);
            continue;
        }
        accepted.push_back(d);
        if (i + 1 < sorted.size()) dist = residue_distances(d1, std::span(accepted).subspan(1));
    }
    return BasisReduction{NumericalSemigroup(std::move(accepted)), std::move(removed)};
}

NumericalSemigroup make_semigroup(std::span<const std::int64_t> raw, const Limits& limits) {
    auto reduced = reduce_basis(raw, limits);
    if (!reduced.removed.empty()) {
        std::int64_t d = reduced.removed.front();
        std::vector<std::int64_t> smaller;
        for (std::int64_t x : raw)
            if (x < d) smaller.push_back(x);
        std::sort(smaller.begin(), smaller.end());
        smaller.erase(std::unique(smaller.begin(), smaller.end()), smaller.end());
        throw NonMinimalBasisError(d, "basis is not minimal: " + std::to_string(d) +
                                          " lies in the semigroup generated by " + join(smaller));
    }
    return std::move(reduced.semigroup);
}

bool AperySet::contains(std::int64_t x) const noexcept {
    if (x < 0) return false;
    return x >= elements_[static_cast<std::size_t>(x % modulus())];
}

std::int64_t AperySet::frobenius() const noexcept {
    return *std::max_element(elements_.begin(), elements_.end()) - modulus();
}

AperySet apery_set(const NumericalSemigroup& s, const Limits& limits) {
    check_node_cap(s.multiplicity(), limits);
    auto steps = std::span(s.generators()).subspan(1);
    return AperySet(residue_distances(s.multiplicity(), steps));
}

SemigroupProfile profile(const AperySet& apery, const Limits& limits) {
    SemigroupProfile out;
    out.frobenius = apery.frobenius();
    out.conductor = out.frobenius + 1;
    if (out.frobenius > limits.max_degree) {
        throw Error(ErrorCode::ResourceLimit, "Frobenius number " + std::to_string(out.frobenius) +
                                                  " exceeds the enumeration cap of " +
                                                  std::to_string(limits.max_degree));
    }
    for (std::int64_t x = 1; x <= out.frobenius; ++x)
        if (!apery.contains(x)) out.gaps.push_back(x);
    out.genus = static_cast<std::int64_t>(out.gaps.size());
    return out;
}

SemigroupProfile profile(const NumericalSemigroup& s, const Limits& limits) {
    return profile(apery_set(s, limits), limits);
}

bool contains(const NumericalSemigroup& s, std::int64_t x, const Limits& limits) {
    return apery_set(s, limits).contains(x);
}

}  // namespace numsg
