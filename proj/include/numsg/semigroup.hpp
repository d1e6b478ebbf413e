#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

/// Resource caps. Every algorithm whose storage grows with the size of the
/// semigroup checks the relevant cap and throws ErrorCode::ResourceLimit.
struct Limits {
    /// Maximum number of residue-graph nodes (the multiplicity d_1).
    std::int64_t max_apery_nodes = 10'000'000;
    /// Maximum degree of any dense enumeration (gaps, truncated series, oracle tables).
    std::int64_t max_degree = 100'000'000;
};

/// Generators larger than this are rejected so that Apéry elements and
/// polynomial degrees stay well inside int64.
inline constexpr std::int64_t kMaxGenerator = 2'147'483'647;

struct BasisReduction;

/// A numerical semigroup given by its minimal generating set d_1 < ... < d_m
/// with gcd 1. Immutable once built.
class NumericalSemigroup {
public:
    const std::vector<std::int64_t>& generators() const noexcept { return gens_; }

    /// Embedding dimension m.
    std::size_t size() const noexcept { return gens_.size(); }
    /// Multiplicity d_1, the smallest generator.
    std::int64_t multiplicity() const noexcept { return gens_.front(); }
    std::int64_t largest_generator() const noexcept { return gens_.back(); }

    /// "<4,7,9>"
    std::string to_string() const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
    explicit NumericalSemigroup(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {}

    friend BasisReduction reduce_basis(std::span<const std::int64_t>, const Limits&);

    std::vector<std::int64_t> gens_;
};

/// Result of auto-minimization: the semigroup together with the input
/// generators that were dropped as redundant, in increasing order. Repeated
/// entries are merged silently and do not count as redundant.
struct BasisReduction {
    NumericalSemigroup semigroup;
    std::vector<std::int64_t> removed;
};

/// Sorts, deduplicates and validates the generators. Rejects a non-minimal
/// basis with NonMinimalBasisError naming the first redundant generator.
NumericalSemigroup make_semigroup(std::span<const std::int64_t> raw, const Limits& limits = {});

/// Like make_semigroup, but drops redundant generators instead of rejecting them.
BasisReduction reduce_basis(std::span<const std::int64_t> raw, const Limits& limits = {});

/// Smallest element of each residue class modulo d_1.
class AperySet {
public:
    std::int64_t modulus() const noexcept { return static_cast<std::int64_t>(elements_.size()); }
    const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
    std::int64_t operator[](std::int64_t residue) const { return elements_.at(static_cast<std::size_t>(residue)); }

    /// x >= 0 belongs to S iff x is at least the Apéry element of its class.
    bool contains(std::int64_t x) const noexcept;

    /// max(elements) - d_1; -1 when S is all of N.
    std::int64_t frobenius() const noexcept;

private:
    explicit AperySet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {}
    friend AperySet apery_set(const NumericalSemigroup&, const Limits&);

    std::vector<std::int64_t> elements_;
};

/// Dijkstra over the residue graph mod d_1 (edge r -> r + d_i of weight d_i).
AperySet apery_set(const NumericalSemigroup& s, const Limits& limits = {});

struct SemigroupProfile {
    std::int64_t frobenius = -1;
    std::int64_t conductor = 0;
    std::int64_t genus = 0;
    std::vector<std::int64_t> gaps;
};

/// Frobenius number, conductor and the full gap list. The gap enumeration is
/// bounded by limits.max_degree.
SemigroupProfile profile(const NumericalSemigroup& s, const Limits& limits = {});
SemigroupProfile profile(const AperySet& apery, const Limits& limits = {});

bool contains(const NumericalSemigroup& s, std::int64_t x, const Limits& limits = {});

}  // namespace numsg
