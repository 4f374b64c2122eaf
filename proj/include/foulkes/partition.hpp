#pragma once

#include "foulkes/bigint.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foulkes {

/// An integer partition: strictly positive parts in non-increasing order.
///
/// The constructor canonicalizes (drops zeros, sorts descending) so every
/// instance satisfies the invariant. The weight is cached.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    /// Number of parts, p(λ).
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// λ_i with 1-based i; 0 beyond the last part.
    int operator[](int i) const noexcept
    {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Multiplicity m_i of part value i.
    int multiplicity_of(int value) const noexcept;

    /// Lexicographic comparison of the part sequences.
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y)
    {
        return x.parts_ <=> y.parts_;
    }
    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }

    std::size_t hash() const noexcept;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Canonical text form, e.g. "7,3,1,1"; the empty partition prints as "".
std::string to_string(const Partition& p);

/// Parses `part(,part)*` with `part = INT | INT^INT`, INT >= 1, no whitespace.
/// Throws InputError on malformed text, zero parts or zero exponents.
Partition parse_partition(std::string_view text);

/// Map keyed by partitions, iterated in descending lexicographic order.
template <typename T>
using PartitionMap = std::map<Partition, T, std::greater<>>;

Partition conjugate(const Partition& p);

/// λ ⊵ μ. Throws InputError if the weights differ.
bool dominates(const Partition& lambda, const Partition& mu);

/// λ_j <= μ_j for 1 <= j <= min(p(λ), p(μ)) (overlapping rows only).
bool is_subpartition(const Partition& lambda, const Partition& mu);

/// Young-diagram containment: also requires p(λ) <= p(μ).
bool diagram_contained(const Partition& lambda, const Partition& mu);

/// Leg length k if λ = (n-k, 1^k). Throws InputError on the empty partition.
std::optional<int> hook_leg(const Partition& lambda);

/// The [k:α] coordinates of a partition.
struct HookCoordinates {
    int total = 0;   ///< n, the weight of the encoded partition
    int k = 0;       ///< leg: number of rows below the first
    Partition inside;  ///< α, at most k parts
    int tail_weight = 0;  ///< α_2 + ... + α_t

    friend bool operator==(const HookCoordinates&, const HookCoordinates&) = default;
};

/// Validates the invariants and fills tail_weight; throws InputError on violation.
HookCoordinates make_hook_coords(int total, int k, Partition inside);

HookCoordinates to_hook_coords(const Partition& lambda);
Partition from_hook_coords(const HookCoordinates& h);

/// Partitions of n with optional bounds, in descending lexicographic order.
std::vector<Partition> enum_partitions(int n, std::optional<int> max_parts = std::nullopt,
                                       std::optional<int> max_part = std::nullopt);

/// P(r)_a^b: partitions of r with at most b parts, each at most a.
std::vector<Partition> enum_P(int r, int a, int b);

/// |P(r)_a^b| by dynamic programming (no enumeration).
BigInt count_P(int r, int a, int b);

/// Number of partitions of n with at most max_parts parts (DP).
BigInt count_partitions(int n, std::optional<int> max_parts = std::nullopt,
                        std::optional<int> max_part = std::nullopt);

/// All shapes obtained by adding k boxes to λ, no two in the same column.
std::vector<Partition> pieri_add(const Partition& lambda, int k);

/// z_λ = Π i^{m_i} m_i!.
BigInt z_order(const Partition& lambda);

/// Number of permutations of cycle type λ: n!/z_λ.
BigInt class_size(const Partition& lambda);

/// (n^m) as a partition, e.g. rectangle(3, 4) = (3,3,3,3).
Partition rectangle(int part, int count);

/// (n-k, 1^k).
Partition hook(int n, int k);

}  // namespace foulkes

template <>
struct std::hash<foulkes::Partition> {
    std::size_t operator()(const foulkes::Partition& p) const noexcept { return p.hash(); }
};
