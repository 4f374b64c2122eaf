#pragma once

// Brute-force ground truth at small sizes. Everything here works on explicit
// set partitions and permutations; nothing goes through symmetric functions.

#include "foulkes/bigint.hpp"
#include "foulkes/class_function.hpp"
#include "foulkes/partition.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace foulkes::oracle {

/// Default cap on the number of points for explicit enumeration.
inline constexpr int kDefaultPointCap = 12;

/// A set partition of {1..n}; each block is a bitmask (bit i-1 = point i),
/// blocks sorted by their least element.
class SetPartition {
public:
    SetPartition() = default;
    /// Canonicalizes block order. Throws InputError unless the blocks are
    /// non-empty, pairwise disjoint and cover {1..n}.
    SetPartition(int n, std::vector<std::uint32_t> blocks);

    int points() const noexcept { return n_; }
    const std::vector<std::uint32_t>& blocks() const noexcept { return blocks_; }
    /// Image under a permutation given as perm[i] = image of point i+1 (1-based values).
    SetPartition permuted(const std::vector<int>& perm) const;

    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    std::vector<std::uint32_t> blocks_;
};

/// Blocks joined by '|'; points undelimited when n < 10, comma-separated otherwise.
std::string to_string(const SetPartition& p);

/// All set partitions of {1..n} whose block sizes are the parts of `shape`,
/// in canonical order. Throws BudgetExceeded when n > cap.
std::vector<SetPartition> enum_omega(const Partition& shape, int cap = kDefaultPointCap);

/// The permutation of cycle type μ with cycles laid out consecutively on
/// 1..n, longest first.
std::vector<int> canonical_permutation(const Partition& mu);

/// Number of set partitions in omega fixed by the canonical permutation of
/// type μ. Throws InputError when |μ| differs from the point count.
BigInt fixed_count(const std::vector<SetPartition>& omega, const Partition& mu);

/// Permutation character on Ω^(a^b), by fixed-point counting on every class.
ClassFunction brute_foulkes_char(int a, int b, int cap = kDefaultPointCap);

/// Underlying partition of (|{1..r} ∩ A_i|)_i. Throws InputError unless 1 <= r < n.
Partition linked_partition(const SetPartition& p, int r);

/// Ω^(a^b) grouped by the partition it is linked to at r (r = 0 gives one
/// group keyed by the empty partition).
PartitionMap<BigInt> brute_restriction_orbits(int a, int b, int r, int cap = kDefaultPointCap);

/// Counts S_β-orbits on the set partitions linked to λ (by closure under
/// generators of S_β) and compares with |Ω^η|, η = (a^{b-p(λ)}, a-λ_p, ..., a-λ_1)
/// on the remaining ab-β points.
bool verify_trivial_quotient(int a, int b, int beta, const Partition& lambda, int cap = kDefaultPointCap);

}  // namespace foulkes::oracle
