#pragma once

#include "foulkes/bigint.hpp"
#include "foulkes/characters.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/symfunc.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace foulkes {

/// (a^b): b blocks of size a, acting on ab points.
struct FoulkesShape {
    int a = 1;
    int b = 1;

    FoulkesShape() = default;
    /// Throws InputError unless a >= 1 and b >= 1.
    FoulkesShape(int a_, int b_);

    int degree() const noexcept { return a * b; }
    Partition as_partition() const { return rectangle(a, b); }
    friend bool operator==(const FoulkesShape&, const FoulkesShape&) = default;
};

/// η = (a_1^{b_1}, ..., a_r^{b_r}) with a_1 > ... > a_r.
class GeneralizedShape {
public:
    /// Throws InputError unless the a_i strictly decrease and all entries are >= 1.
    explicit GeneralizedShape(std::vector<std::pair<int, int>> pairs);
    /// Groups the equal parts of η.
    static GeneralizedShape from_partition(const Partition& eta);

    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
    int degree() const noexcept { return degree_; }
    /// Number of distinct part sizes.
    int distinct() const noexcept { return static_cast<int>(pairs_.size()); }
    Partition as_partition() const;

private:
    std::vector<std::pair<int, int>> pairs_;
    int degree_ = 0;
};

/// Multiplicities of irreducible characters in some character of S_n.
struct DecompositionTable {
    int degree = 0;
    PartitionMap<BigInt> entries;

    /// Σ mult(λ) dim(λ): the degree of the decomposed character.
    BigInt dimension_sum() const;
    BigInt multiplicity(const Partition& lambda) const;
};

/// φ^(a^b) = h_b[h_a] in the power-sum basis.
PSeries foulkes_series(const FoulkesShape& s);

/// ψ^η = Π_i h_{b_i}[h_{a_i}].
PSeries gen_foulkes_series(const GeneralizedShape& g);

struct MultiplicityOptions {
    /// Answer 0 without computing when p(λ) > b or λ does not dominate (a^b).
    bool fast_paths = true;
};

/// ⟨φ^(a^b), χ^λ⟩. Throws InputError when |λ| != ab, IntegrityError if the
/// inner product is not a non-negative integer.
BigInt multiplicity(const FoulkesShape& s, const Partition& lambda, const MultiplicityOptions& opts = {});

/// ⟨ψ^η, χ^λ⟩.
BigInt gen_multiplicity(const GeneralizedShape& g, const Partition& lambda);

struct DecomposeOptions {
    bool fast_paths = true;
    unsigned threads = 0;
    StopControl stop;
};

using PartitionFilter = std::function<bool(const Partition&)>;

/// Multiplicity of every λ ⊢ ab accepted by `filter` (all λ when empty),
/// zero entries included, descending lexicographic order.
DecompositionTable decompose(const FoulkesShape& s, const PartitionFilter& filter = {},
                             const DecomposeOptions& opts = {});

/// Same for any (virtual) character given in the power-sum basis.
DecompositionTable decompose_series(const PSeries& f, const PartitionFilter& filter = {},
                                    const DecomposeOptions& opts = {},
                                    std::optional<int> max_rows = std::nullopt);

/// Entries with non-zero multiplicity only.
DecompositionTable nonzero_part(const DecompositionTable& t);

/// |Ω^(a^b)| = (ab)! / ((a!)^b b!).
BigInt omega_size(const FoulkesShape& s);

/// ⟨φ^(a^b), (ε_k × 1_{ab-k})↑^{S_ab}⟩. Throws InputError unless 0 <= k <= ab.
BigInt exterior_pairing(const FoulkesShape& s, int k);

/// Size of the S_r × S_{ab-r} orbit of set partitions linked to λ ∈ P(r)_a^b.
/// Throws InputError when r >= ab or λ is not in P(r)_a^b.
BigInt orbit_size(const FoulkesShape& s, int r, const Partition& lambda);

}  // namespace foulkes
