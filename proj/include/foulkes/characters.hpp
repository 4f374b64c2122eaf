#pragma once

#include "foulkes/bigint.hpp"
#include "foulkes/class_function.hpp"
#include "foulkes/control.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/symfunc.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace foulkes {

/// χ^λ(μ) by border-strip removal, largest cycle first, memoized on
/// (remaining shape, remaining cycle type). Throws InputError on a weight mismatch.
BigInt mn_char(const Partition& lambda, const Partition& mu);

/// Bounds the global mn_char memo (LRU eviction); 0 means unbounded, the default.
void set_mn_cache_limit(std::size_t max_entries);
std::size_t mn_cache_size();
void clear_mn_cache();

/// χ^λ on every class of S_n, or only on `support` when given.
ClassFunction char_row(const Partition& lambda,
                       std::optional<std::span<const Partition>> support = std::nullopt);

/// Hook-length formula n!/Π h(i,j).
BigInt dimension(const Partition& lambda);

/// Character of the Young permutation module M^μ.
ClassFunction young_perm_char(const Partition& mu);

/// Σ_μ f(μ) g(μ) / z_μ. Throws InputError on a degree mismatch.
Rational inner_cf(const ClassFunction& f, const ClassFunction& g);

/// Persist full character rows under `dir` (versioned binary files), or
/// stop persisting with std::nullopt. Unreadable or stale files are ignored.
void set_char_row_store(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> char_row_store();

struct ExpandOptions {
    /// Only λ with at most this many rows are computed (default: all).
    std::optional<int> max_rows;
    unsigned threads = 0;
    StopControl stop;
};

/// Largest degree the batch expander accepts (int64 character values).
inline constexpr int kMaxExpandDegree = 33;

/// ⟨f, s_λ⟩ for every λ ⊢ deg f within the row cap, descending lexicographic
/// order, zero coefficients included.
///
/// Works column by column: the p-support of f is walked as a prefix trie of
/// cycle parts and χ^·(μ) is built forward by adding border strips (on the
/// abacus) part by part, so shared prefixes are evaluated once. Rows never
/// shrink when a strip is added, so capping rows prunes every intermediate
/// shape without changing the retained values. Throws BudgetExceeded when
/// deg f > kMaxExpandDegree.
PartitionMap<Rational> schur_coefficients(const PSeries& f, const ExpandOptions& options = {});

}  // namespace foulkes
