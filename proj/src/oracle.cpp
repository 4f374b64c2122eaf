#include "foulkes/oracle.hpp"

#include "foulkes/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace foulkes::oracle {

namespace {

void sort_blocks(std::vector<std::uint32_t>& blocks)
{
    std::sort(blocks.begin(), blocks.end(), [](std::uint32_t x, std::uint32_t y) {
        return std::countr_zero(x) < std::countr_zero(y);
    });
}

std::uint32_t apply(std::uint32_t mask, const std::vector<int>& perm)
{
    std::uint32_t out = 0;
    while (mask != 0) {
        const int i = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1U << (perm[static_cast<std::size_t>(i)] - 1);
    }
    return out;
}

void check_cap(int n, int cap)
{
    if (n > cap || n > 32)
        throw BudgetExceeded("explicit enumeration on " + std::to_string(n) +
                             " points exceeds the cap of " + std::to_string(std::min(cap, 32)));
}

struct OmegaBuilder {
    int n;
    std::vector<int> sizes;  // distinct sizes
    std::vector<int> counts;  // remaining blocks of each size
    std::vector<std::uint32_t> blocks;
    std::vector<SetPartition> out;

    void fill(std::uint32_t used)
    {
        const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
        if (used == all) {
            out.emplace_back(n, blocks);
            return;
        }
        const int first = std::countr_zero(~used & all);
        for (std::size_t s = 0; s < sizes.size(); ++s) {
            if (counts[s] == 0)
                continue;
            --counts[s];
            choose(used | (1U << first), 1U << first, first + 1, sizes[s] - 1);
            ++counts[s];
        }
    }

    // Extends `block` by `need` more unused points chosen from positions >= from.
    void choose(std::uint32_t used, std::uint32_t block, int from, int need)
    {
        if (need == 0) {
            blocks.push_back(block);
            fill(used);
            blocks.pop_back();
            return;
        }
        for (int i = from; i < n; ++i) {
            if (used & (1U << i))
                continue;
            choose(used | (1U << i), block | (1U << i), i + 1, need - 1);
        }
    }
};

}  // namespace

SetPartition::SetPartition(int n, std::vector<std::uint32_t> blocks) : n_(n), blocks_(std::move(blocks))
{
    if (n < 0 || n > 32)
        throw InputError("set partitions support at most 32 points");
    std::uint32_t seen = 0;
    for (auto b : blocks_) {
        if (b == 0 || (seen & b) != 0)
            throw InputError("set partition blocks must be non-empty and disjoint");
        seen |= b;
    }
    const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
    if (seen != all)
        throw InputError("set partition blocks must cover 1..n");
    sort_blocks(blocks_);
}

SetPartition SetPartition::permuted(const std::vector<int>& perm) const
{
    std::vector<std::uint32_t> image;
    image.reserve(blocks_.size());
    for (auto b : blocks_)
        image.push_back(apply(b, perm));
    return SetPartition(n_, std::move(image));
}

std::string to_string(const SetPartition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i > 0)
            out += '|';
        bool first = true;
        for (int x = 0; x < p.points(); ++x) {
            if (!(p.blocks()[i] & (1U << x)))
                continue;
            if (!first && p.points() >= 10)
                out += ',';
            out += std::to_string(x + 1);
            first = false;
        }
    }
    return out;
}

std::vector<SetPartition> enum_omega(const Partition& shape, int cap)
{
    const int n = shape.weight();
    check_cap(n, cap);
    OmegaBuilder builder{n, {}, {}, {}, {}};
    for (int part : shape.parts()) {
        if (!builder.sizes.empty() && builder.sizes.back() == part) {
            ++builder.counts.back();
        } else {
            builder.sizes.push_back(part);
            builder.counts.push_back(1);
        }
    }
    builder.fill(0);
    std::sort(builder.out.begin(), builder.out.end());
    return std::move(builder.out);
}

std::vector<int> canonical_permutation(const Partition& mu)
{
    std::vector<int> perm(static_cast<std::size_t>(mu.weight()));
    int start = 0;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i)
            perm[static_cast<std::size_t>(start + i)] = start + (i + 1) % len + 1;
        start += len;
    }
    return perm;
}

BigInt fixed_count(const std::vector<SetPartition>& omega, const Partition& mu)
{
    BigInt count = 0;
    if (omega.empty())
        return count;
    if (omega.front().points() != mu.weight())
        throw InputError("cycle type " + to_string(mu) + " does not act on " +
                         std::to_string(omega.front().points()) + " points");
    const auto perm = canonical_permutation(mu);
    for (const auto& p : omega)
        if (p.permuted(perm) == p)
            ++count;
    return count;
}

ClassFunction brute_foulkes_char(int a, int b, int cap)
{
    if (a < 1 || b < 1)
        throw InputError("brute_foulkes_char needs a, b >= 1");
    const auto omega = enum_omega(rectangle(a, b), cap);
    ClassFunction cf(a * b);
    for (const auto& mu : enum_partitions(a * b))
        cf.set(mu, fixed_count(omega, mu));
    return cf;
}

Partition linked_partition(const SetPartition& p, int r)
{
    if (r < 1 || r >= p.points())
        throw InputError("linked_partition needs 1 <= r < n");
    const std::uint32_t low = (1U << r) - 1;
    std::vector<int> sizes;
    for (auto b : p.blocks())
        sizes.push_back(std::popcount(b & low));
    return Partition(std::move(sizes));
}

PartitionMap<BigInt> brute_restriction_orbits(int a, int b, int r, int cap)
{
    if (a < 1 || b < 1 || r < 0 || r >= a * b)
        throw InputError("brute_restriction_orbits needs a, b >= 1 and 0 <= r < ab");
    PartitionMap<BigInt> orbits;
    for (const auto& p : enum_omega(rectangle(a, b), cap))
        ++orbits[r == 0 ? Partition() : linked_partition(p, r)];
    return orbits;
}

bool verify_trivial_quotient(int a, int b, int beta, const Partition& lambda, int cap)
{
    const int n = a * b;
    if (a < 1 || b < 1 || beta < 1 || beta >= n)
        throw InputError("verify_trivial_quotient needs 1 <= beta < ab");
    if (lambda.weight() != beta || lambda.length() > b || lambda.first() > a)
        throw InputError(to_string(lambda) + " is not in P(beta)_a^b");

    std::vector<SetPartition> linked;
    for (const auto& p : enum_omega(rectangle(a, b), cap))
        if (linked_partition(p, beta) == lambda)
            linked.push_back(p);

    // Union-find under the generators (1 2) and (1 2 ... beta) of S_beta.
    std::vector<std::size_t> parent(linked.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<int>> generators;
    if (beta >= 2) {
        std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            swap[static_cast<std::size_t>(i)] = cycle[static_cast<std::size_t>(i)] = i + 1;
        std::swap(swap[0], swap[1]);
        for (int i = 0; i < beta; ++i)
            cycle[static_cast<std::size_t>(i)] = (i + 1) % beta + 1;
        generators = {swap, cycle};
    }
    for (std::size_t i = 0; i < linked.size(); ++i)
        for (const auto& g : generators) {
            const auto image = linked[i].permuted(g);
            const auto j = static_cast<std::size_t>(
                std::lower_bound(linked.begin(), linked.end(), image) - linked.begin());
            parent[find(i)] = find(j);
        }
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < linked.size(); ++i)
        orbits += find(i) == i;

    std::vector<int> eta(static_cast<std::size_t>(b - lambda.length()), a);
    for (int part : lambda.parts())
        eta.push_back(a - part);
    const auto quotient = enum_omega(Partition(std::move(eta)), cap);
    return orbits == quotient.size();
}

}  // namespace foulkes::oracle
