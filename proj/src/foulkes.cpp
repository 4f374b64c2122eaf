#include "foulkes/foulkes.hpp"

#include "foulkes/errors.hpp"

#include <algorithm>

namespace foulkes {

namespace {

BigInt checked_multiplicity(const Rational& q, const std::string& what)
{
    if (!is_integer(q) || q < 0)
        throw IntegrityError("multiplicity of " + what + " is not a non-negative integer: " + q.get_str());
    return q.get_num();
}

}  // namespace

FoulkesShape::FoulkesShape(int a_, int b_) : a(a_), b(b_)
{
    if (a < 1 || b < 1)
        throw InputError("Foulkes shape needs a >= 1 and b >= 1");
}

GeneralizedShape::GeneralizedShape(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs))
{
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto [a, b] = pairs_[i];
        if (a < 1 || b < 1)
            throw InputError("generalized shape entries must be positive");
        if (i > 0 && pairs_[i - 1].first <= a)
            throw InputError("generalized shape block sizes must strictly decrease");
        degree_ += a * b;
    }
}

GeneralizedShape GeneralizedShape::from_partition(const Partition& eta)
{
    std::vector<std::pair<int, int>> pairs;
    for (int part : eta.parts()) {
        if (!pairs.empty() && pairs.back().first == part)
            ++pairs.back().second;
        else
            pairs.emplace_back(part, 1);
    }
    return GeneralizedShape(std::move(pairs));
}

Partition GeneralizedShape::as_partition() const
{
    std::vector<int> parts;
    for (auto [a, b] : pairs_)
        parts.insert(parts.end(), static_cast<std::size_t>(b), a);
    return Partition(std::move(parts));
}

BigInt DecompositionTable::dimension_sum() const
{
    BigInt sum = 0;
    for (const auto& [lambda, m] : entries)
        if (m != 0)
            sum += m * dimension(lambda);
    return sum;
}

BigInt DecompositionTable::multiplicity(const Partition& lambda) const
{
    auto it = entries.find(lambda);
    return it == entries.end() ? BigInt(0) : it->second;
}

PSeries foulkes_series(const FoulkesShape& s) { return plethysm_h(s.b, h_series(s.a)); }

PSeries gen_foulkes_series(const GeneralizedShape& g)
{
    PSeries out = h_series(0);
    for (auto [a, b] : g.pairs())
        out = multiply(out, foulkes_series(FoulkesShape(a, b)));
    return out;
}

BigInt multiplicity(const FoulkesShape& s, const Partition& lambda, const MultiplicityOptions& opts)
{
    if (lambda.weight() != s.degree())
        throw InputError("partition " + to_string(lambda) + " has weight " +
                         std::to_string(lambda.weight()) + ", expected ab = " + std::to_string(s.degree()));
    if (opts.fast_paths) {
        if (lambda.length() > s.b)
            return 0;
        if (!dominates(lambda, s.as_partition()))
            return 0;
    }
    const PSeries f = foulkes_series(s);
    Rational q;
    if (char_row_store()) {
        const ClassFunction row = char_row(lambda);
        q = 0;
        for (const auto& [mu, c] : f.terms())
            q += c * Rational(row.value(mu));
        q.canonicalize();
    } else {
        q = inner_with_schur(f, lambda);
    }
    return checked_multiplicity(q, to_string(lambda));
}

BigInt gen_multiplicity(const GeneralizedShape& g, const Partition& lambda)
{
    if (lambda.weight() != g.degree())
        throw InputError("partition " + to_string(lambda) + " has weight " +
                         std::to_string(lambda.weight()) + ", expected " + std::to_string(g.degree()));
    return checked_multiplicity(inner_with_schur(gen_foulkes_series(g), lambda), to_string(lambda));
}

DecompositionTable decompose_series(const PSeries& f, const PartitionFilter& filter,
                                    const DecomposeOptions& opts, std::optional<int> max_rows)
{
    ExpandOptions ex;
    ex.max_rows = max_rows;
    ex.threads = opts.threads;
    ex.stop = opts.stop;
    const auto coeffs = schur_coefficients(f, ex);
    DecompositionTable table;
    table.degree = f.degree();
    for (const auto& lambda : enum_partitions(f.degree())) {
        if (filter && !filter(lambda))
            continue;
        auto it = coeffs.find(lambda);
        if (it == coeffs.end()) {
            table.entries.emplace(lambda, 0);  // outside the row cap
            continue;
        }
        if (!is_integer(it->second))
            throw IntegrityError("coefficient of s_" + to_string(lambda) + " is not an integer: " +
                                 it->second.get_str());
        table.entries.emplace(lambda, it->second.get_num());
    }
    return table;
}

DecompositionTable decompose(const FoulkesShape& s, const PartitionFilter& filter, const DecomposeOptions& opts)
{
    std::optional<int> rows;
    if (opts.fast_paths)
        rows = s.b;
    DecompositionTable table = decompose_series(foulkes_series(s), filter, opts, rows);
    const Partition rect = s.as_partition();
    for (auto& [lambda, m] : table.entries) {
        if (opts.fast_paths && !dominates(lambda, rect))
            m = 0;
        if (m < 0)
            throw IntegrityError("negative multiplicity at " + to_string(lambda));
    }
    return table;
}

DecompositionTable nonzero_part(const DecompositionTable& t)
{
    DecompositionTable out;
    out.degree = t.degree;
    for (const auto& [lambda, m] : t.entries)
        if (m != 0)
            out.entries.emplace(lambda, m);
    return out;
}

BigInt omega_size(const FoulkesShape& s)
{
    BigInt fa = factorial(static_cast<unsigned long>(s.a));
    BigInt denom;
    mpz_pow_ui(denom.get_mpz_t(), fa.get_mpz_t(), static_cast<unsigned long>(s.b));
    denom *= factorial(static_cast<unsigned long>(s.b));
    return factorial(static_cast<unsigned long>(s.degree())) / denom;
}

BigInt exterior_pairing(const FoulkesShape& s, int k)
{
    if (k < 0 || k > s.degree())
        throw InputError("exterior_pairing needs 0 <= k <= ab");
    const PSeries induced = multiply(e_series(k), h_series(s.degree() - k));
    return checked_multiplicity(inner(foulkes_series(s), induced), "exterior power " + std::to_string(k));
}

BigInt orbit_size(const FoulkesShape& s, int r, const Partition& lambda)
{
    if (r < 0 || r >= s.degree())
        throw InputError("orbit_size needs 0 <= r < ab");
    if (lambda.weight() != r || lambda.length() > s.b || lambda.first() > s.a)
        throw InputError(to_string(lambda) + " is not in P(" + std::to_string(r) + ")_" +
                         std::to_string(s.a) + "^" + std::to_string(s.b));
    // Set partitions of {1..r} with block sizes λ (blocks unordered) ...
    BigInt inside = factorial(static_cast<unsigned long>(r));
    for (int part : lambda.parts())
        inside /= factorial(static_cast<unsigned long>(part));
    for (int v = 1; v <= lambda.first(); ++v)
        inside /= factorial(static_cast<unsigned long>(lambda.multiplicity_of(v)));
    // ... then the now distinguishable blocks are filled from the other ab-r
    // points and the remaining b-p(λ) blocks are formed unordered.
    const int empty_blocks = s.b - lambda.length();
    BigInt outside = factorial(static_cast<unsigned long>(s.degree() - r));
    for (int part : lambda.parts())
        outside /= factorial(static_cast<unsigned long>(s.a - part));
    BigInt fa = factorial(static_cast<unsigned long>(s.a));
    BigInt fa_pow;
    mpz_pow_ui(fa_pow.get_mpz_t(), fa.get_mpz_t(), static_cast<unsigned long>(empty_blocks));
    outside /= fa_pow * factorial(static_cast<unsigned long>(empty_blocks));
    return inside * outside;
}

}  // namespace foulkes
