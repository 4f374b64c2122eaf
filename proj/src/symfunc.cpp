#include "foulkes/symfunc.hpp"

#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"

#include <mutex>
#include <unordered_map>

namespace foulkes {

BigInt ClassFunction::value(const Partition& cycle_type) const
{
    auto it = values_.find(cycle_type);
    return it == values_.end() ? BigInt(0) : it->second;
}

void ClassFunction::set(const Partition& cycle_type, BigInt v)
{
    if (cycle_type.weight() != degree_)
        throw InputError("class " + to_string(cycle_type) + " is not a cycle type of S_" +
                         std::to_string(degree_));
    if (v == 0)
        values_.erase(cycle_type);
    else
        values_[cycle_type] = std::move(v);
}

Rational PSeries::coeff(const Partition& mu) const
{
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PSeries::add(const Partition& mu, const Rational& c)
{
    if (mu.weight() != degree_)
        throw InputError("term p_" + to_string(mu) + " has the wrong degree for a degree-" +
                         std::to_string(degree_) + " series");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

PSeries& PSeries::operator+=(const PSeries& other)
{
    if (other.degree_ != degree_ && !other.is_zero())
        throw InputError("adding series of different degrees");
    for (const auto& [mu, c] : other.terms_)
        add(mu, c);
    return *this;
}

PSeries& PSeries::operator-=(const PSeries& other)
{
    if (other.degree_ != degree_ && !other.is_zero())
        throw InputError("subtracting series of different degrees");
    for (const auto& [mu, c] : other.terms_)
        add(mu, -c);
    return *this;
}

PSeries& PSeries::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, v] : terms_)
        v *= c;
    return *this;
}

std::string PSeries::key() const
{
    std::string k = std::to_string(degree_) + "|";
    for (const auto& [mu, c] : terms_) {
        k += to_string(mu);
        k += ':';
        k += c.get_str();
        k += ';';
    }
    return k;
}

PSeries p_series(const Partition& mu)
{
    PSeries f(mu.weight());
    f.add(mu, 1);
    return f;
}

PSeries h_series(int n)
{
    if (n < 0)
        throw InputError("h_series: negative degree");
    PSeries f(n);
    for (const auto& mu : enum_partitions(n))
        f.add(mu, ratio(1, z_order(mu)));
    return f;
}

PSeries e_series(int n)
{
    if (n < 0)
        throw InputError("e_series: negative degree");
    PSeries f(n);
    for (const auto& mu : enum_partitions(n)) {
        const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
        f.add(mu, ratio(sign, z_order(mu)));
    }
    return f;
}

PSeries multiply(const PSeries& f, const PSeries& g)
{
    PSeries out(f.degree() + g.degree());
    std::vector<int> merged;
    for (const auto& [lam, cf] : f.terms())
        for (const auto& [mu, cg] : g.terms()) {
            merged.assign(lam.vec().begin(), lam.vec().end());
            merged.insert(merged.end(), mu.vec().begin(), mu.vec().end());
            out.add(Partition(merged), cf * cg);
        }
    return out;
}

PSeries plethysm_power(int k, const PSeries& f)
{
    if (k < 1)
        throw InputError("plethysm_power: k must be at least 1");
    PSeries out(k * f.degree());
    for (const auto& [mu, c] : f.terms()) {
        std::vector<int> parts(mu.vec());
        for (int& x : parts)
            x *= k;
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

namespace {

struct PlethysmCache {
    std::mutex mutex;
    std::unordered_map<std::string, std::vector<PSeries>> sequences;
};

PlethysmCache& plethysm_cache()
{
    static PlethysmCache cache;
    return cache;
}

}  // namespace

PSeries plethysm_h(int b, const PSeries& f)
{
    if (b < 0)
        throw InputError("plethysm_h: b must be non-negative");
    const std::string key = f.key();
    auto& cache = plethysm_cache();
    std::vector<PSeries> seq;
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.sequences.find(key);
        if (it != cache.sequences.end()) {
            if (static_cast<int>(it->second.size()) > b)
                return it->second[static_cast<std::size_t>(b)];
            seq = it->second;
        }
    }
    if (seq.empty())
        seq.push_back(h_series(0));
    std::vector<PSeries> powers;
    for (int k = 1; k <= b; ++k)
        powers.push_back(plethysm_power(k, f));
    for (int j = static_cast<int>(seq.size()); j <= b; ++j) {
        PSeries g(j * f.degree());
        for (int k = 1; k <= j; ++k)
            g += multiply(powers[static_cast<std::size_t>(k - 1)], seq[static_cast<std::size_t>(j - k)]);
        g *= ratio(1, j);
        seq.push_back(std::move(g));
    }
    PSeries result = seq[static_cast<std::size_t>(b)];
    {
        // Idempotent: a concurrent writer computed the same values.
        std::lock_guard lock(cache.mutex);
        auto& slot = cache.sequences[key];
        if (slot.size() < seq.size())
            slot = std::move(seq);
    }
    return result;
}

void clear_plethysm_cache()
{
    auto& cache = plethysm_cache();
    std::lock_guard lock(cache.mutex);
    cache.sequences.clear();
}

PSeries schur_series(const Partition& lambda)
{
    const int n = lambda.weight();
    PSeries f(n);
    for (const auto& mu : enum_partitions(n))
        f.add(mu, ratio(mn_char(lambda, mu), z_order(mu)));
    return f;
}

Rational inner(const PSeries& f, const PSeries& g)
{
    if (f.degree() != g.degree())
        throw InputError("inner product of series of degrees " + std::to_string(f.degree()) +
                         " and " + std::to_string(g.degree()));
    const PSeries& small = f.size() <= g.size() ? f : g;
    const PSeries& large = f.size() <= g.size() ? g : f;
    Rational sum = 0;
    for (const auto& [mu, c] : small.terms()) {
        auto it = large.terms().find(mu);
        if (it != large.terms().end())
            sum += c * it->second * Rational(z_order(mu));
    }
    sum.canonicalize();
    return sum;
}

Rational inner_with_schur(const PSeries& f, const Partition& lambda)
{
    if (f.degree() != lambda.weight())
        throw InputError("inner product with s_" + to_string(lambda) + " needs degree " +
                         std::to_string(lambda.weight()));
    Rational sum = 0;
    for (const auto& [mu, c] : f.terms())
        sum += c * Rational(mn_char(lambda, mu));
    sum.canonicalize();
    return sum;
}

ClassFunction to_class_function(const PSeries& f)
{
    ClassFunction cf(f.degree());
    for (const auto& [mu, c] : f.terms()) {
        Rational v = c * Rational(z_order(mu));
        v.canonicalize();
        if (!is_integer(v))
            throw InputError("series is not a virtual character: value " + v.get_str() + " at " +
                             to_string(mu));
        cf.set(mu, v.get_num());
    }
    return cf;
}

PSeries from_class_function(const ClassFunction& c)
{
    PSeries f(c.degree());
    for (const auto& [mu, v] : c.values())
        f.add(mu, ratio(v, z_order(mu)));
    return f;
}

}  // namespace foulkes
