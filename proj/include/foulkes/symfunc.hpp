#pragma once

#include "foulkes/bigint.hpp"
#include "foulkes/class_function.hpp"
#include "foulkes/partition.hpp"

#include <cstddef>
#include <string>

namespace foulkes {

/// A homogeneous symmetric function of degree n in the power-sum basis,
/// Σ c_λ p_λ over λ ⊢ n, with exact rational coefficients.
class PSeries {
public:
    PSeries() = default;
    explicit PSeries(int degree) : degree_(degree) {}

    int degree() const noexcept { return degree_; }
    const PartitionMap<Rational>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coeff(const Partition& mu) const;
    /// Adds c (canonical, see ratio()) to the coefficient of p_μ; throws
    /// InputError on a weight mismatch.
    void add(const Partition& mu, const Rational& c);

    PSeries& operator+=(const PSeries& other);
    PSeries& operator-=(const PSeries& other);
    PSeries& operator*=(const Rational& c);

    friend PSeries operator+(PSeries x, const PSeries& y) { return x += y; }
    friend PSeries operator-(PSeries x, const PSeries& y) { return x -= y; }
    friend PSeries operator*(PSeries x, const Rational& c) { return x *= c; }
    friend bool operator==(const PSeries&, const PSeries&) = default;

    /// Stable textual key: equal series give equal keys.
    std::string key() const;

private:
    int degree_ = 0;
    PartitionMap<Rational> terms_;
};

/// The single term p_μ.
PSeries p_series(const Partition& mu);

/// h_n = Σ_{λ⊢n} p_λ / z_λ (the trivial character).
PSeries h_series(int n);

/// e_n = Σ_{λ⊢n} (-1)^{n-p(λ)} p_λ / z_λ (the sign character).
PSeries e_series(int n);

/// Product; on characters this is induction from a Young subgroup.
PSeries multiply(const PSeries& f, const PSeries& g);

/// p_k ∘ f: every part of every key multiplied by k.
PSeries plethysm_power(int k, const PSeries& f);

/// h_b ∘ f via g_b = (1/b) Σ_{k=1..b} (p_k ∘ f) g_{b-k}. Partial results are
/// memoized per f and shared across threads.
PSeries plethysm_h(int b, const PSeries& f);

/// Drops every memoized plethysm sequence.
void clear_plethysm_cache();

/// s_λ = Σ_μ χ^λ(μ) p_μ / z_μ.
PSeries schur_series(const Partition& lambda);

/// Hall inner product Σ z_λ f_λ g_λ. Throws InputError on a degree mismatch.
Rational inner(const PSeries& f, const PSeries& g);

/// ⟨f, s_λ⟩ evaluating χ^λ only on the support of f.
Rational inner_with_schur(const PSeries& f, const Partition& lambda);

/// value(μ) = z_μ f_μ. Throws InputError when a value is not an integer.
ClassFunction to_class_function(const PSeries& f);
PSeries from_class_function(const ClassFunction& c);

}  // namespace foulkes
