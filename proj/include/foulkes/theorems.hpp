#pragma once

#include "foulkes/bigint.hpp"
#include "foulkes/control.hpp"
#include "foulkes/foulkes.hpp"
#include "foulkes/partition.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foulkes {

/// The implemented vanishing results and multiplicity formulas.
enum class Rule {
    ManyParts,      ///< p(λ) > b
    Hook,           ///< (ab-r, 1^r), 1 <= r < ab
    Main,           ///< [k:α] with k > n and α_1 < (k-n)(k-n+1)/2
    SmallInside,    ///< [k:α] with 1 <= |α| <= k and α != (1^k)
    TwoRowYoung,    ///< ⟨φ, π^(ab-r,r)⟩ = |P(r)_a^b|
    TwoRow,         ///< ⟨φ, χ^(ab-r,r)⟩ = |P(r)_a^b| - |P(r-1)_a^b|
    GenHooks,       ///< ⟨ψ^η, χ^(n-r,1^r)⟩ = 0 for r >= distinct part sizes of η
    ColumnInside,   ///< ⟨φ, χ^[k:(1^k)]⟩ = 1 for k < b (stated without proof)
};

std::string_view rule_name(Rule r);

struct Prediction {
    enum class Verdict { Zero, One, Value, NoClaim };

    Partition lambda;
    Verdict verdict = Verdict::NoClaim;
    BigInt value;  ///< the claimed multiplicity for Zero/One/Value
    Rule source = Rule::Main;

    bool claims() const noexcept { return verdict != Verdict::NoClaim; }
    std::string describe() const;
};

Prediction predict_many_parts(const Partition& lambda, int b);
Prediction predict_hook(const Partition& lambda);
/// Throws InputError on the empty partition.
Prediction predict_main(const Partition& lambda);
Prediction predict_small_inside(const Partition& lambda);

struct TwoRowPrediction {
    Prediction young;        ///< ⟨φ^(a^b), π^(ab-r,r)⟩
    Prediction irreducible;  ///< ⟨φ^(a^b), χ^(ab-r,r)⟩
};

/// Throws InputError unless 0 <= r <= ab/2.
TwoRowPrediction two_row_formula(int a, int b, int r);

/// Throws InputError when |λ| differs from the degree of η.
Prediction predict_gen_hooks(const GeneralizedShape& g, const Partition& lambda);

/// The claim for λ = [k:(1^k)] = (ab-2k, 2^k). NO_CLAIM for k >= b, when the
/// shape does not exist, and for a = 1 (there φ is trivial and the claim is false).
Prediction claim_column_inside(int a, int b, int k);

/// Every prediction (ZERO/ONE/VALUE) the implemented rules make for λ ⊢ ab.
std::vector<Prediction> predictions_for(const FoulkesShape& s, const Partition& lambda);

struct CensusReport {
    int a = 0;
    int b = 0;
    long total_considered = 0;
    long zero_count = 0;
    long predicted_count = 0;
    std::chrono::milliseconds elapsed{0};
};

struct CensusOptions {
    unsigned threads = 0;
    StopControl stop;
};

/// Over λ ⊢ ab with p(λ) <= b: how many have multiplicity 0, and how many of
/// those satisfy the hypotheses of the main vanishing theorem.
CensusReport census(int a, int b, const CensusOptions& opts = {});

struct Discrepancy {
    Partition lambda;
    Rule rule;
    std::string claimed;
    std::string computed;
};

std::string to_string(const Discrepancy& d);

/// Compares every prediction for every λ ⊢ ab with the computed
/// multiplicities (and Young-character multiplicities for the two-row rule).
std::vector<Discrepancy> verify_all(int a, int b, const CensusOptions& opts = {});

}  // namespace foulkes
