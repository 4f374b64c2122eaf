#include "foulkes/theorems.hpp"

#include "foulkes/errors.hpp"

namespace foulkes {

namespace {

using Verdict = Prediction::Verdict;

Prediction no_claim(const Partition& lambda, Rule rule) { return {lambda, Verdict::NoClaim, 0, rule}; }
Prediction zero(const Partition& lambda, Rule rule) { return {lambda, Verdict::Zero, 0, rule}; }
Prediction one(const Partition& lambda, Rule rule) { return {lambda, Verdict::One, 1, rule}; }
Prediction value(const Partition& lambda, Rule rule, BigInt v) { return {lambda, Verdict::Value, std::move(v), rule}; }

// λ = (n-r, r) with 0 <= r <= n/2, else nullopt.
std::optional<int> two_row_index(const Partition& lambda)
{
    if (lambda.length() > 2)
        return std::nullopt;
    return lambda[2];
}

// λ = (n-2k, 2^k) with k >= 1, else nullopt.
std::optional<int> column_inside_index(const Partition& lambda)
{
    if (lambda.length() < 2)
        return std::nullopt;
    for (int j = 2; j <= lambda.length(); ++j)
        if (lambda[j] != 2)
            return std::nullopt;
    return lambda.length() - 1;
}

}  // namespace

std::string_view rule_name(Rule r)
{
    switch (r) {
    case Rule::ManyParts: return "many-parts";
    case Rule::Hook: return "hook-theorem";
    case Rule::Main: return "main-theorem";
    case Rule::SmallInside: return "small-inside";
    case Rule::TwoRowYoung: return "two-row-young";
    case Rule::TwoRow: return "two-row";
    case Rule::GenHooks: return "generalized-hooks";
    case Rule::ColumnInside: return "column-inside";
    }
    return "unknown";
}

std::string Prediction::describe() const
{
    std::string v;
    switch (verdict) {
    case Verdict::Zero: v = "ZERO"; break;
    case Verdict::One: v = "ONE"; break;
    case Verdict::Value: v = "VALUE(" + value.get_str() + ")"; break;
    case Verdict::NoClaim: v = "NO_CLAIM"; break;
    }
    return v + " by " + std::string(rule_name(source));
}

Prediction predict_many_parts(const Partition& lambda, int b)
{
    return lambda.length() > b ? zero(lambda, Rule::ManyParts) : no_claim(lambda, Rule::ManyParts);
}

Prediction predict_hook(const Partition& lambda)
{
    if (lambda.empty())
        return no_claim(lambda, Rule::Hook);
    const auto leg = hook_leg(lambda);
    return leg && *leg >= 1 ? zero(lambda, Rule::Hook) : no_claim(lambda, Rule::Hook);
}

Prediction predict_main(const Partition& lambda)
{
    const HookCoordinates h = to_hook_coords(lambda);
    // t <= k holds by construction of the coordinates.
    const long k = h.k;
    const long n = h.tail_weight;
    const long alpha1 = h.inside.first();
    if (k > n && 2 * alpha1 < (k - n) * (k - n + 1))
        return zero(lambda, Rule::Main);
    return no_claim(lambda, Rule::Main);
}

Prediction predict_small_inside(const Partition& lambda)
{
    if (lambda.empty())
        return no_claim(lambda, Rule::SmallInside);
    const HookCoordinates h = to_hook_coords(lambda);
    const int m = h.inside.weight();
    if (m >= 1 && m <= h.k && h.inside != rectangle(1, h.k))
        return zero(lambda, Rule::SmallInside);
    return no_claim(lambda, Rule::SmallInside);
}

TwoRowPrediction two_row_formula(int a, int b, int r)
{
    const FoulkesShape s(a, b);
    const int n = s.degree();
    if (r < 0 || 2 * r > n)
        throw InputError("two_row_formula needs 0 <= r <= ab/2");
    const Partition lambda({n - r, r});
    const BigInt here = count_P(r, a, b);
    const BigInt below = r == 0 ? BigInt(0) : count_P(r - 1, a, b);
    return {value(lambda, Rule::TwoRowYoung, here), value(lambda, Rule::TwoRow, here - below)};
}

Prediction predict_gen_hooks(const GeneralizedShape& g, const Partition& lambda)
{
    if (lambda.weight() != g.degree())
        throw InputError("predict_gen_hooks: weight mismatch");
    if (lambda.empty())
        return no_claim(lambda, Rule::GenHooks);
    const auto leg = hook_leg(lambda);
    return leg && *leg >= g.distinct() ? zero(lambda, Rule::GenHooks) : no_claim(lambda, Rule::GenHooks);
}

Prediction claim_column_inside(int a, int b, int k)
{
    const FoulkesShape s(a, b);
    if (k < 1)
        throw InputError("claim_column_inside needs k >= 1");
    const int first_row = s.degree() - 2 * k;
    if (first_row < 2)
        return no_claim(Partition(), Rule::ColumnInside);
    std::vector<int> parts(static_cast<std::size_t>(k + 1), 2);
    parts[0] = first_row;
    const Partition lambda(std::move(parts));
    if (k < b && a >= 2)
        return one(lambda, Rule::ColumnInside);
    return no_claim(lambda, Rule::ColumnInside);
}

std::vector<Prediction> predictions_for(const FoulkesShape& s, const Partition& lambda)
{
    if (lambda.weight() != s.degree())
        throw InputError("predictions_for: weight mismatch");
    std::vector<Prediction> out;
    auto keep = [&](Prediction p) {
        if (p.claims())
            out.push_back(std::move(p));
    };
    keep(predict_many_parts(lambda, s.b));
    keep(predict_hook(lambda));
    keep(predict_main(lambda));
    keep(predict_small_inside(lambda));
    keep(predict_gen_hooks(GeneralizedShape({{s.a, s.b}}), lambda));
    if (auto r = two_row_index(lambda))
        keep(two_row_formula(s.a, s.b, *r).irreducible);
    if (auto k = column_inside_index(lambda)) {
        Prediction p = claim_column_inside(s.a, s.b, *k);
        if (p.lambda == lambda)
            keep(std::move(p));
    }
    return out;
}

CensusReport census(int a, int b, const CensusOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    const FoulkesShape s(a, b);
    DecomposeOptions dopts;
    dopts.threads = opts.threads;
    dopts.stop = opts.stop;
    const auto table = decompose(s, [&](const Partition& l) { return l.length() <= b; }, dopts);
    CensusReport report;
    report.a = a;
    report.b = b;
    for (const auto& [lambda, m] : table.entries) {
        ++report.total_considered;
        if (m != 0)
            continue;
        ++report.zero_count;
        if (predict_main(lambda).verdict == Verdict::Zero)
            ++report.predicted_count;
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

std::string to_string(const Discrepancy& d)
{
    return "lambda=" + to_string(d.lambda) + " rule=" + std::string(rule_name(d.rule)) + " claimed=" + d.claimed +
           " computed=" + d.computed;
}

std::vector<Discrepancy> verify_all(int a, int b, const CensusOptions& opts)
{
    const FoulkesShape s(a, b);
    DecomposeOptions dopts;
    dopts.fast_paths = false;
    dopts.threads = opts.threads;
    dopts.stop = opts.stop;
    const auto table = decompose(s, {}, dopts);

    std::vector<Discrepancy> out;
    for (const auto& [lambda, m] : table.entries)
        for (const auto& p : predictions_for(s, lambda))
            if (p.value != m)
                out.push_back({lambda, p.source, p.describe(), m.get_str()});

    const PSeries phi = foulkes_series(s);
    for (int r = 0; 2 * r <= s.degree(); ++r) {
        opts.stop.check();
        const auto young = two_row_formula(a, b, r).young;
        const Rational computed = inner(phi, multiply(h_series(s.degree() - r), h_series(r)));
        if (computed != Rational(young.value))
            out.push_back({young.lambda, Rule::TwoRowYoung, young.describe(), computed.get_str()});
    }
    return out;
}

}  // namespace foulkes
