#include "cli.hpp"

#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"
#include "foulkes/foulkes.hpp"
#include "foulkes/oracle.hpp"
#include "foulkes/serialize.hpp"
#include "foulkes/theorems.hpp"
#include "foulkes/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace foulkes::cli {

namespace {

constexpr int kCensusMaxAb = 30;

struct Globals {
    unsigned threads = 0;
    int max_ab = 20;
    double time_limit = 0;
    bool allow_large = false;
};

struct ShapeArgs {
    int a = 0;
    int b = 0;
};

void add_shape(CLI::App* cmd, ShapeArgs& s)
{
    cmd->add_option("a", s.a, "block size")->required()->check(CLI::PositiveNumber);
    cmd->add_option("b", s.b, "number of blocks")->required()->check(CLI::PositiveNumber);
}

StopControl make_stop(const Globals& g)
{
    StopControl stop;
    stop.stop_flag = &stop_flag();
    if (g.time_limit > 0)
        stop.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(g.time_limit));
    return stop;
}

void check_budget(const Globals& g, const FoulkesShape& s, int limit)
{
    if (g.allow_large) {
        if (s.degree() > kMaxExpandDegree)
            throw BudgetExceeded("ab = " + std::to_string(s.degree()) + " exceeds the engine limit of " +
                                 std::to_string(kMaxExpandDegree));
        return;
    }
    if (s.degree() > limit)
        throw BudgetExceeded("ab = " + std::to_string(s.degree()) + " exceeds the compute budget of " +
                             std::to_string(limit) + " (use --max-ab or --allow-large)");
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows)
            width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size())
                s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << s << '\n';
    };
    line(header);
    for (const auto& r : rows)
        line(r);
}

std::string alpha_text(const Partition& alpha) { return alpha.empty() ? "()" : to_string(alpha); }

int cmd_multiplicity(const Globals& g, const ShapeArgs& sa, const std::string& lambda_text, bool no_fastpath,
                     const std::string& format, std::ostream& out)
{
    const FoulkesShape s(sa.a, sa.b);
    const Partition lambda = parse_partition(lambda_text);
    if (lambda.weight() != s.degree())
        throw InputError("lambda " + to_string(lambda) + " has weight " + std::to_string(lambda.weight()) +
                         " but ab = " + std::to_string(s.degree()));
    check_budget(g, s, g.max_ab);
    MultiplicityOptions opts;
    opts.fast_paths = !no_fastpath;
    const BigInt m = multiplicity(s, lambda, opts);
    const auto preds = predictions_for(s, lambda);
    if (format == "json") {
        Json p = Json::array();
        for (const auto& pr : preds)
            p.push_back({{"rule", std::string(rule_name(pr.source))}, {"claim", pr.value.get_str()}});
        Json j = {{"a", s.a}, {"b", s.b}, {"lambda", to_string(lambda)}, {"mult", m.get_str()}, {"predicted_by", p}};
        out << j.dump(2) << '\n';
    } else {
        out << "multiplicity: " << m.get_str() << '\n';
        if (preds.empty()) {
            out << "predicted-by: none\n";
        } else {
            for (const auto& pr : preds)
                out << "predicted-by: " << rule_name(pr.source) << " (" << pr.value.get_str() << ")\n";
        }
    }
    return kOk;
}

int cmd_decompose(const Globals& g, const ShapeArgs& sa, const std::string& format, bool nonzero_only,
                  bool no_fastpath, std::ostream& out)
{
    const FoulkesShape s(sa.a, sa.b);
    check_budget(g, s, g.max_ab);
    DecomposeOptions opts;
    opts.fast_paths = !no_fastpath;
    opts.threads = g.threads;
    opts.stop = make_stop(g);
    DecompositionTable table = decompose(s, {}, opts);
    const BigInt dim_sum = table.dimension_sum();
    const BigInt omega = omega_size(s);
    if (format == "json") {
        out << to_json(s, nonzero_only ? nonzero_part(table) : table).dump(2) << '\n';
    } else if (format == "csv") {
        out << to_csv(nonzero_only ? nonzero_part(table) : table);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [lambda, m] : nonzero_part(table).entries)
            rows.push_back({to_string(lambda), m.get_str(), dimension(lambda).get_str()});
        print_table(out, {"lambda", "mult", "dimension"}, rows);
        out << "dimension sum: " << dim_sum.get_str() << " (|Omega| = " << omega.get_str() << ") "
            << (dim_sum == omega ? "OK" : "MISMATCH") << '\n';
    }
    return dim_sum == omega ? kOk : kDiscrepancy;
}

int cmd_census(const Globals& g, const ShapeArgs& sa, const std::string& format, std::ostream& out)
{
    const FoulkesShape s(sa.a, sa.b);
    check_budget(g, s, std::max(g.max_ab, kCensusMaxAb));
    CensusOptions opts;
    opts.threads = g.threads;
    opts.stop = make_stop(g);
    const CensusReport r = census(s.a, s.b, opts);
    if (format == "json")
        out << to_json(r).dump() << '\n';
    else
        out << "a=" << r.a << " b=" << r.b << " total=" << r.total_considered << " zero=" << r.zero_count
            << " predicted=" << r.predicted_count << " elapsed_ms=" << r.elapsed.count() << '\n';
    return kOk;
}

int cmd_verify(const Globals& g, const ShapeArgs& sa, std::ostream& out)
{
    const FoulkesShape s(sa.a, sa.b);
    check_budget(g, s, g.max_ab);
    CensusOptions opts;
    opts.threads = g.threads;
    opts.stop = make_stop(g);
    const auto issues = verify_all(s.a, s.b, opts);
    if (issues.empty()) {
        out << "verify " << s.a << " " << s.b << ": no discrepancies\n";
        return kOk;
    }
    for (const auto& d : issues)
        out << "DISCREPANCY " << to_string(d) << '\n';
    out << issues.size() << " discrepancies\n";
    return kDiscrepancy;
}

int cmd_restrict(const Globals& g, const ShapeArgs& sa, int r, const std::string& format, std::ostream& out)
{
    const FoulkesShape s(sa.a, sa.b);
    if (r < 0 || r >= s.degree())
        throw InputError("r must satisfy 0 <= r < ab = " + std::to_string(s.degree()));
    check_budget(g, s, std::max(g.max_ab, kMaxExpandDegree));
    BigInt total = 0;
    const BigInt omega = omega_size(s);
    const auto family = enum_P(r, s.a, s.b);
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& lambda : family) {
            const BigInt size = orbit_size(s, r, lambda);
            total += size;
            rows.push_back({{"lambda", to_string(lambda)}, {"orbit_size", size.get_str()}});
        }
        out << Json({{"a", s.a}, {"b", s.b}, {"r", r}, {"orbits", rows}, {"omega", omega.get_str()}}).dump(2)
            << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& lambda : family) {
            const BigInt size = orbit_size(s, r, lambda);
            total += size;
            rows.push_back({alpha_text(lambda), size.get_str()});
        }
        print_table(out, {"lambda", "orbit_size"}, rows);
        out << "sum: " << total.get_str() << " (|Omega| = " << omega.get_str() << ") "
            << (total == omega ? "OK" : "MISMATCH") << '\n';
    }
    return total == omega ? kOk : kDiscrepancy;
}

int cmd_hook_coords(int n, const std::string& lambda_text, std::optional<int> k, const std::string& alpha_in,
                    std::ostream& out)
{
    HookCoordinates h;
    Partition lambda;
    if (!lambda_text.empty()) {
        if (k)
            throw InputError("give either --lambda or --k/--alpha, not both");
        lambda = parse_partition(lambda_text);
        if (lambda.weight() != n)
            throw InputError("lambda " + to_string(lambda) + " is not a partition of " + std::to_string(n));
        h = to_hook_coords(lambda);
    } else {
        if (!k)
            throw InputError("give --lambda or --k (with optional --alpha)");
        const Partition alpha = alpha_in.empty() || alpha_in == "()" ? Partition() : parse_partition(alpha_in);
        h = make_hook_coords(n, *k, alpha);
        lambda = from_hook_coords(h);
    }
    out << "lambda=" << to_string(lambda) << " k=" << h.k << " alpha=" << alpha_text(h.inside)
        << '\n';
    return kOk;
}

}  // namespace

std::atomic<bool>& stop_flag()
{
    static std::atomic<bool> flag{false};
    return flag;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Decompositions and vanishing results for Foulkes characters"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Globals g;
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_option("--max-ab", g.max_ab, "compute budget: largest ab accepted")->check(CLI::PositiveNumber);
    app.add_option("--time-limit", g.time_limit, "wall-clock limit in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--allow-large", g.allow_large, "lift the ab budget up to the engine limit");

    const std::vector<std::string> formats = {"table", "json", "csv"};

    ShapeArgs mult_shape;
    std::string mult_lambda, mult_format = "table";
    bool mult_no_fast = false;
    auto* mult = app.add_subcommand("multiplicity", "multiplicity of one irreducible character");
    add_shape(mult, mult_shape);
    mult->add_option("--lambda", mult_lambda, "partition of ab, e.g. 6,3,2,1 or 3^4")->required();
    mult->add_flag("--no-fastpath", mult_no_fast, "skip the p(lambda) > b and dominance shortcuts");
    mult->add_option("--format", mult_format)->check(CLI::IsMember({"table", "json"}));

    ShapeArgs dec_shape;
    std::string dec_format = "table";
    bool dec_nonzero = false, dec_no_fast = false;
    auto* dec = app.add_subcommand("decompose", "full decomposition of the Foulkes character");
    add_shape(dec, dec_shape);
    dec->add_option("--format", dec_format)->check(CLI::IsMember(formats));
    dec->add_flag("--nonzero-only", dec_nonzero, "omit zero multiplicities from json/csv");
    dec->add_flag("--no-fastpath", dec_no_fast, "compute every row count, not just p(lambda) <= b");

    ShapeArgs cen_shape;
    std::string cen_format = "table";
    auto* cen = app.add_subcommand("census", "count vanishing multiplicities explained by the main theorem");
    add_shape(cen, cen_shape);
    cen->add_option("--format", cen_format)->check(CLI::IsMember({"table", "json"}));

    ShapeArgs ver_shape;
    auto* ver = app.add_subcommand("verify", "check every implemented prediction against computation");
    add_shape(ver, ver_shape);

    ShapeArgs res_shape;
    int res_r = 0;
    std::string res_format = "table";
    auto* res = app.add_subcommand("restrict", "orbits of S_r x S_(ab-r) on the set partitions");
    add_shape(res, res_shape);
    res->add_option("r", res_r, "size of the first factor")->required();
    res->add_option("--format", res_format)->check(CLI::IsMember({"table", "json"}));

    int hc_n = 0;
    std::string hc_lambda, hc_alpha;
    std::optional<int> hc_k;
    auto* hc = app.add_subcommand("hook-coords", "convert between a partition and its [k:alpha] form");
    hc->add_option("--n", hc_n, "weight of the partition")->required()->check(CLI::PositiveNumber);
    hc->add_option("--lambda", hc_lambda, "partition to convert");
    hc->add_option("--k", hc_k, "leg length")->check(CLI::NonNegativeNumber);
    hc->add_option("--alpha", hc_alpha, "inside-partition");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    if (const char* dir = std::getenv("FOULKES_CACHE_DIR"); dir != nullptr && *dir != '\0')
        set_char_row_store(std::filesystem::path(dir));

    try {
        if (*mult)
            return cmd_multiplicity(g, mult_shape, mult_lambda, mult_no_fast, mult_format, out);
        if (*dec)
            return cmd_decompose(g, dec_shape, dec_format, dec_nonzero, dec_no_fast, out);
        if (*cen)
            return cmd_census(g, cen_shape, cen_format, out);
        if (*ver)
            return cmd_verify(g, ver_shape, out);
        if (*res)
            return cmd_restrict(g, res_shape, res_r, res_format, out);
        if (*hc)
            return cmd_hook_coords(hc_n, hc_lambda, hc_k, hc_alpha, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const Interrupted& e) {
        err << "interrupted: partial results discarded\n";
        return kInterrupted;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDiscrepancy;
    }
    return kInputError;
}

}  // namespace foulkes::cli
