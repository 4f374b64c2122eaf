#include "foulkes/partition.hpp"

#include "foulkes/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace foulkes {

namespace {

// Hard limit on the weight of a parsed partition; guards "1^999999999".
constexpr long kMaxParsedWeight = 1'000'000;

}  // namespace

std::int64_t to_int64(const BigInt& v)
{
    if (!v.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    std::erase_if(parts_, [](int x) { return x == 0; });
    if (std::any_of(parts_.begin(), parts_.end(), [](int x) { return x < 0; }))
        throw InputError("partition parts must be non-negative");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity_of(int value) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::size_t Partition::hash() const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : parts_)
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string to_string(const Partition& p)
{
    std::string out;
    for (int x : p.parts()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(x);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    auto fail = [&](const std::string& why) -> InputError {
        return InputError("invalid partition '" + std::string(text) + "': " + why);
    };
    auto read_int = [&](std::string_view& s) -> long {
        std::size_t len = 0;
        while (len < s.size() && s[len] >= '0' && s[len] <= '9')
            ++len;
        if (len == 0)
            throw fail("expected a positive integer");
        long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + len, v);
        if (ec != std::errc() || ptr != s.data() + len || v > kMaxParsedWeight)
            throw fail("integer out of range");
        s.remove_prefix(len);
        return v;
    };

    if (text.empty())
        throw fail("empty input");
    std::vector<int> parts;
    long weight = 0;
    std::string_view rest = text;
    while (true) {
        long part = read_int(rest);
        if (part < 1)
            throw fail("parts must be at least 1");
        long count = 1;
        if (!rest.empty() && rest.front() == '^') {
            rest.remove_prefix(1);
            count = read_int(rest);
            if (count < 1)
                throw fail("exponent must be at least 1");
        }
        weight += part * count;
        if (weight > kMaxParsedWeight)
            throw fail("weight too large");
        parts.insert(parts.end(), static_cast<std::size_t>(count), static_cast<int>(part));
        if (rest.empty())
            break;
        if (rest.front() != ',')
            throw fail(std::string("unexpected character '") + rest.front() + "'");
        rest.remove_prefix(1);
        if (rest.empty())
            throw fail("trailing comma");
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.first()), 0);
    for (int x : p.parts())
        for (int j = 0; j < x; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw InputError("dominance needs partitions of the same weight: " + to_string(lambda) +
                         " vs " + to_string(mu));
    int sl = 0, sm = 0;
    const int upto = std::min(lambda.length(), mu.length());
    for (int j = 1; j <= upto; ++j) {
        sl += lambda[j];
        sm += mu[j];
        if (sl < sm)
            return false;
    }
    return true;
}

bool is_subpartition(const Partition& lambda, const Partition& mu)
{
    const int upto = std::min(lambda.length(), mu.length());
    for (int j = 1; j <= upto; ++j)
        if (lambda[j] > mu[j])
            return false;
    return true;
}

bool diagram_contained(const Partition& lambda, const Partition& mu)
{
    return lambda.length() <= mu.length() && is_subpartition(lambda, mu);
}

std::optional<int> hook_leg(const Partition& lambda)
{
    if (lambda.empty())
        throw InputError("hook_leg of the empty partition");
    for (int j = 2; j <= lambda.length(); ++j)
        if (lambda[j] != 1)
            return std::nullopt;
    return lambda.length() - 1;
}

HookCoordinates make_hook_coords(int total, int k, Partition inside)
{
    if (total < 1 || k < 0)
        throw InputError("hook coordinates need total >= 1 and k >= 0");
    if (inside.length() > k)
        throw InputError("inside-partition " + to_string(inside) + " has more than k=" +
                         std::to_string(k) + " parts");
    const int first_row = total - k - inside.weight();
    if (first_row < inside.first() + 1)
        throw InputError("first row " + std::to_string(first_row) + " is shorter than alpha_1+1=" +
                         std::to_string(inside.first() + 1));
    HookCoordinates h;
    h.total = total;
    h.k = k;
    h.tail_weight = inside.weight() - inside.first();
    h.inside = std::move(inside);
    return h;
}

HookCoordinates to_hook_coords(const Partition& lambda)
{
    if (lambda.empty())
        throw InputError("hook coordinates of the empty partition");
    std::vector<int> alpha;
    for (int j = 2; j <= lambda.length(); ++j)
        if (lambda[j] >= 2)
            alpha.push_back(lambda[j] - 1);
    return make_hook_coords(lambda.weight(), lambda.length() - 1, Partition(std::move(alpha)));
}

Partition from_hook_coords(const HookCoordinates& h)
{
    // Re-validate: callers may have built the struct by hand.
    const auto checked = make_hook_coords(h.total, h.k, h.inside);
    std::vector<int> parts;
    parts.push_back(checked.total - checked.k - checked.inside.weight());
    for (int x : checked.inside.parts())
        parts.push_back(x + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(checked.k - checked.inside.length()), 1);
    return Partition(std::move(parts));
}

namespace {

void enum_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
              std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0)
        return;
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        // the rest must fit in parts_left-1 parts of size <= x
        if (static_cast<long>(x) * parts_left < remaining)
            break;
        cur.push_back(x);
        enum_rec(remaining - x, x, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enum_partitions(int n, std::optional<int> max_parts, std::optional<int> max_part)
{
    if (n < 0)
        throw InputError("enum_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    const int mp = std::max(0, max_parts.value_or(n));
    const int mx = std::max(0, max_part.value_or(n));
    enum_rec(n, mx, mp, cur, out);
    return out;
}

std::vector<Partition> enum_P(int r, int a, int b)
{
    if (r < 0 || a < 1 || b < 1)
        throw InputError("enum_P needs r >= 0, a >= 1, b >= 1");
    return enum_partitions(r, b, a);
}

BigInt count_partitions(int n, std::optional<int> max_parts, std::optional<int> max_part)
{
    if (n < 0)
        return 0;
    const int P = std::clamp(max_parts.value_or(n), 0, n);
    const int M = std::clamp(max_part.value_or(n), 0, n);
    // ways[p][m][w]: partitions of w with at most p parts, every part at most m.
    // Rolled over p: cur[m][w] uses prev (p-1) for the "take a part of size m" branch.
    std::vector<std::vector<BigInt>> prev(static_cast<std::size_t>(M + 1),
                                          std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
    for (auto& row : prev)
        row[0] = 1;  // p = 0: only the empty partition
    for (int p = 1; p <= P; ++p) {
        auto cur = prev;
        for (int m = 1; m <= M; ++m)
            for (int w = 1; w <= n; ++w) {
                BigInt v = cur[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(w)];
                if (w >= m)
                    v += prev[static_cast<std::size_t>(m)][static_cast<std::size_t>(w - m)];
                cur[static_cast<std::size_t>(m)][static_cast<std::size_t>(w)] = v;
            }
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(M)][static_cast<std::size_t>(n)];
}

BigInt count_P(int r, int a, int b)
{
    if (r < 0 || a < 1 || b < 1)
        throw InputError("count_P needs r >= 0, a >= 1, b >= 1");
    if (static_cast<long>(a) * b < r)
        return 0;
    return count_partitions(r, b, a);
}

namespace {

void pieri_rec(const Partition& lambda, int row, int remaining, std::vector<int>& cur,
               std::vector<Partition>& out)
{
    const int rows = lambda.length() + 1;
    if (row > rows) {
        if (remaining == 0)
            out.emplace_back(cur);
        return;
    }
    const int lo = lambda[row];
    const int hi = row == 1 ? lo + remaining : std::min(lambda[row - 1], lo + remaining);
    for (int v = hi; v >= lo; --v) {
        cur.push_back(v);
        pieri_rec(lambda, row + 1, remaining - (v - lo), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> pieri_add(const Partition& lambda, int k)
{
    if (k < 0)
        throw InputError("pieri_add: k must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    pieri_rec(lambda, 1, k, cur, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

BigInt z_order(const Partition& lambda)
{
    BigInt z = 1;
    const auto parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const auto m = static_cast<unsigned long>(j - i);
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
        z *= pw * factorial(m);
        i = j;
    }
    return z;
}

BigInt class_size(const Partition& lambda)
{
    return factorial(static_cast<unsigned long>(lambda.weight())) / z_order(lambda);
}

Partition rectangle(int part, int count)
{
    if (part < 0 || count < 0)
        throw InputError("rectangle needs non-negative arguments");
    return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

Partition hook(int n, int k)
{
    if (n < 1 || k < 0 || k >= n)
        throw InputError("hook (n-k,1^k) needs 0 <= k < n");
    std::vector<int> parts(static_cast<std::size_t>(k + 1), 1);
    parts[0] = n - k;
    return Partition(std::move(parts));
}

}  // namespace foulkes
