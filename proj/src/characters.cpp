#include "foulkes/characters.hpp"

#include "foulkes/errors.hpp"
#include "foulkes/version.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <list>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

namespace foulkes {

namespace {

// ---------------------------------------------------------------------------
// Abacus helpers. A partition with at most L rows is the bead set
// {λ_i + L - i : 1 <= i <= L}; moving a bead by k positions adds or removes a
// border strip of size k, and the number of beads jumped over is its height.

std::vector<int> beta_set(const Partition& p, int beads)
{
    std::vector<int> beta(static_cast<std::size_t>(beads));
    for (int i = 1; i <= beads; ++i)
        beta[static_cast<std::size_t>(i - 1)] = p[i] + beads - i;
    return beta;
}

Partition from_beta(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int beads = static_cast<int>(beta.size());
    for (int i = 1; i <= beads; ++i)
        beta[static_cast<std::size_t>(i - 1)] -= beads - i;
    return Partition(std::move(beta));
}

struct StripMove {
    Partition shape;
    int sign;
};

// All ways of moving one bead by `delta` (positive: add a strip, negative:
// remove one) into an empty position >= 0.
std::vector<StripMove> strip_moves(const Partition& shape, int beads, int delta)
{
    std::vector<int> beta = beta_set(shape, beads);
    const int top = (beta.empty() ? 0 : beta.front()) + std::max(delta, 0);
    std::vector<char> occupied(static_cast<std::size_t>(top + 1), 0);
    for (int x : beta)
        occupied[static_cast<std::size_t>(x)] = 1;
    std::vector<StripMove> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int from = beta[i];
        const int to = from + delta;
        if (to < 0 || occupied[static_cast<std::size_t>(to)])
            continue;
        int jumped = 0;
        for (int y = std::min(from, to) + 1; y < std::max(from, to); ++y)
            jumped += occupied[static_cast<std::size_t>(y)];
        std::vector<int> moved = beta;
        moved[i] = to;
        out.push_back({from_beta(std::move(moved)), jumped % 2 == 0 ? 1 : -1});
    }
    return out;
}

// ---------------------------------------------------------------------------
// mn_char memo.

struct MnKey {
    Partition shape;
    Partition cycles;
    friend bool operator==(const MnKey&, const MnKey&) = default;
};

struct MnKeyHash {
    std::size_t operator()(const MnKey& k) const noexcept
    {
        return k.shape.hash() * 0x100000001b3ULL ^ k.cycles.hash();
    }
};

class MnCache {
public:
    std::optional<BigInt> find(const MnKey& key)
    {
        std::lock_guard lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        if (limit_ != 0)
            order_.splice(order_.begin(), order_, it->second.second);
        return it->second.first;
    }

    void insert(const MnKey& key, const BigInt& value)
    {
        std::lock_guard lock(mutex_);
        if (map_.contains(key))
            return;
        std::list<MnKey>::iterator pos{};
        if (limit_ != 0) {
            order_.push_front(key);
            pos = order_.begin();
        }
        map_.emplace(key, std::make_pair(value, pos));
        evict();
    }

    void set_limit(std::size_t limit)
    {
        std::lock_guard lock(mutex_);
        if ((limit_ == 0) != (limit == 0)) {
            // switching between tracked and untracked: start over
            map_.clear();
            order_.clear();
        }
        limit_ = limit;
        evict();
    }

    std::size_t size()
    {
        std::lock_guard lock(mutex_);
        return map_.size();
    }

    void clear()
    {
        std::lock_guard lock(mutex_);
        map_.clear();
        order_.clear();
    }

private:
    void evict()
    {
        while (limit_ != 0 && map_.size() > limit_) {
            map_.erase(order_.back());
            order_.pop_back();
        }
    }

    std::mutex mutex_;
    std::size_t limit_ = 0;
    std::list<MnKey> order_;
    std::unordered_map<MnKey, std::pair<BigInt, std::list<MnKey>::iterator>, MnKeyHash> map_;
};

MnCache& mn_cache()
{
    static MnCache cache;
    return cache;
}

BigInt mn_rec(const Partition& shape, const Partition& cycles)
{
    if (cycles.empty())
        return shape.empty() ? 1 : 0;
    if (shape.length() == 1)
        return 1;
    if (shape.first() == 1)
        return (shape.weight() - cycles.length()) % 2 == 0 ? 1 : -1;

    MnKey key{shape, cycles};
    if (auto hit = mn_cache().find(key))
        return *hit;

    const int k = cycles.first();
    const Partition rest(std::vector<int>(cycles.vec().begin() + 1, cycles.vec().end()));
    BigInt sum = 0;
    for (const auto& move : strip_moves(shape, shape.length(), -k)) {
        if (move.sign > 0)
            sum += mn_rec(move.shape, rest);
        else
            sum -= mn_rec(move.shape, rest);
    }
    mn_cache().insert(key, sum);
    return sum;
}

// ---------------------------------------------------------------------------
// Character row store.

constexpr std::uint32_t kStoreFormat = 1;
constexpr char kStoreMagic[4] = {'F', 'K', 'C', 'R'};

struct StoreState {
    std::mutex mutex;
    std::optional<std::filesystem::path> dir;
};

StoreState& store_state()
{
    static StoreState s;
    return s;
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <typename T>
void put(std::string& out, T v)
{
    out.append(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool get(const std::string& in, std::size_t& pos, T& v)
{
    if (pos + sizeof(T) > in.size())
        return false;
    std::copy_n(in.data() + pos, sizeof(T), reinterpret_cast<char*>(&v));
    pos += sizeof(T);
    return true;
}

void put_str(std::string& out, const std::string& s)
{
    put<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
    out += s;
}

bool get_str(const std::string& in, std::size_t& pos, std::string& s)
{
    std::uint32_t len = 0;
    if (!get(in, pos, len) || pos + len > in.size())
        return false;
    s.assign(in, pos, len);
    pos += len;
    return true;
}

std::filesystem::path row_path(const std::filesystem::path& dir, const Partition& lambda)
{
    std::string name = "chi_" + to_string(lambda);
    std::replace(name.begin(), name.end(), ',', '_');
    return dir / ("v" + std::to_string(kStoreFormat)) / (name + ".bin");
}

std::string encode_row(const Partition& lambda, const ClassFunction& row)
{
    std::string body(kStoreMagic, 4);
    put(body, kStoreFormat);
    put_str(body, std::string(kVersion));
    put_str(body, to_string(lambda));
    put<std::int32_t>(body, row.degree());
    put<std::uint32_t>(body, static_cast<std::uint32_t>(row.values().size()));
    for (const auto& [mu, v] : row.values()) {
        put_str(body, to_string(mu));
        put_str(body, v.get_str(16));
    }
    put(body, fnv1a(body));
    return body;
}

std::optional<ClassFunction> decode_row(const std::string& bytes, const Partition& lambda)
{
    if (bytes.size() < 4 + sizeof(std::uint64_t) || !std::equal(kStoreMagic, kStoreMagic + 4, bytes.begin()))
        return std::nullopt;
    const std::string body = bytes.substr(0, bytes.size() - sizeof(std::uint64_t));
    std::size_t pos = body.size();
    std::uint64_t checksum = 0;
    if (!get(bytes, pos, checksum) || checksum != fnv1a(body))
        return std::nullopt;
    pos = 4;
    std::uint32_t format = 0;
    std::string version, label;
    std::int32_t degree = 0;
    std::uint32_t count = 0;
    if (!get(body, pos, format) || format != kStoreFormat || !get_str(body, pos, version) ||
        version != kVersion || !get_str(body, pos, label) || label != to_string(lambda) ||
        !get(body, pos, degree) || degree != lambda.weight() || !get(body, pos, count))
        return std::nullopt;
    ClassFunction row(degree);
    try {
        for (std::uint32_t i = 0; i < count; ++i) {
            std::string mu, value;
            if (!get_str(body, pos, mu) || !get_str(body, pos, value))
                return std::nullopt;
            row.set(parse_partition(mu), BigInt(value, 16));
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return row;
}

std::optional<ClassFunction> load_row(const std::filesystem::path& dir, const Partition& lambda)
{
    std::ifstream in(row_path(dir, lambda), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_row(bytes, lambda);
}

void save_row(const std::filesystem::path& dir, const Partition& lambda, const ClassFunction& row)
{
    const auto path = row_path(dir, lambda);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
        return;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return;
        const std::string bytes = encode_row(lambda, row);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out)
            return;
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

// ---------------------------------------------------------------------------
// Batch expander.

struct StripEdge {
    std::int32_t target;
    std::int32_t sign;
};

// CSR adjacency from shapes of degree d to shapes of degree d+k.
struct StripTable {
    std::vector<std::uint32_t> offsets;
    std::vector<StripEdge> edges;
};

class ShapeSpace {
public:
    ShapeSpace(int n, int rows) : rows_(rows), shapes_(static_cast<std::size_t>(n + 1)),
                                  index_(static_cast<std::size_t>(n + 1))
    {
        for (int d = 0; d <= n; ++d) {
            shapes_[static_cast<std::size_t>(d)] = enum_partitions(d, rows);
            auto& idx = index_[static_cast<std::size_t>(d)];
            const auto& list = shapes_[static_cast<std::size_t>(d)];
            for (std::size_t i = 0; i < list.size(); ++i)
                idx.emplace(list[i], static_cast<int>(i));
        }
    }

    const std::vector<Partition>& shapes(int d) const { return shapes_[static_cast<std::size_t>(d)]; }

    void build(int d, int k)
    {
        auto& table = tables_[{d, k}];
        if (!table.offsets.empty())
            return;
        const auto& from = shapes(d);
        const auto& to_index = index_[static_cast<std::size_t>(d + k)];
        table.offsets.reserve(from.size() + 1);
        table.offsets.push_back(0);
        for (const auto& s : from) {
            for (const auto& move : strip_moves(s, rows_, k))
                table.edges.push_back({to_index.at(move.shape), move.sign});
            table.offsets.push_back(static_cast<std::uint32_t>(table.edges.size()));
        }
    }

    const StripTable& table(int d, int k) const { return tables_.at({d, k}); }

private:
    int rows_;
    std::vector<std::vector<Partition>> shapes_;
    std::vector<std::unordered_map<Partition, int>> index_;
    std::map<std::pair<int, int>, StripTable> tables_;
};

struct Leaf {
    const std::vector<int>* parts;
    BigInt weight;  // coefficient scaled by the common denominator
};

class Expander {
public:
    Expander(const ShapeSpace& space, const std::vector<Leaf>& leaves, const StopControl& stop)
        : space_(space), leaves_(leaves), stop_(stop)
    {
    }

    // Accumulates Σ weight(μ) χ^λ(μ) over leaves [lo, hi) into acc.
    void run(std::size_t lo, std::size_t hi, std::vector<BigInt>& acc)
    {
        acc_ = &acc;
        std::vector<std::int64_t> root(1, 1);  // s_∅
        walk(lo, hi, 0, 0, root);
    }

private:
    void walk(std::size_t lo, std::size_t hi, std::size_t depth, int degree,
              const std::vector<std::int64_t>& values)
    {
        stop_.check();
        std::size_t i = lo;
        while (i < hi) {
            const auto& parts = *leaves_[i].parts;
            if (parts.size() == depth) {
                accumulate(leaves_[i].weight, values);
                ++i;
                continue;
            }
            const int k = parts[depth];
            std::size_t j = i;
            while (j < hi && leaves_[j].parts->size() > depth && (*leaves_[j].parts)[depth] == k)
                ++j;
            std::vector<std::int64_t> child(space_.shapes(degree + k).size(), 0);
            const auto& table = space_.table(degree, k);
            for (std::size_t s = 0; s < values.size(); ++s) {
                const std::int64_t v = values[s];
                if (v == 0)
                    continue;
                for (auto e = table.offsets[s]; e < table.offsets[s + 1]; ++e)
                    child[static_cast<std::size_t>(table.edges[e].target)] += table.edges[e].sign * v;
            }
            walk(i, j, depth + 1, degree + k, child);
            i = j;
        }
    }

    void accumulate(const BigInt& weight, const std::vector<std::int64_t>& values)
    {
        auto& acc = *acc_;
        for (std::size_t s = 0; s < values.size(); ++s) {
            const std::int64_t v = values[s];
            if (v > 0)
                mpz_addmul_ui(acc[s].get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(v));
            else if (v < 0)
                mpz_submul_ui(acc[s].get_mpz_t(), weight.get_mpz_t(),
                              static_cast<unsigned long>(-(v + 1)) + 1UL);
        }
    }

    const ShapeSpace& space_;
    const std::vector<Leaf>& leaves_;
    const StopControl& stop_;
    std::vector<BigInt>* acc_ = nullptr;
};

}  // namespace

BigInt mn_char(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw InputError("mn_char: " + to_string(lambda) + " and " + to_string(mu) +
                         " have different weights");
    return mn_rec(lambda, mu);
}

void set_mn_cache_limit(std::size_t max_entries) { mn_cache().set_limit(max_entries); }
std::size_t mn_cache_size() { return mn_cache().size(); }
void clear_mn_cache() { mn_cache().clear(); }

void set_char_row_store(std::optional<std::filesystem::path> dir)
{
    auto& s = store_state();
    std::lock_guard lock(s.mutex);
    s.dir = std::move(dir);
}

std::optional<std::filesystem::path> char_row_store()
{
    auto& s = store_state();
    std::lock_guard lock(s.mutex);
    return s.dir;
}

ClassFunction char_row(const Partition& lambda, std::optional<std::span<const Partition>> support)
{
    const int n = lambda.weight();
    if (support) {
        ClassFunction row(n);
        for (const auto& mu : *support)
            row.set(mu, mn_char(lambda, mu));
        return row;
    }
    const auto dir = char_row_store();
    if (dir)
        if (auto cached = load_row(*dir, lambda))
            return *cached;
    ClassFunction row(n);
    for (const auto& mu : enum_partitions(n))
        row.set(mu, mn_char(lambda, mu));
    if (dir)
        save_row(*dir, lambda, row);
    return row;
}

BigInt dimension(const Partition& lambda)
{
    const Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j)
            hooks *= lambda[i] - j + conj[j] - i + 1;
    return factorial(static_cast<unsigned long>(lambda.weight())) / hooks;
}

ClassFunction young_perm_char(const Partition& mu)
{
    PSeries f = h_series(0);
    for (int part : mu.parts())
        f = multiply(f, h_series(part));
    return to_class_function(f);
}

Rational inner_cf(const ClassFunction& f, const ClassFunction& g)
{
    if (f.degree() != g.degree())
        throw InputError("inner_cf: class functions of degrees " + std::to_string(f.degree()) +
                         " and " + std::to_string(g.degree()));
    Rational sum = 0;
    for (const auto& [mu, v] : f.values()) {
        auto it = g.values().find(mu);
        if (it != g.values().end())
            sum += ratio(v * it->second, z_order(mu));
    }
    sum.canonicalize();
    return sum;
}

PartitionMap<Rational> schur_coefficients(const PSeries& f, const ExpandOptions& options)
{
    const int n = f.degree();
    if (n > kMaxExpandDegree)
        throw BudgetExceeded("batch character expansion supports degree <= " +
                             std::to_string(kMaxExpandDegree) + ", got " + std::to_string(n));
    const int rows = std::clamp(options.max_rows.value_or(n), 0, n);
    ShapeSpace space(n, rows);

    BigInt denominator = 1;
    for (const auto& [mu, c] : f.terms())
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());

    std::vector<Leaf> leaves;
    leaves.reserve(f.size());
    std::set<std::pair<int, int>> steps;
    for (const auto& [mu, c] : f.terms()) {
        leaves.push_back({&mu.vec(), BigInt(c.get_num() * (denominator / c.get_den()))});
        int d = 0;
        for (int part : mu.parts()) {
            steps.emplace(d, part);
            d += part;
        }
    }
    for (auto [d, k] : steps)
        space.build(d, k);

    // One task per distinct largest cycle part; leaves are sorted so each
    // task is a contiguous range.
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t i = 0; i < leaves.size();) {
        std::size_t j = i;
        const int head = leaves[i].parts->empty() ? 0 : leaves[i].parts->front();
        while (j < leaves.size() && (leaves[j].parts->empty() ? 0 : leaves[j].parts->front()) == head)
            ++j;
        tasks.emplace_back(i, j);
        i = j;
    }

    const std::size_t width = space.shapes(n).size();
    std::vector<std::vector<BigInt>> partial(tasks.size(), std::vector<BigInt>(width, 0));
    parallel_for(tasks.size(), options.threads, [&](std::size_t t) {
        Expander ex(space, leaves, options.stop);
        ex.run(tasks[t].first, tasks[t].second, partial[t]);
    });

    PartitionMap<Rational> out;
    const auto& shapes = space.shapes(n);
    for (std::size_t s = 0; s < width; ++s) {
        BigInt total = 0;
        for (const auto& p : partial)
            total += p[s];
        out.emplace(shapes[s], ratio(total, denominator));
    }
    return out;
}

}  // namespace foulkes
