// Exhaustive enumeration of positive CS n-sets and bounded zero-sum
// searches.
//
// Positive search: depth-first over nondecreasing tuples a1 <= ... <= an
// with entries in [1, B]. At a node with partial sum s, partial cube sum
// c, floor l and r slots left, the completed tuple's cube sum lies in
// [c + r*l^3, c + r*B^3] and its squared sum in [(s + r*l)^2, (s + r*B)^2];
// the branch dies when the intervals miss each other. The last slot is
// solved directly (one increasing cubic), never scanned.
//
// Zero-sum search: meet-in-the-middle on (sum, cube sum) over a floor-
// compatible split for n >= 6, plain DFS below that.

#include "cubesum/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <type_traits>

namespace cubesum {

Int SearchConfig::effective_bound() const {
    return element_bound ? *element_bound : Int(n) * Int(n);
}

void SearchConfig::validate() const {
    if (n < 1) throw CsError("set size must be >= 1");
    Int bound = effective_bound();
    if (bound < 1) throw CsError("element bound must be >= 1");
    if (prefix.size() > n) throw CsError("prefix longer than n");
    Int last = 1;
    for (const Int& v : prefix) {
        if (v < last || v > bound)
            throw CsError("prefix must be nondecreasing within [1, bound]");
        last = v;
    }
}

namespace {

// The default bounds keep every quantity far inside 64 bits (n*B <= 3e9
// and n*B^3 < 2^63), so the search runs on machine words; configurations
// beyond that fall back to exact big integers. Both paths are exact.
bool fits_i64(std::size_t n, const Int& bound) {
    Int nb = Int(n) * bound;
    return nb * nb < Int("9000000000000000000") &&
           Int(n) * bound * bound * bound < Int("9000000000000000000");
}

template <typename T>
struct DfsFrame {
    std::vector<T> tuple;
    T sum = 0;
    T cube = 0;
};

// First z >= 1 with 3z^2 - 2z - 2s > 0 (s >= 0); beyond it the final-slot
// cubic below is strictly increasing over the integers.
template <typename T>
T increasing_from(T s) {
    T z;
    if constexpr (std::is_same_v<T, Int>) {
        z = (1 + isqrt(Int(1) + 6 * s)) / 3;
    } else {
        z = static_cast<T>((1.0 + std::sqrt(1.0 + 6.0 * static_cast<double>(s))) / 3.0);
    }
    if (z < 1) z = 1;
    while (z > 1 && 3 * (z - 1) * (z - 1) - 2 * (z - 1) - 2 * s > 0) --z;
    while (3 * z * z - 2 * z - 2 * s <= 0) ++z;
    return z;
}

// Roots of f(z) = c + z^3 - (s + z)^2 in [lo, hi]: scan the short head
// where f may wobble, bisect the strictly increasing tail.
template <typename T>
void solve_last(T s, T c, T lo, T hi, std::vector<T>& out) {
    auto f = [&](T z) { return T(c + z * z * z - (s + z) * (s + z)); };
    T turn = increasing_from(s);
    T head_end = std::min(hi, T(turn - 1));
    for (T z = lo; z <= head_end; ++z)
        if (f(z) == 0) out.push_back(z);
    T a = std::max(lo, turn), b = hi;
    if (a > b || f(b) < 0 || f(a) > 0) return;
    while (a < b) {
        T mid = a + (b - a) / 2;
        if (f(mid) < 0) a = mid + 1; else b = mid;
    }
    if (f(a) == 0) out.push_back(a);
}

template <typename T>
void dfs_positive(std::size_t n, T bound, bool prune, DfsFrame<T>& frame,
                  T floor_value, std::vector<std::vector<T>>& found) {
    std::size_t depth = frame.tuple.size();
    T remaining = static_cast<T>(n - depth);

    if (depth == n) {
        if (frame.cube == frame.sum * frame.sum) found.push_back(frame.tuple);
        return;
    }
    if (depth + 1 == n && prune) {
        std::vector<T> roots;
        solve_last<T>(frame.sum, frame.cube, floor_value, bound, roots);
        for (T z : roots) {
            frame.tuple.push_back(z);
            found.push_back(frame.tuple);
            frame.tuple.pop_back();
        }
        return;
    }
    T square_cap = 0;
    if (prune) {
        T top = frame.sum + remaining * bound;
        square_cap = top * top; // largest square any completion can reach
    }
    for (T next = floor_value; next <= bound; ++next) {
        T c = frame.cube + next * next * next;
        T s = frame.sum + next;
        T r = remaining - 1;
        if (prune) {
            // the minimum completed cube sum only grows with `next`, and
            // square_cap is fixed, so this cut is monotone
            if (c + r * next * next * next > square_cap) break;
            T max_sum = s + r * bound;
            if (c + r * next * next * next > max_sum * max_sum) continue;
            T min_sum = s + r * next;
            if (c + r * bound * bound * bound < min_sum * min_sum) continue;
        }
        frame.tuple.push_back(next);
        frame.sum = s;
        frame.cube = c;
        dfs_positive(n, bound, prune, frame, next, found);
        frame.tuple.pop_back();
        frame.sum -= next;
        frame.cube -= next * next * next;
    }
}

template <typename T>
std::vector<std::vector<T>> search_partition(std::size_t n, T bound, bool prune,
                                             const std::vector<T>& prefix) {
    std::vector<std::vector<T>> found;
    DfsFrame<T> frame;
    T floor_value = 1;
    for (T v : prefix) {
        frame.tuple.push_back(v);
        frame.sum += v;
        frame.cube += v * v * v;
        floor_value = v;
    }
    dfs_positive(n, bound, prune, frame, floor_value, found);
    return found;
}

template <typename T>
std::vector<std::vector<T>> run_search(std::size_t n, T bound, bool prune,
                                       const std::vector<T>& prefix,
                                       unsigned threads) {
    // one task per first element; past 2^16 partitions the bookkeeping
    // costs more than it saves
    if (threads <= 1 || !prefix.empty() || n == 1 || bound < 2 || bound > 65536)
        return search_partition(n, bound, prune, prefix);

    // Embarrassingly parallel over the first element; concatenation in
    // first-element order reproduces the sequential lexicographic output
    // byte for byte.
    std::size_t parts = static_cast<std::size_t>(bound);
    std::vector<std::vector<std::vector<T>>> results(parts);
    std::atomic<std::size_t> next_part{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next_part.fetch_add(1);
            if (i >= parts) return;
            results[i] = search_partition<T>(n, bound, prune,
                                             {static_cast<T>(i + 1)});
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(parts));
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<std::vector<T>> found;
    for (auto& part : results)
        for (auto& tuple : part) found.push_back(std::move(tuple));
    return found;
}

} // namespace

EnumerationResult enumerate_positive(const SearchConfig& cfg) {
    cfg.validate();
    Int bound = cfg.effective_bound();

    std::vector<std::vector<Int>> tuples;
    if (fits_i64(cfg.n, bound)) {
        std::vector<std::int64_t> prefix;
        for (const Int& v : cfg.prefix)
            prefix.push_back(v.convert_to<std::int64_t>());
        auto raw = run_search<std::int64_t>(cfg.n, bound.convert_to<std::int64_t>(),
                                            cfg.prune, prefix, cfg.threads);
        for (const auto& t : raw) tuples.emplace_back(t.begin(), t.end());
    } else {
        tuples = run_search<Int>(cfg.n, bound, cfg.prune, cfg.prefix, cfg.threads);
    }

    EnumerationResult result;
    result.bound_used = bound;
    result.complete = cfg.prefix.empty() && bound >= Int(cfg.n) * Int(cfg.n);
    for (auto& t : tuples) {
        if (!t.empty()) result.max_entry = std::max(result.max_entry, t.back());
        result.sets.push_back(verify_cs(canonicalize(std::move(t))));
    }
    std::sort(result.sets.begin(), result.sets.end());
    return result;
}

std::size_t count_positive(std::size_t n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    return enumerate_positive(cfg).sets.size();
}

CsSet distinct_positive(std::size_t n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<CsSet> distinct;
    for (const CsSet& s : enumerate_positive(cfg).sets) {
        const auto& e = s.elements().entries();
        if (std::adjacent_find(e.begin(), e.end()) == e.end())
            distinct.push_back(s);
    }
    std::vector<Int> expected;
    for (std::size_t k = 1; k <= n; ++k) expected.push_back(Int(k));
    if (distinct.size() != 1 || distinct[0].elements() != canonicalize(expected))
        throw CsError("distinct-positive uniqueness violated at n = " +
                      std::to_string(n)); // would falsify the theorem
    return distinct[0];
}

std::vector<CsSet> enumerate_cs2() {
    // a^2 - (b+1)a + (b^2 - b) = 0 has integer roots only where the
    // discriminant -3b^2 + 6b + 1 is a nonnegative square; that forces
    // b in {0, 1, 2}. The a = b diagonal (2a^3 = 4a^2) gives a = 2.
    std::vector<Multiset> sets;
    for (Int b = 0; b <= 2; ++b) {
        Int disc = -3 * b * b + 6 * b + 1;
        Int root;
        if (disc < 0 || !is_perfect_square(disc, &root)) continue;
        if ((b + 1 + root) % 2 != 0) continue;
        for (const Int& a : {Int((b + 1 + root) / 2), Int((b + 1 - root) / 2)}) {
            if (a == 0 || b == 0) continue;
            Multiset m = canonicalize({a, b});
            PowerSums ps = power_sums(m);
            if (ps.cube_sum == ps.sum * ps.sum && is_admissible(m))
                sets.push_back(m);
        }
    }
    sets.push_back(canonicalize({Int(2), Int(2)}));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<CsSet> out;
    for (const Multiset& m : sets) out.push_back(verify_cs(m));
    return out;
}

void ZeroSumSearchConfig::validate() const {
    if (n < 1) throw CsError("set size must be >= 1");
    if (magnitude_bound < 1) throw CsError("magnitude bound must be >= 1");
}

namespace {

// Nonzero values -B..B as a sorted alphabet.
std::vector<std::int64_t> zero_sum_alphabet(std::int64_t bound) {
    std::vector<std::int64_t> values;
    for (std::int64_t v = -bound; v <= bound; ++v)
        if (v != 0) values.push_back(v);
    return values;
}

struct HalfTuple {
    std::vector<std::int64_t> entries;
    std::int64_t sum;
    std::int64_t cube;
};

void build_halves(const std::vector<std::int64_t>& alphabet, std::size_t length,
                  std::size_t min_index, std::vector<std::int64_t>& current,
                  std::int64_t sum, std::int64_t cube,
                  std::vector<HalfTuple>& out) {
    if (current.size() == length) {
        out.push_back({current, sum, cube});
        return;
    }
    for (std::size_t i = min_index; i < alphabet.size(); ++i) {
        std::int64_t v = alphabet[i];
        current.push_back(v);
        build_halves(alphabet, length, i, current, sum + v, cube + v * v * v, out);
        current.pop_back();
    }
}

// C(alphabet + k - 1, k): how many nondecreasing k-tuples a half table holds.
double half_table_size(std::size_t alphabet, std::size_t k) {
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        c *= static_cast<double>(alphabet + i - 1) / static_cast<double>(i);
    return c;
}

std::vector<std::vector<std::int64_t>>
zero_sum_mitm(std::size_t n, std::int64_t bound) {
    auto alphabet = zero_sum_alphabet(bound);
    std::size_t left_len = n / 2;
    std::size_t right_len = n - left_len;
    if (half_table_size(alphabet.size(), right_len) > 3e7)
        throw CsError("zero-sum search table would exceed memory; "
                      "reduce the bound or n");

    std::vector<HalfTuple> lefts, rights;
    std::vector<std::int64_t> scratch;
    build_halves(alphabet, left_len, 0, scratch, 0, 0, lefts);
    build_halves(alphabet, right_len, 0, scratch, 0, 0, rights);

    // (sum, cube) -> lefts ordered by their max entry, so the floor
    // constraint max(left) <= min(right) is a prefix by binary search.
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<const HalfTuple*>>
        by_sums;
    for (const HalfTuple& h : lefts)
        by_sums[{h.sum, h.cube}].push_back(&h);
    for (auto& [key, list] : by_sums)
        std::sort(list.begin(), list.end(), [](const HalfTuple* a, const HalfTuple* b) {
            return a->entries.back() < b->entries.back();
        });

    std::vector<std::vector<std::int64_t>> found;
    for (const HalfTuple& right : rights) {
        auto it = by_sums.find({-right.sum, -right.cube});
        if (it == by_sums.end()) continue;
        std::int64_t floor_value = right.entries.front();
        for (const HalfTuple* left : it->second) {
            if (left->entries.back() > floor_value) break;
            std::vector<std::int64_t> tuple = left->entries;
            tuple.insert(tuple.end(), right.entries.begin(), right.entries.end());
            found.push_back(std::move(tuple));
        }
    }
    return found;
}

void zero_sum_dfs(const std::vector<std::int64_t>& alphabet, std::size_t n,
                  std::size_t min_index, std::vector<std::int64_t>& current,
                  std::int64_t sum, std::int64_t cube,
                  std::vector<std::vector<std::int64_t>>& found) {
    if (current.size() == n) {
        if (sum == 0 && cube == 0) found.push_back(current);
        return;
    }
    for (std::size_t i = min_index; i < alphabet.size(); ++i) {
        std::int64_t v = alphabet[i];
        current.push_back(v);
        zero_sum_dfs(alphabet, n, i, current, sum + v, cube + v * v * v, found);
        current.pop_back();
    }
}

} // namespace

std::vector<CsSet> zero_sum_search(const ZeroSumSearchConfig& cfg) {
    cfg.validate();
    if (cfg.magnitude_bound > 1000)
        throw CsError("zero-sum magnitude bound above 1000 is not supported");
    std::int64_t bound = cfg.magnitude_bound.convert_to<std::int64_t>();

    std::vector<std::vector<std::int64_t>> tuples;
    if (cfg.n >= 6) {
        tuples = zero_sum_mitm(cfg.n, bound);
    } else {
        auto alphabet = zero_sum_alphabet(bound);
        std::vector<std::int64_t> scratch;
        zero_sum_dfs(alphabet, cfg.n, 0, scratch, 0, 0, tuples);
    }

    std::vector<CsSet> out;
    for (const auto& t : tuples) {
        Multiset m = canonicalize(std::vector<Int>(t.begin(), t.end()));
        if (!is_admissible(m)) continue;
        out.push_back(verify_cs(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cubesum
