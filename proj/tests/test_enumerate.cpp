#include <doctest.h>

#include <functional>
#include <random>

#include "cubesum/enumerate.hpp"

using namespace cubesum;

namespace {

Multiset ms(std::vector<long long> v) {
    return canonicalize(std::vector<Int>(v.begin(), v.end()));
}

// Independent oracle: enumerate every nondecreasing tuple and test the
// identity directly. No pruning, no shared code with the search.
void naive_positive(std::size_t n, long long bound, std::vector<long long>& tuple,
                    std::vector<std::vector<long long>>& out) {
    if (tuple.size() == n) {
        Int sum = 0, cubes = 0;
        for (long long v : tuple) {
            sum += v;
            cubes += Int(v) * v * v;
        }
        if (cubes == sum * sum) out.push_back(tuple);
        return;
    }
    long long lo = tuple.empty() ? 1 : tuple.back();
    for (long long v = lo; v <= bound; ++v) {
        tuple.push_back(v);
        naive_positive(n, bound, tuple, out);
        tuple.pop_back();
    }
}

std::vector<Multiset> set_list(const EnumerationResult& r) {
    std::vector<Multiset> out;
    for (const CsSet& s : r.sets) out.push_back(s.elements());
    return out;
}

} // namespace

TEST_CASE("known census lists for n <= 5") {
    SearchConfig cfg;
    cfg.n = 1;
    CHECK(set_list(enumerate_positive(cfg)) == std::vector<Multiset>{ms({1})});
    cfg.n = 2;
    CHECK(set_list(enumerate_positive(cfg)) ==
          std::vector<Multiset>{ms({1, 2}), ms({2, 2})});
    cfg.n = 3;
    CHECK(set_list(enumerate_positive(cfg)) ==
          std::vector<Multiset>{ms({1, 2, 3}), ms({3, 3, 3})});
    cfg.n = 4;
    CHECK(set_list(enumerate_positive(cfg)) ==
          std::vector<Multiset>{ms({1, 2, 2, 4}), ms({1, 2, 3, 4}),
                                ms({2, 2, 4, 4}), ms({4, 4, 4, 4})});
    cfg.n = 5;
    CHECK(set_list(enumerate_positive(cfg)) ==
          std::vector<Multiset>{ms({1, 2, 2, 3, 5}), ms({1, 2, 3, 4, 5}),
                                ms({3, 3, 3, 3, 6}), ms({3, 3, 3, 4, 6}),
                                ms({5, 5, 5, 5, 5})});
}

TEST_CASE("pruned search equals the naive oracle for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::vector<long long>> expected;
        std::vector<long long> scratch;
        naive_positive(n, static_cast<long long>(n * n), scratch, expected);

        SearchConfig pruned;
        pruned.n = n;
        EnumerationResult got = enumerate_positive(pruned);
        REQUIRE(got.sets.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(got.sets[i].elements() ==
                  canonicalize(std::vector<Int>(expected[i].begin(), expected[i].end())));
        }

        SearchConfig unpruned = pruned;
        unpruned.prune = false;
        CHECK(set_list(enumerate_positive(unpruned)) == set_list(got));
    }
}

TEST_CASE("every returned set re-verifies and respects the n^2 bound") {
    for (std::size_t n = 1; n <= 6; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        EnumerationResult r = enumerate_positive(cfg);
        CHECK(r.complete);
        CHECK(r.max_entry <= Int(n) * Int(n));
        for (const CsSet& s : r.sets) CHECK_NOTHROW(verify_cs(s.elements()));
    }
}

TEST_CASE("partitioned runs union to the unpartitioned result") {
    SearchConfig full;
    full.n = 5;
    std::vector<Multiset> expected = set_list(enumerate_positive(full));

    std::vector<Multiset> merged;
    for (long long first = 1; first <= 25; ++first) {
        SearchConfig part;
        part.n = 5;
        part.prefix = {Int(first)};
        for (const CsSet& s : enumerate_positive(part).sets)
            merged.push_back(s.elements());
    }
    CHECK(merged == expected); // no duplicates, no misses, same order
}

TEST_CASE("threaded search matches sequential") {
    SearchConfig seq;
    seq.n = 6;
    seq.threads = 1;
    SearchConfig par = seq;
    par.threads = 4;
    CHECK(set_list(enumerate_positive(seq)) == set_list(enumerate_positive(par)));
}

TEST_CASE("a smaller bound reports incompleteness") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.element_bound = Int(6);
    EnumerationResult r = enumerate_positive(cfg);
    CHECK_FALSE(r.complete);
    CHECK(r.sets.size() == 5); // nothing above 6 exists at n = 5
}

TEST_CASE("distinct positive set is <1..n>") {
    std::vector<Int> expected;
    for (long long k = 1; k <= 4; ++k) expected.push_back(Int(k));
    CHECK(distinct_positive(4).elements() == canonicalize(expected));
    CHECK(distinct_positive(1).elements() == ms({1}));
    CHECK(distinct_positive(6).elements() == ms({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("CS2 census") {
    std::vector<CsSet> sets = enumerate_cs2();
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].elements() == ms({1, 2}));
    CHECK(sets[1].elements() == ms({2, 2}));

    // discriminant values used in the census
    auto disc = [](long long b) { return -3 * b * b + 6 * b + 1; };
    CHECK(disc(2) == 1);
    CHECK(disc(3) == -8);
}

TEST_CASE("zero-sum search fixtures") {
    ZeroSumSearchConfig cfg;
    cfg.n = 6;
    cfg.magnitude_bound = 11;
    std::vector<CsSet> sets = zero_sum_search(cfg);
    bool found = false;
    for (const CsSet& s : sets) {
        CHECK(s.sum() == 0);
        CHECK(s.cube_sum() == 0);
        CHECK(is_admissible(s.elements()));
        if (s.elements() == ms({-11, -5, -4, 2, 8, 10})) found = true;
    }
    CHECK(found);

    cfg.n = 3;
    cfg.magnitude_bound = 20;
    CHECK(zero_sum_search(cfg).empty());

    cfg.n = 2;
    cfg.magnitude_bound = 30;
    CHECK(zero_sum_search(cfg).empty());
}

TEST_CASE("meet-in-the-middle agrees with plain DFS at n = 6") {
    // same search below and above the n >= 6 strategy switch
    ZeroSumSearchConfig cfg;
    cfg.n = 6;
    cfg.magnitude_bound = 6;
    std::vector<CsSet> mitm = zero_sum_search(cfg);

    // reference: brute force over nondecreasing 6-tuples
    std::vector<long long> alphabet;
    for (long long v = -6; v <= 6; ++v)
        if (v != 0) alphabet.push_back(v);
    std::vector<Multiset> expected;
    std::vector<long long> t(6);
    std::function<void(std::size_t, std::size_t, long long, long long)> rec =
        [&](std::size_t depth, std::size_t mi, long long sum, long long cube) {
            if (depth == 6) {
                if (sum == 0 && cube == 0) {
                    Multiset m = canonicalize(std::vector<Int>(t.begin(), t.end()));
                    if (is_admissible(m)) expected.push_back(m);
                }
                return;
            }
            for (std::size_t i = mi; i < alphabet.size(); ++i) {
                long long v = alphabet[i];
                t[depth] = v;
                rec(depth + 1, i, sum + v, cube + v * v * v);
            }
        };
    rec(0, 0, 0, 0);
    std::sort(expected.begin(), expected.end());

    REQUIRE(mitm.size() == expected.size());
    for (std::size_t i = 0; i < mitm.size(); ++i)
        CHECK(mitm[i].elements() == expected[i]);
}

TEST_CASE("identity behind the n <= 4 zero-sum proof") {
    std::mt19937_64 rng(1203);
    std::uniform_int_distribution<long long> val(-1000, 1000);
    for (int i = 0; i < 10000; ++i) {
        Int a = val(rng), b = val(rng), c = val(rng);
        Int lhs = cube(a + b + c) - (cube(a) + cube(b) + cube(c));
        CHECK(lhs == 3 * (a + b) * (b + c) * (c + a));
    }
    // pairs: a^3 + b^3 = (a+b)^3 forces ab(a+b) = 0
    for (int i = 0; i < 10000; ++i) {
        Int a = val(rng), b = val(rng);
        Int gap = cube(a + b) - cube(a) - cube(b);
        CHECK(gap == 3 * a * b * (a + b));
        if (gap == 0) CHECK(a * b * (a + b) == 0);
    }
}

TEST_CASE("config validation") {
    SearchConfig bad;
    bad.n = 3;
    bad.prefix = {Int(2), Int(1)};
    CHECK_THROWS_AS(enumerate_positive(bad), CsError);
    bad.prefix = {Int(1), Int(99)};
    CHECK_THROWS_AS(enumerate_positive(bad), CsError);
    ZeroSumSearchConfig zbad;
    zbad.n = 0;
    CHECK_THROWS_AS(zero_sum_search(zbad), CsError);
}
