#include <doctest.h>

#include <random>

#include "cubesum/enumerate.hpp"
#include "cubesum/families.hpp"
#include "cubesum/liouville.hpp"
#include "cubesum/multiset.hpp"

using namespace cubesum;

namespace {

Multiset ms(std::vector<long long> v) {
    return canonicalize(std::vector<Int>(v.begin(), v.end()));
}

// Random nonzero entries, small range. Fixed seeds keep runs reproducible.
std::vector<Int> random_entries(std::mt19937_64& rng, int max_len = 8,
                                long long magnitude = 50) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<long long> val(-magnitude, magnitude);
    std::vector<Int> out;
    for (int i = len(rng); i > 0; --i) {
        long long v = val(rng);
        if (v == 0) v = 1;
        out.emplace_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("canonicalize sorts and rejects zero") {
    CHECK(canonicalize({Int(9), Int(-8), Int(1), Int(5), Int(-7)}) ==
          ms({-8, -7, 1, 5, 9}));
    CHECK(canonicalize({Int(2), Int(2)}) == ms({2, 2}));
    CHECK_THROWS_AS(canonicalize({Int(0), Int(1)}), ZeroEntry);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937_64 rng(7001);
    for (int i = 0; i < 200; ++i) {
        std::vector<Int> raw = random_entries(rng);
        Multiset once = canonicalize(raw);
        CHECK(canonicalize(once.entries()) == once);
    }
}

TEST_CASE("set literal round trip") {
    Multiset m = ms({-8, -7, 1, 5, 9});
    CHECK(m.literal() == "[-8,-7,1,5,9]");
    CHECK(parse_set_literal("[-8,-7,1,5,9]") == m);
    CHECK(parse_set_literal(" [ 9, -8 , 1, 5, -7 ] ") == m);
    CHECK(parse_set_literal("[]").empty());
    CHECK_THROWS_AS(parse_set_literal("[1,0]"), ZeroEntry);
    CHECK_THROWS_AS(parse_set_literal("1,2"), CsError);
    CHECK_THROWS_AS(parse_set_literal("[1,,2]"), CsError);
}

TEST_CASE("is_admissible") {
    CHECK(is_admissible(ms({-8, -7, 1, 5, 9})));
    CHECK_FALSE(is_admissible(ms({-2, 1, 2})));
    CHECK(is_admissible(ms({2, 2})));
}

TEST_CASE("power_sums fixtures") {
    PowerSums ps = power_sums(ms({1, 2, 3}));
    CHECK(ps.sum == 6);
    CHECK(ps.cube_sum == 36);
    ps = power_sums(ms({-8, -7, 1, 5, 9}));
    CHECK(ps.sum == 0);
    CHECK(ps.cube_sum == 0);
    ps = power_sums(ms({3, 3, 3, 3, 4, 6, 8}));
    CHECK(ps.sum == 30);
    CHECK(ps.cube_sum == 900);
}

TEST_CASE("verify_cs accepts, rejects, distinguishes") {
    CsSet s = verify_cs(ms({1, 2, 2, 4}));
    CHECK(s.sum() == 9);
    CHECK(s.cube_sum() == 81);

    CHECK_THROWS_AS(verify_cs(ms({1, 2, 4})), NotCs);
    try {
        verify_cs(ms({1, 2, 4}));
    } catch (const NotCs& e) {
        CHECK(e.cube_sum == 73);
        CHECK(e.sum_squared == 49);
    }
    // identity 1 = 1 holds but {2,-2} is excluded
    CHECK_THROWS_AS(verify_cs(ms({-2, 1, 2})), Inadmissible);
}

TEST_CASE("scale") {
    CHECK(scale(ms({-8, -7, 1, 5, 9}), 2) == ms({-16, -14, 2, 10, 18}));
    CHECK(scale(ms({1, 2}), 1) == ms({1, 2}));
    CHECK(scale(ms({1, 5}), -1) == ms({-5, -1}));
    CHECK_THROWS_AS(scale(ms({1, 2}), 0), ZeroScale);
}

TEST_CASE("union_sets") {
    CHECK(union_sets(ms({1, 2}), ms({2, 2})) == ms({1, 2, 2, 2}));
    Multiset u = union_sets(ms({-8, -7, 1, 5, 9}), ms({1}));
    CHECK(u == ms({-8, -7, 1, 1, 5, 9}));
    PowerSums ps = power_sums(u);
    CHECK(ps.sum == 1);
    CHECK(ps.cube_sum == 1);
    CHECK(union_sets(Multiset{}, ms({3, 3, 3})) == ms({3, 3, 3}));
}

TEST_CASE("bag_product") {
    CHECK(bag_product(ms({1, 2, 3, 4}), ms({1, 2})) ==
          ms({1, 2, 2, 3, 4, 4, 6, 8}));
    Multiset m = ms({-5, 2, 7, 7});
    CHECK(bag_product(ms({1}), m) == m);
    Multiset sq = bag_product(ms({2, 2}), ms({2, 2}));
    CHECK(sq == ms({4, 4, 4, 4}));
    CHECK_NOTHROW(verify_cs(sq)); // appears in the full n = 4 census
}

TEST_CASE("scale_to_cs") {
    // a CS-set is a fixed point (t = v^2/u = 1)
    CsSet s = verify_cs(ms({1, 2, 3}));
    CsSet scaled = scale_to_cs(s.elements());
    CHECK(scaled.elements() == s.elements());

    // u = v = 377, computed directly: 706^3 + 425^3 - 754^3
    Multiset triple = ms({706, 425, -754});
    PowerSums ps = power_sums(triple);
    CHECK(ps.sum == 377);
    CHECK(ps.cube_sum == 377);
    CsSet big = scale_to_cs(triple);
    CHECK(big.elements() == ms({-284258, 160225, 266162}));

    CHECK_THROWS_AS(scale_to_cs(ms({1, 2, 4})), NotDivisible); // 73 does not divide 49
    CHECK_THROWS_AS(scale_to_cs(ms({-8, -7, 1, 5, 9})), ZeroCubeSum);
    CHECK_THROWS_AS(scale_to_cs(ms({-1, -1, 2})), ZeroScale); // v = 0, u = 6
}

TEST_CASE("scale_to_cs postcondition on random inputs") {
    std::mt19937_64 rng(7002);
    int produced = 0;
    for (int i = 0; i < 20000 && produced < 30; ++i) {
        std::vector<Int> raw = random_entries(rng, 5, 9);
        if (raw.empty()) continue;
        Multiset m = canonicalize(raw);
        if (!is_admissible(m)) continue;
        try {
            CsSet s = scale_to_cs(m);
            PowerSums ps = power_sums(s.elements());
            CHECK(ps.cube_sum == ps.sum * ps.sum);
            ++produced;
        } catch (const CsError&) {
        }
    }
    CHECK(produced >= 30);
}

TEST_CASE("bag-product closure over a CS-set pool") {
    // identity must hold on every pairwise product; admissibility is the
    // only thing allowed to fail
    std::vector<CsSet> pool;
    for (std::size_t n = 1; n <= 4; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        for (CsSet& s : enumerate_positive(cfg).sets) pool.push_back(std::move(s));
    }
    for (CsSet& s : prop7_family(2)) pool.push_back(std::move(s));
    pool.push_back(liouville_set(24));

    for (const CsSet& a : pool) {
        for (const CsSet& b : pool) {
            Multiset prod = bag_product(a.elements(), b.elements());
            PowerSums ps = power_sums(prod);
            CHECK(ps.cube_sum == ps.sum * ps.sum);
            try {
                verify_cs(prod);
            } catch (const Inadmissible&) {
                // excluded but still an identity witness
            }
        }
    }
}

TEST_CASE("zero-sum closure") {
    std::mt19937_64 rng(7003);
    std::vector<CsSet> zeros = prop7_family(3);
    std::uniform_int_distribution<long long> t_dist(-20, 20);

    for (const CsSet& z : zeros) {
        long long t = t_dist(rng);
        if (t == 0) t = 3;
        Multiset scaled = scale(z.elements(), t);
        PowerSums ps = power_sums(scaled);
        CHECK(ps.sum == 0);
        CHECK(ps.cube_sum == 0);
    }
    for (const CsSet& a : zeros) {
        for (const CsSet& b : zeros) {
            PowerSums ps = power_sums(union_sets(a.elements(), b.elements()));
            CHECK(ps.sum == 0);
            CHECK(ps.cube_sum == 0);
        }
    }
    // union of a zero-sum CS-set with any CS-set keeps the identity
    CsSet some = verify_cs(ms({1, 2, 2, 4}));
    for (const CsSet& z : zeros) {
        PowerSums ps = power_sums(union_sets(z.elements(), some.elements()));
        CHECK(ps.cube_sum == ps.sum * ps.sum);
    }
}

TEST_CASE("bag product of a zero-sum CS-set with any multiset") {
    std::mt19937_64 rng(7004);
    CsSet z = prop7_family(1)[0];
    for (int i = 0; i < 100; ++i) {
        std::vector<Int> raw = random_entries(rng);
        if (raw.empty()) continue;
        Multiset any = canonicalize(raw);
        PowerSums ps = power_sums(bag_product(z.elements(), any));
        CHECK(ps.sum == 0);
        CHECK(ps.cube_sum == 0);
    }
}
