// Infinite-family generators: the zero-sum CS5 family, Frolov/Pythagorean
// zero-sum constructions, Chowla CS3/CS4 sets, and the distinct CS n-set
// composition for n >= 5.

#include "cubesum/families.hpp"

#include <algorithm>
#include <cassert>

namespace cubesum {

std::vector<Prop7Member> prop7_family_members(std::size_t count) {
    if (count < 1) throw CsError("count must be >= 1");
    std::vector<Prop7Member> members;
    PellProblem problem(10, 6);
    generate_stream(problem, [&](const PellSolution& sol) {
        // t = 4s keeps 8s^2 - 5r^2 = 3; every solution of t^2 - 10r^2 = 6
        // in fact has t divisible by 4 (checked, not assumed).
        if (sol.x % 4 != 0) return true;
        Int s = sol.x / 4;
        Int r = sol.y;
        if (r == s) return true; // (1,1): r - s = 0 is excluded
        assert(r % 2 != 0);      // 8s^2 - 5r^2 = 3 forces r odd
        Multiset m = canonicalize(
            {-(3 * r + 1) / 2, -(3 * r - 1) / 2, r - s, r, r + s});
        members.push_back({r, s, verify_cs(m)});
        return members.size() < count;
    });
    return members;
}

std::vector<CsSet> prop7_family(std::size_t count) {
    std::vector<CsSet> sets;
    for (auto& m : prop7_family_members(count)) sets.push_back(std::move(m.set));
    return sets;
}

PythTuple pyth_tuple(const Int& a, const std::vector<Int>& legs, bool allow_repeats) {
    if (legs.empty()) throw CsError("at least one leg is required");
    if (a == 0) throw CsError("parameter a must be nonzero");
    if (!allow_repeats) {
        std::vector<Int> sorted = legs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DegenerateTuple("repeated legs are disabled for this tuple");
    }
    Int b = 0;
    for (const Int& l : legs) b += l * l;

    std::vector<Int> entries;
    entries.push_back(a * a - b);
    for (const Int& l : legs) entries.push_back(2 * a * l);
    entries.push_back(a * a + b);
    for (const Int& e : entries)
        if (e == 0)
            throw DegenerateTuple("tuple entry is 0 (a^2 = sum of leg squares?)");
    return make_pyth_tuple(std::move(entries));
}

PythTuple make_pyth_tuple(std::vector<Int> entries) {
    if (entries.size() < 3) throw CsError("a Pythagorean tuple needs >= 3 entries");
    Int legs_sq = 0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        legs_sq += entries[i] * entries[i];
    const Int& hyp = entries.back();
    if (legs_sq != hyp * hyp)
        throw CsError("not a Pythagorean tuple: sum of leg squares is " +
                      legs_sq.str() + ", hypotenuse^2 is " + Int(hyp * hyp).str());
    return PythTuple{std::move(entries)};
}

SpPair pyth_to_sp(const PythTuple& t) {
    SpPair sp;
    sp.A = t.legs();
    sp.B.assign(sp.A.size() - 1, Int(0));
    sp.B.push_back(t.hypotenuse());
    return sp;
}

SpPair combine_sp(const PythTuple& t1, const PythTuple& t2) {
    if (t1.entries.size() != t2.entries.size())
        throw ArityMismatch("tuples have arity " + std::to_string(t1.entries.size()) +
                            " and " + std::to_string(t2.entries.size()));
    SpPair sp;
    sp.A = t1.legs();
    sp.A.push_back(t2.hypotenuse());
    sp.B = t2.legs();
    sp.B.push_back(t1.hypotenuse());
    return sp;
}

Multiset frolov_entries(const SpPair& sp, const Int& c) {
    if (sp.A.size() != sp.B.size())
        throw ArityMismatch("square pair lists differ in length");
    std::vector<Int> entries;
    entries.reserve(4 * sp.A.size());
    for (const Int& a : sp.A) {
        entries.push_back(c - a);
        entries.push_back(c + a);
    }
    for (const Int& b : sp.B) {
        entries.push_back(-c + b);
        entries.push_back(-c - b);
    }
    // The strategic eliminations: zeros drop here, before canonical form.
    std::erase(entries, Int(0));
    return canonicalize(std::move(entries));
}

CsSet frolov_zero_sum(const SpPair& sp, const Int& c) {
    CsSet set = verify_cs(frolov_entries(sp, c));
    assert(set.sum() == 0 && set.cube_sum() == 0);
    return set;
}

CsSet frolov_target_size(std::size_t n_target, const PythTuple& t, const Int& c) {
    if (n_target < 7 || n_target == 9)
        throw UnsupportedSize("no Frolov recipe for n = " + std::to_string(n_target));
    std::size_t arity = t.entries.size();
    if (n_target == 7 || n_target == 8) {
        if (arity != 3)
            throw ArityMismatch("n = 7 and 8 are built from Pythagorean triples");
    } else {
        // 4n-3 <= n_target <= 4n with an (n+1)-tuple, n >= 3
        std::size_t n = (n_target + 3) / 4;
        if (arity != n + 1)
            throw ArityMismatch("n = " + std::to_string(n_target) + " needs a " +
                                std::to_string(n + 1) + "-tuple");
    }
    CsSet set = frolov_zero_sum(pyth_to_sp(t), c);
    if (set.size() != n_target)
        throw DegenerateTuple("construction produced " + std::to_string(set.size()) +
                              " entries, wanted " + std::to_string(n_target) +
                              "; choose c per the elimination recipe");
    return set;
}

std::vector<ChowlaTriple> chowla_triples(std::size_t count) {
    if (count < 1) throw CsError("count must be >= 1");
    std::vector<ChowlaTriple> triples;
    PellProblem problem(5, 4);
    // The orbit of (3,1) under (9,4); alpha is divisible by 3 exactly at
    // the even orbit indices.
    generate_stream(problem, [&](const PellSolution& sol) {
        if (sol.x % 3 != 0) return true;
        Int phi = sol.x / 3;
        Int psi = sol.y;
        assert((phi - psi) % 2 == 0); // same parity
        ChowlaTriple t;
        t.x = (phi + 3 * psi) / 2;
        t.y = (3 * psi - phi) / 2;
        t.z = -2 * psi;
        t.psi = psi;
        assert(t.x + t.y + t.z == psi);
        assert(cube(t.x) + cube(t.y) + cube(t.z) == psi);
        triples.push_back(std::move(t));
        return triples.size() < count;
    }, {PellSolution{3, 1}});
    return triples;
}

std::vector<CsSet> chowla_cs(std::size_t count, int n) {
    if (n != 3 && n != 4) throw CsError("Chowla CS-sets exist for n = 3 or 4");
    std::vector<CsSet> sets;
    // Only the first triple (2, 1, -2) is inadmissible ({2,-2}), so one
    // spare covers the skip.
    for (const ChowlaTriple& t : chowla_triples(count + 1)) {
        if (!t.admissible()) continue;
        Multiset m = canonicalize({t.x, t.y, t.z});
        if (n == 4) m = union_sets(m, canonicalize({Int(1)}));
        sets.push_back(scale_to_cs(m)); // u = v forces scale factor psi (or psi+1)
        if (sets.size() == count) break;
    }
    return sets;
}

CsSet distinct_cs_n(std::size_t n, std::size_t index) {
    if (n < 5) throw UnsupportedSize("distinct CS n-sets start at n = 5");
    Prop7Member member = std::move(prop7_family_members(index + 1).back());

    Int min_modulus = abs(member.set.elements().entries()[0]);
    for (const Int& e : member.set.elements().entries())
        min_modulus = std::min(min_modulus, Int(abs(e)));
    // Smallest constant multiple pushing every modulus past n-5; the
    // prefix <1,...,n-5> then cannot collide.
    Int multiplier = Int(n - 5) / min_modulus + 1;
    Multiset core = scale(member.set.elements(), multiplier);

    std::vector<Int> prefix;
    for (std::size_t k = 1; k + 5 <= n; ++k) prefix.push_back(Int(k));
    Multiset joined = prefix.empty() ? core : union_sets(canonicalize(prefix), core);

    CsSet result = verify_cs(joined);
    const auto& e = result.elements().entries();
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw CsError("repeated entry in distinct CS n-set construction");
    return result;
}

} // namespace cubesum
