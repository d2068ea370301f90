#ifndef CUBESUM_FAMILIES_HPP
#define CUBESUM_FAMILIES_HPP

#include <cstddef>
#include <vector>

#include "cubesum/multiset.hpp"
#include "cubesum/pell.hpp"

namespace cubesum {

// ---------------------------------------------------------------------
// Zero-sum CS5 family
//
// Sets <-(3r+1)/2, -(3r-1)/2, r-s, r, r+s> with 8s^2 - 5r^2 = 3, driven
// by t^2 - 10r^2 = 6 with t = 4s. The first two entries differ by 1, so
// the entries share no factor. (r,s) = (1,1) degenerates (r - s = 0) and
// is skipped.
// ---------------------------------------------------------------------

struct Prop7Member {
    Int r, s;
    CsSet set;
};

std::vector<Prop7Member> prop7_family_members(std::size_t count);
std::vector<CsSet> prop7_family(std::size_t count);

// ---------------------------------------------------------------------
// Frolov / Pythagorean constructions
// ---------------------------------------------------------------------

// Integers x1..xn with x1^2 + ... + x_{n-1}^2 = xn^2.
struct PythTuple {
    std::vector<Int> entries;

    std::vector<Int> legs() const {
        return {entries.begin(), entries.end() - 1};
    }
    const Int& hypotenuse() const { return entries.back(); }
};

// (a^2 - b, 2a*leg_1, ..., 2a*leg_k, a^2 + b) with b = sum(leg^2).
// Throws DegenerateTuple if any entry is 0, or on repeated legs when
// allow_repeats is false.
PythTuple pyth_tuple(const Int& a, const std::vector<Int>& legs,
                     bool allow_repeats = true);

// Validates an explicit tuple (e.g. a classical triple) against the
// defining identity.
PythTuple make_pyth_tuple(std::vector<Int> entries);

// Two equal-cardinality lists with equal sums of squares. Zeros are legal
// here; the Frolov builder drops them later.
struct SpPair {
    std::vector<Int> A;
    std::vector<Int> B;
};

// {legs} vs {0,...,0,hypotenuse}.
SpPair pyth_to_sp(const PythTuple& t);

// Two same-arity tuples swap hypotenuses: A = legs1 + [hyp2],
// B = legs2 + [hyp1]. Throws ArityMismatch.
SpPair combine_sp(const PythTuple& t1, const PythTuple& t2);

// The 4n-element union {c - a_k} u {c + a_k} u {-c + b_k} u {-c - b_k},
// zeros dropped before canonicalization. Sum and cube sum are both 0 for
// every integer c.
Multiset frolov_entries(const SpPair& sp, const Int& c);

// frolov_entries verified as a CS-set; throws Inadmissible if a {k,-k}
// pair survives the zero-dropping.
CsSet frolov_zero_sum(const SpPair& sp, const Int& c);

// Applies the sizing recipe: a triple gives 8 entries (generic c) or 7
// (c equal to a leg); an (n+1)-tuple gives 4n, 4n-1 (c equal to one
// distinct element) or 4n-2 / 4n-3 (c annihilating repeated legs).
// Throws UnsupportedSize for n_target in {1..6, 9}, DegenerateTuple when
// the given (tuple, c) does not hit the target size.
CsSet frolov_target_size(std::size_t n_target, const PythTuple& t, const Int& c);

// ---------------------------------------------------------------------
// Chowla triples: x^3 + y^3 + z^3 = x + y + z with x + y = 3q, z = -2q.
// Driven by alpha^2 - 5*beta^2 = 4 along the orbit of (3,1) under the
// unit (9,4); alpha is a multiple of 3 at the even orbit indices.
// ---------------------------------------------------------------------

struct ChowlaTriple {
    Int x, y, z;
    Int psi; // common value of sum and cube sum
    bool admissible() const { return z != -x && z != -y && x != -y; }
};

std::vector<ChowlaTriple> chowla_triples(std::size_t count);

// Scaled CS-sets from admissible triples. n = 3: scale the triple by psi
// (u = v = psi). n = 4: append 1 first (u = v = psi + 1). Entries are
// distinct in both shapes.
std::vector<CsSet> chowla_cs(std::size_t count, int n);

// ---------------------------------------------------------------------
// Distinct CS n-sets for n >= 5: <1,...,n-5> joined with a zero-sum CS5
// family member (or the smallest constant multiple of it) whose entry
// moduli all exceed n-5.
// ---------------------------------------------------------------------

CsSet distinct_cs_n(std::size_t n, std::size_t index);

} // namespace cubesum

#endif
