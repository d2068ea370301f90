#ifndef CUBESUM_MULTISET_HPP
#define CUBESUM_MULTISET_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cubesum/bigint.hpp"
#include "cubesum/errors.hpp"

namespace cubesum {

// Canonical integer multiset: entries nondecreasing, no entry equal to 0.
// Everything downstream (dedupe, fixtures, catalog keys) relies on the
// canonical form, so there is no way to build one unsorted.
class Multiset {
public:
    Multiset() = default;

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    bool contains(const Int& value) const;
    std::size_t count(const Int& value) const;

    // Canonical set literal, e.g. "[-8,-7,1,5,9]".
    std::string literal() const;

    friend bool operator==(const Multiset& a, const Multiset& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const Multiset& a, const Multiset& b) {
        return !(a == b);
    }
    // Lexicographic on canonical entries; the library-wide output order.
    friend bool operator<(const Multiset& a, const Multiset& b) {
        return a.entries_ < b.entries_;
    }

private:
    friend Multiset canonicalize(std::vector<Int> raw);
    explicit Multiset(std::vector<Int> sorted) : entries_(std::move(sorted)) {}

    std::vector<Int> entries_;
};

struct PowerSums {
    Int sum;      // a1 + ... + an
    Int cube_sum; // a1^3 + ... + an^3

    friend bool operator==(const PowerSums& a, const PowerSums& b) {
        return a.sum == b.sum && a.cube_sum == b.cube_sum;
    }
};

// A multiset that passed verify_cs: cube_sum == sum^2 and admissible.
class CsSet {
public:
    const Multiset& elements() const { return elements_; }
    const PowerSums& sums() const { return sums_; }
    const Int& sum() const { return sums_.sum; }
    const Int& cube_sum() const { return sums_.cube_sum; }
    std::size_t size() const { return elements_.size(); }
    std::string literal() const { return elements_.literal(); }
    bool zero_sum() const { return sums_.sum == 0; }

    friend bool operator==(const CsSet& a, const CsSet& b) {
        return a.elements_ == b.elements_;
    }
    friend bool operator<(const CsSet& a, const CsSet& b) {
        return a.elements_ < b.elements_;
    }

private:
    friend CsSet verify_cs(const Multiset& m);
    CsSet(Multiset m, PowerSums s)
        : elements_(std::move(m)), sums_(std::move(s)) {}

    Multiset elements_;
    PowerSums sums_;
};

// Sorted nondecreasing copy. Throws ZeroEntry if any entry is 0; everything
// else (including {k,-k} pairs) is legal here -- admissibility is a
// separate check so intermediate constructions can pass through.
Multiset canonicalize(std::vector<Int> raw);

// Parses "[-8,-7,1,5,9]" (whitespace tolerated). Exact at any magnitude.
Multiset parse_set_literal(std::string_view text);

// No entry is 0 and no k with -k also present.
bool is_admissible(const Multiset& m);

PowerSums power_sums(const Multiset& m);

// The gate every generator goes through. Throws NotCs when the identity
// fails, Inadmissible when it holds but the set is excluded.
CsSet verify_cs(const Multiset& m);

// Entry-wise multiple, re-canonicalized. Throws ZeroScale for t = 0.
Multiset scale(const Multiset& m, const Int& t);

// Multiset union: multiplicities add.
Multiset union_sets(const Multiset& a, const Multiset& b);

// All |a|*|b| pairwise products.
Multiset bag_product(const Multiset& a, const Multiset& b);

// Scale m by t = v^2/u so that the result is a CS-set. Throws ZeroCubeSum
// (u = 0), NotDivisible (u does not divide v^2), ZeroScale (v = 0).
CsSet scale_to_cs(const Multiset& m);

} // namespace cubesum

#endif
