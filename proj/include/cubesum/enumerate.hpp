#ifndef CUBESUM_ENUMERATE_HPP
#define CUBESUM_ENUMERATE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cubesum/multiset.hpp"

namespace cubesum {

// Exhaustive search over positive CS n-sets. Entries of a positive CS
// n-set cannot exceed n^2, so the default bound makes the run complete.
struct SearchConfig {
    std::size_t n = 1;
    std::optional<Int> element_bound; // default n^2
    bool prune = true;
    std::vector<Int> prefix;  // fixed leading entries (work partitioning)
    unsigned threads = 1;

    Int effective_bound() const;
    void validate() const;
};

struct EnumerationResult {
    std::vector<CsSet> sets; // lexicographic
    Int max_entry = 0;       // largest entry over all sets found (0 if none)
    Int bound_used = 0;
    bool complete = false;   // bound_used >= n^2, so no solution can be missed
};

// Every positive CS n-set with entries in [1, element_bound], depth-first
// over nondecreasing tuples so canonical form falls out directly.
EnumerationResult enumerate_positive(const SearchConfig& cfg);

std::size_t count_positive(std::size_t n);

// The unique all-distinct positive CS n-set, which must be <1,...,n>.
// Anything else falsifies the uniqueness property and throws.
CsSet distinct_positive(std::size_t n);

// Complete CS2 census via the discriminant -3b^2 + 6b + 1 of
// a^2 - (b+1)a + (b^2 - b) = 0, plus the a = b diagonal.
std::vector<CsSet> enumerate_cs2();

struct ZeroSumSearchConfig {
    std::size_t n = 1;
    Int magnitude_bound = 1;

    void validate() const;
};

// All admissible zero-sum CS n-sets with |entry| <= magnitude_bound,
// lexicographic. Meet-in-the-middle on (sum, cube_sum) for n >= 6.
std::vector<CsSet> zero_sum_search(const ZeroSumSearchConfig& cfg);

} // namespace cubesum

#endif
