#ifndef CUBESUM_LIOUVILLE_HPP
#define CUBESUM_LIOUVILLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cubesum/multiset.hpp"

namespace cubesum {

// (prime, exponent) pairs, primes strictly increasing.
using Factorization = std::vector<std::pair<Int, unsigned>>;

// Trial division with a 2/3 wheel; inputs are desk-scale.
Factorization factorize(const Int& n);

// Number-of-divisors function: tau(n) = prod(e_i + 1).
Int tau(const Int& n);

// Positive divisors of m in increasing order.
std::vector<Int> divisors(const Int& m);

// <tau(d) : d | m>, always a CS-set.
CsSet liouville_set(const Int& m);

// Same set assembled as the bag product of <1,...,e_i + 1> over the
// prime-power factors of m.
CsSet liouville_by_bag_product(const Int& m);

} // namespace cubesum

#endif
