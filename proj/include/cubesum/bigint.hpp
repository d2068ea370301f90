#ifndef CUBESUM_BIGINT_HPP
#define CUBESUM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubesum {

// All set arithmetic is exact. Pell orbits overflow 64 bits within a few
// steps, so the library-wide integer is arbitrary precision.
using Int = boost::multiprecision::cpp_int;

inline Int cube(const Int& x) { return x * x * x; }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// Strict base-10 parser: optional leading '-', digits only.
Int parse_int(std::string_view text);

inline std::string to_string(const Int& x) { return x.str(); }

} // namespace cubesum

#endif
