// tau and the Liouville divisor-tau sets, plus their bag-product
// factorization over prime powers.

#include "cubesum/liouville.hpp"

#include <algorithm>

namespace cubesum {

namespace {

// Trial division with a 2/3 wheel. Inputs are desk-scale, but the bulk
// verification sweeps tau over ~10^6 divisors, so word-size values take a
// native path.
Factorization factorize_u64(unsigned long long rest) {
    Factorization factors;
    auto strip = [&](unsigned long long p) {
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (e) factors.emplace_back(Int(p), e);
    };
    strip(2);
    strip(3);
    for (unsigned long long p = 5; p * p <= rest; p += 4) {
        strip(p);
        p += 2;
        strip(p);
    }
    if (rest > 1) factors.emplace_back(Int(rest), 1u);
    return factors;
}

} // namespace

Factorization factorize(const Int& n) {
    if (n < 1) throw NonPositive("factorize requires n >= 1");
    if (n <= 1000000000000000000ULL) // p*p stays inside 64 bits
        return factorize_u64(n.convert_to<unsigned long long>());

    Factorization factors;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (e) factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= rest; p += 4) {
        strip(p);
        strip(p + 2);
        p += 2;
    }
    if (rest > 1) factors.emplace_back(rest, 1u);
    return factors;
}

Int tau(const Int& n) {
    if (n < 1) throw NonPositive("tau requires n >= 1");
    Int t = 1;
    for (const auto& [p, e] : factorize(n)) t *= Int(e + 1);
    return t;
}

std::vector<Int> divisors(const Int& m) {
    if (m < 1) throw NonPositive("divisors requires m >= 1");
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factorize(m)) {
        std::size_t existing = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

CsSet liouville_set(const Int& m) {
    std::vector<Int> taus;
    for (const Int& d : divisors(m)) taus.push_back(tau(d));
    return verify_cs(canonicalize(std::move(taus)));
}

CsSet liouville_by_bag_product(const Int& m) {
    if (m < 1) throw NonPositive("liouville requires m >= 1");
    // <1,...,e+1> per prime power; tau is multiplicative so the fold
    // reassembles the full divisor-tau set.
    Multiset acc = canonicalize({Int(1)});
    for (const auto& [p, e] : factorize(m)) {
        std::vector<Int> run;
        for (unsigned k = 0; k <= e; ++k) run.push_back(Int(k + 1));
        acc = bag_product(acc, canonicalize(std::move(run)));
    }
    return verify_cs(acc);
}

} // namespace cubesum
