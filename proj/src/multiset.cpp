// Core multiset algebra: canonical form, the cube-sum identity, and the
// closure operations (scaling, union, bag product, scale-to-CS).

#include "cubesum/multiset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cubesum {

Int parse_int(std::string_view text) {
    if (text.empty()) throw CsError("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw CsError("sign without digits");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw CsError("invalid integer literal: " + std::string(text));
    }
    return Int(std::string(text));
}

bool Multiset::contains(const Int& value) const {
    return std::binary_search(entries_.begin(), entries_.end(), value);
}

std::size_t Multiset::count(const Int& value) const {
    auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), value);
    return static_cast<std::size_t>(hi - lo);
}

std::string Multiset::literal() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    out << ']';
    return out.str();
}

Multiset canonicalize(std::vector<Int> raw) {
    for (const Int& v : raw) {
        if (v == 0) throw ZeroEntry("multiset entry is 0");
    }
    std::sort(raw.begin(), raw.end());
    return Multiset(std::move(raw));
}

Multiset parse_set_literal(std::string_view text) {
    // Hand-rolled so entries stay exact at any magnitude.
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (e - b < 2 || text[b] != '[' || text[e - 1] != ']')
        throw CsError("set literal must be a JSON array of integers");
    std::string_view body = text.substr(b + 1, e - b - 2);

    std::vector<Int> values;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view item = body.substr(
            pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
        std::size_t ib = 0, ie = item.size();
        while (ib < ie && std::isspace(static_cast<unsigned char>(item[ib]))) ++ib;
        while (ie > ib && std::isspace(static_cast<unsigned char>(item[ie - 1]))) --ie;
        values.push_back(parse_int(item.substr(ib, ie - ib)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == body.size()) throw CsError("trailing comma in set literal");
    }
    // "[]" parses to the empty multiset; "[ ]" too.
    if (values.empty()) {
        bool blank = true;
        for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) throw CsError("malformed set literal");
    }
    return canonicalize(std::move(values));
}

bool is_admissible(const Multiset& m) {
    for (const Int& v : m.entries()) {
        if (v == 0) return false;
        if (v < 0 && m.contains(-v)) return false;
    }
    return true;
}

PowerSums power_sums(const Multiset& m) {
    PowerSums ps{0, 0};
    for (const Int& v : m.entries()) {
        ps.sum += v;
        ps.cube_sum += v * v * v;
    }
    return ps;
}

CsSet verify_cs(const Multiset& m) {
    PowerSums ps = power_sums(m);
    Int sum_squared = ps.sum * ps.sum;
    if (ps.cube_sum != sum_squared) throw NotCs(ps.cube_sum, sum_squared);
    if (!is_admissible(m))
        throw Inadmissible("identity holds but set contains a {k,-k} pair: " +
                           m.literal());
    return CsSet(m, std::move(ps));
}

Multiset scale(const Multiset& m, const Int& t) {
    if (t == 0) throw ZeroScale("scale factor is 0");
    std::vector<Int> scaled;
    scaled.reserve(m.size());
    for (const Int& v : m.entries()) scaled.push_back(v * t);
    return canonicalize(std::move(scaled));
}

Multiset union_sets(const Multiset& a, const Multiset& b) {
    std::vector<Int> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.entries().begin(), a.entries().end(), b.entries().begin(),
               b.entries().end(), std::back_inserter(merged));
    return canonicalize(std::move(merged));
}

Multiset bag_product(const Multiset& a, const Multiset& b) {
    std::vector<Int> products;
    products.reserve(a.size() * b.size());
    for (const Int& x : a.entries())
        for (const Int& y : b.entries()) products.push_back(x * y);
    return canonicalize(std::move(products));
}

CsSet scale_to_cs(const Multiset& m) {
    PowerSums ps = power_sums(m);
    if (ps.cube_sum == 0)
        throw ZeroCubeSum("cube sum is 0; zero-sum sets need no scaling");
    Int v2 = ps.sum * ps.sum;
    if (v2 % ps.cube_sum != 0)
        throw NotDivisible("cube sum " + ps.cube_sum.str() +
                           " does not divide sum^2 = " + v2.str());
    Int t = v2 / ps.cube_sum;
    return verify_cs(scale(m, t)); // t = 0 surfaces as ZeroScale
}

} // namespace cubesum
