// Extension calculus: appending one entry (sum must be triangular,
// z(z-1)/2) or two entries (2(2a+1) a sum of the three squares u, v, u+v),
// with the delete-negation reading when the negation is already present.

#include "cubesum/extend.hpp"

#include <algorithm>
#include <cassert>

namespace cubesum {

std::vector<Int> single_extension_roots(const Int& a) {
    Int disc = 1 + 8 * a;
    Int root;
    if (disc < 0 || !is_perfect_square(disc, &root)) return {};
    // disc is odd, so both (1 +- root)/2 are integers; they sum to 1.
    std::vector<Int> roots;
    Int pos = (1 + root) / 2;
    Int neg = (1 - root) / 2;
    if (pos != 0) roots.push_back(pos);
    if (neg != 0 && neg != pos) roots.push_back(neg);
    return roots;
}

namespace {

Multiset remove_one(const Multiset& m, const Int& value) {
    std::vector<Int> entries = m.entries();
    auto it = std::find(entries.begin(), entries.end(), value);
    assert(it != entries.end());
    entries.erase(it);
    return canonicalize(std::move(entries));
}

// Appending z (or deleting -z) must land on the identity again; anything
// else is a construction bug, not an input error.
void check_identity(const Multiset& m) {
    PowerSums ps = power_sums(m);
    assert(ps.cube_sum == ps.sum * ps.sum);
    (void)ps;
}

} // namespace

std::vector<ExtensionOption> extend_one(const CsSet& s) {
    std::vector<Int> roots = single_extension_roots(s.sum());
    if (roots.empty())
        throw NoExtension("sum " + s.sum().str() + " is not z(z-1)/2 for any z");

    std::vector<ExtensionOption> options;
    for (const Int& z : roots) {
        Multiset appended = union_sets(s.elements(), canonicalize({z}));
        check_identity(appended);
        options.push_back({z, ExtensionAction::append, appended, is_admissible(appended)});
        if (s.elements().contains(-z)) {
            Multiset deleted = remove_one(s.elements(), -z);
            check_identity(deleted);
            options.push_back({z, ExtensionAction::delete_negation, deleted,
                               is_admissible(deleted)});
        }
    }
    return options;
}

std::vector<CsSet> chain(const CsSet& s, std::size_t steps, RootChoice root) {
    if (steps < 1) throw CsError("chain needs at least one step");
    std::vector<CsSet> out;
    CsSet current = s;
    for (std::size_t i = 0; i < steps; ++i) {
        std::vector<Int> roots = single_extension_roots(current.sum());
        const Int* z = nullptr;
        for (const Int& r : roots)
            if ((root == RootChoice::positive) == (r > 0)) z = &r;
        if (!z)
            throw NoExtension("no " +
                              std::string(root == RootChoice::positive ? "positive"
                                                                       : "negative") +
                              " root at sum " + current.sum().str());
        // Pick the admissible action: deleting -z when present, else append.
        Multiset next = current.elements().contains(-*z)
                            ? remove_one(current.elements(), -*z)
                            : union_sets(current.elements(), canonicalize({*z}));
        current = verify_cs(next);
        out.push_back(current);
    }
    return out;
}

std::vector<TwoExtensionRep> two_extension_reps(const Int& a) {
    Int target = 2 * a + 1; // u^2 + uv + v^2
    std::vector<TwoExtensionRep> reps;
    if (target < 0) return reps;
    // u^2 + uv + v^2 = (u + v/2)^2 + 3v^2/4, so |u|, |v| <= sqrt(4T/3).
    Int limit = isqrt(4 * target / 3);
    for (Int u = -limit; u <= limit; ++u) {
        for (Int v = -limit; v <= limit; ++v) {
            if (u * u + u * v + v * v != target) continue;
            Int x = u + 1;
            Int y = u + v + 1;
            if (x == 0 || y == 0) continue;
            bool dup = false;
            for (const auto& r : reps)
                if ((r.x == x && r.y == y) || (r.x == y && r.y == x)) dup = true;
            if (!dup) reps.push_back({u, v, x, y});
        }
    }
    std::sort(reps.begin(), reps.end(), [](const TwoExtensionRep& l, const TwoExtensionRep& r) {
        auto key = [](const TwoExtensionRep& t) {
            return std::make_pair(std::min(t.x, t.y), std::max(t.x, t.y));
        };
        return key(l) < key(r);
    });
    return reps;
}

CsSet extend_two(const CsSet& s, const TwoExtensionRep& rep) {
    if (rep.u * rep.u + rep.u * rep.v + rep.v * rep.v != 2 * s.sum() + 1)
        throw CsError("representation does not match the set's sum");
    if (rep.x != rep.u + 1 || rep.y != rep.u + rep.v + 1)
        throw CsError("inconsistent two-extension representation");

    std::vector<Int> entries = s.elements().entries();
    for (const Int& v : {rep.x, rep.y}) {
        auto it = std::find(entries.begin(), entries.end(), -v);
        if (it != entries.end())
            entries.erase(it); // replace the appending action with deletion
        else
            entries.push_back(v);
    }
    return verify_cs(canonicalize(std::move(entries)));
}

} // namespace cubesum
