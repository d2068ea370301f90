#ifndef CUBESUM_EXTEND_HPP
#define CUBESUM_EXTEND_HPP

#include <vector>

#include "cubesum/multiset.hpp"

namespace cubesum {

// A CS-set extends by one entry iff its sum a is triangular: a = z(z-1)/2.
// The appended integer is z; when -z is already present, deleting -z is
// the equivalent (and admissible) move.
enum class ExtensionAction { append, delete_negation };

struct ExtensionOption {
    Int z;
    ExtensionAction action;
    Multiset result; // satisfies the CS identity by construction
    bool admissible;
};

// Integer roots of z^2 - z - 2a = 0 (both when 1 + 8a is a nonnegative
// perfect square; they sum to 1). z = 0 is excluded since appending 0 is
// never allowed. Positive root first.
std::vector<Int> single_extension_roots(const Int& a);

// Every applicable extension of s: for each root the append option, plus
// the delete_negation option when -z is a member. Throws NoExtension when
// the sum is not triangular.
std::vector<ExtensionOption> extend_one(const CsSet& s);

enum class RootChoice { positive, negative };

// Repeated extension, picking the root of the requested sign each step and
// the admissible action for it (delete -z when it is present, else append).
// Once started the chain never stalls: appending z makes the new sum
// z(z+1)/2, whose roots are z+1 and -z.
std::vector<CsSet> chain(const CsSet& s, std::size_t steps, RootChoice root);

// A CS-set with sum a extends by two entries iff
// 2(2a+1) = u^2 + v^2 + (u+v)^2, i.e. u^2 + uv + v^2 = 2a + 1.
// The appended entries are x = u + 1, y = u + v + 1.
struct TwoExtensionRep {
    Int u, v;
    Int x, y;
};

// All representations, deduplicated on the unordered appended pair {x, y}
// ((u,v) and (v,u) generally map to different pairs; the user-visible
// object is the extension). Reps with x = 0 or y = 0 are dropped. Sorted
// by (min(x,y), max(x,y)). Empty means not extendable by two.
std::vector<TwoExtensionRep> two_extension_reps(const Int& a);

// Append x and y; when -x or -y is already present the appending action
// becomes deletion of that negation. Throws Inadmissible if a {k,-k} pair
// survives. The result's sum b again satisfies
// 2(2b+1) = (y-x)^2 + (x+1)^2 + (y+1)^2, so the process iterates forever.
CsSet extend_two(const CsSet& s, const TwoExtensionRep& rep);

} // namespace cubesum

#endif
