#ifndef CUBESUM_PELL_HPP
#define CUBESUM_PELL_HPP

#include <functional>
#include <vector>

#include "cubesum/bigint.hpp"
#include "cubesum/errors.hpp"

namespace cubesum {

// Generalized Pell equation x^2 - D*y^2 = N. Solutions fall into finitely
// many classes, each an orbit under the fundamental unit of x^2 - D*y^2 = 1.
struct PellProblem {
    Int D; // positive nonsquare
    Int N; // nonzero

    PellProblem(Int d, Int n);
};

struct PellSolution {
    Int x;
    Int y;

    friend bool operator==(const PellSolution& a, const PellSolution& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Minimal positive solution of x^2 - D*y^2 = 1.
struct PellUnit {
    Int x;
    Int y;
};

// Continued-fraction expansion of sqrt(D). Throws SquareD when D is a
// perfect square (no nontrivial unit exists).
PellUnit fundamental_unit(const Int& D);

// Norm of x + y*sqrt(D), i.e. x^2 - D*y^2.
inline Int pell_norm(const Int& D, const PellSolution& s) {
    return s.x * s.x - D * s.y * s.y;
}

// (x,y) * (ux + uy*sqrt(D)): norm multiplicativity carries the solution
// along its orbit.
PellSolution advance(const PellSolution& s, const PellUnit& u, const Int& D);

// Classical class-coverage bound: every class has a representative with
// 0 <= y <= sqrt(|N| * (unit.x + 1) / D) (+1 for rounding safety).
Int default_class_bound(const PellProblem& p, const PellUnit& u);

// All class representatives with x >= 0 and 0 <= y <= y_bound, one per
// orbit of the full norm-1 unit group (so +-unit^k, including -1), ordered
// by (y, x). Two solutions lie in one class iff N divides both
// x1*x2 - D*y1*y2 and x1*y2 - x2*y1.
std::vector<PellSolution> solution_classes(const PellProblem& p, const Int& y_bound);
std::vector<PellSolution> solution_classes(const PellProblem& p);

using SolutionFilter = std::function<bool(const PellSolution&)>;

// First `count` solutions in the nonnegative quadrant satisfying the
// predicate, merged across class orbits in ascending y (ties by x).
// `seeds` overrides the class representatives (used where a single orbit
// is wanted); empty means all classes up to the default bound. Throws
// Exhausted when there are no classes at all.
std::vector<PellSolution> generate(const PellProblem& p, std::size_t count,
                                   const SolutionFilter& predicate,
                                   std::vector<PellSolution> seeds = {});

// Streaming form of `generate`: yields solutions until the sink returns
// false. No orbit is materialized beyond what the sink consumes.
void generate_stream(const PellProblem& p,
                     const std::function<bool(const PellSolution&)>& sink,
                     std::vector<PellSolution> seeds = {});

} // namespace cubesum

#endif
