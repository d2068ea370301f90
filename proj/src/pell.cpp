// Generalized Pell machinery: fundamental units by continued fractions,
// brute-force class representatives, and merged-orbit generation.

#include "cubesum/pell.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace cubesum {

PellProblem::PellProblem(Int d, Int n) : D(std::move(d)), N(std::move(n)) {
    if (D <= 0) throw CsError("Pell D must be positive");
    if (is_perfect_square(D)) throw SquareD("D = " + D.str() + " is a perfect square");
    if (N == 0) throw CsError("Pell N must be nonzero");
}

PellUnit fundamental_unit(const Int& D) {
    if (D <= 0) throw CsError("Pell D must be positive");
    Int a0 = isqrt(D);
    if (a0 * a0 == D) throw SquareD("D = " + D.str() + " is a perfect square");

    // Convergents p/q of the continued fraction of sqrt(D); the first one
    // with p^2 - D*q^2 = 1 is the fundamental solution.
    Int m = 0, d = 1, a = a0;
    Int p_prev = 1, p = a0;
    Int q_prev = 0, q = 1;
    while (p * p - D * q * q != 1) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = p; p = p_next;
        q_prev = q; q = q_next;
    }
    return PellUnit{p, q};
}

PellSolution advance(const PellSolution& s, const PellUnit& u, const Int& D) {
    return PellSolution{s.x * u.x + D * s.y * u.y, s.x * u.y + s.y * u.x};
}

Int default_class_bound(const PellProblem& p, const PellUnit& u) {
    Int v = abs(p.N) * (u.x + 1) / p.D;
    Int root = isqrt(v);
    if (root * root < v) ++root; // ceil
    return std::max(Int(root + 1), Int(10));
}

namespace {

// (x1 + y1*sqrt(D)) / (x2 + y2*sqrt(D)) is an algebraic-integer unit iff N
// divides both components of the product with the conjugate; that is the
// classical same-class criterion (covers +-unit^k, including -1).
bool same_class(const PellProblem& p, const PellSolution& s1, const PellSolution& s2) {
    Int a = s1.x * s2.x - p.D * s1.y * s2.y;
    Int b = s1.x * s2.y - s2.x * s1.y;
    return a % p.N == 0 && b % p.N == 0;
}

} // namespace

std::vector<PellSolution> solution_classes(const PellProblem& p, const Int& y_bound) {
    if (y_bound < 1) throw CsError("y_bound must be >= 1");
    // Every class reaches the nonnegative quadrant (negate, then advance),
    // so scanning x >= 0, 0 <= y <= y_bound and keeping the first member
    // of each class yields one minimal representative per orbit. The
    // sign-variants (+-x, +-y) are all reachable from these by the unit
    // action and negation, so nothing downstream is lost.
    std::vector<PellSolution> reps;
    for (Int y = 0; y <= y_bound; ++y) {
        Int x2 = p.N + p.D * y * y;
        Int x;
        if (x2 < 0 || !is_perfect_square(x2, &x)) continue;
        PellSolution cand{x, y};
        bool seen = false;
        for (const auto& r : reps)
            if (same_class(p, r, cand)) { seen = true; break; }
        if (!seen) reps.push_back(cand);
    }
    return reps;
}

std::vector<PellSolution> solution_classes(const PellProblem& p) {
    return solution_classes(p, default_class_bound(p, fundamental_unit(p.D)));
}

void generate_stream(const PellProblem& p,
                     const std::function<bool(const PellSolution&)>& sink,
                     std::vector<PellSolution> seeds) {
    PellUnit unit = fundamental_unit(p.D);
    if (seeds.empty()) seeds = solution_classes(p);
    if (seeds.empty()) throw Exhausted("no solution classes for x^2 - " +
                                       p.D.str() + "y^2 = " + p.N.str());

    auto later = [](const PellSolution& a, const PellSolution& b) {
        return std::tie(a.y, a.x) > std::tie(b.y, b.x);
    };
    std::priority_queue<PellSolution, std::vector<PellSolution>, decltype(later)>
        frontier(later);
    for (const auto& s : seeds) frontier.push(s);

    while (true) {
        PellSolution s = frontier.top();
        frontier.pop();
        if (!sink(s)) return;
        frontier.push(advance(s, unit, p.D));
    }
}

std::vector<PellSolution> generate(const PellProblem& p, std::size_t count,
                                   const SolutionFilter& predicate,
                                   std::vector<PellSolution> seeds) {
    if (count < 1) throw CsError("count must be >= 1");
    std::vector<PellSolution> out;
    generate_stream(
        p,
        [&](const PellSolution& s) {
            if (!predicate || predicate(s)) out.push_back(s);
            return out.size() < count;
        },
        std::move(seeds));
    return out;
}

} // namespace cubesum
