#ifndef CORRSOLVE_ORBIT_HPP
#define CORRSOLVE_ORBIT_HPP

#include <vector>

#include "corrsolve/correspondence.hpp"

namespace corrsolve {

// Galois-stable orbit (or union of conjugate orbits) represented through
// its coordinate projections: the roots of aPoly are the finite first
// coordinates, bPoly the second, with flags for the point at infinity.
struct OrbitBundle {
    enum class Status { Closed, CapExceeded };

    UniPoly aPoly = UniPoly::one(); // squarefree primitive, positive lc
    UniPoly bPoly = UniPoly::one();
    bool aInf = false, bInf = false;
    Status status = Status::Closed;
    int cap = 0;

    int deg_sum() const {
        return std::max(aPoly.degree(), 0) + std::max(bPoly.degree(), 0);
    }
};

// Equivalence-class closure of a verified start point by projection-
// polynomial expansion. For a start with rational coordinates the closed
// bundle is exactly its orbit; algebraic starts give the union of the
// conjugate orbits.
OrbitBundle orbit_closure(const Correspondence& C, const CurvePoint& start, int degree_cap);

// Bundle generated by the full fiber over a rational first coordinate
// (used by seed enumeration). The seed must have a nonempty fiber.
OrbitBundle orbit_closure_from_seed(const Correspondence& C, const Rat& x_seed, int degree_cap);

struct MaterializedOrbit {
    std::vector<CurvePoint> points;
    std::size_t size = 0; // exact cardinality of (A u inf) x (B u inf) cap C
};

// Exact enumeration of the bundle's points on C; bundle must be Closed.
MaterializedOrbit materialize_points(const Correspondence& C, const OrbitBundle& bundle);

// max(dx, dy)^(2(n+1)) for a correspondence of period n.
Int proposition_bound(const Correspondence& C, int n);

} // namespace corrsolve

#endif
