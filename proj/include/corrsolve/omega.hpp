#ifndef CORRSOLVE_OMEGA_HPP
#define CORRSOLVE_OMEGA_HPP

#include <vector>

#include "corrsolve/correspondence.hpp"
#include "corrsolve/orbit.hpp"

namespace corrsolve {

// Conservative superset of the exceptional locus: affine points of
// C whose first coordinate is a root of xPoly or second coordinate a root
// of yPoly, where xPoly/yPoly are the squarefree resultant multiples of
// the elimination-ideal generators of <p, p_X> and <p, p_Y>. The point
// list is materialized lazily: the avoidance test needs only gcds.
struct OmegaLocus {
    UniPoly xPoly, yPoly;           // squarefree primitive, positive lc
    std::vector<CurvePoint> points; // filled by materialize_omega_points
    bool points_complete = false;
    std::vector<std::string> notes; // factors skipped by the degree budget
};

OmegaLocus omega(const Correspondence& C);

// Enumerates the affine points of C over the roots of the locus
// polynomials, one isolation per irreducible factor. Factors whose
// candidate resultants exceed the degree budget are skipped with a note
// (the avoidance test stays exact regardless).
void materialize_omega_points(const Correspondence& C, OmegaLocus& om, int degree_budget = 16);

// deg(xPoly)*dy + deg(yPoly)*dx.
Int omega_size_bound(const Correspondence& C);

// Exact avoidance test on projections: gcd(aPoly, xPoly) = 1,
// gcd(bPoly, yPoly) = 1, and no infinite coordinates.
bool avoids_omega(const OmegaLocus& om, const OrbitBundle& bundle);
bool avoids_infinity(const OrbitBundle& bundle);

} // namespace corrsolve

#endif
