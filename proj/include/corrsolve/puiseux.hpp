#ifndef CORRSOLVE_PUISEUX_HPP
#define CORRSOLVE_PUISEUX_HPP

#include <string>
#include <vector>

#include "corrsolve/correspondence.hpp"

namespace corrsolve {

// A branch of C centered at a point at infinity, carrying the data needed
// to evaluate valuations: the ramification index e of the local
// parametrization and the orders of the coordinate functions along it.
// pole_x = v(x) when the center's first coordinate is infinite (negative),
// mx = v(x - alpha) when it is a finite alpha; symmetrically for y.
struct PlaceAtInfinity {
    CurvePoint center;
    int ram = 1;
    int pole_x = 0, pole_y = 0;
    int mx = 0, my = 0;
    bool residual_verified = false;
    std::string branch_note;

    std::string describe() const;
};

// All places (branches) over the points at infinity, one entry per branch;
// conjugate branches appear individually. At each center the ramification
// indices sum to the local intersection multiplicity (checked internally).
// Singular centers are handled; Puiseux degeneracies that would require a
// tower of two proper extensions of Q raise unsupported_error.
std::vector<PlaceAtInfinity> places_at_infinity(const Correspondence& C);

} // namespace corrsolve

#endif
