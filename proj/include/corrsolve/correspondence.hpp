#ifndef CORRSOLVE_CORRESPONDENCE_HPP
#define CORRSOLVE_CORRESPONDENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "corrsolve/algebraic.hpp"
#include "corrsolve/bihompoly.hpp"
#include "corrsolve/bipoly.hpp"

namespace corrsolve {

struct HypothesisReport {
    bool squarefree = true;
    bool assumed_irreducible = false;
    int absolute_factors = -1; // -1 when skipped (asserted)
    bool absolutely_irreducible = false;
    bool smooth = false;
    std::vector<CurvePoint> singular_points;
    std::vector<std::string> warnings;
};

enum class Side { First, Second };

// The curve C in P1 x P1 cut out by the bihomogenization of p, seen as a
// multivalued map z -> roots of p(z, Y). Immutable after construction.
class Correspondence {
public:
    static Correspondence create(const BiPoly& p, bool assume_irreducible = false);

    const BiPoly& p() const { return p_; }
    const BiHomPoly& bihom() const { return hom_; }
    int dx() const { return dx_; }
    int dy() const { return dy_; }
    const HypothesisReport& report() const { return report_; }

    const BiPoly& px() const { return px_; }
    const BiPoly& py() const { return py_; }
    const UniPoly& lc_y() const { return lc_y_; } // coefficient of Y^dy, a poly in X
    const UniPoly& lc_x() const { return lc_x_; }

    // Roots in Y of p(q, Y) (without the point at infinity).
    UniPoly fiber_poly_first(const Rat& q) const;
    // True when the fiber over x = q contains the point at infinity.
    bool fiber_first_has_infinity(const Rat& q) const;

    bool contains_point(const CurvePoint& pt) const; // exact membership test

private:
    BiPoly p_, px_, py_;
    BiHomPoly hom_;
    UniPoly lc_y_, lc_x_;
    int dx_ = 0, dy_ = 0;
    HypothesisReport report_;
};

// Number of absolutely irreducible factors of a squarefree primitive p,
// computed as the dimension of the solution space of the Ruppert/Gao
// closed-form linear system. Rejects non-squarefree input.
int absolute_factor_count(const BiPoly& p);

// C(z) (side = First) or trC(z) (side = Second) as a set of projective
// points; empty fibers are legal.
std::vector<ProjPoint> fiber(const Correspondence& C, const ProjPoint& z, Side side);

// All points of the bihomogeneous curve with x0 = 0 or y0 = 0.
std::vector<CurvePoint> points_at_infinity(const Correspondence& C);

struct SmoothnessResult {
    bool smooth = true;
    std::vector<CurvePoint> witnesses; // singular points, affine first
};

SmoothnessResult is_smooth(const Correspondence& C);

} // namespace corrsolve

#endif
