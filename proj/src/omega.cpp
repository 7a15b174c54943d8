#include "corrsolve/omega.hpp"

#include <functional>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/numberfield.hpp"

namespace corrsolve {

OmegaLocus omega(const Correspondence& C) {
    const BiPoly& p = C.p();
    UniPoly rx1 = resultant_eliminating(p, C.px(), VarSel::Second);
    UniPoly rx2 = resultant_eliminating(p, C.py(), VarSel::Second);
    UniPoly ry1 = resultant_eliminating(p, C.px(), VarSel::First);
    UniPoly ry2 = resultant_eliminating(p, C.py(), VarSel::First);
    if (rx1.is_zero() || rx2.is_zero() || ry1.is_zero() || ry2.is_zero())
        throw unsupported_error("shared factor between p and a partial derivative");
    OmegaLocus om;
    om.xPoly = (rx1.degree() >= 1 || rx2.degree() >= 1) ? squarefree_part(rx1 * rx2) : UniPoly::one();
    om.yPoly = (ry1.degree() >= 1 || ry2.degree() >= 1) ? squarefree_part(ry1 * ry2) : UniPoly::one();
    // Sylvester degree bounds keep the locus finite by construction
    if (om.xPoly.degree() > 2 * C.dx() * C.dy() || om.yPoly.degree() > 2 * C.dx() * C.dy())
        throw error("internal: omega polynomial exceeds its resultant degree bound");
    return om;
}

namespace {

// fiber points over all roots of one irreducible factor, resultants and
// isolations shared across the conjugates
void factor_fiber_points(const Correspondence& C, const UniPoly& A, Side side, int degree_budget,
                         OmegaLocus& om,
                         const std::function<bool(const AlgebraicNumber&)>& skip_partner) {
    const BiPoly q = (side == Side::First) ? C.p() : C.p().swap_vars();
    if (A.degree() == 1) {
        Rat v = -A.coeff(0) / A.coeff(1);
        UniPoly fib = q.substitute_first(v);
        if (fib.is_zero()) throw unsupported_error("omega coordinate lies on a line component");
        if (fib.degree() < 1) return;
        for (auto& beta : isolate_roots(fib)) {
            if (skip_partner(beta)) continue;
            CurvePoint pt = (side == Side::First)
                                ? CurvePoint{ProjPoint::of(v), ProjPoint::of(std::move(beta)), Evidence::Exact}
                                : CurvePoint{ProjPoint::of(std::move(beta)), ProjPoint::of(v), Evidence::Exact};
            om.points.push_back(std::move(pt));
        }
        return;
    }
    UniPoly R = resultant_eliminating(BiPoly::embed_first(A), q, VarSel::First);
    if (R.is_zero()) throw unsupported_error("omega factor divides the curve polynomial");
    if (R.degree() < 1) return;
    if (R.degree() > degree_budget) {
        om.points_complete = false;
        om.notes.push_back("points over roots of " + A.to_string(side == Side::First ? "x" : "y") +
                           " skipped (candidate degree " + std::to_string(R.degree()) +
                           " exceeds the materialization budget)");
        return;
    }
    FieldPtr K = std::make_shared<const NumberField>(A);
    NFPoly pmod = nf_reduce_bipoly(K, q);
    std::vector<AlgebraicNumber> alphas = isolate_roots_irreducible(A);
    for (const auto& [G, mult] : factor_univariate(squarefree_part(R)).factors) {
        int d = nf_gcd_degree(pmod, nf_from_unipoly(K, G));
        if (d <= 0) continue;
        for (const auto& alpha : alphas) {
            std::vector<AlgebraicNumber> cands = isolate_roots_irreducible(G);
            std::vector<std::size_t> chosen;
            if (d == G.degree()) {
                chosen.resize(cands.size());
                for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
            } else {
                chosen = select_members(alpha, cands, {q}, static_cast<std::size_t>(d));
            }
            for (std::size_t k : chosen) {
                if (skip_partner(cands[k])) continue;
                CurvePoint pt = (side == Side::First)
                                    ? CurvePoint{ProjPoint::of(alpha), ProjPoint::of(cands[k]), Evidence::Exact}
                                    : CurvePoint{ProjPoint::of(cands[k]), ProjPoint::of(alpha), Evidence::Exact};
                om.points.push_back(std::move(pt));
            }
        }
    }
}

} // namespace

void materialize_omega_points(const Correspondence& C, OmegaLocus& om, int degree_budget) {
    om.points.clear();
    om.notes.clear();
    om.points_complete = true;
    auto never = [](const AlgebraicNumber&) { return false; };
    auto guarded = [&](const UniPoly& A, Side side,
                       const std::function<bool(const AlgebraicNumber&)>& skip) {
        try {
            factor_fiber_points(C, A, side, degree_budget, om, skip);
        } catch (const error& e) {
            om.points_complete = false;
            om.notes.push_back("points over roots of " +
                               A.to_string(side == Side::First ? "x" : "y") +
                               " skipped (" + e.what() + ")");
        }
    };
    if (om.xPoly.degree() >= 1)
        for (const auto& [A, m] : factor_univariate(om.xPoly).factors)
            guarded(A, Side::First, never);
    if (om.yPoly.degree() >= 1) {
        // pairs already listed through xPoly are skipped
        UniPoly xp = om.xPoly;
        auto seen = [xp](const AlgebraicNumber& partner) { return partner.is_root_of(xp); };
        for (const auto& [B, m] : factor_univariate(om.yPoly).factors)
            guarded(B, Side::Second, seen);
    }
}

Int omega_size_bound(const Correspondence& C) {
    OmegaLocus om = omega(C);
    long dx = std::max(om.xPoly.degree(), 0), dy = std::max(om.yPoly.degree(), 0);
    return Int(dx) * C.dy() + Int(dy) * C.dx();
}

bool avoids_omega(const OmegaLocus& om, const OrbitBundle& bundle) {
    if (!avoids_infinity(bundle)) return false;
    if (bundle.aPoly.degree() >= 1 && om.xPoly.degree() >= 1 &&
        gcd(bundle.aPoly, om.xPoly).degree() > 0)
        return false;
    if (bundle.bPoly.degree() >= 1 && om.yPoly.degree() >= 1 &&
        gcd(bundle.bPoly, om.yPoly).degree() > 0)
        return false;
    return true;
}

bool avoids_infinity(const OrbitBundle& bundle) { return !bundle.aInf && !bundle.bInf; }

} // namespace corrsolve
