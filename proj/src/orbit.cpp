#include "corrsolve/orbit.hpp"

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/numberfield.hpp"

namespace corrsolve {

namespace {

UniPoly merge_squarefree(const UniPoly& acc, const UniPoly& extra) {
    if (extra.degree() < 1) return acc;
    if (acc.degree() < 1) return squarefree_part(extra);
    return squarefree_part(acc * extra);
}

// One full expansion round; returns true when anything grew.
bool expand_round(const Correspondence& C, UniPoly& a, UniPoly& b, bool& aInf, bool& bInf) {
    UniPoly a0 = a, b0 = b;
    bool ai0 = aInf, bi0 = bInf;

    // fibers over the first-coordinate projection feed the second
    if (a.degree() >= 1) {
        UniPoly fib = resultant_eliminating(BiPoly::embed_first(a), C.p(), VarSel::First);
        if (fib.is_zero())
            throw unsupported_error("orbit hit a full-line component of the curve");
        b = merge_squarefree(b, fib);
        if (gcd(a, C.lc_y()).degree() > 0) bInf = true;
    }
    if (aInf) {
        b = merge_squarefree(b, C.bihom().fiber_form_x_infinity());
        if (C.bihom().vanishes_at_inf_inf()) bInf = true;
    }
    // and back
    if (b.degree() >= 1) {
        UniPoly fib = resultant_eliminating(BiPoly::embed_second(b), C.p(), VarSel::Second);
        if (fib.is_zero())
            throw unsupported_error("orbit hit a full-line component of the curve");
        a = merge_squarefree(a, fib);
        if (gcd(b, C.lc_x()).degree() > 0) aInf = true;
    }
    if (bInf) {
        a = merge_squarefree(a, C.bihom().fiber_form_y_infinity());
        if (C.bihom().vanishes_at_inf_inf()) aInf = true;
    }
    return !(a == a0 && b == b0 && aInf == ai0 && bInf == bi0);
}

OrbitBundle close_bundle(const Correspondence& C, OrbitBundle start, int degree_cap) {
    start.cap = degree_cap;
    while (true) {
        bool grew = expand_round(C, start.aPoly, start.bPoly, start.aInf, start.bInf);
        if (!grew) {
            start.status = OrbitBundle::Status::Closed;
            return start;
        }
        if (start.deg_sum() > degree_cap) {
            start.status = OrbitBundle::Status::CapExceeded;
            return start;
        }
    }
}

} // namespace

OrbitBundle orbit_closure(const Correspondence& C, const CurvePoint& start, int degree_cap) {
    if (!C.contains_point(start)) throw input_error("start point does not lie on the curve");
    OrbitBundle b;
    if (start.first.is_infinity())
        b.aInf = true;
    else
        b.aPoly = start.first.finite->defining().primitive();
    if (start.second.is_infinity())
        b.bInf = true;
    else
        b.bPoly = start.second.finite->defining().primitive();
    return close_bundle(C, std::move(b), degree_cap);
}

OrbitBundle orbit_closure_from_seed(const Correspondence& C, const Rat& x_seed, int degree_cap) {
    UniPoly fib = C.fiber_poly_first(x_seed);
    if (fib.is_zero()) throw unsupported_error("seed lies on a full-line component");
    bool has_inf = fib.degree() < C.dy();
    if (fib.degree() < 1 && !has_inf) throw input_error("empty fiber over the seed");
    OrbitBundle b;
    b.aPoly = UniPoly({-x_seed, Rat(1)});
    if (fib.degree() >= 1) b.bPoly = squarefree_part(fib);
    b.bInf = has_inf;
    return close_bundle(C, std::move(b), degree_cap);
}

MaterializedOrbit materialize_points(const Correspondence& C, const OrbitBundle& bundle) {
    if (bundle.status != OrbitBundle::Status::Closed)
        throw error("materialize_points requires a closed bundle");
    MaterializedOrbit out;
    std::vector<UniPoly> afac, bfac;
    if (bundle.aPoly.degree() >= 1)
        for (const auto& [g, m] : factor_univariate(bundle.aPoly).factors) afac.push_back(g);
    if (bundle.bPoly.degree() >= 1)
        for (const auto& [g, m] : factor_univariate(bundle.bPoly).factors) bfac.push_back(g);

    for (const UniPoly& A : afac) {
        FieldPtr K = std::make_shared<const NumberField>(A);
        NFPoly pmod = nf_reduce_bipoly(K, C.p());
        std::vector<AlgebraicNumber> alphas = isolate_roots_irreducible(A);
        for (const UniPoly& B : bfac) {
            int d = nf_gcd_degree(pmod, nf_from_unipoly(K, B));
            if (d <= 0) continue;
            out.size += static_cast<std::size_t>(A.degree()) * static_cast<std::size_t>(d);
            for (const auto& alpha : alphas) {
                std::vector<AlgebraicNumber> betas = isolate_roots_irreducible(B);
                if (d == B.degree()) {
                    for (auto& beta : betas)
                        out.points.push_back(
                            {ProjPoint::of(alpha), ProjPoint::of(std::move(beta)), Evidence::Exact});
                } else {
                    for (std::size_t k :
                         select_members(alpha, betas, {C.p()}, static_cast<std::size_t>(d)))
                        out.points.push_back(
                            {ProjPoint::of(alpha), ProjPoint::of(betas[k]), Evidence::Exact});
                }
            }
        }
    }
    if (bundle.aInf && bundle.bPoly.degree() >= 1) {
        UniPoly g = gcd(C.bihom().fiber_form_x_infinity(), bundle.bPoly);
        if (g.degree() >= 1) {
            out.size += static_cast<std::size_t>(g.degree());
            for (auto& beta : isolate_roots(g))
                out.points.push_back({ProjPoint::infinity(), ProjPoint::of(std::move(beta)), Evidence::Exact});
        }
    }
    if (bundle.bInf && bundle.aPoly.degree() >= 1) {
        UniPoly g = gcd(C.bihom().fiber_form_y_infinity(), bundle.aPoly);
        if (g.degree() >= 1) {
            out.size += static_cast<std::size_t>(g.degree());
            for (auto& alpha : isolate_roots(g))
                out.points.push_back({ProjPoint::of(std::move(alpha)), ProjPoint::infinity(), Evidence::Exact});
        }
    }
    if (bundle.aInf && bundle.bInf && C.bihom().vanishes_at_inf_inf()) {
        out.size += 1;
        out.points.push_back({ProjPoint::infinity(), ProjPoint::infinity(), Evidence::Exact});
    }
    return out;
}

Int proposition_bound(const Correspondence& C, int n) {
    Int base(std::max(C.dx(), C.dy()));
    return pow_int(base, static_cast<unsigned long>(2 * (n + 1)));
}

} // namespace corrsolve
