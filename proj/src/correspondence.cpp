#include "corrsolve/correspondence.hpp"

#include <algorithm>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/gauss.hpp"
#include "corrsolve/numberfield.hpp"

namespace corrsolve {

Correspondence Correspondence::create(const BiPoly& p, bool assume_irreducible) {
    if (p.is_zero()) throw input_error("the zero polynomial defines no correspondence");
    if (!p.depends_on_first() || !p.depends_on_second())
        throw input_error("p must depend on both x and y");
    Correspondence c;
    c.p_ = p; // kept exactly as given; canonicalization happens where comparisons need it
    c.px_ = c.p_.derivative_first();
    c.py_ = c.p_.derivative_second();
    c.hom_ = BiHomPoly::bihomogenize(c.p_);
    c.dx_ = c.p_.deg_first();
    c.dy_ = c.p_.deg_second();
    c.lc_y_ = c.p_.lc_in_second();
    c.lc_x_ = c.p_.lc_in_first();

    HypothesisReport& rep = c.report_;
    BiPoly sf = squarefree_part_bipoly(c.p_);
    rep.squarefree = (sf == c.p_.canonical());
    if (!rep.squarefree) rep.warnings.push_back("p is not squarefree; analyses run on hypotheses-violating input");
    rep.assumed_irreducible = assume_irreducible;
    if (assume_irreducible) {
        rep.absolute_factors = -1;
        rep.absolutely_irreducible = true;
    } else {
        rep.absolute_factors = absolute_factor_count(sf);
        rep.absolutely_irreducible = rep.squarefree && rep.absolute_factors == 1;
        if (rep.absolute_factors > 1)
            rep.warnings.push_back("p has " + std::to_string(rep.absolute_factors) +
                                   " absolutely irreducible factors; theorem hypotheses are violated");
    }
    SmoothnessResult sm = is_smooth(c);
    rep.smooth = sm.smooth;
    rep.singular_points = sm.witnesses;
    if (!rep.smooth) rep.warnings.push_back("C is singular; theorem hypotheses are violated");
    return c;
}

UniPoly Correspondence::fiber_poly_first(const Rat& q) const { return p_.substitute_first(q); }

bool Correspondence::fiber_first_has_infinity(const Rat& q) const { return lc_y_.eval(q) == 0; }

bool Correspondence::contains_point(const CurvePoint& pt) const {
    const bool xi = pt.first.is_infinity(), yi = pt.second.is_infinity();
    if (xi && yi) return hom_.vanishes_at_inf_inf();
    if (xi) return pt.second.finite->is_root_of(hom_.fiber_form_x_infinity());
    if (yi) return pt.first.finite->is_root_of(hom_.fiber_form_y_infinity());
    const AlgebraicNumber& a = *pt.first.finite;
    const AlgebraicNumber& b = *pt.second.finite;
    if (a.is_rational()) return b.is_root_of(p_.substitute_first(a.rational_value()));
    if (b.is_rational()) return a.is_root_of(p_.substitute_second(b.rational_value()));
    // both irrational: count the partners of a among the conjugates of b
    const UniPoly& A = a.defining();
    const UniPoly& B = b.defining();
    FieldPtr K = std::make_shared<const NumberField>(A);
    int d = nf_gcd_degree(nf_reduce_bipoly(K, p_), nf_from_unipoly(K, B));
    if (d <= 0) return false;
    if (d == B.degree()) return true;
    std::vector<AlgebraicNumber> cands = isolate_roots_irreducible(B);
    auto sel = select_members(a, cands, {p_}, static_cast<std::size_t>(d));
    for (std::size_t k : sel)
        if (equals(cands[k], b)) return true;
    return false;
}

int absolute_factor_count(const BiPoly& p0) {
    if (p0.is_zero()) throw error("absolute_factor_count of zero");
    BiPoly p = p0.canonical();
    if (p.is_constant()) throw error("absolute_factor_count of a constant");
    if (!(squarefree_part_bipoly(p) == p)) throw error("absolute_factor_count requires squarefree input");
    int m = p.deg_first(), n = p.deg_second();
    if (n <= 0) return m; // squarefree univariate: distinct linear factors over C
    if (m <= 0) return n;

    BiPoly fx = p.derivative_first(), fy = p.derivative_second();
    int gcount = m * (n + 1), hcount = (m + 1) * n;
    int cols = gcount + hcount;
    int rows = (2 * m) * (2 * n);
    QMatrix mat(static_cast<std::size_t>(rows), QVec(static_cast<std::size_t>(cols), Rat(0)));
    auto fill_col = [&](int col, const BiPoly& expr) {
        for (const auto& [mono, c] : expr.terms()) {
            int idx = mono.first * (2 * n) + mono.second;
            mat[static_cast<std::size_t>(idx)][static_cast<std::size_t>(col)] = c;
        }
    };
    int col = 0;
    // unknown g_{ab} (a < m, b <= n): f * d(x^a y^b)/dy - x^a y^b * f_y
    for (int a = 0; a < m; ++a)
        for (int b = 0; b <= n; ++b) {
            BiPoly expr = -BiPoly::monomial(Rat(1), a, b) * fy;
            if (b > 0) expr = expr + p * BiPoly::monomial(Rat(b), a, b - 1);
            fill_col(col++, expr);
        }
    // unknown h_{ab} (a <= m, b < n): -f * d(x^a y^b)/dx + x^a y^b * f_x
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b < n; ++b) {
            BiPoly expr = BiPoly::monomial(Rat(1), a, b) * fx;
            if (a > 0) expr = expr - p * BiPoly::monomial(Rat(a), a - 1, b);
            fill_col(col++, expr);
        }
    int r = rank(std::move(mat));
    return cols - r;
}

namespace {

std::vector<ProjPoint> roots_as_projpoints(const UniPoly& f) {
    std::vector<ProjPoint> out;
    if (f.degree() < 1) return out;
    for (auto& a : isolate_roots(f)) out.push_back(ProjPoint::of(std::move(a)));
    return out;
}

} // namespace

std::vector<ProjPoint> fiber(const Correspondence& C, const ProjPoint& z, Side side) {
    const BiPoly q = (side == Side::First) ? C.p() : C.p().swap_vars();
    const int dfib = (side == Side::First) ? C.dy() : C.dx();
    const UniPoly lc = (side == Side::First) ? C.lc_y() : C.lc_x();

    std::vector<ProjPoint> out;
    if (z.is_infinity()) {
        UniPoly phi = (side == Side::First) ? C.bihom().fiber_form_x_infinity()
                                            : C.bihom().fiber_form_y_infinity();
        out = roots_as_projpoints(phi);
        if (C.bihom().vanishes_at_inf_inf()) out.push_back(ProjPoint::infinity());
        return out;
    }
    const AlgebraicNumber& alpha = *z.finite;
    if (alpha.is_rational()) {
        Rat v = alpha.rational_value();
        UniPoly fy = q.substitute_first(v);
        if (fy.is_zero())
            throw unsupported_error("the fiber is a full line: p has a component over " + rat_to_string(v));
        out = roots_as_projpoints(fy);
        if (fy.degree() < dfib) out.push_back(ProjPoint::infinity());
        return out;
    }
    const UniPoly& A = alpha.defining();
    UniPoly R = resultant_eliminating(BiPoly::embed_first(A), q, VarSel::First);
    if (R.is_zero()) throw unsupported_error("p shares a factor with the minimal polynomial of z");
    FieldPtr K = std::make_shared<const NumberField>(A);
    NFPoly pmod = nf_reduce_bipoly(K, q);
    if (R.degree() >= 1) {
        for (const auto& [G, mult] : factor_univariate(squarefree_part(R)).factors) {
            int d = nf_gcd_degree(pmod, nf_from_unipoly(K, G));
            if (d <= 0) continue;
            std::vector<AlgebraicNumber> cands = isolate_roots_irreducible(G);
            if (d == G.degree()) {
                for (auto& c : cands) out.push_back(ProjPoint::of(std::move(c)));
            } else {
                for (std::size_t k : select_members(alpha, cands, {q}, static_cast<std::size_t>(d)))
                    out.push_back(ProjPoint::of(cands[k]));
            }
        }
    }
    if (alpha.is_root_of(lc)) out.push_back(ProjPoint::infinity());
    return out;
}

std::vector<CurvePoint> points_at_infinity(const Correspondence& C) {
    std::vector<CurvePoint> out;
    UniPoly phi = C.bihom().fiber_form_x_infinity();
    if (phi.degree() >= 1)
        for (auto& b : isolate_roots(phi))
            out.push_back({ProjPoint::infinity(), ProjPoint::of(std::move(b)), Evidence::Exact});
    UniPoly psi = C.bihom().fiber_form_y_infinity();
    if (psi.degree() >= 1)
        for (auto& a : isolate_roots(psi))
            out.push_back({ProjPoint::of(std::move(a)), ProjPoint::infinity(), Evidence::Exact});
    if (C.bihom().vanishes_at_inf_inf())
        out.push_back({ProjPoint::infinity(), ProjPoint::infinity(), Evidence::Exact});
    return out;
}

SmoothnessResult is_smooth(const Correspondence& C) {
    SmoothnessResult res;
    const BiPoly& p = C.p();
    UniPoly r1 = resultant_eliminating(p, C.px(), VarSel::Second);
    UniPoly r2 = resultant_eliminating(p, C.py(), VarSel::Second);
    if (r1.is_zero() || r2.is_zero()) {
        // p shares a factor with a partial derivative; every such input is
        // already flagged non-squarefree or reducible upstream
        res.smooth = false;
        return res;
    }
    UniPoly s = gcd(r1, r2);
    if (s.degree() >= 1) {
        for (const auto& [A, mult] : factor_univariate(s).factors) {
            FieldPtr K = std::make_shared<const NumberField>(A);
            NFPoly g = nf_gcd(nf_gcd(nf_reduce_bipoly(K, p), nf_reduce_bipoly(K, C.px())),
                              nf_reduce_bipoly(K, C.py()));
            if (nf_deg(g) < 1) continue;
            NFPoly gsf = nf_divrem(g, nf_gcd(g, nf_derivative(g))).first;
            int expected = nf_deg(gsf);
            if (expected < 1) continue;
            res.smooth = false;
            // candidate second coordinates: singular points annihilate p,
            // p_X and p_Y, so any of the three with a nonzero resultant
            // against A yields a covering candidate set (p itself drops out
            // when the curve contains the vertical line over A's roots)
            UniPoly Rsf = UniPoly::one();
            for (const BiPoly* q : {&p, &C.px(), &C.py()}) {
                UniPoly R = resultant_eliminating(BiPoly::embed_first(A), *q, VarSel::First);
                if (!R.is_zero() && R.degree() >= 1) {
                    Rsf = squarefree_part(R);
                    break;
                }
            }
            if (Rsf.degree() < 1) continue;
            for (const auto& alpha : isolate_roots_irreducible(A)) {
                std::vector<AlgebraicNumber> cands = isolate_roots(Rsf);
                auto sel = select_members(alpha, cands, {p, C.px(), C.py()},
                                          static_cast<std::size_t>(expected));
                for (std::size_t k : sel)
                    res.witnesses.push_back(
                        {ProjPoint::of(alpha), ProjPoint::of(cands[k]), Evidence::Exact});
            }
        }
    }
    // charts at infinity: on each chart the locus at infinity is the line
    // where the reciprocal local variable vanishes
    auto line_singularities = [&](Chart chart) {
        BiPoly q = C.bihom().dehomogenize(chart);
        UniPoly a = q.substitute_first(Rat(0));
        UniPoly b = q.derivative_first().substitute_first(Rat(0));
        UniPoly c = q.derivative_second().substitute_first(Rat(0));
        UniPoly g = gcd(gcd(a, b), c);
        std::vector<AlgebraicNumber> out;
        if (g.degree() >= 1)
            for (auto& r : isolate_roots(g)) out.push_back(std::move(r));
        return out;
    };
    for (auto& beta : line_singularities(Chart::XInfYFin)) {
        res.smooth = false;
        res.witnesses.push_back({ProjPoint::infinity(), ProjPoint::of(std::move(beta)), Evidence::Exact});
    }
    {
        BiPoly q = C.bihom().dehomogenize(Chart::XFinYInf).swap_vars(); // (w, x)
        UniPoly a = q.substitute_first(Rat(0));
        UniPoly b = q.derivative_first().substitute_first(Rat(0));
        UniPoly c = q.derivative_second().substitute_first(Rat(0));
        UniPoly g = gcd(gcd(a, b), c);
        if (g.degree() >= 1)
            for (auto& alpha : isolate_roots(g)) {
                res.smooth = false;
                res.witnesses.push_back({ProjPoint::of(std::move(alpha)), ProjPoint::infinity(), Evidence::Exact});
            }
    }
    {
        BiPoly q = C.bihom().dehomogenize(Chart::XInfYInf);
        if (q.eval(Rat(0), Rat(0)) == 0 && q.derivative_first().eval(Rat(0), Rat(0)) == 0 &&
            q.derivative_second().eval(Rat(0), Rat(0)) == 0) {
            res.smooth = false;
            res.witnesses.push_back({ProjPoint::infinity(), ProjPoint::infinity(), Evidence::Exact});
        }
    }
    return res;
}

} // namespace corrsolve
