#include "corrsolve/finiteness.hpp"

#include <map>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/gauss.hpp"

namespace corrsolve {

Relation Relation::from_bipoly(const BiPoly& r) {
    if (r.is_zero()) throw error("the zero polynomial is not a relation");
    Relation out;
    BiPoly work = squarefree_part_bipoly(r);
    if (work.is_constant()) return out;
    UniPoly cx = work.content_in_second(); // pure-first-variable factors
    if (cx.degree() > 0) {
        work = exact_div_bipoly(work, BiPoly::embed_first(cx));
        out.xlines = cx.primitive();
    }
    UniPoly cy = work.content_in_first();
    if (cy.degree() > 0) {
        work = exact_div_bipoly(work, BiPoly::embed_second(cy));
        out.ylines = cy.primitive();
    }
    out.main = work.is_constant() ? BiPoly::one() : work.canonical();
    return out;
}

bool Relation::operator==(const Relation& o) const {
    return main == o.main && xlines == o.xlines && ylines == o.ylines;
}

bool Relation::is_empty() const {
    return main == BiPoly::one() && xlines.degree() < 1 && ylines.degree() < 1;
}

std::pair<int, int> Relation::bidegree() const {
    if (main == BiPoly::one()) return {0, 0};
    return {main.deg_first(), main.deg_second()};
}

std::string Relation::to_string() const {
    std::string s = main.to_string("x", "y");
    if (xlines.degree() > 0) s += " | x-lines: " + xlines.to_string("x");
    if (ylines.degree() > 0) s += " | y-lines: " + ylines.to_string("y");
    return s;
}

Relation compose(const Relation& r, const Relation& s) {
    if (r.is_empty() || s.is_empty()) return Relation{};
    if (gcd(r.ylines, s.xlines).degree() > 0)
        throw unsupported_error("relation composition produces a full-plane component");

    bool r_has_main = !(r.main == BiPoly::one());
    bool s_has_main = !(s.main == BiPoly::one());

    // A horizontal line of r routed through a fiber of s containing the
    // point at infinity (or symmetrically) would produce a coordinate line
    // at infinity, which the relation type cannot represent.
    if (r.ylines.degree() > 0 && s_has_main && gcd(r.ylines, s.main.lc_in_second()).degree() > 0)
        throw unsupported_error("composite contains a line at infinity");
    if (s.xlines.degree() > 0 && r_has_main && gcd(s.xlines, r.main.lc_in_first()).degree() > 0)
        throw unsupported_error("composite contains a line at infinity");

    BiPoly main_part = BiPoly::one();
    if (r_has_main && s_has_main) {
        BiPoly res = joint_resultant(r.main, s.main);
        if (res.is_zero())
            throw error("composition resultant vanished identically (shared middle factor)");
        main_part = res;
    }
    UniPoly xl = UniPoly::one(), yl = UniPoly::one();
    if (r_has_main && s.xlines.degree() > 0) {
        UniPoly t = resultant_eliminating(r.main, BiPoly::embed_second(s.xlines), VarSel::Second);
        if (t.is_zero()) throw error("degenerate line composition");
        xl = xl * t;
    }
    if (s_has_main && r.ylines.degree() > 0) {
        UniPoly t = resultant_eliminating(s.main, BiPoly::embed_first(r.ylines), VarSel::First);
        if (t.is_zero()) throw error("degenerate line composition");
        yl = yl * t;
    }
    xl = xl * r.xlines;     // lines survive composition with a nonempty s
    yl = yl * s.ylines;
    Relation combined = (main_part == BiPoly::one())
                            ? Relation{}
                            : Relation::from_bipoly(main_part);
    if (xl.degree() > 0) combined.xlines = squarefree_part(combined.xlines * xl);
    if (yl.degree() > 0) combined.ylines = squarefree_part(combined.ylines * yl);
    return combined;
}

std::string PeriodReport::describe() const {
    switch (outcome) {
        case Outcome::Finite: return "finite with period " + std::to_string(period);
        case Outcome::NoStabilization: return "no stabilization up to n = " + std::to_string(max_n);
        case Outcome::DegreeCapExceeded: return "degree cap exceeded";
    }
    return "";
}

PeriodReport period(const Correspondence& C, int max_n, int max_degree) {
    PeriodReport rep;
    rep.max_n = max_n;
    Relation forward = Relation::from_bipoly(C.p());
    Relation backward = Relation::from_bipoly(C.p().swap_vars());
    Relation R1 = compose(forward, backward); // trC o C as a relation z -> w
    rep.degree_trace.push_back(R1.bidegree());
    Relation current = R1;
    for (int n = 1; n <= max_n; ++n) {
        Relation next = compose(current, R1);
        rep.degree_trace.push_back(next.bidegree());
        if (next == current) {
            rep.outcome = PeriodReport::Outcome::Finite;
            rep.period = n;
            return rep;
        }
        auto [dx, dy] = next.bidegree();
        if (dx > max_degree || dy > max_degree) {
            rep.outcome = PeriodReport::Outcome::DegreeCapExceeded;
            return rep;
        }
        current = next;
    }
    rep.outcome = PeriodReport::Outcome::NoStabilization;
    return rep;
}

std::string SeparatedWitness::describe() const {
    std::string fd = a > 0 ? (a == 1 ? std::string("x") : "x^" + std::to_string(a)) : "";
    std::string gdenom = b > 0 ? (b == 1 ? std::string("y") : "y^" + std::to_string(b)) : "";
    std::string s = "(" + fnum.to_string("x") + ")";
    if (!fd.empty()) s += "/" + fd;
    s += " = (" + gnum.to_string("y") + ")";
    if (!gdenom.empty()) s += "/" + gdenom;
    return s;
}

namespace {

// lc_Y(p)^e * Y^j = table[j] (mod p), deg_Y table[j] < dy, exponents e[j].
struct ReductionTable {
    std::vector<BiPoly> rep;
    std::vector<int> exponent;
};

ReductionTable build_reductions(const BiPoly& p, int dy, const UniPoly& lcy, int max_j) {
    ReductionTable t;
    for (int j = 0; j <= max_j; ++j) {
        if (j < dy) {
            t.rep.push_back(BiPoly::monomial(Rat(1), 0, j));
            t.exponent.push_back(0);
            continue;
        }
        BiPoly r = t.rep[static_cast<std::size_t>(j - 1)] * BiPoly::var_second();
        int e = t.exponent[static_cast<std::size_t>(j - 1)];
        if (r.deg_second() == dy) {
            // lc * r - (coeff of Y^dy in r) * p kills the top term
            UniPoly top = r.coeffs_in_second().back();
            r = BiPoly::embed_first(lcy) * r - BiPoly::embed_first(top) * p;
            e += 1;
        }
        t.rep.push_back(std::move(r));
        t.exponent.push_back(e);
    }
    return t;
}

} // namespace

std::optional<SeparatedWitness> separated_search(const Correspondence& C, int deg_bound,
                                                 int den_bound) {
    const BiPoly& p = C.p();
    const int dy = C.dy();
    const UniPoly& lcy = C.lc_y();
    const int max_j = std::max(deg_bound, den_bound);
    ReductionTable table = build_reductions(p, dy, lcy, max_j);

    std::vector<std::pair<int, int>> pairs;
    for (int sum = 0; sum <= 2 * den_bound; ++sum)
        for (int a = 0; a <= den_bound; ++a) {
            int b = sum - a;
            if (b >= 0 && b <= den_bound) pairs.emplace_back(a, b);
        }

    for (auto [a, b] : pairs) {
        int fcols = deg_bound + 1, gcols = deg_bound + 1;
        // common lc power across the columns of this system
        int emax = table.exponent[static_cast<std::size_t>(b)];
        for (int j = 0; j <= deg_bound; ++j)
            emax = std::max(emax, table.exponent[static_cast<std::size_t>(j)]);

        std::map<std::pair<int, int>, int> row_of;
        std::vector<BiPoly> cols;
        auto scaled = [&](int j) {
            int e = emax - table.exponent[static_cast<std::size_t>(j)];
            BiPoly r = table.rep[static_cast<std::size_t>(j)];
            for (int k = 0; k < e; ++k) r = BiPoly::embed_first(lcy) * r;
            return r;
        };
        BiPoly red_b = scaled(b);
        for (int i = 0; i < fcols; ++i) cols.push_back(BiPoly::monomial(Rat(1), i, 0) * red_b);
        for (int j = 0; j < gcols; ++j) cols.push_back(-(BiPoly::monomial(Rat(1), a, 0) * scaled(j)));
        for (const BiPoly& c : cols)
            for (const auto& [m, q] : c.terms())
                if (!row_of.count(m)) {
                    int idx = static_cast<int>(row_of.size());
                    row_of[m] = idx;
                }
        QMatrix mat(row_of.size(), QVec(cols.size(), Rat(0)));
        for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
            for (const auto& [m, q] : cols[cidx].terms())
                mat[static_cast<std::size_t>(row_of[m])][cidx] = q;

        for (QVec v : nullspace(mat, static_cast<int>(cols.size()))) {
            // canonical representative modulo the always-present trivial
            // solution (X^a, Y^b)
            if (a <= deg_bound && b <= deg_bound) {
                Rat c = v[static_cast<std::size_t>(a)];
                v[static_cast<std::size_t>(a)] -= c;
                v[static_cast<std::size_t>(fcols + b)] -= c;
            }
            std::vector<Rat> fc(v.begin(), v.begin() + fcols);
            std::vector<Rat> gc(v.begin() + fcols, v.end());
            UniPoly fnum{std::move(fc)}, gnum{std::move(gc)};
            if (fnum.is_zero() || gnum.is_zero()) continue;
            // reject solutions with fnum / X^a constant
            if (fnum == UniPoly::monomial(fnum.coeff(a), a)) continue;
            // joint scaling to an integer-primitive fnum whose lowest
            // nonzero coefficient is positive
            Rat scale = Rat(1) / fnum.content();
            int low = 0;
            while (sgn(fnum.coeff(low)) == 0) ++low;
            if (sgn(fnum.coeff(low)) < 0) scale = -scale;
            fnum = fnum * scale;
            gnum = gnum * scale;
            BiPoly lhs = BiPoly::embed_first(fnum) * BiPoly::monomial(Rat(1), 0, b) -
                         BiPoly::embed_second(gnum) * BiPoly::monomial(Rat(1), a, 0);
            BiPoly cof = exact_div_bipoly(lhs, p);
            if (!(cof * p == lhs)) throw inconsistency_error("separated witness failed verification");
            return SeparatedWitness{fnum, a, gnum, b, cof};
        }
    }
    return std::nullopt;
}

std::optional<UniPoly> cyclotomic_ratio_test(const Correspondence& C) {
    const BiPoly& p = C.p();
    int total = p.total_degree();
    for (const auto& [m, c] : p.terms())
        if (m.first + m.second != total)
            throw input_error("cyclotomic ratio test requires a homogeneous polynomial");
    if (!(squarefree_part_bipoly(p) == p.canonical()))
        throw input_error("cyclotomic ratio test requires a squarefree polynomial");
    // coordinate-line factors X or Y force a = 0 or b = 0 in any multiple
    // a X^n - b Y^n, so the correspondence cannot be finite
    if (sgn(p.coeff(0, total)) == 0 || sgn(p.coeff(total, 0)) == 0)
        return UniPoly::variable(); // quotient 0 (or infinity): witness T
    UniPoly q = p.substitute_second(Rat(1));
    // QR(T) = Res_S(q(S), q(T*S)): vanishes exactly at quotients of roots
    BiPoly qs = BiPoly::embed_second(q);
    BiPoly qts;
    for (int k = 0; k <= q.degree(); ++k)
        qts = qts + BiPoly::monomial(q.coeff(k), k, k);
    UniPoly QR = resultant_eliminating(qs, qts, VarSel::Second);
    if (QR.is_zero()) throw error("internal: quotient resultant vanished");
    for (const auto& [h, mult] : factor_univariate(squarefree_part(QR)).factors) {
        if (!is_cyclotomic(h)) return h;
    }
    return std::nullopt;
}

void EvidenceGuard::record_finite(const std::string& what) {
    if (!infinite_.empty())
        throw inconsistency_error("contradictory evidence: finite (" + what + ") vs infinite (" +
                                  infinite_.front() + ")");
    finite_.push_back(what);
}

void EvidenceGuard::record_infinite(const std::string& what) {
    if (!finite_.empty())
        throw inconsistency_error("contradictory evidence: infinite (" + what + ") vs finite (" +
                                  finite_.front() + ")");
    infinite_.push_back(what);
}

} // namespace corrsolve
