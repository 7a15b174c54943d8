#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/finiteness.hpp"
#include "corrsolve/omega.hpp"
#include "corrsolve/orbit.hpp"
#include "corrsolve/parser.hpp"
#include "oracle_support.hpp"

using namespace corrsolve;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

BiPoly bp(const std::string& s) { return parse_bipoly(s); }

using corrsolve::testing::RPoint;

std::set<RPoint> rational_point_set(const std::vector<CurvePoint>& pts) {
    std::set<RPoint> out;
    for (const auto& pt : pts) {
        REQUIRE(!pt.first.is_infinity());
        REQUIRE(!pt.second.is_infinity());
        REQUIRE(pt.first.finite->is_rational());
        REQUIRE(pt.second.finite->is_rational());
        out.insert({pt.first.finite->rational_value(), pt.second.finite->rational_value()});
    }
    return out;
}

} // namespace

TEST_CASE("relation splitting and composition") {
    Relation r = Relation::from_bipoly(bp("(x - 1)*(x*y - 1)*(y - 2)^2"));
    CHECK(r.main == bp("x*y - 1"));
    CHECK(r.xlines == upoly({-1, 1}));
    CHECK(r.ylines == upoly({-2, 1}));

    // hyperbola: trC o C is the identity relation
    Relation c = Relation::from_bipoly(bp("x*y - 1"));
    Relation tc = Relation::from_bipoly(bp("x*y - 1").swap_vars());
    Relation R = compose(c, tc);
    CHECK(R.main == bp("x - y").canonical());

    // line-pair composite relation
    Relation e = Relation::from_bipoly(bp("x^2 + 3*x*y + y^2"));
    Relation te = Relation::from_bipoly(bp("x^2 + 3*x*y + y^2").swap_vars());
    Relation R2 = compose(e, te);
    CHECK(R2.main == bp("(x - y)*(x^2 - 7*x*y + y^2)").canonical());

    // associativity of composition on random small relations
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> dc(-3, 3);
    int checked = 0;
    for (int it = 0; it < 300 && checked < 10; ++it) {
        auto rnd = [&]() {
            BiPoly q;
            for (int t = 0; t < 3; ++t)
                q = q + BiPoly::monomial(Rat(dc(rng)), static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
            return q;
        };
        BiPoly a = rnd(), b = rnd(), cc = rnd();
        if (a.is_zero() || b.is_zero() || cc.is_zero()) continue;
        if (!a.depends_on_second() || !b.depends_on_first() || !b.depends_on_second() ||
            !cc.depends_on_first())
            continue;
        Relation ra = Relation::from_bipoly(a), rb = Relation::from_bipoly(b),
                 rc = Relation::from_bipoly(cc);
        if (ra.is_empty() || rb.is_empty() || rc.is_empty()) continue;
        try {
            Relation lhs = compose(compose(ra, rb), rc);
            Relation rhs = compose(ra, compose(rb, rc));
            CHECK(lhs == rhs);
            ++checked;
        } catch (const error&) {
            // degenerate combinations (full-plane or zero resultant) are skipped
        }
    }
    CHECK(checked == 10);
}

TEST_CASE("period detection") {
    Correspondence hyp = Correspondence::create(bp("x*y - 1"));
    PeriodReport r1 = period(hyp, 8, 4096);
    CHECK(r1.outcome == PeriodReport::Outcome::Finite);
    CHECK(r1.period == 1);

    Correspondence ex1 = Correspondence::create(bp("x*y - x^2*y - x*y^2 - 1"));
    PeriodReport r2 = period(ex1, 8, 4096);
    REQUIRE(r2.outcome == PeriodReport::Outcome::Finite);
    CHECK(r2.period <= 3);
    // one extra stabilization step: R^(n) = R^(n+1) = R^(n+2)
    {
        Relation f = Relation::from_bipoly(ex1.p());
        Relation b = Relation::from_bipoly(ex1.p().swap_vars());
        Relation R = compose(f, b);
        Relation cur = R;
        for (int i = 1; i < r2.period; ++i) cur = compose(cur, R);
        Relation nxt = compose(cur, R);
        Relation nxt2 = compose(nxt, R);
        CHECK(cur == nxt);
        CHECK(nxt == nxt2);
    }

    Correspondence ex2 = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    PeriodReport r3 = period(ex2, 5, 4096);
    CHECK(r3.outcome == PeriodReport::Outcome::NoStabilization);
    CHECK(r3.degree_trace.size() >= 2);
}

TEST_CASE("separated witness search") {
    // trivial: p = x - y admits f = x, g = y
    Correspondence diag = Correspondence::create(bp("x - y"));
    auto w0 = separated_search(diag, 1, 0);
    REQUIRE(w0.has_value());
    CHECK(w0->fnum == upoly({0, 1}));
    CHECK(w0->gnum == upoly({0, 1}));
    CHECK(w0->a == 0);
    CHECK(w0->b == 0);

    // the displayed identity for the first reference correspondence
    Correspondence ex1 = Correspondence::create(bp("x*y - x^2*y - x*y^2 - 1"));
    auto w1 = separated_search(ex1, 3, 1);
    REQUIRE(w1.has_value());
    CHECK(w1->fnum == upoly({1, 0, 1, -1})); // 1 + x^2 - x^3
    CHECK(w1->gnum == upoly({1, 0, 1, -1}));
    CHECK(w1->a == 1);
    CHECK(w1->b == 1);
    CHECK(w1->cofactor == bp("x - y"));
    BiPoly lhs = BiPoly::embed_first(w1->fnum) * BiPoly::var_second() -
                 BiPoly::embed_second(w1->gnum) * BiPoly::var_first();
    CHECK(lhs == w1->cofactor * ex1.p());

    // the line pair has no witness
    Correspondence ex2 = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    CHECK(!separated_search(ex2, 6, 2).has_value());
}

TEST_CASE("cyclotomic ratio test") {
    Correspondence ex2 = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    auto w = cyclotomic_ratio_test(ex2);
    REQUIRE(w.has_value());
    CHECK(*w == upoly({1, -7, 1})); // T^2 - 7T + 1

    Correspondence sq = Correspondence::create(bp("x^2 - y^2"));
    CHECK(!cyclotomic_ratio_test(sq).has_value());

    Correspondence om = Correspondence::create(bp("x^2 + x*y + y^2"));
    CHECK(!cyclotomic_ratio_test(om).has_value());

    Correspondence nonhom = Correspondence::create(bp("x*y - 1"));
    CHECK_THROWS_AS(cyclotomic_ratio_test(nonhom), input_error);

    Correspondence nsf = Correspondence::create(bp("x^2 - 2*x*y + y^2"));
    CHECK_THROWS_AS(cyclotomic_ratio_test(nsf), input_error);
}

TEST_CASE("evidence guard") {
    EvidenceGuard g;
    g.record_finite("period 1");
    g.record_finite("witness");
    CHECK_THROWS_AS(g.record_infinite("ratio"), inconsistency_error);
    EvidenceGuard h;
    h.record_infinite("ratio");
    CHECK_THROWS_AS(h.record_finite("period"), inconsistency_error);
}

TEST_CASE("orbit closure fixtures") {
    Correspondence ex2 = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    CurvePoint origin{ProjPoint::of(Rat(0)), ProjPoint::of(Rat(0)), Evidence::Exact};
    OrbitBundle b0 = orbit_closure(ex2, origin, 64);
    CHECK(b0.status == OrbitBundle::Status::Closed);
    CHECK(b0.aPoly == upoly({0, 1}));
    CHECK(b0.bPoly == upoly({0, 1}));
    CHECK(!b0.aInf);
    CHECK(!b0.bInf);
    auto m0 = materialize_points(ex2, b0);
    CHECK(m0.size == 1);

    Correspondence hyp = Correspondence::create(bp("x*y - 1"));
    CurvePoint pt{ProjPoint::of(Rat(2)), ProjPoint::of(rat(1, 2)), Evidence::Exact};
    OrbitBundle b1 = orbit_closure(hyp, pt, 64);
    CHECK(b1.status == OrbitBundle::Status::Closed);
    CHECK(materialize_points(hyp, b1).size == 1);

    // infinite orbit of the line pair from (1, root of y^2+3y+1)
    auto roots = isolate_roots(upoly({1, 3, 1}));
    CurvePoint irr{ProjPoint::of(Rat(1)), ProjPoint::of(roots[0]), Evidence::Exact};
    OrbitBundle b2 = orbit_closure(ex2, irr, 50);
    CHECK(b2.status == OrbitBundle::Status::CapExceeded);

    // start not on the curve is rejected
    CurvePoint off{ProjPoint::of(Rat(2)), ProjPoint::of(Rat(1)), Evidence::Exact};
    CHECK_THROWS_AS(orbit_closure(hyp, off, 64), input_error);

    // orbit through a point at infinity
    CurvePoint inf0{ProjPoint::of(Rat(0)), ProjPoint::infinity(), Evidence::Exact};
    OrbitBundle b3 = orbit_closure(hyp, inf0, 64);
    CHECK(b3.status == OrbitBundle::Status::Closed);
    CHECK(b3.bInf);
    auto m3 = materialize_points(hyp, b3);
    CHECK(m3.size == 1);

    // separable quartic: the fiber bundle over x = 1 closes
    Correspondence ex1 = Correspondence::create(bp("x*y - x^2*y - x*y^2 - 1"));
    OrbitBundle b4 = orbit_closure_from_seed(ex1, Rat(1), 64);
    CHECK(b4.status == OrbitBundle::Status::Closed);
    auto m4 = materialize_points(ex1, b4);
    CHECK(m4.size >= 2);
    PeriodReport pr = period(ex1, 8, 4096);
    REQUIRE(pr.outcome == PeriodReport::Outcome::Finite);
    CHECK(Int(m4.size) <= proposition_bound(ex1, pr.period));
    // every materialized point satisfies p
    for (const auto& cp : m4.points) CHECK(ex1.contains_point(cp));
    // Galois stability: projections factor into full minimal polynomials
    for (const auto& [g, m] : factor_univariate(b4.aPoly).factors) CHECK(m == 1);
}

TEST_CASE("proposition bound values") {
    Correspondence hyp = Correspondence::create(bp("x*y - 1"));
    CHECK(proposition_bound(hyp, 1) == 1);
    Correspondence ex2 = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    CHECK(proposition_bound(ex2, 1) == 16);
    Correspondence mixed = Correspondence::create(bp("x^3*y^2 - x^3 + y - 7"));
    CHECK(mixed.dx() == 3);
    CHECK(mixed.dy() == 2);
    CHECK(proposition_bound(mixed, 2) == 729);
}

TEST_CASE("orbit closure equals the explicit BFS oracle") {
    struct Fixture {
        std::string poly;
        Rat x, y;
    };
    std::vector<Fixture> fixtures = {
        {"x*y - 1", Rat(2), rat(1, 2)},
        {"x + y - 3", Rat(1), Rat(2)},
        {"y^2 - x^2", Rat(3), Rat(-3)},
        {"(y + x)*(x*y - 1)", Rat(2), Rat(-2)},
        {"(y - x)*(x*y - 1)", Rat(2), Rat(2)},
    };
    for (const auto& fx : fixtures) {
        CAPTURE(fx.poly);
        BiPoly p = bp(fx.poly);
        Correspondence C = Correspondence::create(p);
        std::set<RPoint> oracle = corrsolve::testing::oracle_bfs_orbit(p, fx.x, fx.y);
        CurvePoint start{ProjPoint::of(fx.x), ProjPoint::of(fx.y), Evidence::Exact};
        OrbitBundle b = orbit_closure(C, start, 64);
        REQUIRE(b.status == OrbitBundle::Status::Closed);
        auto mat = materialize_points(C, b);
        CHECK(rational_point_set(mat.points) == oracle);
        CHECK(mat.size == oracle.size());
    }
}

TEST_CASE("omega locus") {
    Correspondence hyp = Correspondence::create(bp("x*y - 1"));
    OmegaLocus o1 = omega(hyp);
    materialize_omega_points(hyp, o1);
    CHECK(o1.xPoly == upoly({0, 1}));
    CHECK(o1.yPoly == upoly({0, 1}));
    CHECK(o1.points.empty());
    CHECK(omega_size_bound(hyp) >= 0);

    Correspondence ex2 = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    OmegaLocus o2 = omega(ex2);
    materialize_omega_points(ex2, o2);
    CHECK(o2.xPoly == upoly({0, 1}));
    REQUIRE(o2.points.size() == 1);
    CHECK(o2.points[0].first.finite->rational_value() == 0);
    CHECK(o2.points[0].second.finite->rational_value() == 0);
    CHECK(omega_size_bound(ex2) >= 1);

    Correspondence par = Correspondence::create(bp("y^2 - x"));
    OmegaLocus o3 = omega(par);
    materialize_omega_points(par, o3);
    CHECK(o3.xPoly == upoly({0, 1}));
    CHECK(o3.yPoly == upoly({0, 1}));
    REQUIRE(o3.points.size() == 1);
    CHECK(o3.points[0].first.finite->rational_value() == 0);

    // avoidance on bundles
    OrbitBundle good;
    good.aPoly = upoly({-2, 1});
    good.bPoly = upoly({-2, 1});
    CHECK(avoids_omega(o1, good));
    OrbitBundle bad;
    bad.aPoly = upoly({0, 1});
    CHECK(!avoids_omega(o2, bad));
    OrbitBundle infbad;
    infbad.aInf = true;
    CHECK(!avoids_omega(o1, infbad));

    // non-squarefree p shares a factor with its partials
    Correspondence nsf = Correspondence::create(bp("(x*y - 1)^2"));
    CHECK_THROWS_AS(omega(nsf), unsupported_error);
}

TEST_CASE("period degree cap") {
    Correspondence pair = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    PeriodReport r = period(pair, 8, 2);
    CHECK(r.outcome == PeriodReport::Outcome::DegreeCapExceeded);
}

TEST_CASE("orbit entirely at infinity") {
    Correspondence pair = Correspondence::create(bp("x^2 + 3*x*y + y^2"));
    CurvePoint inf_inf{ProjPoint::infinity(), ProjPoint::infinity(), Evidence::Exact};
    OrbitBundle b = orbit_closure(pair, inf_inf, 64);
    CHECK(b.status == OrbitBundle::Status::Closed);
    CHECK(b.aInf);
    CHECK(b.bInf);
    auto m = materialize_points(pair, b);
    CHECK(m.size == 1);
    REQUIRE(m.points.size() == 1);
    CHECK(m.points[0].first.is_infinity());
    CHECK(m.points[0].second.is_infinity());
}
