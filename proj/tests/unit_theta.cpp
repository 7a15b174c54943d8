#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corrsolve/errors.hpp"
#include "corrsolve/parser.hpp"
#include <random>

#include "corrsolve/theta.hpp"

using namespace corrsolve;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

Correspondence corr(const std::string& s) { return Correspondence::create(parse_bipoly(s)); }

const PlaceAtInfinity* find_place(const std::vector<PlaceAtInfinity>& ps, bool xinf, bool yinf) {
    for (const auto& p : ps)
        if (p.center.first.is_infinity() == xinf && p.center.second.is_infinity() == yinf) return &p;
    return nullptr;
}

} // namespace

TEST_CASE("places at infinity: hyperbola") {
    Correspondence C = corr("x*y - 1");
    auto places = places_at_infinity(C);
    REQUIRE(places.size() == 2);
    const auto* px = find_place(places, true, false);
    const auto* py = find_place(places, false, true);
    REQUIRE(px != nullptr);
    REQUIRE(py != nullptr);
    CHECK(px->pole_x == -1);
    CHECK(px->my == 1);
    CHECK(px->center.second.finite->rational_value() == 0);
    CHECK(px->residual_verified);
    CHECK(py->pole_y == -1);
    CHECK(py->mx == 1);
    CHECK(py->residual_verified);
}

TEST_CASE("places at infinity: reference correspondences") {
    Correspondence ex2 = corr("x^2 + 3*x*y + y^2");
    auto p2 = places_at_infinity(ex2);
    REQUIRE(p2.size() == 2); // two branches at (inf, inf)
    for (const auto& pl : p2) {
        CHECK(pl.center.first.is_infinity());
        CHECK(pl.center.second.is_infinity());
        CHECK(pl.pole_x == -1);
        CHECK(pl.pole_y == -1);
        CHECK(pl.ram == 1);
    }

    Correspondence ex1 = corr("x*y - x^2*y - x*y^2 - 1");
    auto p1 = places_at_infinity(ex1);
    REQUIRE(p1.size() == 3);
    const auto* a = find_place(p1, true, false);  // (inf, 0)
    const auto* b = find_place(p1, false, true);  // (0, inf)
    const auto* cc = find_place(p1, true, true);  // (inf, inf)
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    REQUIRE(cc != nullptr);
    CHECK(a->pole_x == -1);
    CHECK(a->my == 2);
    CHECK(b->pole_y == -1);
    CHECK(b->mx == 2);
    CHECK(cc->pole_x == -1);
    CHECK(cc->pole_y == -1);
    CHECK(a->residual_verified);
    CHECK(b->residual_verified);
    CHECK(cc->residual_verified);
}

TEST_CASE("places at infinity: ramified and irrational centers") {
    // parabola: one place at (inf, inf) with e = 2
    Correspondence par = corr("y^2 - x");
    auto pp = places_at_infinity(par);
    REQUIRE(pp.size() == 1); // the parabola closes up at the single point (inf, inf)
    const auto* ii = find_place(pp, true, true);
    REQUIRE(ii != nullptr);
    CHECK(ii->ram == 2);
    CHECK(ii->pole_x == -2);
    CHECK(ii->pole_y == -1);
    CHECK(ii->residual_verified);

    // cusp-like: y^2 - x^3 at (inf, inf): x = t^-2, y = t^-3
    Correspondence cusp = corr("y^2 - x^3");
    auto pc = places_at_infinity(cusp);
    const auto* ci = find_place(pc, true, true);
    REQUIRE(ci != nullptr);
    CHECK(ci->ram == 2);
    CHECK(ci->pole_x == -2);
    CHECK(ci->pole_y == -3);

    // irrational centers (inf, +-sqrt2) for x*y^2 - 2*x - y
    Correspondence irr = corr("x*y^2 - 2*x - y");
    auto pi = places_at_infinity(irr);
    REQUIRE(pi.size() == 3);
    int sqrt2_centers = 0;
    for (const auto& pl : pi) {
        if (pl.center.first.is_infinity() && !pl.center.second.is_infinity()) {
            CHECK(pl.center.second.finite->defining() == upoly({-2, 0, 1}));
            CHECK(pl.pole_x == -1);
            CHECK(pl.my == 1);
            ++sqrt2_centers;
        }
    }
    CHECK(sqrt2_centers == 2);
}

TEST_CASE("branch completeness under singular centers") {
    // tacnode-like contact at infinity: (y - x)*(y - x - 1) has two branches
    // through (inf, inf) sharing the tangent; chi has a double rational root
    Correspondence C = corr("(y - x)*(y - x - 1)");
    auto ps = places_at_infinity(C);
    int at_ii = 0;
    for (const auto& pl : ps)
        if (pl.center.first.is_infinity() && pl.center.second.is_infinity()) ++at_ii;
    CHECK(at_ii == 2); // the recursion separated the two branches
}

TEST_CASE("valuations and divisor degree zero") {
    Correspondence hyp = corr("x*y - 1");
    auto places = places_at_infinity(hyp);
    Theta t;
    t.numerator = upoly({-2, 1});                  // x - 2
    t.denominator = UniPoly({rat(-1, 2), Rat(1)}); // y - 1/2
    const auto* px = find_place(places, true, false);
    const auto* py = find_place(places, false, true);
    CHECK(valuation(*px, t) == -1);
    CHECK(valuation(*py, t) == +1);
    int sum = 0;
    for (const auto& pl : places) sum += valuation(pl, t);
    CHECK(sum == 0);
}

TEST_CASE("theta construction respects the hypotheses") {
    Correspondence hyp = corr("x*y - 1");
    OmegaLocus om = omega(hyp);
    CurvePoint pt{ProjPoint::of(Rat(2)), ProjPoint::of(rat(1, 2)), Evidence::Exact};
    OrbitBundle b = orbit_closure(hyp, pt, 64);
    Theta t = theta_of_orbit(hyp, om, b);
    CHECK(t.numerator == upoly({-2, 1}));
    CHECK(t.denominator == UniPoly({rat(-1, 2), Rat(1)}));

    // the line pair's orbit {(0,0)} meets Omega and is rejected
    Correspondence ex2 = corr("x^2 + 3*x*y + y^2");
    OmegaLocus om2 = omega(ex2);
    CurvePoint origin{ProjPoint::of(Rat(0)), ProjPoint::of(Rat(0)), Evidence::Exact};
    OrbitBundle b2 = orbit_closure(ex2, origin, 64);
    CHECK_THROWS_AS(theta_of_orbit(ex2, om2, b2), input_error);
}

TEST_CASE("lemma 1 verification") {
    Correspondence hyp = corr("x*y - 1");
    OmegaLocus om = omega(hyp);
    CurvePoint pt{ProjPoint::of(Rat(2)), ProjPoint::of(rat(1, 2)), Evidence::Exact};
    Theta t = theta_of_orbit(hyp, om, orbit_closure(hyp, pt, 64));
    Lemma1Report rep = check_lemma1(hyp, t);
    CHECK(rep.passed);
    CHECK(rep.points_checked == 1);

    // parabola orbit through (1,1),(1,-1): gradient nonzero at both
    Correspondence par = corr("y^2 - x");
    CurvePoint q{ProjPoint::of(Rat(1)), ProjPoint::of(Rat(1)), Evidence::Exact};
    OrbitBundle ob = orbit_closure(par, q, 64);
    Theta t2;
    t2.numerator = ob.aPoly.monic();
    t2.denominator = ob.bPoly.monic();
    Lemma1Report rep2 = check_lemma1(par, t2);
    CHECK(rep2.passed);
    CHECK(rep2.points_checked == 2);

    // a theta forced through (0,0) fails with that witness
    Theta bad;
    bad.numerator = upoly({0, 1});
    bad.denominator = upoly({0, 1});
    Lemma1Report rep3 = check_lemma1(par, bad);
    CHECK(!rep3.passed);
    REQUIRE(rep3.counterexample.has_value());
    CHECK(rep3.counterexample->first.finite->rational_value() == 0);
    CHECK(rep3.counterexample->second.finite->rational_value() == 0);
}

TEST_CASE("certify_finite assembles exact certificates") {
    Correspondence hyp = corr("x*y - 1");
    OmegaLocus om = omega(hyp);
    auto places = places_at_infinity(hyp);
    auto mk = [&](long a) {
        CurvePoint pt{ProjPoint::of(Rat(a)), ProjPoint::of(rat(1, a)), Evidence::Exact};
        Theta t = theta_of_orbit(hyp, om, orbit_closure(hyp, pt, 64));
        t.seed = Rat(a);
        return t;
    };
    Theta t1 = mk(2), t2 = mk(3);

    // single theta: divisor row (-1, +1) alone has no kernel
    CertifyOutcome single = certify_finite(hyp, {t1}, places);
    CHECK(!single.certificate.has_value());

    CertifyOutcome both = certify_finite(hyp, {t1, t2}, places);
    REQUIRE(both.certificate.has_value());
    const Certificate& cert = *both.certificate;
    CHECK(verify_certificate(cert, hyp.p()));
    // exponent vectors are primitive integers
    {
        Int g(0);
        for (long e : cert.exponents) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(e).get_mpz_t());
        CHECK(g == 1);
    }
    // the exact identity holds
    BiPoly lhs = BiPoly::embed_first(cert.f0x) * BiPoly::embed_second(cert.f0y) -
                 BiPoly::embed_first(cert.g0x) * BiPoly::embed_second(cert.g0y) * cert.c;
    CHECK(lhs == cert.cofactor * hyp.p());

    // duplicated rows give only constant ratios
    CertifyOutcome dup = certify_finite(hyp, {t1, t1}, places);
    CHECK(!dup.certificate.has_value());

    // serialization round-trips and re-verifies on its own
    std::string blob = serialize_certificate(cert, hyp.p());
    auto [parsed, pp] = parse_certificate(blob);
    CHECK(verify_certificate(parsed, pp));
    CHECK(parsed.c == cert.c);

    // tampered certificates fail
    Certificate bad = cert;
    bad.c = bad.c + 1;
    CHECK(!verify_certificate(bad, hyp.p()));
}

TEST_CASE("certify pipeline on the hyperbola") {
    Correspondence hyp = corr("x*y - 1");
    CertifyPipelineResult r = certify_pipeline(hyp, Int(3), 16, 64);
    REQUIRE(r.certificate.has_value());
    CHECK(verify_certificate(*r.certificate, hyp.p()));
    CHECK(r.orbits_used >= 2);
    CHECK(!r.certificate->seeds.empty());
}

TEST_CASE("finite orbit count bound") {
    Correspondence hyp = corr("x*y - 1");
    CHECK(finite_orbit_count_bound(hyp) == 4); // 2 points + 0 omega points + 2 places
    Correspondence ex2 = corr("x^2 + 3*x*y + y^2");
    Int b = finite_orbit_count_bound(ex2);
    CHECK(b >= 4); // 1 point + |Omega| >= 1 + 2 places
}

TEST_CASE("cusp orbit: Galois closure balances the divisor") {
    // on y^2 = x^3 the orbit of (4, 8) pulls in the complex cube roots of
    // 64, closing at A = roots of x^3 - 64, B = {8, -8}; the single place
    // at infinity has (ord x, ord y) = (-2, -3) and the divisor balances
    Correspondence cusp = corr("y^2 - x^3");
    CurvePoint start{ProjPoint::of(Rat(4)), ProjPoint::of(Rat(8)), Evidence::Exact};
    OrbitBundle b = orbit_closure(cusp, start, 64);
    REQUIRE(b.status == OrbitBundle::Status::Closed);
    CHECK(b.aPoly == upoly({-64, 0, 0, 1}));
    CHECK(b.bPoly == upoly({-64, 0, 1}));
    auto mat = materialize_points(cusp, b);
    CHECK(mat.size == 6);
    OmegaLocus om = omega(cusp);
    REQUIRE(avoids_omega(om, b));
    Theta t = theta_of_orbit(cusp, om, b);
    auto places = places_at_infinity(cusp);
    REQUIRE(places.size() == 1);
    CHECK(valuation(places[0], t) == 0);
    CHECK(check_lemma1(cusp, t).passed);
}

TEST_CASE("divisor degree zero on random separated correspondences") {
    // p = f(x) - g(y) is always finite; random degrees ramify the places
    // at infinity and exercise the order bookkeeping
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> dc(-3, 3);
    int built = 0;
    for (int it = 0; it < 40 && built < 12; ++it) {
        int m = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
        std::vector<Rat> fc, gc;
        for (int i = 0; i < m; ++i) fc.emplace_back(dc(rng));
        fc.emplace_back(1 + (rng() % 2));
        for (int i = 0; i < n; ++i) gc.emplace_back(dc(rng));
        gc.emplace_back(1 + (rng() % 2));
        BiPoly p = BiPoly::embed_first(UniPoly(fc)) - BiPoly::embed_second(UniPoly(gc));
        if (p.deg_first() < 1 || p.deg_second() < 1) continue;
        Correspondence C = Correspondence::create(p);
        OmegaLocus om;
        try {
            om = omega(C);
        } catch (const error&) {
            continue; // shared factor with a partial: skip the degenerate draw
        }
        auto places = places_at_infinity(C);
        for (long seed : {0L, 1L, 2L}) {
            OrbitBundle b;
            try {
                b = orbit_closure_from_seed(C, Rat(seed), 128);
            } catch (const error&) {
                continue;
            }
            if (b.status != OrbitBundle::Status::Closed || !avoids_omega(om, b)) continue;
            Theta t = theta_of_orbit(C, om, b);
            int sum = 0;
            for (const auto& pl : places) sum += valuation(pl, t);
            CAPTURE(p.to_string());
            CHECK(sum == 0);
            ++built;
        }
    }
    CHECK(built >= 12);
}

TEST_CASE("malformed certificates are rejected") {
    CHECK_THROWS_AS(parse_certificate("nonsense"), input_error);
    CHECK_THROWS_AS(parse_certificate("corrsolve-certificate v1\np: x*y - 1\n"), input_error);
    std::string bad = "corrsolve-certificate v1\np: x*y - 1\nf0x: x\nf0y: y\ng0x: x\ng0y: y\n"
                      "c: 1/0\ncofactor: 0\nexponents: 1\nseeds:\n";
    CHECK_THROWS_AS(parse_certificate(bad), input_error);
}
