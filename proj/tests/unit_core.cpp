#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corrsolve/bihompoly.hpp"
#include "corrsolve/bipoly.hpp"
#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/parser.hpp"
#include "corrsolve/unipoly.hpp"

using namespace corrsolve;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

BiPoly bp(const std::string& s) { return parse_bipoly(s); }

// Independent Sylvester-determinant oracle via fraction-free (Bareiss)
// elimination over Q[X].
UniPoly sylvester_resultant_oracle(const BiPoly& f, const BiPoly& g) {
    auto fc = f.coeffs_in_second();
    auto gc = g.coeffs_in_second();
    int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
    if (m < 0 || n < 0) return UniPoly::zero();
    int N = m + n;
    if (N == 0) return UniPoly::one();
    std::vector<std::vector<UniPoly>> a(static_cast<std::size_t>(N),
                                        std::vector<UniPoly>(static_cast<std::size_t>(N), UniPoly::zero()));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + k] = fc[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + k] = gc[static_cast<std::size_t>(n - k)];
    UniPoly prev = UniPoly::one();
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (!a[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return UniPoly::zero();
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
        prev = a[k][k];
    }
    UniPoly det = a[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

BiPoly random_bipoly(std::mt19937& rng, int dmax) {
    std::uniform_int_distribution<int> dc(-5, 5), dd(0, dmax);
    BiPoly p;
    int terms = 2 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) p = p + BiPoly::monomial(Rat(dc(rng)), dd(rng), dd(rng));
    return p;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(rat_from_string("3/4").value() == rat(3, 4));
    CHECK(rat_from_string("-7").value() == Rat(-7));
    CHECK(!rat_from_string("1/0").has_value());
    CHECK(!rat_from_string("1.5").has_value());
    CHECK(height(rat(-3, 7)) == 7);
    CHECK(rat_to_decimal(rat(-1, 3), 4) == "-0.3333");
    CHECK(rat_to_decimal(rat(5, 2), 1) == "2.5");
}

TEST_CASE("unipoly arithmetic and division") {
    UniPoly f = upoly({-1, 0, 1}); // x^2 - 1
    UniPoly g = upoly({1, 1});     // x + 1
    auto [q, r] = f.divrem(g);
    CHECK(r.is_zero());
    CHECK(q == upoly({-1, 1}));
    CHECK(f.eval(Rat(3)) == Rat(8));
    CHECK(f.taylor_shift(Rat(1)) == upoly({0, 2, 1}));
    CHECK(f.derivative() == upoly({0, 2}));
    CHECK_THROWS_AS(f.exact_div(upoly({1, 2})), error);
}

TEST_CASE("unipoly gcd and squarefree") {
    UniPoly a = upoly({-1, 1}); // x-1
    UniPoly b = upoly({2, 1});  // x+2
    UniPoly f = a * a * b;
    CHECK(gcd(f, f.derivative()) == a);
    CHECK(squarefree_part(f) == (a * b).primitive());

    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0] == std::pair{b, 1});
    CHECK(dec[1] == std::pair{a, 2});
}

TEST_CASE("resultants match the Sylvester determinant oracle") {
    BiPoly f = bp("x^2 + 3*x*y + y^2");
    BiPoly g = bp("2*x + 3*y");
    UniPoly res = resultant_eliminating(f, g, VarSel::Second);
    CHECK(res == upoly({0, 0, -5})); // -5x^2, the exact Sylvester determinant
    CHECK(res == sylvester_resultant_oracle(f, g));

    CHECK(resultant_eliminating(bp("x*y - 1"), bp("x"), VarSel::Second) == upoly({0, 1}));

    std::mt19937 rng(12345);
    int zero_cases = 0;
    for (int it = 0; it < 100; ++it) {
        BiPoly a = random_bipoly(rng, 3);
        BiPoly b = random_bipoly(rng, 3);
        if (a.is_zero() || b.is_zero()) continue;
        if (it % 3 == 0) {
            BiPoly c = random_bipoly(rng, 2);
            if (!c.is_zero() && c.deg_second() > 0) {
                a = a * c;
                b = b * c;
            }
        }
        if (a.deg_second() < 1 || b.deg_second() < 1) continue;
        UniPoly res2 = resultant_eliminating(a, b, VarSel::Second);
        CHECK(res2 == sylvester_resultant_oracle(a, b));
        BiPoly g2 = gcd_bipoly(a, b);
        bool res_zero = res2.is_zero();
        bool gcd_nontrivial = g2.deg_second() > 0;
        CHECK(res_zero == gcd_nontrivial);
        if (res_zero) ++zero_cases;
    }
    CHECK(zero_cases > 5); // the shared-factor branch was actually exercised
}

TEST_CASE("joint resultant composes relations") {
    // hyperbola: Res_M(X*M - 1, Y*M - 1) is the diagonal
    BiPoly r = BiPoly::monomial(Rat(1), 1, 1) - BiPoly::one();
    BiPoly s = BiPoly::monomial(Rat(1), 1, 1) - BiPoly::one();
    BiPoly res = joint_resultant(r, s);
    CHECK(res.canonical() == bp("x - y").canonical());

    // linear relations: Res_M(M - X, Y - M) = Y - X up to sign
    BiPoly r2 = BiPoly::var_second() - BiPoly::var_first(); // M - X
    BiPoly s2 = BiPoly::var_second() - BiPoly::var_first(); // Y - M
    CHECK(joint_resultant(r2, s2).canonical() == bp("x - y").canonical());
}

TEST_CASE("bivariate gcd and squarefree part") {
    BiPoly f = bp("(x - y)^2 * (x + y)");
    CHECK(squarefree_part_bipoly(f) == bp("(x - y)*(x + y)").canonical());
    CHECK(squarefree_part_bipoly(bp("x^2 + 3*x*y + y^2")) == bp("x^2 + 3*x*y + y^2"));
    CHECK(squarefree_part_bipoly(bp("y^2")) == bp("y"));
    CHECK(gcd_bipoly(bp("(x*y - 1)*(x + y)"), bp("(x*y - 1)*(x - y)")) == bp("x*y - 1"));

    std::mt19937 rng(777);
    for (int it = 0; it < 25; ++it) {
        BiPoly f2 = random_bipoly(rng, 2);
        if (f2.is_zero() || f2.is_constant()) continue;
        CHECK(squarefree_part_bipoly(f2 * f2) == squarefree_part_bipoly(f2));
    }
}

TEST_CASE("bihomogenization") {
    BiPoly p = bp("x^2 + 3*x*y + y^2");
    BiHomPoly h = BiHomPoly::bihomogenize(p);
    CHECK(h.deg_x() == 2);
    CHECK(h.deg_y() == 2);
    // exponent quadruples (a0, a1, b0, b1) of x1^2*y0^2 + 3*x0*x1*y0*y1 + x0^2*y1^2
    auto quads = h.quadruples();
    REQUIRE(quads.size() == 3);
    for (const auto& [q, c] : quads) {
        CHECK(q[0] + q[1] == 2);
        CHECK(q[2] + q[3] == 2);
        if (q == std::array<int, 4>{0, 2, 2, 0}) CHECK(c == Rat(1));
        if (q == std::array<int, 4>{1, 1, 1, 1}) CHECK(c == Rat(3));
        if (q == std::array<int, 4>{2, 0, 0, 2}) CHECK(c == Rat(1));
    }
    // x1^2*y0^2 + 3*x0*x1*y0*y1 + x0^2*y1^2
    CHECK(h.eval(Rat(1), Rat(2), Rat(1), Rat(3)) == p.eval(Rat(2), Rat(3)));
    CHECK(h.dehomogenize(Chart::XFinYFin) == p);

    BiPoly hyp = bp("x*y - 1");
    BiHomPoly hh = BiHomPoly::bihomogenize(hyp);
    // x1*y1 - x0*y0
    CHECK(hh.eval(Rat(0), Rat(1), Rat(1), Rat(0)) == Rat(0)); // (inf, 0) on curve
    CHECK(hh.eval(Rat(1), Rat(0), Rat(0), Rat(1)) == Rat(0)); // (0, inf) on curve
    CHECK(hh.vanishes_at_inf_inf() == false);

    BiPoly ex1 = bp("x*y - x^2*y - x*y^2 - 1");
    BiHomPoly h1 = BiHomPoly::bihomogenize(ex1);
    // x0*x1*y0*y1 - x1^2*y0*y1 - x0*x1*y1^2 - x0^2*y0^2
    CHECK(h1.dehomogenize(Chart::XFinYFin) == ex1);
    CHECK(h1.vanishes_at_inf_inf());
    for (Chart c : {Chart::XInfYFin, Chart::XFinYInf, Chart::XInfYInf}) {
        BiPoly local = h1.dehomogenize(c);
        CHECK(!local.is_zero());
    }
    // round-trip on the main chart for random polynomials
    std::mt19937 rng(4242);
    for (int it = 0; it < 20; ++it) {
        BiPoly q = random_bipoly(rng, 4);
        if (q.is_zero()) continue;
        CHECK(BiHomPoly::bihomogenize(q).dehomogenize(Chart::XFinYFin) == q);
    }
}

TEST_CASE("parser accepts the reference polynomials and reports positions") {
    BiPoly e1 = bp("x*y - x^2*y - x*y^2 - 1");
    CHECK(e1.deg_first() == 2);
    CHECK(e1.deg_second() == 2);
    CHECK(e1.coeff(1, 1) == Rat(1));
    CHECK(e1.coeff(0, 0) == Rat(-1));

    CHECK(bp("0").is_zero());
    CHECK(bp("X^2 + 3*X*Y + Y^2") == bp("x^2 + 3*x*y + y^2")); // case-insensitive
    CHECK(bp("-x + 1") == BiPoly::one() - BiPoly::var_first());
    CHECK(bp("1/2*x") * Rat(2) == BiPoly::var_first());

    CHECK_THROWS_AS(bp("x*z"), parse_error);
    CHECK_THROWS_AS(bp("2x"), parse_error);
    CHECK_THROWS_AS(bp("x^-2"), parse_error);
    CHECK_THROWS_AS(bp("x +"), parse_error);
    CHECK_THROWS_AS(bp("(x + 1"), parse_error);
    CHECK_THROWS_AS(bp("1.5*x"), parse_error);
    try {
        bp("x + q");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("print-parse round trip") {
    std::vector<std::string> corpus = {
        "x*y - x^2*y - x*y^2 - 1", "x^2 + 3*x*y + y^2", "0", "-1/2*x*y",
        "x^4 - 7/3*y + 2", "(x + y)^3 - 1", "x*y*(x - y)*(x + y)",
    };
    for (const auto& s : corpus) {
        BiPoly p = bp(s);
        CHECK(parse_bipoly(print_canonical(p)) == p);
        CHECK(print_canonical(parse_bipoly(print_canonical(p))) == print_canonical(p));
    }
    CHECK(print_canonical(bp("x^2 + 3*x*y + y^2")) == "x^2 + 3*x*y + y^2");
    CHECK(print_canonical(BiPoly::zero()) == "0");
    CHECK(print_canonical(BiPoly::monomial(rat(-1, 2), 1, 1)) == "-1/2*x*y");

    std::mt19937 rng(99);
    for (int it = 0; it < 40; ++it) {
        BiPoly p = random_bipoly(rng, 5);
        CHECK(parse_bipoly(print_canonical(p)) == p);
    }
}

TEST_CASE("univariate factorization") {
    UniPoly f = upoly({-1, 0, 1}); // x^2-1
    auto fac = factor_univariate(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.content == Rat(1));

    auto irr1 = factor_univariate(upoly({1, 3, 1}));
    REQUIRE(irr1.factors.size() == 1);
    CHECK(irr1.factors[0].second == 1);
    CHECK(irr1.factors[0].first.degree() == 2);

    auto irr2 = factor_univariate(upoly({1, 0, 1, -1})); // 1 + x^2 - x^3
    REQUIRE(irr2.factors.size() == 1);
    CHECK(irr2.factors[0].first.degree() == 3);

    // multiplicities and content
    UniPoly g = upoly({2}) * upoly({-1, 1}).pow(2) * upoly({1, 0, 1}) * upoly({3, 2});
    auto fg = factor_univariate(g);
    UniPoly prod = UniPoly::one();
    for (const auto& [h, m] : fg.factors) prod = prod * h.pow(static_cast<unsigned>(m));
    CHECK(prod * fg.content == g);
    int total_deg = 0;
    for (const auto& [h, m] : fg.factors) total_deg += h.degree() * m;
    CHECK(total_deg == g.degree());

    // a degree-8 product of two irreducible quartics
    UniPoly q1 = upoly({2, 0, 0, 0, 1});  // x^4+2
    UniPoly q2 = upoly({-3, 1, 0, 1, 1}); // x^4+x^3+x-3 (has factor? check below via reassembly)
    auto fq = factor_univariate(q1 * q2);
    UniPoly reassembled = UniPoly::one();
    for (const auto& [h, m] : fq.factors) reassembled = reassembled * h.pow(static_cast<unsigned>(m));
    CHECK(reassembled * fq.content == q1 * q2);

    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> dc(-6, 6);
    for (int it = 0; it < 15; ++it) {
        std::vector<Rat> c;
        int d = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i <= d; ++i) c.emplace_back(dc(rng));
        UniPoly h(std::move(c));
        if (h.degree() < 1) continue;
        auto fh = factor_univariate(h);
        UniPoly prod2 = UniPoly::one();
        for (const auto& [g2, m] : fh.factors) prod2 = prod2 * g2.pow(static_cast<unsigned>(m));
        CHECK(prod2 * fh.content == h);
    }
}

TEST_CASE("rational roots") {
    UniPoly f = upoly({-2, 1}) * upoly({1, 2}) * upoly({1, 0, 1}); // (x-2)(2x+1)(x^2+1)
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == rat(-1, 2));
    CHECK(roots[1] == Rat(2));
}

TEST_CASE("cyclotomic recognition") {
    CHECK(is_cyclotomic(upoly({-1, 1})));          // x-1
    CHECK(is_cyclotomic(upoly({1, 1})));           // x+1
    CHECK(is_cyclotomic(upoly({1, 1, 1})));        // x^2+x+1
    CHECK(is_cyclotomic(upoly({1, 0, 1})));        // x^2+1
    CHECK(is_cyclotomic(upoly({1, -1, 1})));       // x^2-x+1
    CHECK(is_cyclotomic(upoly({1, 1, 1, 1, 1}))); // Phi_5
    CHECK(!is_cyclotomic(upoly({1, -7, 1})));      // T^2-7T+1
    CHECK(!is_cyclotomic(upoly({-2, 1})));
    CHECK(!is_cyclotomic(upoly({0, 1})));          // T
    CHECK(!is_cyclotomic(upoly({1, 0, -1, 1})));
}
