#include "corrsolve/theta.hpp"

#include <sstream>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/gauss.hpp"
#include "corrsolve/numberfield.hpp"
#include "corrsolve/parser.hpp"

namespace corrsolve {

std::string Theta::describe() const {
    return "(" + numerator.to_string("x") + ") / (" + denominator.to_string("y") + ")";
}

Theta theta_of_orbit(const Correspondence& C, const OmegaLocus& om, const OrbitBundle& bundle) {
    (void)C;
    if (bundle.status != OrbitBundle::Status::Closed)
        throw input_error("theta requires a closed orbit bundle");
    if (!avoids_infinity(bundle))
        throw input_error("theta requires an orbit avoiding the points at infinity");
    if (!avoids_omega(om, bundle)) throw input_error("theta requires an orbit avoiding Omega");
    if (bundle.aPoly.degree() < 1 || bundle.bPoly.degree() < 1)
        throw input_error("empty orbit bundle");
    Theta t;
    t.numerator = bundle.aPoly.monic();
    t.denominator = bundle.bPoly.monic();
    t.source = bundle;
    return t;
}

Lemma1Report check_lemma1(const Correspondence& C, const Theta& t) {
    Lemma1Report rep;
    std::vector<UniPoly> afac, bfac;
    for (const auto& [g, m] : factor_univariate(t.numerator).factors) afac.push_back(g);
    for (const auto& [g, m] : factor_univariate(t.denominator).factors) bfac.push_back(g);
    for (const UniPoly& A : afac) {
        FieldPtr K = std::make_shared<const NumberField>(A);
        NFPoly pmod = nf_reduce_bipoly(K, C.p());
        NFPoly pxmod = nf_reduce_bipoly(K, C.px());
        NFPoly pymod = nf_reduce_bipoly(K, C.py());
        for (const UniPoly& B : bfac) {
            NFPoly Bmod = nf_from_unipoly(K, B);
            NFPoly paired = nf_gcd(pmod, Bmod); // minimal polynomial of the paired betas
            int d = nf_deg(paired);
            if (d <= 0) continue;
            rep.points_checked += static_cast<std::size_t>(A.degree() * d);
            int badx = nf_gcd_degree(paired, pxmod);
            int bady = nf_gcd_degree(paired, pymod);
            if (badx <= 0 && bady <= 0) continue;
            rep.passed = false;
            // materialize one failing point as the counterexample
            int expected = badx > 0 ? badx : bady;
            const BiPoly& extra = badx > 0 ? C.px() : C.py();
            std::vector<AlgebraicNumber> alphas = isolate_roots_irreducible(A);
            std::vector<AlgebraicNumber> betas = isolate_roots_irreducible(B);
            auto sel = select_members(alphas.front(), betas, {C.p(), extra},
                                      static_cast<std::size_t>(expected));
            rep.counterexample =
                CurvePoint{ProjPoint::of(alphas.front()), ProjPoint::of(betas[sel.front()]), Evidence::Exact};
            return rep;
        }
    }
    return rep;
}

int valuation(const PlaceAtInfinity& place, const Theta& t) {
    int vnum, vden;
    if (place.pole_x < 0)
        vnum = place.pole_x * t.numerator.degree();
    else
        vnum = place.center.first.finite->is_root_of(t.numerator) ? place.mx : 0;
    if (place.pole_y < 0)
        vden = place.pole_y * t.denominator.degree();
    else
        vden = place.center.second.finite->is_root_of(t.denominator) ? place.my : 0;
    return vnum - vden;
}

DivisorMatrix divisor_matrix(const std::vector<Theta>& thetas,
                             const std::vector<PlaceAtInfinity>& places) {
    DivisorMatrix m;
    for (const Theta& t : thetas) {
        std::vector<int> row;
        row.reserve(places.size());
        for (const PlaceAtInfinity& pl : places) row.push_back(valuation(pl, t));
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::string Certificate::describe() const {
    std::ostringstream os;
    os << "(" << f0x.to_string("x") << ")*(" << f0y.to_string("y") << ") = " << rat_to_string(c)
       << " * (" << g0x.to_string("x") << ")*(" << g0y.to_string("y") << ")  (mod p)";
    return os.str();
}

namespace {

// reduce q mod p in k(X)[Y]: returns r with lc_Y(p)^e * q = r (mod p),
// deg_Y r < deg_Y p
std::pair<BiPoly, int> reduce_mod(const BiPoly& q, const BiPoly& p, const UniPoly& lcy, int dy) {
    BiPoly r = q;
    int e = 0;
    while (r.deg_second() >= dy) {
        UniPoly top = r.coeffs_in_second().back();
        int k = r.deg_second() - dy;
        r = BiPoly::embed_first(lcy) * r - BiPoly::embed_first(top) * BiPoly::monomial(Rat(1), 0, k) * p;
        ++e;
    }
    return {r, e};
}

} // namespace

CertifyOutcome certify_finite(const Correspondence& C, const std::vector<Theta>& thetas,
                              const std::vector<PlaceAtInfinity>& places) {
    CertifyOutcome out;
    out.matrix = divisor_matrix(thetas, places);
    if (thetas.empty()) {
        out.reason = "no orbits available";
        return out;
    }
    // kernel of the row space: A n = 0 with A[j][i] = v_(place j)(Theta_i)
    QMatrix A(places.size(), QVec(thetas.size(), Rat(0)));
    for (std::size_t i = 0; i < thetas.size(); ++i)
        for (std::size_t j = 0; j < places.size(); ++j)
            A[j][i] = Rat(out.matrix.rows[i][j]);
    std::vector<QVec> basis = nullspace(A, static_cast<int>(thetas.size()));
    if (basis.empty()) {
        out.reason = "divisor rows are linearly independent (need more orbits)";
        return out;
    }
    for (const QVec& v : basis) {
        std::vector<Int> n = primitive_integer_vector(v);
        Certificate cert;
        cert.f0x = UniPoly::one();
        cert.f0y = UniPoly::one();
        cert.g0x = UniPoly::one();
        cert.g0y = UniPoly::one();
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (!n[i].fits_slong_p()) throw error("kernel exponent overflow");
            long e = n[i].get_si();
            cert.exponents.push_back(e);
            if (thetas[i].seed) cert.seeds.push_back(*thetas[i].seed);
            if (e > 0) {
                cert.f0x = cert.f0x * thetas[i].numerator.pow(static_cast<unsigned>(e));
                cert.g0y = cert.g0y * thetas[i].denominator.pow(static_cast<unsigned>(e));
            } else if (e < 0) {
                cert.g0x = cert.g0x * thetas[i].numerator.pow(static_cast<unsigned>(-e));
                cert.f0y = cert.f0y * thetas[i].denominator.pow(static_cast<unsigned>(-e));
            }
        }
        // nonconstancy of f0x/g0x
        if (cert.f0x * cert.g0x.lc() == cert.g0x * cert.f0x.lc()) continue;
        // determine c by exact coefficient comparison modulo p
        BiPoly f0 = BiPoly::embed_first(cert.f0x) * BiPoly::embed_second(cert.f0y);
        BiPoly g0 = BiPoly::embed_first(cert.g0x) * BiPoly::embed_second(cert.g0y);
        auto [r1, e1] = reduce_mod(f0, C.p(), C.lc_y(), C.dy());
        auto [r2, e2] = reduce_mod(g0, C.p(), C.lc_y(), C.dy());
        int emax = std::max(e1, e2);
        for (int k = e1; k < emax; ++k) r1 = BiPoly::embed_first(C.lc_y()) * r1;
        for (int k = e2; k < emax; ++k) r2 = BiPoly::embed_first(C.lc_y()) * r2;
        if (r2.is_zero()) throw inconsistency_error("certificate denominator vanished modulo p");
        const auto& [mono, lead] = *r2.terms().rbegin();
        cert.c = r1.coeff(mono.first, mono.second) / lead;
        if (!(r1 == r2 * cert.c))
            throw inconsistency_error("divisor kernel relation failed exact verification");
        cert.cofactor = exact_div_bipoly(f0 - g0 * cert.c, C.p());
        if (!(cert.f0x.degree() >= 1))
            throw inconsistency_error("certificate has a constant x-part");
        out.certificate = std::move(cert);
        return out;
    }
    out.reason = "every kernel vector yields a constant ratio (duplicate orbits only)";
    return out;
}

Int finite_orbit_count_bound(const Correspondence& C) {
    // finite orbits either meet infinity, meet Omega, or contribute
    // independent divisor rows, of which at most #places can be independent
    Int pts(static_cast<long>(points_at_infinity(C).size()));
    OmegaLocus om = omega(C);
    materialize_omega_points(C, om);
    Int omega_points(static_cast<long>(om.points.size()));
    Int pls(static_cast<long>(places_at_infinity(C).size()));
    return pts + omega_points + pls;
}

CertifyPipelineResult certify_pipeline(const Correspondence& C, const Int& seed_height,
                                       std::size_t max_orbits, int degree_cap) {
    CertifyPipelineResult result;
    OmegaLocus om = omega(C);
    std::vector<PlaceAtInfinity> places = places_at_infinity(C);
    std::vector<Theta> thetas;

    std::vector<Rat> seeds;
    for (Int h(0); h <= seed_height; ++h) {
        long hh = h.get_si();
        for (long num = -hh; num <= hh; ++num) {
            for (long den = 1; den <= hh; ++den) {
                if (std::max(std::abs(num), den) != hh) continue;
                Rat q = rat(num, den);
                if (height(q) == h) seeds.push_back(q);
            }
        }
        if (h == 0) seeds.push_back(Rat(0));
    }

    for (const Rat& s : seeds) {
        if (thetas.size() >= max_orbits) break;
        // cheap pre-filter: the seed itself must avoid Omega's x-locus
        if (om.xPoly.degree() >= 1 && om.xPoly.eval(s) == 0) continue;
        UniPoly fib = C.fiber_poly_first(s);
        if (fib.is_zero() || fib.degree() < 1) continue;
        OrbitBundle bundle;
        try {
            bundle = orbit_closure_from_seed(C, s, degree_cap);
        } catch (const unsupported_error&) {
            continue;
        }
        if (bundle.status != OrbitBundle::Status::Closed) {
            result.orbit_log.push_back("seed " + rat_to_string(s) + ": cap exceeded");
            continue;
        }
        if (!avoids_omega(om, bundle)) {
            result.orbit_log.push_back("seed " + rat_to_string(s) + ": orbit meets Omega or infinity");
            continue;
        }
        Theta t = theta_of_orbit(C, om, bundle);
        t.seed = s;
        bool dup = false;
        for (const Theta& u : thetas) dup = dup || (u == t);
        if (dup) continue;
        Lemma1Report lem = check_lemma1(C, t);
        if (!lem.passed) {
            result.orbit_log.push_back("seed " + rat_to_string(s) + ": lemma 1 failed (unexpected)");
            continue;
        }
        thetas.push_back(std::move(t));
        result.orbit_log.push_back("seed " + rat_to_string(s) + ": theta " + thetas.back().describe());
        if (thetas.size() >= 2) {
            CertifyOutcome oc = certify_finite(C, thetas, places);
            if (oc.certificate) {
                result.certificate = std::move(oc.certificate);
                result.orbits_used = thetas.size();
                return result;
            }
            result.reason = oc.reason;
        }
    }
    result.orbits_used = thetas.size();
    if (result.reason.empty()) result.reason = "insufficient orbits below the seed height";
    return result;
}

std::string serialize_certificate(const Certificate& cert, const BiPoly& p) {
    std::ostringstream os;
    os << "corrsolve-certificate v1\n";
    os << "p: " << print_canonical(p) << "\n";
    os << "f0x: " << print_canonical(BiPoly::embed_first(cert.f0x)) << "\n";
    os << "f0y: " << print_canonical(BiPoly::embed_second(cert.f0y)) << "\n";
    os << "g0x: " << print_canonical(BiPoly::embed_first(cert.g0x)) << "\n";
    os << "g0y: " << print_canonical(BiPoly::embed_second(cert.g0y)) << "\n";
    os << "c: " << rat_to_string(cert.c) << "\n";
    os << "cofactor: " << print_canonical(cert.cofactor) << "\n";
    os << "exponents:";
    for (long e : cert.exponents) os << " " << e;
    os << "\nseeds:";
    for (const Rat& s : cert.seeds) os << " " << rat_to_string(s);
    os << "\n";
    return os.str();
}

std::pair<Certificate, BiPoly> parse_certificate(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "corrsolve-certificate v1")
        throw input_error("unrecognized certificate header");
    auto field = [&](const std::string& key) {
        std::string l;
        if (!std::getline(is, l) || l.rfind(key + ": ", 0) != 0)
            throw input_error("malformed certificate: expected " + key);
        return l.substr(key.size() + 2);
    };
    Certificate cert;
    BiPoly p = parse_bipoly(field("p"));
    cert.f0x = parse_bipoly(field("f0x")).to_unipoly_first();
    cert.f0y = parse_bipoly(field("f0y")).to_unipoly_second();
    cert.g0x = parse_bipoly(field("g0x")).to_unipoly_first();
    cert.g0y = parse_bipoly(field("g0y")).to_unipoly_second();
    auto cv = rat_from_string(field("c"));
    if (!cv) throw input_error("malformed certificate constant");
    cert.c = *cv;
    cert.cofactor = parse_bipoly(field("cofactor"));
    std::string l;
    while (std::getline(is, l)) {
        std::istringstream ls(l);
        std::string key;
        ls >> key;
        if (key == "exponents:") {
            long e;
            while (ls >> e) cert.exponents.push_back(e);
        } else if (key == "seeds:") {
            std::string s;
            while (ls >> s) {
                auto r = rat_from_string(s);
                if (!r) throw input_error("malformed certificate seed");
                cert.seeds.push_back(*r);
            }
        }
    }
    return {cert, p};
}

bool verify_certificate(const Certificate& cert, const BiPoly& p) {
    if (cert.f0x.degree() < 1) return false;
    // nonconstant ratio f0x/g0x
    if (cert.f0x * cert.g0x.lc() == cert.g0x * cert.f0x.lc()) return false;
    BiPoly f0 = BiPoly::embed_first(cert.f0x) * BiPoly::embed_second(cert.f0y);
    BiPoly g0 = BiPoly::embed_first(cert.g0x) * BiPoly::embed_second(cert.g0y);
    return f0 - g0 * cert.c == cert.cofactor * p;
}

} // namespace corrsolve
