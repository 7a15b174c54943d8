#include "corrsolve/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "corrsolve/errors.hpp"

namespace corrsolve {

namespace {

// ---- arithmetic mod a small odd prime -------------------------------------

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

using FpPoly = std::vector<u64>; // dense, trimmed, coefficients in [0, p)

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_scale(const FpPoly& a, u64 s, u64 p) {
    FpPoly r = a;
    for (auto& c : r) c = mulmod(c, s, p);
    fp_trim(r);
    return r;
}

FpPoly fp_monic(const FpPoly& a, u64 p) {
    if (a.empty()) return a;
    return fp_scale(a, invmod(a.back(), p), p);
}

// remainder of a by b (b nonzero)
FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p) {
    u64 inv = invmod(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        u64 f = mulmod(a.back(), inv, p);
        std::size_t k = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = (a[k + i] + p - mulmod(f, b[i], p)) % p;
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::pair<FpPoly, FpPoly> fp_divrem(FpPoly a, const FpPoly& b, u64 p) {
    if (fp_deg(a) < fp_deg(b)) return {{}, a};
    FpPoly q(a.size() - b.size() + 1, 0);
    u64 inv = invmod(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        u64 f = mulmod(a.back(), inv, p);
        std::size_t k = a.size() - b.size();
        q[k] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = (a[k + i] + p - mulmod(f, b[i], p)) % p;
        fp_trim(a);
        if (a.empty()) break;
    }
    fp_trim(q);
    return {q, a};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

// extended euclid: s*a + t*b = 1, a and b coprime mod p
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = fp_divrem(r0, r1, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (fp_deg(r0) != 0) throw error("bezout of non-coprime polynomials");
    u64 inv = invmod(r0[0], p);
    return {fp_scale(s0, inv, p), fp_scale(t0, inv, p)};
}

FpPoly fp_powmod_poly(FpPoly base, Int e, const FpPoly& mod, u64 p) {
    FpPoly r = {1};
    base = fp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_rem(fp_mul(r, base, p), mod, p);
        base = fp_rem(fp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_derivative(const FpPoly& f, u64 p) {
    FpPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i % p, p));
    fp_trim(r);
    return r;
}

// ---- factorization mod p (Cantor-Zassenhaus), f squarefree monic ----------

void fp_equal_degree_split(const FpPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Int exp = (pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        FpPoly a(static_cast<std::size_t>(fp_deg(f)), 0);
        for (auto& c : a) c = rng() % p;
        fp_trim(a);
        if (fp_deg(a) < 1) continue;
        FpPoly t = fp_powmod_poly(a, exp, f, p);
        if (t.empty())
            t = {p - 1};
        else
            t[0] = (t[0] + p - 1) % p; // t = a^((p^d-1)/2) - 1
        fp_trim(t);
        FpPoly g = fp_gcd(t, f, p);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            fp_equal_degree_split(g, d, p, rng, out);
            fp_equal_degree_split(fp_divrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(FpPoly f, u64 p) {
    std::vector<FpPoly> out;
    std::mt19937_64 rng(0x5eedu ^ p);
    f = fp_monic(f, p);
    FpPoly h = {0, 1}; // X
    int d = 0;
    while (fp_deg(f) > 0) {
        ++d;
        if (2 * d > fp_deg(f)) {
            out.push_back(f);
            break;
        }
        h = fp_powmod_poly(h, Int(static_cast<unsigned long>(p)), f, p);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p; // h - X
        fp_trim(hx);
        FpPoly g = fp_gcd(hx, f, p);
        if (fp_deg(g) > 0) {
            fp_equal_degree_split(g, d, p, rng, out);
            f = fp_divrem(f, g, p).first;
            h = fp_rem(h, f.empty() ? FpPoly{1} : f, p);
            if (fp_deg(f) == 0) break;
        }
    }
    return out;
}

// ---- integer polynomials mod p^k and Hensel lifting ------------------------

using ZPoly = std::vector<Int>; // dense, trimmed

void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly z_reduce(ZPoly f, const Int& m) {
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    z_trim(f);
    return f;
}

// symmetric residue in (-m/2, m/2]
ZPoly z_symmetric(ZPoly f, const Int& m) {
    Int half = m / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    z_trim(f);
    return f;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return z_reduce(std::move(r), m);
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return z_reduce(std::move(r), m);
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return z_reduce(std::move(r), m);
}

// division by monic b mod m
std::pair<ZPoly, ZPoly> z_divrem_monic(ZPoly a, const ZPoly& b, const Int& m) {
    if (z_deg(a) < z_deg(b)) return {{}, a};
    ZPoly q(a.size() - b.size() + 1, Int(0));
    while (z_deg(a) >= z_deg(b)) {
        Int f = a.back();
        std::size_t k = a.size() - b.size();
        q[k] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
        a = z_reduce(std::move(a), m);
        z_trim(a);
        if (a.empty()) break;
    }
    z_trim(q);
    return {z_reduce(std::move(q), m), a};
}

Int z_invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw error("not invertible");
    return r;
}

struct LiftPair {
    ZPoly g, h, s, t;
};

// One quadratic Hensel step: from modulus m to m*m (vZG 15.10).
LiftPair hensel_step(const ZPoly& f, const LiftPair& in, const Int& m) {
    Int m2 = m * m;
    ZPoly e = z_sub(z_reduce(f, m2), z_mul(in.g, in.h, m2), m2);
    auto [q, r] = z_divrem_monic(z_mul(in.s, e, m2), in.h, m2);
    ZPoly g1 = z_add(z_add(in.g, z_mul(in.t, e, m2), m2), z_mul(q, in.g, m2), m2);
    ZPoly h1 = z_add(in.h, r, m2);
    ZPoly b = z_sub(z_add(z_mul(in.s, g1, m2), z_mul(in.t, h1, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = z_divrem_monic(z_mul(in.s, b, m2), h1, m2);
    ZPoly s1 = z_sub(in.s, d, m2);
    ZPoly t1 = z_sub(z_sub(in.t, z_mul(in.t, b, m2), m2), z_mul(c, g1, m2), m2);
    return {g1, h1, s1, t1};
}

ZPoly fp_to_z(const FpPoly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

FpPoly z_to_fp(const ZPoly& f, u64 p) {
    FpPoly r;
    r.reserve(f.size());
    for (const Int& c : f) {
        Int t;
        mpz_fdiv_r_ui(t.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        r.push_back(t.get_ui());
    }
    fp_trim(r);
    return r;
}

// Lift monic factors gs of F (F = lc(F) * prod gs mod p, p not dividing
// lc(F)) to monic factors mod P with the same product congruence mod P.
std::vector<ZPoly> hensel_lift_list(const ZPoly& F, const std::vector<FpPoly>& gs, u64 p, const Int& P) {
    if (gs.size() == 1) {
        Int inv = z_invmod(F.back(), P);
        ZPoly r = F;
        for (auto& c : r) c *= inv;
        return {z_reduce(std::move(r), P)};
    }
    std::size_t mid = gs.size() / 2;
    FpPoly g0 = {static_cast<u64>(mpz_fdiv_ui(F.back().get_mpz_t(), static_cast<unsigned long>(p)))};
    for (std::size_t i = 0; i < mid; ++i) g0 = fp_mul(g0, gs[i], p);
    FpPoly h0 = {1};
    for (std::size_t i = mid; i < gs.size(); ++i) h0 = fp_mul(h0, gs[i], p);
    auto [s0, t0] = fp_bezout(g0, h0, p);
    LiftPair cur{fp_to_z(g0), fp_to_z(h0), fp_to_z(s0), fp_to_z(t0)};
    Int m(static_cast<unsigned long>(p));
    while (m < P) {
        cur = hensel_step(F, cur, m);
        m = m * m;
    }
    ZPoly G = z_reduce(cur.g, P), H = z_reduce(cur.h, P);
    std::vector<FpPoly> left(gs.begin(), gs.begin() + static_cast<std::ptrdiff_t>(mid));
    std::vector<FpPoly> right(gs.begin() + static_cast<std::ptrdiff_t>(mid), gs.end());
    std::vector<ZPoly> out = hensel_lift_list(G, left, p, P);
    std::vector<ZPoly> out2 = hensel_lift_list(H, right, p, P);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

// ---- Zassenhaus -------------------------------------------------------------

std::vector<Int> int_coeffs(const UniPoly& f) {
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    for (const Rat& q : f.coeffs()) {
        if (!is_integer(q)) throw error("expected integer polynomial");
        v.push_back(q.get_num());
    }
    return v;
}

UniPoly z_to_unipoly(const ZPoly& f) {
    std::vector<Rat> c;
    c.reserve(f.size());
    for (const Int& t : f) c.emplace_back(t);
    return UniPoly(std::move(c));
}

const u64* small_primes(std::size_t& count) {
    static std::vector<u64> primes = [] {
        std::vector<u64> ps;
        std::vector<bool> sieve(20000, true);
        for (std::size_t n = 2; n < sieve.size(); ++n) {
            if (!sieve[n]) continue;
            if (n > 2) ps.push_back(n); // factoring code needs odd p
            for (std::size_t k = n * n; k < sieve.size(); k += n) sieve[k] = false;
        }
        return ps;
    }();
    count = primes.size();
    return primes.data();
}

// f primitive squarefree with positive lc, deg >= 1
std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f) {
    if (f.degree() == 1) return {f};
    ZPoly F = int_coeffs(f);
    std::size_t np = 0;
    const u64* ps = small_primes(np);
    u64 p = 0;
    std::vector<FpPoly> modular;
    for (std::size_t i = 0; i < np; ++i) {
        u64 cand = ps[i];
        FpPoly fp = z_to_fp(F, cand);
        if (fp_deg(fp) != z_deg(F)) continue; // p divides lc
        FpPoly g = fp_gcd(fp, fp_derivative(fp, cand), cand);
        if (fp_deg(g) != 0) continue; // not squarefree mod p
        p = cand;
        modular = fp_factor_squarefree(fp, cand);
        break;
    }
    if (p == 0) throw error("no suitable prime found for factorization");
    if (modular.size() == 1) return {f};

    // Mignotte-style bound on factor coefficients: 2^n * |f|_2 * |lc|
    Int norm2(0);
    for (const Int& c : F) norm2 += c * c;
    Int l2;
    mpz_sqrt(l2.get_mpz_t(), norm2.get_mpz_t());
    l2 += 1;
    Int bound = (Int(1) << static_cast<unsigned long>(z_deg(F))) * l2 * ::abs(F.back());
    Int P(static_cast<unsigned long>(p));
    while (P <= 2 * bound) P *= static_cast<unsigned long>(p);

    std::vector<ZPoly> lifted = hensel_lift_list(z_reduce(F, P), modular, p, P);

    std::vector<UniPoly> out;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    UniPoly rest = f;

    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand = {rest.lc().get_num()};
            for (std::size_t i : idx) cand = z_mul(cand, lifted[remaining[i]], P);
            cand = z_symmetric(std::move(cand), P);
            UniPoly candidate = z_to_unipoly(cand).primitive();
            bool divides = false;
            if (!candidate.is_zero() && candidate.degree() >= 1) {
                auto [q, r] = rest.divrem(candidate);
                if (r.is_zero()) {
                    divides = true;
                    out.push_back(candidate);
                    rest = q;
                }
            }
            if (divides) {
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, k = 0; i < remaining.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    keep.push_back(remaining[i]);
                }
                remaining = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t j = s;
            while (j > 0 && idx[j - 1] == remaining.size() - s + (j - 1)) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (std::size_t k = j; k < s; ++k) idx[k] = idx[k - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rest.degree() >= 1) out.push_back(rest.primitive());
    return out;
}

} // namespace

Factorization factor_univariate(const UniPoly& f) {
    if (f.is_zero()) throw error("factorization of zero polynomial");
    Factorization result;
    if (f.degree() == 0) {
        result.content = f.coeff(0);
        return result;
    }
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const UniPoly& irr : factor_squarefree_primitive(part))
            result.factors.emplace_back(irr, mult);
    }
    UniPoly prod = UniPoly::one();
    for (const auto& [g, m] : result.factors) prod = prod * g.pow(static_cast<unsigned>(m));
    // f = content * prod exactly
    UniPoly q = f.exact_div(prod);
    if (q.degree() != 0) throw error("internal: factor product mismatch");
    result.content = q.coeff(0);
    return result;
}

std::vector<Rat> rational_roots(const UniPoly& f) {
    std::vector<Rat> roots;
    for (const auto& [g, m] : factor_univariate(f).factors)
        if (g.degree() == 1) roots.push_back(-g.coeff(0) / g.coeff(1));
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_cyclotomic(const UniPoly& f) {
    if (f.degree() < 1) return false;
    UniPoly g = f.primitive();
    if (g.lc() != 1) return false;
    int d = g.degree();
    long limit = 2L * d * d + 2;
    for (long n = 1; n <= limit; ++n) {
        // Euler phi by trial division
        long phi = n, m = n;
        for (long q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                phi -= phi / q;
                while (m % q == 0) m /= q;
            }
        }
        if (m > 1) phi -= phi / m;
        if (phi != d) continue;
        UniPoly xn = pow_mod(UniPoly::variable(), Int(n), g);
        if (xn == UniPoly::one()) return true;
    }
    return false;
}

} // namespace corrsolve
