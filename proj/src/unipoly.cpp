#include "corrsolve/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "corrsolve/errors.hpp"
#include "corrsolve/subresultant.hpp"

namespace corrsolve {

template <>
struct RingTraits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static Rat add(const Rat& a, const Rat& b) { return a + b; }
    static Rat sub(const Rat& a, const Rat& b) { return a - b; }
    static Rat mul(const Rat& a, const Rat& b) { return a * b; }
    static Rat neg(const Rat& a) { return -a; }
    static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
};

UniPoly::UniPoly(Rat constant) {
    if (sgn(constant) != 0) c_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return monomial(Rat(1), 1); }

UniPoly UniPoly::monomial(Rat c, int degree) {
    UniPoly p;
    if (sgn(c) != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

UniPoly UniPoly::from_roots(const std::vector<Rat>& roots) {
    UniPoly p = one();
    for (const Rat& r : roots) p = p * UniPoly({-r, Rat(1)});
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& UniPoly::lc() const {
    if (c_.empty()) throw error("lc of zero polynomial");
    return c_.back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    UniPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (sgn(s) == 0) return zero();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly r;
    r.c_.assign(static_cast<std::size_t>(k), Rat(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

UniPoly UniPoly::taylor_shift(const Rat& a) const {
    if (sgn(a) == 0) return *this;
    std::vector<Rat> v = c_;
    int n = static_cast<int>(v.size());
    for (int j = 0; j < n - 1; ++j)
        for (int i = n - 2; i >= j; --i) v[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(i) + 1];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scale_arg(const Rat& s) const {
    std::vector<Rat> v = c_;
    Rat p(1);
    for (std::size_t i = 1; i < v.size(); ++i) {
        p *= s;
        v[i] *= p;
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::reversed() const {
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = one(), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw error("division by zero polynomial");
    UniPoly q, r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat f = r.lc() / d.lc();
        q.c_[static_cast<std::size_t>(k)] = f;
        r = r - d.shifted(k) * f;
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

Rat UniPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const Rat& q : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Rat c = content();
    if (sgn(lc()) < 0) c = -c;
    return *this * (Rat(1) / c);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (sgn(a) == 0) continue;
        Rat mag = abs_rat(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) os << rat_to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Integer primitive representative (positive leading coefficient).
std::vector<Int> int_primitive(const UniPoly& f) {
    std::vector<Int> v;
    if (f.is_zero()) return v;
    Int lcm(1);
    for (const Rat& q : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    v.reserve(f.coeffs().size());
    Int g(0);
    for (const Rat& q : f.coeffs()) {
        Int t = q.get_num() * (lcm / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
        v.push_back(std::move(t));
    }
    for (auto& t : v) t /= g;
    if (v.back() < 0)
        for (auto& t : v) t = -t;
    return v;
}

void istrip_content(std::vector<Int>& v) {
    Int g(0);
    for (const auto& t : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    if (g > 1)
        for (auto& t : v) t /= g;
    if (!v.empty() && v.back() < 0)
        for (auto& t : v) t = -t;
}

// Integer pseudo-remainder, content-stripped (primitive PRS step).
std::vector<Int> iprem_primitive(std::vector<Int> A, const std::vector<Int>& B) {
    const Int lcB = B.back();
    while (!A.empty() && A.size() >= B.size()) {
        Int lcA = A.back();
        std::size_t shift = A.size() - B.size();
        std::vector<Int> nxt(std::max(A.size(), B.size() + shift), Int(0));
        for (std::size_t i = 0; i < A.size(); ++i) nxt[i] = A[i] * lcB;
        for (std::size_t i = 0; i < B.size(); ++i) nxt[i + shift] -= B[i] * lcA;
        while (!nxt.empty() && nxt.back() == 0) nxt.pop_back();
        A = std::move(nxt);
    }
    if (!A.empty()) istrip_content(A);
    return A;
}

UniPoly from_int(const std::vector<Int>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& t : v) c.emplace_back(t);
    return UniPoly(std::move(c));
}

} // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    std::vector<Int> A = int_primitive(a), B = int_primitive(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        std::vector<Int> R = iprem_primitive(A, B);
        A = std::move(B);
        B = std::move(R);
    }
    if (A.size() <= 1) return UniPoly::one();
    return from_int(A);
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw error("squarefree part of zero polynomial");
    if (f.degree() == 0) return UniPoly::one();
    UniPoly g = gcd(f, f.derivative());
    return f.exact_div(g).primitive();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.is_zero() || f.degree() == 0) return out;
    // Yun's algorithm on the primitive part
    UniPoly p = f.primitive();
    UniPoly d = p.derivative();
    UniPoly a = gcd(p, d);
    UniPoly b = p.exact_div(a);
    UniPoly c = d.exact_div(a);
    int i = 1;
    while (true) {
        UniPoly w = c - b.derivative();
        if (w.is_zero()) {
            if (b.degree() > 0) out.emplace_back(b.primitive(), i);
            break;
        }
        UniPoly g = gcd(b, w);
        if (g.degree() > 0) out.emplace_back(g.primitive(), i);
        b = b.exact_div(g);
        c = w.exact_div(g);
        ++i;
        if (b.degree() == 0) break;
    }
    return out;
}

Rat resultant(const UniPoly& f, const UniPoly& g) {
    return subresultant_resultant<Rat>(f.coeffs(), g.coeffs());
}

Rat discriminant(const UniPoly& f) {
    if (f.degree() < 1) throw error("discriminant needs degree >= 1");
    if (f.degree() == 1) return Rat(1);
    Rat r = resultant(f, f.derivative());
    int n = f.degree();
    Rat d = r / f.lc();
    if (((n * (n - 1)) / 2) % 2 != 0) d = -d;
    return d;
}

UniPoly pow_mod(const UniPoly& base, const Int& e, const UniPoly& m) {
    if (m.degree() < 1) throw error("pow_mod modulus must be nonconstant");
    UniPoly r = UniPoly::one();
    UniPoly b = base.mod(m);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = (r * b).mod(m);
        b = (b * b).mod(m);
        k >>= 1;
    }
    return r;
}

namespace {

// Fujiwara-style bound rounded up to a power of two:
// |z| <= 2 max_i (|c_(n-i)| / |c_n|)^(1/i).
Rat fujiwara_pow2(const UniPoly& f) {
    int n = f.degree();
    Rat lc = abs_rat(f.lc());
    Rat best(1);
    for (int i = 1; i <= n; ++i) {
        Rat r = abs_rat(f.coeff(n - i)) / lc;
        if (sgn(r) == 0) continue;
        // smallest k with 2^(k*i) >= r
        unsigned long k = 0;
        Rat pw(1);
        Rat step{Int(1) << static_cast<unsigned long>(i)};
        while (pw < r) {
            pw *= step;
            ++k;
        }
        Rat term{Int(1) << k};
        if (term > best) best = term;
    }
    return best * 2;
}

// Graeffe root-squaring: the returned polynomial has the squares of f's
// roots as its roots.
UniPoly graeffe_step(const UniPoly& f) {
    std::vector<Rat> even, odd;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i % 2 == 0)
            even.push_back(f.coeff(i));
        else
            odd.push_back(f.coeff(i));
    }
    UniPoly e{std::move(even)}, o{std::move(odd)};
    UniPoly g = e * e - (o * o).shifted(1);
    return g;
}

} // namespace

Rat root_bound(const UniPoly& f) {
    if (f.is_zero() || f.degree() == 0) return Rat(1);
    // Graeffe iterations tighten the Fujiwara bound toward the true root
    // radius quadratically; three steps give a 2^(1/8)-quasi-optimal
    // power-of-two bound at modest coefficient growth.
    Rat best = fujiwara_pow2(f);
    UniPoly g = f;
    unsigned long scale = 1;
    for (int step = 1; step <= 3; ++step) {
        g = graeffe_step(g);
        if (g.degree() < 1) break;
        scale *= 2;
        Rat b = fujiwara_pow2(g); // a power of two (possibly times 2)
        // take the 2^step-th root, rounded up to a power of two
        unsigned long e = 0;
        Rat pw(1);
        while (pw < b) {
            pw *= 2;
            ++e;
        }
        Rat root{Int(1) << ((e + scale - 1) / scale)};
        if (root < best) best = root;
    }
    return best;
}

Rat root_separation_lower_bound(const UniPoly& f) {
    int n = f.degree();
    if (n < 2) throw error("separation bound needs degree >= 2");
    std::vector<Int> v = int_primitive(f);
    UniPoly fi = from_int(v);
    Rat disc = discriminant(fi);
    Int D = ::abs(disc.get_num()); // integer coefficients => integer discriminant
    if (D == 0) throw error("separation bound of non-squarefree polynomial");
    Int norm2(0);
    for (const auto& t : v) norm2 += t * t;
    Int num;
    mpz_sqrt(num.get_mpz_t(), Int(3 * D).get_mpz_t()); // floor sqrt, >= 1
    Int nn = pow_int(Int(n), static_cast<unsigned long>((n + 3) / 2));
    Int l2;
    mpz_sqrt(l2.get_mpz_t(), norm2.get_mpz_t());
    l2 += 1; // ceil bound on the 2-norm
    Int denom = nn * pow_int(l2, static_cast<unsigned long>(n - 1));
    return rat(num, denom);
}

} // namespace corrsolve
