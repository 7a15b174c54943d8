#include "corrsolve/numberfield.hpp"

#include <sstream>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"

namespace corrsolve {

NumberField::NumberField(const UniPoly& minpoly) {
    if (minpoly.degree() < 1) throw error("number field modulus must be nonconstant");
    modulus_ = minpoly.monic();
}

FieldPtr NumberField::rationals() {
    static FieldPtr q = std::make_shared<const NumberField>(UniPoly::variable());
    return q;
}

NFElem::NFElem(FieldPtr field, UniPoly rep) : field_(std::move(field)) {
    if (!field_) throw error("null field");
    rep_ = rep.mod(field_->modulus());
}

NFElem NFElem::from_rational(const FieldPtr& field, const Rat& q) {
    return NFElem(field, UniPoly(q));
}

NFElem NFElem::generator(const FieldPtr& field) {
    return NFElem(field, UniPoly::variable());
}

Rat NFElem::rational_value() const {
    if (!is_rational()) throw error("element is not rational");
    return rep_.coeff(0);
}

namespace {

// Lift rational constants into the other operand's field.
void align(NFElem& a, NFElem& b);

FieldPtr field_of(const NFElem& e) {
    return e.field() ? e.field() : NumberField::rationals();
}

} // namespace

NFElem NFElem::operator+(const NFElem& o) const {
    NFElem a = *this, b = o;
    align(a, b);
    return NFElem(field_of(a), a.rep_ + b.rep_);
}

NFElem NFElem::operator-(const NFElem& o) const {
    NFElem a = *this, b = o;
    align(a, b);
    return NFElem(field_of(a), a.rep_ - b.rep_);
}

NFElem NFElem::operator*(const NFElem& o) const {
    NFElem a = *this, b = o;
    align(a, b);
    return NFElem(field_of(a), a.rep_ * b.rep_);
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    r.rep_ = -r.rep_;
    return r;
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    FieldPtr f = field_of(*this);
    if (rep_.degree() == 0) return NFElem(f, UniPoly(Rat(1) / rep_.coeff(0)));
    // extended euclid: s*rep + t*M = 1
    UniPoly r0 = f->modulus(), r1 = rep_;
    UniPoly t0 = UniPoly::zero(), t1 = UniPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        UniPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw error("modulus not irreducible: zero divisor found");
    return NFElem(f, t0 * (Rat(1) / r0.coeff(0)));
}

bool NFElem::operator==(const NFElem& o) const {
    NFElem a = *this, b = o;
    align(a, b);
    return a.rep_ == b.rep_;
}

NFElem NFElem::pow(unsigned e) const {
    NFElem r = NFElem::from_rational(field_of(*this), Rat(1));
    NFElem b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

std::string NFElem::to_string(const std::string& gen) const {
    return rep_.to_string(gen);
}

namespace {

void align(NFElem& a, NFElem& b) {
    FieldPtr fa = field_of(a), fb = field_of(b);
    if (fa == fb) return;
    if (fa->modulus() == fb->modulus()) return;
    if (fa->is_rational() && a.is_rational()) {
        a = NFElem::from_rational(fb, a.rational_value());
        return;
    }
    if (fb->is_rational() && b.is_rational()) {
        b = NFElem::from_rational(fa, b.rational_value());
        return;
    }
    throw error("number field mismatch");
}

} // namespace

int nf_deg(const NFPoly& f) { return static_cast<int>(f.size()) - 1; }

void nf_trim(NFPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

NFPoly nf_add(const NFPoly& a, const NFPoly& b) {
    NFPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    nf_trim(r);
    return r;
}

NFPoly nf_sub(const NFPoly& a, const NFPoly& b) {
    NFPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    nf_trim(r);
    return r;
}

NFPoly nf_mul(const NFPoly& a, const NFPoly& b) {
    if (a.empty() || b.empty()) return {};
    NFPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    nf_trim(r);
    return r;
}

NFPoly nf_scale(const NFPoly& a, const NFElem& s) {
    NFPoly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(c * s);
    nf_trim(r);
    return r;
}

NFPoly nf_monic(const NFPoly& a) {
    if (a.empty()) return a;
    return nf_scale(a, a.back().inverse());
}

std::pair<NFPoly, NFPoly> nf_divrem(const NFPoly& a, const NFPoly& b) {
    if (b.empty()) throw error("division by zero polynomial");
    NFPoly q, r = a;
    nf_trim(r);
    if (nf_deg(r) < nf_deg(b)) return {q, r};
    q.resize(r.size() - b.size() + 1);
    NFElem inv = b.back().inverse();
    while (!r.empty() && r.size() >= b.size()) {
        NFElem f = r.back() * inv;
        std::size_t k = r.size() - b.size();
        q[k] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] = r[k + i] - b[i] * f;
        nf_trim(r);
    }
    nf_trim(q);
    return {q, r};
}

NFPoly nf_gcd(NFPoly a, NFPoly b) {
    nf_trim(a);
    nf_trim(b);
    while (!b.empty()) {
        NFPoly r = nf_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return nf_monic(a);
}

NFPoly nf_derivative(const NFPoly& f) {
    NFPoly r;
    for (std::size_t i = 1; i < f.size(); ++i)
        r.push_back(f[i] * NFElem::from_rational(field_of(f[i]), Rat(static_cast<long>(i))));
    nf_trim(r);
    return r;
}

NFElem nf_eval(const NFPoly& f, const NFElem& x) {
    NFElem acc = NFElem::from_rational(field_of(x), Rat(0));
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

NFPoly nf_taylor_shift(const NFPoly& f, const NFElem& a) {
    NFPoly v = f;
    int n = static_cast<int>(v.size());
    for (int j = 0; j < n - 1; ++j)
        for (int i = n - 2; i >= j; --i)
            v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + a * v[static_cast<std::size_t>(i) + 1];
    nf_trim(v);
    return v;
}

NFPoly nf_from_unipoly(const FieldPtr& field, const UniPoly& f) {
    NFPoly r;
    for (int i = 0; i <= f.degree(); ++i) r.push_back(NFElem::from_rational(field, f.coeff(i)));
    nf_trim(r);
    return r;
}

NFPoly nf_reduce_bipoly(const FieldPtr& field, const BiPoly& p) {
    NFPoly r;
    for (const UniPoly& c : p.coeffs_in_second()) r.emplace_back(field, c);
    nf_trim(r);
    return r;
}

int nf_gcd_degree(const NFPoly& a, const NFPoly& b) {
    return nf_deg(nf_gcd(a, b));
}

std::vector<std::pair<NFPoly, int>> nf_squarefree_decomposition(const NFPoly& f) {
    std::vector<std::pair<NFPoly, int>> out;
    if (nf_deg(f) < 1) return out;
    NFPoly p = nf_monic(f);
    NFPoly d = nf_derivative(p);
    NFPoly a = nf_gcd(p, d);
    NFPoly b = nf_divrem(p, a).first;
    NFPoly c = nf_divrem(d, a).first;
    int i = 1;
    while (true) {
        NFPoly w = nf_sub(c, nf_derivative(b));
        if (w.empty()) {
            if (nf_deg(b) > 0) out.emplace_back(nf_monic(b), i);
            break;
        }
        NFPoly g = nf_gcd(b, w);
        if (nf_deg(g) > 0) out.emplace_back(g, i);
        b = nf_divrem(b, g).first;
        c = nf_divrem(w, g).first;
        ++i;
        if (nf_deg(b) == 0) break;
    }
    return out;
}

std::vector<NFPoly> nf_factor_squarefree(const FieldPtr& field, const NFPoly& f0) {
    NFPoly f = nf_monic(f0);
    std::vector<NFPoly> out;
    if (nf_deg(f) < 1) return out;
    if (nf_deg(f) == 1) return {f};
    if (field->is_rational()) {
        std::vector<Rat> c;
        for (const NFElem& e : f) c.push_back(e.rep().coeff(0));
        UniPoly u{std::move(c)};
        for (const auto& [g, m] : factor_univariate(u).factors)
            out.push_back(nf_monic(nf_from_unipoly(field, g)));
        return out;
    }
    const UniPoly& M = field->modulus();
    for (long k = 0; k < 40; ++k) {
        long s = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        // F(z, y) = f_z(y - s z), z standing for the generator
        BiPoly F;
        BiPoly shifted_y = BiPoly::var_second() - BiPoly::var_first() * Rat(s); // y - s*z
        BiPoly ypow = BiPoly::one();
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!f[i].is_zero()) F = F + BiPoly::embed_first(f[i].rep()) * ypow;
            ypow = ypow * shifted_y;
        }
        UniPoly norm = resultant_eliminating(BiPoly::embed_first(M), F, VarSel::First);
        if (norm.degree() != field->degree() * nf_deg(f)) continue; // degenerate shift
        if (gcd(norm, norm.derivative()).degree() > 0) continue;    // norm not squarefree
        NFElem shift = NFElem::generator(field) * NFElem::from_rational(field, Rat(s));
        int total = 0;
        for (const auto& [Ni, m] : factor_univariate(norm).factors) {
            NFPoly cand = nf_taylor_shift(nf_from_unipoly(field, Ni), shift);
            NFPoly g = nf_gcd(f, cand);
            if (nf_deg(g) >= 1) {
                total += nf_deg(g);
                out.push_back(g);
            }
        }
        if (total != nf_deg(f)) throw error("internal: Trager factor degrees do not add up");
        return out;
    }
    throw error("Trager factorization: no squarefree norm found");
}

} // namespace corrsolve
