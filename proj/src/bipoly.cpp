#include "corrsolve/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "corrsolve/errors.hpp"
#include "corrsolve/subresultant.hpp"

namespace corrsolve {

template <>
struct RingTraits<UniPoly> {
    static UniPoly zero() { return UniPoly::zero(); }
    static UniPoly one() { return UniPoly::one(); }
    static bool is_zero(const UniPoly& a) { return a.is_zero(); }
    static UniPoly add(const UniPoly& a, const UniPoly& b) { return a + b; }
    static UniPoly sub(const UniPoly& a, const UniPoly& b) { return a - b; }
    static UniPoly mul(const UniPoly& a, const UniPoly& b) { return a * b; }
    static UniPoly neg(const UniPoly& a) { return -a; }
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return a.exact_div(b); }
};

template <>
struct RingTraits<BiPoly> {
    static BiPoly zero() { return BiPoly::zero(); }
    static BiPoly one() { return BiPoly::one(); }
    static bool is_zero(const BiPoly& a) { return a.is_zero(); }
    static BiPoly add(const BiPoly& a, const BiPoly& b) { return a + b; }
    static BiPoly sub(const BiPoly& a, const BiPoly& b) { return a - b; }
    static BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }
    static BiPoly neg(const BiPoly& a) { return -a; }
    static BiPoly exact_div(const BiPoly& a, const BiPoly& b) { return exact_div_bipoly(a, b); }
};

BiPoly::BiPoly(Rat constant) {
    if (sgn(constant) != 0) t_[{0, 0}] = std::move(constant);
}

BiPoly BiPoly::monomial(Rat c, int i, int j) {
    BiPoly p;
    if (sgn(c) != 0) p.t_[{i, j}] = std::move(c);
    return p;
}

BiPoly BiPoly::embed_first(const UniPoly& u) {
    BiPoly p;
    for (int i = 0; i <= u.degree(); ++i)
        if (sgn(u.coeff(i)) != 0) p.t_[{i, 0}] = u.coeff(i);
    return p;
}

BiPoly BiPoly::embed_second(const UniPoly& u) {
    BiPoly p;
    for (int j = 0; j <= u.degree(); ++j)
        if (sgn(u.coeff(j)) != 0) p.t_[{0, j}] = u.coeff(j);
    return p;
}

BiPoly BiPoly::from_coeffs_in_second(const std::vector<UniPoly>& v) {
    BiPoly p;
    for (std::size_t j = 0; j < v.size(); ++j)
        for (int i = 0; i <= v[j].degree(); ++i)
            if (sgn(v[j].coeff(i)) != 0) p.t_[{i, static_cast<int>(j)}] = v[j].coeff(i);
    return p;
}

bool BiPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == std::pair<int, int>{0, 0});
}

bool BiPoly::depends_on_first() const {
    for (const auto& [m, c] : t_)
        if (m.first > 0) return true;
    return false;
}

bool BiPoly::depends_on_second() const {
    for (const auto& [m, c] : t_)
        if (m.second > 0) return true;
    return false;
}

int BiPoly::deg_first() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first);
    return d;
}

int BiPoly::deg_second() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.second);
    return d;
}

int BiPoly::total_degree() const {
    if (t_.empty()) return -1;
    auto m = t_.rbegin()->first;
    return m.first + m.second;
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

const Rat& BiPoly::leading_coeff() const {
    if (t_.empty()) throw error("leading coefficient of zero polynomial");
    return t_.rbegin()->second;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = t_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m.first, m.second, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m.first, m.second, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_)
            r.add_term(m1.first + m2.first, m1.second + m2.second, c1 * c2);
    return r;
}

BiPoly BiPoly::operator*(const Rat& s) const {
    if (sgn(s) == 0) return zero();
    BiPoly r = *this;
    for (auto& [m, c] : r.t_) c *= s;
    return r;
}

BiPoly operator*(const Rat& s, const BiPoly& p) { return p * s; }

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r = one(), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

BiPoly BiPoly::derivative_first() const {
    BiPoly r;
    for (const auto& [m, c] : t_)
        if (m.first > 0) r.add_term(m.first - 1, m.second, c * Rat(m.first));
    return r;
}

BiPoly BiPoly::derivative_second() const {
    BiPoly r;
    for (const auto& [m, c] : t_)
        if (m.second > 0) r.add_term(m.first, m.second - 1, c * Rat(m.second));
    return r;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r;
    for (const auto& [m, c] : t_) r.t_[{m.second, m.first}] = c;
    return r;
}

UniPoly BiPoly::substitute_first(const Rat& a) const {
    int dj = deg_second();
    std::vector<Rat> out(static_cast<std::size_t>(std::max(dj, 0)) + 1, Rat(0));
    for (const auto& [m, c] : t_) out[static_cast<std::size_t>(m.second)] += c * pow_rat(a, static_cast<unsigned long>(m.first));
    return UniPoly(std::move(out));
}

UniPoly BiPoly::substitute_second(const Rat& b) const {
    int di = deg_first();
    std::vector<Rat> out(static_cast<std::size_t>(std::max(di, 0)) + 1, Rat(0));
    for (const auto& [m, c] : t_) out[static_cast<std::size_t>(m.first)] += c * pow_rat(b, static_cast<unsigned long>(m.second));
    return UniPoly(std::move(out));
}

Rat BiPoly::eval(const Rat& a, const Rat& b) const {
    Rat acc(0);
    for (const auto& [m, c] : t_)
        acc += c * pow_rat(a, static_cast<unsigned long>(m.first)) * pow_rat(b, static_cast<unsigned long>(m.second));
    return acc;
}

std::vector<UniPoly> BiPoly::coeffs_in_second() const {
    std::vector<std::vector<Rat>> buckets(static_cast<std::size_t>(std::max(deg_second(), 0)) + 1);
    int di = deg_first();
    for (auto& b : buckets) b.assign(static_cast<std::size_t>(std::max(di, 0)) + 1, Rat(0));
    for (const auto& [m, c] : t_) buckets[static_cast<std::size_t>(m.second)][static_cast<std::size_t>(m.first)] = c;
    std::vector<UniPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(std::move(b));
    if (is_zero()) out.clear();
    return out;
}

std::vector<UniPoly> BiPoly::coeffs_in_first() const { return swap_vars().coeffs_in_second(); }

UniPoly BiPoly::lc_in_second() const {
    auto v = coeffs_in_second();
    if (v.empty()) throw error("lc of zero polynomial");
    return v.back();
}

UniPoly BiPoly::lc_in_first() const {
    auto v = coeffs_in_first();
    if (v.empty()) throw error("lc of zero polynomial");
    return v.back();
}

UniPoly BiPoly::to_unipoly_first() const {
    if (depends_on_second()) throw error("polynomial depends on the second variable");
    std::vector<Rat> c(static_cast<std::size_t>(std::max(deg_first(), 0)) + 1, Rat(0));
    for (const auto& [m, q] : t_) c[static_cast<std::size_t>(m.first)] = q;
    if (is_zero()) c.clear();
    return UniPoly(std::move(c));
}

UniPoly BiPoly::to_unipoly_second() const { return swap_vars().to_unipoly_first(); }

UniPoly BiPoly::content_in_second() const {
    UniPoly g = UniPoly::zero();
    for (const auto& u : coeffs_in_second()) g = gcd(g, u);
    return g;
}

UniPoly BiPoly::content_in_first() const { return swap_vars().content_in_second(); }

Rat BiPoly::rational_content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

BiPoly BiPoly::canonical() const {
    if (is_zero()) return *this;
    Rat c = rational_content();
    if (sgn(leading_coeff()) < 0) c = -c;
    return *this * (Rat(1) / c);
}

std::string BiPoly::to_string(const std::string& v1, const std::string& v2) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, a] = *it;
        Rat mag = abs_rat(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        bool has_var = m.first > 0 || m.second > 0;
        if (!has_var || !unit) os << rat_to_string(mag);
        bool need_star = !unit;
        if (m.first > 0) {
            if (need_star) os << "*";
            os << v1;
            if (m.first > 1) os << "^" << m.first;
            need_star = true;
        }
        if (m.second > 0) {
            if (need_star) os << "*";
            os << v2;
            if (m.second > 1) os << "^" << m.second;
        }
    }
    return os.str();
}

UniPoly resultant_eliminating(const BiPoly& f, const BiPoly& g, VarSel eliminated) {
    if (f.is_zero() || g.is_zero()) throw error("resultant of zero polynomial");
    if (eliminated == VarSel::First)
        return resultant_eliminating(f.swap_vars(), g.swap_vars(), VarSel::Second);
    return subresultant_resultant<UniPoly>(f.coeffs_in_second(), g.coeffs_in_second());
}

BiPoly joint_resultant(const BiPoly& r, const BiPoly& s) {
    if (r.is_zero() || s.is_zero()) throw error("resultant of zero polynomial");
    // r(X, M): coefficients of M^k are polynomials in X; s(M, Y): viewing in
    // M, coefficients are polynomials in Y.
    DensePoly<BiPoly> A, B;
    for (const auto& u : r.coeffs_in_second()) A.push_back(BiPoly::embed_first(u));
    for (const auto& u : s.coeffs_in_first()) B.push_back(BiPoly::embed_second(u));
    return subresultant_resultant<BiPoly>(A, B);
}

BiPoly exact_div_bipoly(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero()) throw error("division by zero polynomial");
    if (f.is_zero()) return BiPoly::zero();
    std::vector<UniPoly> fv = f.coeffs_in_second();
    std::vector<UniPoly> gv = g.coeffs_in_second();
    if (gv.size() == 1) {
        // divisor has no second-variable part: divide coefficientwise
        std::vector<UniPoly> q;
        q.reserve(fv.size());
        for (const auto& u : fv) q.push_back(u.exact_div(gv[0]));
        return BiPoly::from_coeffs_in_second(q);
    }
    if (fv.size() < gv.size()) throw error("inexact bivariate division");
    std::vector<UniPoly> q(fv.size() - gv.size() + 1);
    while (!fv.empty() && fv.size() >= gv.size()) {
        std::size_t k = fv.size() - gv.size();
        UniPoly qc = fv.back().exact_div(gv.back());
        q[k] = qc;
        for (std::size_t i = 0; i < gv.size(); ++i) fv[k + i] = fv[k + i] - gv[i] * qc;
        while (!fv.empty() && fv.back().is_zero()) fv.pop_back();
    }
    if (!fv.empty()) throw error("inexact bivariate division");
    return BiPoly::from_coeffs_in_second(q);
}

BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero()) return g.canonical();
    if (g.is_zero()) return f.canonical();
    UniPoly cf = f.content_in_second();
    UniPoly cg = g.content_in_second();
    UniPoly cont = gcd(cf, cg);
    BiPoly F = exact_div_bipoly(f, BiPoly::embed_first(cf));
    BiPoly G = exact_div_bipoly(g, BiPoly::embed_first(cg));
    DensePoly<UniPoly> D = subresultant_prs_gcd<UniPoly>(F.coeffs_in_second(), G.coeffs_in_second());
    BiPoly main = BiPoly::one();
    if (!D.empty()) {
        BiPoly P = BiPoly::from_coeffs_in_second(D);
        UniPoly pc = P.content_in_second();
        main = exact_div_bipoly(P, BiPoly::embed_first(pc));
    }
    return (BiPoly::embed_first(cont) * main).canonical();
}

BiPoly squarefree_part_bipoly(const BiPoly& f) {
    if (f.is_zero()) throw error("squarefree part of zero polynomial");
    if (f.is_constant()) return BiPoly::one();
    BiPoly d1 = f.derivative_first();
    BiPoly d2 = f.derivative_second();
    BiPoly g = d1.is_zero() ? f : gcd_bipoly(f, d1);
    if (!d2.is_zero()) g = gcd_bipoly(g, d2);
    if (g.is_constant()) return f.canonical();
    return exact_div_bipoly(f, g).canonical();
}

} // namespace corrsolve
