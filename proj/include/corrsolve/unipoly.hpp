#ifndef CORRSOLVE_UNIPOLY_HPP
#define CORRSOLVE_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "corrsolve/rational.hpp"

namespace corrsolve {

// Dense univariate polynomial over the rationals. Coefficients are indexed
// by degree and the leading coefficient is nonzero unless the polynomial
// is zero (empty coefficient vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rat constant);
    explicit UniPoly(std::vector<Rat> coeffs); // trims trailing zeros

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    static UniPoly variable();                    // X
    static UniPoly monomial(Rat c, int degree);   // c*X^degree
    // (X - r0)(X - r1)... for the given roots
    static UniPoly from_roots(const std::vector<Rat>& roots);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& lc() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly shifted(int k) const;          // * X^k, k >= 0
    UniPoly taylor_shift(const Rat& a) const; // f(X + a)
    UniPoly scale_arg(const Rat& s) const;    // f(s*X)
    UniPoly reversed() const;                 // X^deg * f(1/X)
    UniPoly pow(unsigned e) const;

    // Quotient/remainder over Q; divisor nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    // Exact quotient; throws error if the division leaves a remainder.
    UniPoly exact_div(const UniPoly& d) const;
    UniPoly mod(const UniPoly& d) const { return divrem(d).second; }

    UniPoly monic() const;

    // Rational content (zero polynomial has content 0) and the integer
    // primitive representative with positive leading coefficient.
    Rat content() const;
    UniPoly primitive() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly operator*(const Rat& s, const UniPoly& p);

UniPoly gcd(const UniPoly& a, const UniPoly& b); // primitive, positive lc
UniPoly squarefree_part(const UniPoly& f);       // primitive, positive lc

// Yun decomposition: list of (g_i, i) with f = content * prod g_i^i,
// every g_i squarefree, pairwise coprime, primitive with positive lc.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

Rat resultant(const UniPoly& f, const UniPoly& g);
Rat discriminant(const UniPoly& f);

// base^e mod m over Q; m nonconstant.
UniPoly pow_mod(const UniPoly& base, const Int& e, const UniPoly& m);

// Cauchy bound: every complex root z of f has |z| < returned value.
Rat root_bound(const UniPoly& f);

// Lower bound on the distance between distinct complex roots of a
// squarefree f with deg >= 2 (Mahler). Positive.
Rat root_separation_lower_bound(const UniPoly& f);

} // namespace corrsolve

#endif
