#ifndef CORRSOLVE_NUMBERFIELD_HPP
#define CORRSOLVE_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "corrsolve/bipoly.hpp"
#include "corrsolve/unipoly.hpp"

namespace corrsolve {

// Q[z]/(M(z)) for an irreducible monic M. Degree 1 gives plain Q, which
// keeps every consumer on a single code path.
class NumberField {
public:
    explicit NumberField(const UniPoly& minpoly);
    static std::shared_ptr<const NumberField> rationals();

    int degree() const { return modulus_.degree(); }
    const UniPoly& modulus() const { return modulus_; }
    bool is_rational() const { return degree() == 1; }

private:
    UniPoly modulus_; // monic
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
public:
    NFElem() = default; // zero of Q
    NFElem(FieldPtr field, UniPoly rep);
    static NFElem from_rational(const FieldPtr& field, const Rat& q);
    static NFElem generator(const FieldPtr& field); // class of z

    const FieldPtr& field() const { return field_; }
    const UniPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat rational_value() const;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator-() const;
    NFElem inverse() const;
    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
    bool operator==(const NFElem& o) const;
    NFElem pow(unsigned e) const;

    std::string to_string(const std::string& gen = "a") const;

private:
    FieldPtr field_; // null means plain rational via rep_ constant
    UniPoly rep_;
};

// Dense polynomial over a number field, coefficient i of Y^i, trimmed.
using NFPoly = std::vector<NFElem>;

int nf_deg(const NFPoly& f);
void nf_trim(NFPoly& f);
NFPoly nf_add(const NFPoly& a, const NFPoly& b);
NFPoly nf_sub(const NFPoly& a, const NFPoly& b);
NFPoly nf_mul(const NFPoly& a, const NFPoly& b);
NFPoly nf_scale(const NFPoly& a, const NFElem& s);
NFPoly nf_monic(const NFPoly& a);
std::pair<NFPoly, NFPoly> nf_divrem(const NFPoly& a, const NFPoly& b);
NFPoly nf_gcd(NFPoly a, NFPoly b); // monic
NFPoly nf_derivative(const NFPoly& f);
NFElem nf_eval(const NFPoly& f, const NFElem& x);
NFPoly nf_taylor_shift(const NFPoly& f, const NFElem& a); // f(Y + a)
NFPoly nf_from_unipoly(const FieldPtr& field, const UniPoly& f);

// p(X, Y) reduced mod the field's modulus in X: a polynomial in Y with
// NFElem coefficients (the class of X is the generator).
NFPoly nf_reduce_bipoly(const FieldPtr& field, const BiPoly& p);

// Degree of gcd over the field; -1 when one input is zero... both zero.
int nf_gcd_degree(const NFPoly& a, const NFPoly& b);

// Trager: factor a squarefree polynomial over the field into monic
// irreducible factors.
std::vector<NFPoly> nf_factor_squarefree(const FieldPtr& field, const NFPoly& f);

// Squarefree decomposition over the field: list of (g, multiplicity).
std::vector<std::pair<NFPoly, int>> nf_squarefree_decomposition(const NFPoly& f);

} // namespace corrsolve

#endif
