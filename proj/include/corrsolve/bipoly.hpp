#ifndef CORRSOLVE_BIPOLY_HPP
#define CORRSOLVE_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corrsolve/unipoly.hpp"

namespace corrsolve {

// Graded-lexicographic order on exponent pairs, first variable ranked
// above the second. Used both for term storage and for the canonical
// leading-term sign convention.
struct GrlexLess {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    }
};

// Sparse bivariate polynomial over Q. The two variables are positional
// ("first" and "second"); printing assigns names. No zero coefficients are
// stored.
class BiPoly {
public:
    using TermMap = std::map<std::pair<int, int>, Rat, GrlexLess>;

    BiPoly() = default;
    explicit BiPoly(Rat constant);

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(Rat(1)); }
    static BiPoly monomial(Rat c, int i, int j);
    static BiPoly var_first() { return monomial(Rat(1), 1, 0); }
    static BiPoly var_second() { return monomial(Rat(1), 0, 1); }
    static BiPoly embed_first(const UniPoly& u);  // u(first)
    static BiPoly embed_second(const UniPoly& u); // u(second)
    // Dense-in-second view: v[j] is the coefficient (a poly in first) of second^j.
    static BiPoly from_coeffs_in_second(const std::vector<UniPoly>& v);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool depends_on_first() const;
    bool depends_on_second() const;
    int deg_first() const;
    int deg_second() const;
    int total_degree() const;
    Rat coeff(int i, int j) const;
    const TermMap& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }
    // Leading coefficient in graded-lex order.
    const Rat& leading_coeff() const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& s) const;
    bool operator==(const BiPoly& o) const { return t_ == o.t_; }

    BiPoly pow(unsigned e) const;
    BiPoly derivative_first() const;
    BiPoly derivative_second() const;
    BiPoly swap_vars() const;

    UniPoly substitute_first(const Rat& a) const;  // p(a, Y) as poly in second
    UniPoly substitute_second(const Rat& b) const; // p(X, b) as poly in first
    Rat eval(const Rat& a, const Rat& b) const;

    std::vector<UniPoly> coeffs_in_second() const; // index j: coeff of second^j
    std::vector<UniPoly> coeffs_in_first() const;  // index i: coeff of first^i
    UniPoly lc_in_second() const; // leading coefficient as poly in first
    UniPoly lc_in_first() const;

    // When the polynomial involves only the requested variable (or is
    // constant), return it as a UniPoly; throws otherwise.
    UniPoly to_unipoly_first() const;
    UniPoly to_unipoly_second() const;

    // gcd of the coefficients w.r.t. the second variable (a poly in first).
    UniPoly content_in_second() const;
    UniPoly content_in_first() const;

    Rat rational_content() const;
    // Integer-primitive representative with positive grlex-leading coefficient.
    BiPoly canonical() const;

    std::string to_string(const std::string& v1 = "x", const std::string& v2 = "y") const;

private:
    void add_term(int i, int j, const Rat& c);
    TermMap t_;

    friend BiPoly mul_impl(const BiPoly& a, const BiPoly& b);
};

BiPoly operator*(const Rat& s, const BiPoly& p);

// Sylvester resultant eliminating one variable of two bivariate
// polynomials; the result is univariate in the surviving variable.
enum class VarSel { First, Second };
UniPoly resultant_eliminating(const BiPoly& f, const BiPoly& g, VarSel eliminated);

// Resultant eliminating the shared middle variable of r(X, M) and s(M, Y);
// the result lives in (X, Y).
BiPoly joint_resultant(const BiPoly& r, const BiPoly& s);

BiPoly gcd_bipoly(const BiPoly& f, const BiPoly& g);
BiPoly exact_div_bipoly(const BiPoly& f, const BiPoly& g);
BiPoly squarefree_part_bipoly(const BiPoly& f);

} // namespace corrsolve

#endif
