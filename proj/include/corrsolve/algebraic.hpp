#ifndef CORRSOLVE_ALGEBRAIC_HPP
#define CORRSOLVE_ALGEBRAIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "corrsolve/interval.hpp"
#include "corrsolve/unipoly.hpp"

namespace corrsolve {

// A complex algebraic number: a squarefree defining polynomial together
// with an isolating box (exactly one root of the polynomial lies in the
// box). Numbers produced by isolate_roots carry their minimal polynomial.
// Refinement shrinks the box in place; everything else is immutable.
class AlgebraicNumber {
public:
    AlgebraicNumber(UniPoly defining, Box box);
    static AlgebraicNumber from_rational(const Rat& q);

    const UniPoly& defining() const { return defining_; }
    const Box& box() const { return box_; }

    bool is_rational() const { return defining_.degree() == 1; }
    Rat rational_value() const; // requires is_rational()
    bool is_real() const;       // decided exactly (equality with the conjugate)

    // One certified contraction step (interval Newton with a subdivision
    // fallback); the box keeps containing the same root.
    void refine_step();
    void refine_to_width(const Rat& target);

    // q(value) == 0, decided exactly. The defining polynomial must be
    // irreducible (true for isolate_roots output).
    bool is_root_of(const UniPoly& q) const;

    std::string describe(const std::string& var = "x") const;

private:
    UniPoly defining_;
    UniPoly derivative_;
    Box box_;
};

// Default refinement target (bits) for textual approximations; the CLI
// seeds it from CORRSOLVE_PRECISION.
void set_display_precision(unsigned bits);
unsigned display_precision();

// One AlgebraicNumber per distinct complex root of squarefree_part(f),
// boxes pairwise disjoint, each carrying the minimal polynomial of its
// root. Order: rational roots ascending first, then the rest grouped by
// irreducible factor.
std::vector<AlgebraicNumber> isolate_roots(const UniPoly& f);

// Roots of one irreducible factor only (degree >= 1).
std::vector<AlgebraicNumber> isolate_roots_irreducible(const UniPoly& minpoly);

// Exact equality of the denoted complex numbers.
bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b);

struct ProjPoint {
    std::optional<AlgebraicNumber> finite; // nullopt = point at infinity

    static ProjPoint infinity() { return ProjPoint{std::nullopt}; }
    static ProjPoint of(AlgebraicNumber a) { return ProjPoint{std::move(a)}; }
    static ProjPoint of(const Rat& q) { return ProjPoint{AlgebraicNumber::from_rational(q)}; }
    bool is_infinity() const { return !finite.has_value(); }
    std::string describe(const std::string& var = "x") const;
};

enum class Evidence { Exact, CertifiedInterval };

struct CurvePoint {
    ProjPoint first, second;
    Evidence evidence = Evidence::Exact;
    std::string describe() const;
};

// Certified enclosure of p at a finite curve point, refined until the box
// width is at most 2^-precision. Rejects infinite coordinates.
Box evaluate_box(const BiPoly& p, const CurvePoint& pt, unsigned precision);

// Among `candidates` (roots of pairwise distinct boxes), select exactly
// `expected` members beta such that q(alpha, beta) = 0 for every q in
// `polys`. The expected count must be exact (derived from gcd degrees);
// candidates are refined until all non-members are excluded by interval
// evaluation.
std::vector<std::size_t> select_members(const AlgebraicNumber& alpha,
                                        std::vector<AlgebraicNumber>& candidates,
                                        const std::vector<BiPoly>& polys,
                                        std::size_t expected);

} // namespace corrsolve

#endif
