#ifndef CORRSOLVE_FINITENESS_HPP
#define CORRSOLVE_FINITENESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "corrsolve/correspondence.hpp"

namespace corrsolve {

// A binary algebraic relation between two copies of P1: a canonical
// squarefree main part with no single-variable factors, plus the split-off
// coordinate-line components (full vertical/horizontal lines).
struct Relation {
    BiPoly main = BiPoly::one();     // canonical; one() when no main part
    UniPoly xlines = UniPoly::one(); // squarefree primitive, positive lc
    UniPoly ylines = UniPoly::one();

    static Relation from_bipoly(const BiPoly& r);
    bool operator==(const Relation& o) const;
    bool is_empty() const;
    std::pair<int, int> bidegree() const; // of the main part (0,0 if none)
    std::string to_string() const;
};

// Composite relation {(x, y) : exists m with r(x, m) and s(m, y)} as an
// algebraic point set. Throws when the elimination degenerates (shared
// middle factor producing a zero resultant or a full-plane component).
Relation compose(const Relation& r, const Relation& s);

struct PeriodReport {
    enum class Outcome { Finite, NoStabilization, DegreeCapExceeded };
    Outcome outcome;
    int period = 0;  // valid when Finite
    int max_n = 0;   // the cap that applied
    std::vector<std::pair<int, int>> degree_trace;
    std::string describe() const;
};

// Iterates R = trC o C, comparing canonical forms until stabilization or a cap.
PeriodReport period(const Correspondence& C, int max_n, int max_degree);

// Witness of Theorem 1's k(x) cap k(y) != k:
//   fnum(X) * Y^b - gnum(Y) * X^a = cofactor * p   exactly,
// with fnum / X^a nonconstant.
struct SeparatedWitness {
    UniPoly fnum;
    int a = 0;
    UniPoly gnum;
    int b = 0;
    BiPoly cofactor;
    std::string describe() const;
};

std::optional<SeparatedWitness> separated_search(const Correspondence& C, int deg_bound,
                                                 int den_bound);

// For homogeneous p: minimal polynomials of the pairwise root quotients of
// p(X, 1). Returns a witness non-cyclotomic quotient minimal polynomial
// (proving the correspondence infinite) or nullopt (inconclusive).
std::optional<UniPoly> cyclotomic_ratio_test(const Correspondence& C);

// Collects finiteness evidence; contradictory evidence (both finite and
// infinite) violates Theorem 1 and raises inconsistency_error.
class EvidenceGuard {
public:
    void record_finite(const std::string& what);
    void record_infinite(const std::string& what);
    bool has_finite() const { return !finite_.empty(); }
    bool has_infinite() const { return !infinite_.empty(); }
    const std::vector<std::string>& finite_evidence() const { return finite_; }
    const std::vector<std::string>& infinite_evidence() const { return infinite_; }

private:
    std::vector<std::string> finite_, infinite_;
};

} // namespace corrsolve

#endif
