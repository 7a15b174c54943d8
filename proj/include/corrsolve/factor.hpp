#ifndef CORRSOLVE_FACTOR_HPP
#define CORRSOLVE_FACTOR_HPP

#include <utility>
#include <vector>

#include "corrsolve/unipoly.hpp"

namespace corrsolve {

struct Factorization {
    Rat content; // f = content * prod factors[i].first ^ factors[i].second
    std::vector<std::pair<UniPoly, int>> factors; // irreducible, integer-primitive, positive lc
};

// Factorization over Q (squarefree decomposition followed by small-prime
// modular factorization with Hensel lifting and recombination).
Factorization factor_univariate(const UniPoly& f);

// Roots of f in Q, each listed once.
std::vector<Rat> rational_roots(const UniPoly& f);

// True iff f is a cyclotomic polynomial (minimal polynomial of a root of
// unity). f must be irreducible over Q, integer-primitive.
bool is_cyclotomic(const UniPoly& f);

} // namespace corrsolve

#endif
