#ifndef CORRSOLVE_GAUSS_HPP
#define CORRSOLVE_GAUSS_HPP

#include <vector>

#include "corrsolve/rational.hpp"

namespace corrsolve {

using QVec = std::vector<Rat>;
using QMatrix = std::vector<QVec>; // row-major

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMatrix& a);

int rank(QMatrix a);

// Deterministic basis of the right nullspace {x : a x = 0}.
std::vector<QVec> nullspace(const QMatrix& a, int cols);

// Scale a rational vector to coprime integers (primitive), first nonzero
// entry positive.
std::vector<Int> primitive_integer_vector(const QVec& v);

} // namespace corrsolve

#endif
