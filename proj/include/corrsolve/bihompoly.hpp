#ifndef CORRSOLVE_BIHOMPOLY_HPP
#define CORRSOLVE_BIHOMPOLY_HPP

#include <array>
#include <vector>

#include "corrsolve/bipoly.hpp"

namespace corrsolve {

// The four affine charts of P1 x P1. "Inf" means the chart in which the
// corresponding coordinate is expressed through its reciprocal (local
// variable u = x0 with x = 1/u, resp. w = y0 with y = 1/w).
enum class Chart { XFinYFin, XInfYFin, XFinYInf, XInfYInf };

// Bihomogeneous form of a bivariate polynomial: every term has
// x-exponents summing to deg_x(p) and y-exponents summing to deg_y(p).
// Internally stores the (x1, y1) exponents; x0/y0 exponents are the
// complements.
class BiHomPoly {
public:
    BiHomPoly() : dx_(0), dy_(0) {}

    static BiHomPoly bihomogenize(const BiPoly& p);

    int deg_x() const { return dx_; }
    int deg_y() const { return dy_; }
    bool is_zero() const { return body_.is_zero(); }

    // Terms as exponent quadruples (a0, a1, b0, b1) with coefficients.
    std::vector<std::pair<std::array<int, 4>, Rat>> quadruples() const;

    // Restrict to the given chart; the result is a polynomial in the two
    // local variables (x-side first, y-side second).
    BiPoly dehomogenize(Chart chart) const;

    // Value at explicit homogeneous coordinates.
    Rat eval(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) const;

    // Binary form in (y0, y1) obtained by setting x0 = 0, x1 = 1, returned
    // as the polynomial phi(Y) = P(0, 1, 1, Y); the point (inf, inf) lies
    // on the curve exactly when P(0, 1, 0, 1) = 0.
    UniPoly fiber_form_x_infinity() const;
    bool vanishes_at_inf_inf() const;
    // Symmetric form at y0 = 0: psi(X) = P(1, X, 0, 1).
    UniPoly fiber_form_y_infinity() const;

private:
    int dx_, dy_;
    BiPoly body_; // exponents (a1, b1)
};

} // namespace corrsolve

#endif
