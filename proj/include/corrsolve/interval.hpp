#ifndef CORRSOLVE_INTERVAL_HPP
#define CORRSOLVE_INTERVAL_HPP

#include <optional>
#include <string>

#include "corrsolve/bipoly.hpp"
#include "corrsolve/rational.hpp"
#include "corrsolve/unipoly.hpp"

namespace corrsolve {

// Closed interval with exact rational endpoints. All operations return
// exact enclosures (no rounding is ever required).
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
    static RatInterval point(const Rat& v) { return {v, v}; }

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval square() const;

    // Intersection; nullopt when disjoint.
    std::optional<RatInterval> intersect(const RatInterval& o) const;
    bool strictly_inside(const RatInterval& o) const { return o.lo < lo && hi < o.hi; }
    bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }

    // Enclosing interval with dyadic endpoints (denominators 2^bits).
    RatInterval outward_round(unsigned bits) const {
        return {round_down_dyadic(lo, bits), round_up_dyadic(hi, bits)};
    }
};

// Axis-aligned rectangle in C with rational endpoints.
struct Box {
    RatInterval re, im;

    Box() = default;
    Box(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    static Box point(const Rat& x, const Rat& y) { return {RatInterval::point(x), RatInterval::point(y)}; }
    static Box real_point(const Rat& x) { return point(x, Rat(0)); }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool is_point() const { return re.is_point() && im.is_point(); }
    Rat width() const { return std::max(re.width(), im.width()); }
    std::pair<Rat, Rat> mid() const { return {re.mid(), im.mid()}; }

    Box operator+(const Box& o) const { return {re + o.re, im + o.im}; }
    Box operator-(const Box& o) const { return {re - o.re, im - o.im}; }
    Box operator*(const Box& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Box operator-() const { return {-re, -im}; }

    // Reciprocal enclosure; requires the box to exclude zero.
    Box reciprocal() const;
    Box divide_by(const Box& denom) const { return *this * denom.reciprocal(); }

    std::optional<Box> intersect(const Box& o) const;
    bool strictly_inside(const Box& o) const { return re.strictly_inside(o.re) && im.strictly_inside(o.im); }
    bool disjoint(const Box& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    Box outward_round(unsigned bits) const { return {re.outward_round(bits), im.outward_round(bits)}; }

    std::string to_string() const;
};

// Horner evaluation over boxes; exact enclosures of f(z) / p(x, y).
Box eval_box(const UniPoly& f, const Box& z);
Box eval_box(const BiPoly& p, const Box& x, const Box& y);

// Exact value at a rational complex point (re, im).
std::pair<Rat, Rat> eval_point(const UniPoly& f, const Rat& re, const Rat& im);

// First-order centered form f(mid) + f'(B)(B - mid): a much tighter
// enclosure than plain Horner once boxes are small (the width scales with
// |f'| instead of the coefficient magnitude). Sound by convexity of the
// box enclosing f'.
Box eval_centered(const UniPoly& f, const UniPoly& fprime, const Box& z);

// Bivariate analogue with both partial derivatives.
Box eval_centered(const BiPoly& p, const BiPoly& px, const BiPoly& py, const Box& x, const Box& y);

} // namespace corrsolve

#endif
