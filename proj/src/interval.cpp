#include "corrsolve/interval.hpp"

#include <sstream>

#include "corrsolve/errors.hpp"

namespace corrsolve {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < mn) mn = *v;
        if (*v > mx) mx = *v;
    }
    return {mn, mx};
}

RatInterval RatInterval::square() const {
    Rat a = lo * lo, b = hi * hi;
    if (contains_zero()) return {Rat(0), std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

std::optional<RatInterval> RatInterval::intersect(const RatInterval& o) const {
    Rat a = std::max(lo, o.lo), b = std::min(hi, o.hi);
    if (a > b) return std::nullopt;
    return RatInterval{a, b};
}

Box Box::reciprocal() const {
    if (contains_zero()) throw error("reciprocal of a box containing zero");
    RatInterval n = re.square() + im.square(); // |z|^2, excludes zero
    // 1/z = conj(z) / |z|^2; divide endpointwise by the positive interval n
    auto div = [&](const RatInterval& a) {
        Rat c1 = a.lo / n.lo, c2 = a.lo / n.hi, c3 = a.hi / n.lo, c4 = a.hi / n.hi;
        Rat mn = c1, mx = c1;
        for (const Rat* v : {&c2, &c3, &c4}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return RatInterval{mn, mx};
    };
    return {div(re), div(-im)};
}

std::optional<Box> Box::intersect(const Box& o) const {
    auto r = re.intersect(o.re);
    if (!r) return std::nullopt;
    auto i = im.intersect(o.im);
    if (!i) return std::nullopt;
    return Box{*r, *i};
}

std::string Box::to_string() const {
    std::ostringstream os;
    os << "[" << rat_to_string(re.lo) << "," << rat_to_string(re.hi) << "] + ["
       << rat_to_string(im.lo) << "," << rat_to_string(im.hi) << "]*i";
    return os.str();
}

Box eval_box(const UniPoly& f, const Box& z) {
    Box acc; // zero
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * z;
        Box c = Box::real_point(f.coeff(i));
        acc = acc + c;
    }
    return acc;
}

Box eval_box(const BiPoly& p, const Box& x, const Box& y) {
    // Horner in the second variable with UniPoly coefficients
    Box acc;
    auto cs = p.coeffs_in_second();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * y + eval_box(*it, x);
    return acc;
}

std::pair<Rat, Rat> eval_point(const UniPoly& f, const Rat& re, const Rat& im) {
    Rat ar(0), ai(0);
    for (int i = f.degree(); i >= 0; --i) {
        Rat nr = ar * re - ai * im + f.coeff(i);
        Rat ni = ar * im + ai * re;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {ar, ai};
}

Box eval_centered(const UniPoly& f, const UniPoly& fprime, const Box& z) {
    auto [mr, mi] = z.mid();
    auto [vr, vi] = eval_point(f, mr, mi);
    Box delta{{z.re.lo - mr, z.re.hi - mr}, {z.im.lo - mi, z.im.hi - mi}};
    return Box::point(vr, vi) + eval_box(fprime, z) * delta;
}

Box eval_centered(const BiPoly& p, const BiPoly& px, const BiPoly& py, const Box& x, const Box& y) {
    auto [xr, xi] = x.mid();
    auto [yr, yi] = y.mid();
    // exact p(mx, my) via Horner in the second variable
    Rat ar(0), ai(0);
    for (auto cs = p.coeffs_in_second(); !cs.empty(); cs.pop_back()) {
        auto [cr, ci] = eval_point(cs.back(), xr, xi);
        Rat nr = ar * yr - ai * yi + cr;
        Rat ni = ar * yi + ai * yr + ci;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    Box dx{{x.re.lo - xr, x.re.hi - xr}, {x.im.lo - xi, x.im.hi - xi}};
    Box dy{{y.re.lo - yr, y.re.hi - yr}, {y.im.lo - yi, y.im.hi - yi}};
    return Box::point(ar, ai) + eval_box(px, x, y) * dx + eval_box(py, x, y) * dy;
}

} // namespace corrsolve
