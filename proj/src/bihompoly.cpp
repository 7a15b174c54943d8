#include "corrsolve/bihompoly.hpp"

#include "corrsolve/errors.hpp"

namespace corrsolve {

BiHomPoly BiHomPoly::bihomogenize(const BiPoly& p) {
    if (p.is_zero()) throw error("bihomogenization of zero polynomial");
    BiHomPoly h;
    h.dx_ = std::max(p.deg_first(), 0);
    h.dy_ = std::max(p.deg_second(), 0);
    h.body_ = p;
    return h;
}

std::vector<std::pair<std::array<int, 4>, Rat>> BiHomPoly::quadruples() const {
    std::vector<std::pair<std::array<int, 4>, Rat>> out;
    for (const auto& [m, c] : body_.terms())
        out.push_back({{dx_ - m.first, m.first, dy_ - m.second, m.second}, c});
    return out;
}

BiPoly BiHomPoly::dehomogenize(Chart chart) const {
    BiPoly r;
    for (const auto& [m, c] : body_.terms()) {
        int i = m.first, j = m.second;
        int a0 = dx_ - i, b0 = dy_ - j;
        switch (chart) {
            case Chart::XFinYFin: r = r + BiPoly::monomial(c, i, j); break;
            case Chart::XInfYFin: r = r + BiPoly::monomial(c, a0, j); break;
            case Chart::XFinYInf: r = r + BiPoly::monomial(c, i, b0); break;
            case Chart::XInfYInf: r = r + BiPoly::monomial(c, a0, b0); break;
        }
    }
    return r;
}

Rat BiHomPoly::eval(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) const {
    Rat acc(0);
    for (const auto& [m, c] : body_.terms()) {
        int i = m.first, j = m.second;
        acc += c * pow_rat(x0, static_cast<unsigned long>(dx_ - i)) * pow_rat(x1, static_cast<unsigned long>(i)) *
               pow_rat(y0, static_cast<unsigned long>(dy_ - j)) * pow_rat(y1, static_cast<unsigned long>(j));
    }
    return acc;
}

UniPoly BiHomPoly::fiber_form_x_infinity() const {
    // keep terms with a0 = 0 (full x1 power), set y0 = 1
    std::vector<Rat> c(static_cast<std::size_t>(dy_) + 1, Rat(0));
    for (const auto& [m, q] : body_.terms())
        if (m.first == dx_) c[static_cast<std::size_t>(m.second)] = q;
    return UniPoly(std::move(c));
}

UniPoly BiHomPoly::fiber_form_y_infinity() const {
    std::vector<Rat> c(static_cast<std::size_t>(dx_) + 1, Rat(0));
    for (const auto& [m, q] : body_.terms())
        if (m.second == dy_) c[static_cast<std::size_t>(m.first)] = q;
    return UniPoly(std::move(c));
}

bool BiHomPoly::vanishes_at_inf_inf() const {
    return sgn(body_.coeff(dx_, dy_)) == 0;
}

} // namespace corrsolve
