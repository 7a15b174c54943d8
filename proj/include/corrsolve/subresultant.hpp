#ifndef CORRSOLVE_SUBRESULTANT_HPP
#define CORRSOLVE_SUBRESULTANT_HPP

#include <vector>

#include "corrsolve/errors.hpp"

namespace corrsolve {

// Ring operations used by the pseudo-remainder sequences. Specialized for
// Rat, UniPoly and BiPoly; any integral domain with exact division works.
template <class R>
struct RingTraits;

template <class R>
using DensePoly = std::vector<R>; // coefficient i of X^i, trimmed

namespace detail {

template <class R>
int rdeg(const DensePoly<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class R>
void rtrim(DensePoly<R>& p) {
    while (!p.empty() && RingTraits<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
DensePoly<R> rscale(const DensePoly<R>& p, const R& s) {
    DensePoly<R> r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(RingTraits<R>::mul(c, s));
    rtrim(r);
    return r;
}

template <class R>
DensePoly<R> rsub(const DensePoly<R>& a, const DensePoly<R>& b) {
    DensePoly<R> r(std::max(a.size(), b.size()), RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = RingTraits<R>::sub(r[i], b[i]);
    rtrim(r);
    return r;
}

template <class R>
R rpow(const R& a, int e) {
    R r = RingTraits<R>::one();
    for (int i = 0; i < e; ++i) r = RingTraits<R>::mul(r, a);
    return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B. Requires
// deg A >= deg B >= 0, B nonzero.
template <class R>
DensePoly<R> prem(DensePoly<R> A, const DensePoly<R>& B) {
    const R lcB = B.back();
    int e = rdeg(A) - rdeg(B) + 1;
    while (!A.empty() && rdeg(A) >= rdeg(B)) {
        const R lcA = A.back();
        int shift = rdeg(A) - rdeg(B);
        DensePoly<R> t(static_cast<std::size_t>(shift), RingTraits<R>::zero());
        for (const auto& c : B) t.push_back(RingTraits<R>::mul(c, lcA));
        A = rsub(rscale(A, lcB), t);
        --e;
    }
    if (e > 0) A = rscale(A, rpow(lcB, e));
    return A;
}

template <class R>
DensePoly<R> exact_div_all(const DensePoly<R>& p, const R& d) {
    DensePoly<R> r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(RingTraits<R>::exact_div(c, d));
    return r;
}

} // namespace detail

// Resultant of A and B (polynomials over R in an eliminated variable) via
// the subresultant pseudo-remainder sequence; returns the exact Sylvester
// determinant including sign.
template <class R>
R subresultant_resultant(DensePoly<R> A, DensePoly<R> B) {
    using namespace detail;
    using T = RingTraits<R>;
    rtrim(A);
    rtrim(B);
    if (A.empty() || B.empty()) return T::zero();
    if (rdeg(A) == 0 && rdeg(B) == 0) return T::one();
    bool negate = false;
    if (rdeg(A) < rdeg(B)) {
        std::swap(A, B);
        if ((rdeg(A) & 1) && (rdeg(B) & 1)) negate = !negate;
    }
    if (rdeg(B) == 0) {
        R r = rpow(B[0], rdeg(A));
        return negate ? T::neg(r) : r;
    }
    R g = T::one(), h = T::one();
    while (true) {
        int da = rdeg(A), db = rdeg(B);
        int d = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        DensePoly<R> Rm = prem(A, B);
        A = std::move(B);
        R divisor = T::mul(g, rpow(h, d));
        rtrim(Rm);
        if (Rm.empty()) return T::zero(); // positive-degree common factor
        B = exact_div_all(Rm, divisor);
        g = A.back();
        if (d == 1)
            h = g;
        else if (d > 1)
            h = T::exact_div(rpow(g, d), rpow(h, d - 1));
        if (rdeg(B) == 0) {
            int dA = rdeg(A); // >= 1: B had positive degree on the previous turn
            R res = (dA == 1) ? B[0] : T::exact_div(rpow(B[0], dA), rpow(h, dA - 1));
            return negate ? T::neg(res) : res;
        }
    }
}

// Last nonzero element of the subresultant PRS; its primitive part is the
// gcd of A and B in the eliminated variable (content handling is the
// caller's job). Returns an empty vector when gcd is constant.
template <class R>
DensePoly<R> subresultant_prs_gcd(DensePoly<R> A, DensePoly<R> B) {
    using namespace detail;
    using T = RingTraits<R>;
    rtrim(A);
    rtrim(B);
    if (A.empty()) return B;
    if (B.empty()) return A;
    if (rdeg(A) < rdeg(B)) std::swap(A, B);
    if (rdeg(B) == 0) return {}; // nonzero constant divisor
    R g = T::one(), h = T::one();
    while (true) {
        int d = rdeg(A) - rdeg(B);
        DensePoly<R> Rm = prem(A, B);
        rtrim(Rm);
        R divisor = T::mul(g, rpow(h, d));
        A = std::move(B);
        if (Rm.empty()) return A;
        B = exact_div_all(Rm, divisor);
        g = A.back();
        if (d == 1)
            h = g;
        else if (d > 1)
            h = T::exact_div(rpow(g, d), rpow(h, d - 1));
        if (rdeg(B) == 0) return {}; // coprime
    }
}

} // namespace corrsolve

#endif
