#include "corrsolve/algebraic.hpp"

#include <algorithm>
#include <sstream>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"

namespace corrsolve {

namespace {

unsigned width_bits(const Rat& w) {
    unsigned bits = 4;
    Rat t = w;
    while (sgn(t) > 0 && t < 1 && bits < 8000) {
        t = t * 2;
        ++bits;
    }
    return bits;
}

} // namespace

AlgebraicNumber::AlgebraicNumber(UniPoly defining, Box box)
    : defining_(defining.primitive()), derivative_(defining_.derivative()), box_(std::move(box)) {
    if (defining_.degree() < 1) throw error("defining polynomial must be nonconstant");
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& q) {
    return AlgebraicNumber(UniPoly({-q, Rat(1)}), Box::real_point(q));
}

Rat AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw error("not a rational number");
    return -defining_.coeff(0) / defining_.coeff(1);
}

bool AlgebraicNumber::is_real() const {
    if (!box_.im.contains_zero()) return false;
    if (box_.im.is_point()) return true;
    // real defining polynomial: the reflected box isolates the conjugate
    AlgebraicNumber conj(defining_, Box{box_.re, -box_.im});
    return equals(*this, conj);
}

void AlgebraicNumber::refine_step() {
    if (box_.is_point()) return;
    auto [mr, mi] = box_.mid();
    Box m = Box::point(mr, mi);
    Box fp = eval_box(derivative_, box_);
    if (auto tighter = eval_centered(derivative_, derivative_.derivative(), box_).intersect(fp))
        fp = *tighter;
    if (!fp.contains_zero()) {
        Box fm = eval_box(defining_, m);
        Box K = m - fm.divide_by(fp);
        if (auto inter = K.intersect(box_)) {
            Box rounded = inter->outward_round(width_bits(inter->width()) + 16);
            if (auto kept = rounded.intersect(box_)) {
                if (kept->width() * 2 <= box_.width()) {
                    box_ = *kept;
                    return;
                }
                box_ = *kept;
            }
        }
    }
    // subdivision fallback: keep the bounding box of the quadrants where
    // the defining polynomial may vanish
    RatInterval rs[2] = {{box_.re.lo, mr}, {mr, box_.re.hi}};
    RatInterval is[2] = {{box_.im.lo, mi}, {mi, box_.im.hi}};
    bool any = false;
    Rat rlo, rhi, ilo, ihi;
    for (const auto& r : rs) {
        for (const auto& i : is) {
            Box cell{r, i};
            if (!eval_box(defining_, cell).contains_zero()) continue;
            if (!eval_centered(defining_, derivative_, cell).contains_zero()) continue;
            if (!any) {
                rlo = r.lo;
                rhi = r.hi;
                ilo = i.lo;
                ihi = i.hi;
                any = true;
            } else {
                rlo = std::min(rlo, r.lo);
                rhi = std::max(rhi, r.hi);
                ilo = std::min(ilo, i.lo);
                ihi = std::max(ihi, i.hi);
            }
        }
    }
    if (any) box_ = Box{{rlo, rhi}, {ilo, ihi}};
}

void AlgebraicNumber::refine_to_width(const Rat& target) {
    for (int guard = 0; guard < 20000; ++guard) {
        if (box_.width() <= target) return;
        refine_step();
    }
    throw error("refinement failed to converge");
}

bool AlgebraicNumber::is_root_of(const UniPoly& q) const {
    if (q.is_zero()) return true;
    UniPoly g = gcd(defining_, q);
    if (g.degree() < 1) return false;
    UniPoly h = defining_.exact_div(g);
    UniPoly gp = g.derivative(), hp = h.derivative();
    AlgebraicNumber probe = *this;
    for (int guard = 0; guard < 20000; ++guard) {
        if (!eval_box(g, probe.box_).contains_zero() ||
            !eval_centered(g, gp, probe.box_).contains_zero())
            return false;
        if (!eval_box(h, probe.box_).contains_zero() ||
            !eval_centered(h, hp, probe.box_).contains_zero())
            return true;
        probe.refine_step();
    }
    throw error("is_root_of failed to converge");
}

namespace {
unsigned g_display_bits = 20;
}

void set_display_precision(unsigned bits) { g_display_bits = std::min(bits, 4096u); }
unsigned display_precision() { return g_display_bits; }

std::string AlgebraicNumber::describe(const std::string& var) const {
    if (is_rational()) return rat_to_string(rational_value());
    AlgebraicNumber copy = *this;
    copy.refine_to_width(Rat(1) / Rat(Int(1) << g_display_bits));
    auto [re, im] = copy.box_.mid();
    std::ostringstream os;
    os << "root of " << defining_.to_string(var) << " near " << rat_to_decimal(re, 4);
    if (sgn(im) != 0) os << (sgn(im) > 0 ? " + " : " - ") << rat_to_decimal(abs_rat(im), 4) << "i";
    return os.str();
}

namespace {

struct WorkItem {
    Box box;
    int depth;
};

// Certified isolation of all complex roots of an irreducible polynomial of
// degree >= 2 (no rational roots). Quadtree subdivision with exclusion by
// interval evaluation and uniqueness certification by the interval Newton
// operator. Roots may sit exactly on a subdivision line, which stalls the
// refinement; a shifted grid is retried until every root is certified.
std::vector<Box> isolate_boxes(const UniPoly& h) {
    int d = h.degree();
    UniPoly hp = h.derivative();
    UniPoly hpp = hp.derivative();
    Rat M = root_bound(h) + 1;
    for (int attempt = 0; attempt < 24; ++attempt) {
        Rat ox = rat(attempt, 2 * attempt + 3);
        Rat oy = rat(attempt + 1, 2 * attempt + 5) / 2;
        Box root_box{{-M + ox, M + ox}, {-M + oy, M + oy}};
        std::vector<WorkItem> stack{{root_box, 0}};
        std::vector<Box> found;
        bool failed = false;
        int max_depth = 64 + 16 * attempt;
        long budget = 150000L * (attempt + 1);
        while (!stack.empty() && !failed) {
            if (--budget < 0) {
                failed = true;
                break;
            }
            WorkItem it = stack.back();
            stack.pop_back();
            if (!eval_box(h, it.box).contains_zero()) continue;
            // sharper exclusion through the centered form; f' itself gets a
            // centered enclosure, which shrinks the non-excludable annulus
            // around each root by another derivative factor
            Box fp_plain = eval_box(hp, it.box);
            Box fp = fp_plain;
            if (auto tighter = eval_centered(hp, hpp, it.box).intersect(fp_plain)) fp = *tighter;
            auto [mr, mi] = it.box.mid();
            auto [vr, vi] = eval_point(h, mr, mi);
            Box fm = Box::point(vr, vi);
            Box delta{{it.box.re.lo - mr, it.box.re.hi - mr}, {it.box.im.lo - mi, it.box.im.hi - mi}};
            if (!(fm + fp * delta).contains_zero()) continue;
            if (!fp.contains_zero()) {
                Box m = Box::point(mr, mi);
                Box K = m - fm.divide_by(fp);
                if (K.strictly_inside(it.box)) {
                    Box refined = K.outward_round(width_bits(K.width()) + 16);
                    auto kept = refined.intersect(it.box);
                    found.push_back(kept ? *kept : K);
                    continue;
                }
            }
            if (it.depth >= max_depth) {
                failed = true;
                break;
            }
            RatInterval rs[2] = {{it.box.re.lo, mr}, {mr, it.box.re.hi}};
            RatInterval is[2] = {{it.box.im.lo, mi}, {mi, it.box.im.hi}};
            for (const auto& r : rs)
                for (const auto& i : is) stack.push_back({Box{r, i}, it.depth + 1});
        }
        if (!failed && static_cast<int>(found.size()) == d) {
            std::sort(found.begin(), found.end(), [](const Box& a, const Box& b) {
                if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
                return a.im.lo < b.im.lo;
            });
            return found;
        }
    }
    throw error("root isolation failed for " + h.to_string());
}

} // namespace

std::vector<AlgebraicNumber> isolate_roots_irreducible(const UniPoly& minpoly) {
    std::vector<AlgebraicNumber> out;
    if (minpoly.degree() < 1) throw error("isolate_roots_irreducible needs degree >= 1");
    if (minpoly.degree() == 1) {
        out.push_back(AlgebraicNumber::from_rational(-minpoly.coeff(0) / minpoly.coeff(1)));
        return out;
    }
    UniPoly h = minpoly.primitive();
    for (Box& b : isolate_boxes(h)) out.emplace_back(h, std::move(b));
    return out;
}

std::vector<AlgebraicNumber> isolate_roots(const UniPoly& f) {
    if (f.is_zero()) throw error("cannot isolate roots of the zero polynomial");
    std::vector<AlgebraicNumber> out;
    if (f.degree() == 0) return out;
    Factorization fac = factor_univariate(f);
    std::vector<std::pair<Rat, UniPoly>> rational;
    std::vector<UniPoly> other;
    for (const auto& [g, mult] : fac.factors) {
        if (g.degree() == 1)
            rational.emplace_back(-g.coeff(0) / g.coeff(1), g);
        else
            other.push_back(g);
    }
    std::sort(rational.begin(), rational.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [r, g] : rational) out.push_back(AlgebraicNumber::from_rational(r));
    for (const UniPoly& g : other)
        for (auto& a : isolate_roots_irreducible(g)) out.push_back(std::move(a));
    return out;
}

bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.box().disjoint(b.box())) return false;
    if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
    UniPoly g = gcd(a.defining(), b.defining());
    if (g.degree() < 1) return false;
    if (!a.is_root_of(g) || !b.is_root_of(g)) return false;
    if (g.degree() == 1) return true;
    Rat sep = root_separation_lower_bound(g) / 4;
    AlgebraicNumber ra = a, rb = b;
    ra.refine_to_width(sep);
    rb.refine_to_width(sep);
    return !ra.box().disjoint(rb.box());
}

std::string ProjPoint::describe(const std::string& var) const {
    if (is_infinity()) return "inf";
    return finite->describe(var);
}

std::string CurvePoint::describe() const {
    return "(" + first.describe("x") + ", " + second.describe("y") + ")";
}

Box evaluate_box(const BiPoly& p, const CurvePoint& pt, unsigned precision) {
    if (pt.first.is_infinity() || pt.second.is_infinity())
        throw error("evaluate_box requires finite coordinates (use the bihomogeneous charts)");
    AlgebraicNumber x = *pt.first.finite;
    AlgebraicNumber y = *pt.second.finite;
    Rat target = Rat(1) / Rat(Int(1) << precision);
    for (int guard = 0; guard < 20000; ++guard) {
        Box v = eval_box(p, x.box(), y.box());
        if (v.width() <= target) return v;
        x.refine_step();
        y.refine_step();
    }
    throw error("evaluate_box failed to converge");
}

std::vector<std::size_t> select_members(const AlgebraicNumber& alpha,
                                        std::vector<AlgebraicNumber>& candidates,
                                        const std::vector<BiPoly>& polys,
                                        std::size_t expected) {
    std::vector<std::size_t> remaining(candidates.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::vector<BiPoly> dqx, dqy;
    for (const BiPoly& q : polys) {
        dqx.push_back(q.derivative_first());
        dqy.push_back(q.derivative_second());
    }
    AlgebraicNumber a = alpha;
    for (int guard = 0; guard < 20000; ++guard) {
        std::vector<std::size_t> keep;
        for (std::size_t idx : remaining) {
            bool excluded = false;
            for (std::size_t qi = 0; qi < polys.size(); ++qi) {
                if (!eval_box(polys[qi], a.box(), candidates[idx].box()).contains_zero() ||
                    !eval_centered(polys[qi], dqx[qi], dqy[qi], a.box(), candidates[idx].box())
                         .contains_zero()) {
                    excluded = true;
                    break;
                }
            }
            if (!excluded) keep.push_back(idx);
        }
        remaining = std::move(keep);
        if (remaining.size() == expected) return remaining;
        if (remaining.size() < expected)
            throw inconsistency_error("membership count fell below the exact expected count");
        a.refine_step();
        for (std::size_t idx : remaining) candidates[idx].refine_step();
    }
    throw error("select_members failed to converge");
}

} // namespace corrsolve
