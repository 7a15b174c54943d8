#include "corrsolve/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "corrsolve/errors.hpp"
#include "corrsolve/factor.hpp"
#include "corrsolve/numberfield.hpp"

namespace corrsolve {

std::string PlaceAtInfinity::describe() const {
    std::ostringstream os;
    os << "place at " << center.describe() << ": e = " << ram;
    os << ", ord(x) = " << (pole_x != 0 ? pole_x : (mx != 0 ? mx : 0));
    os << ", ord(y) = " << (pole_y != 0 ? pole_y : (my != 0 ? my : 0));
    if (!branch_note.empty()) os << " [" << branch_note << "]";
    return os.str();
}

namespace {

// local bivariate polynomial over a number field: (base-exp, fiber-exp)
using LPoly = std::map<std::pair<int, int>, NFElem>;

void ladd(LPoly& p, int i, int j, const NFElem& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace({i, j}, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// q(b, center + w) with rational q lifted into K
LPoly translate_chart(const BiPoly& q, const FieldPtr& K, const NFElem& center) {
    LPoly out;
    for (const auto& [m, c] : q.terms()) {
        int i = m.first, j = m.second;
        // (center + w)^j expanded by rows of Pascal's triangle
        NFElem cf = NFElem::from_rational(K, c);
        std::vector<NFElem> binom(static_cast<std::size_t>(j) + 1); // coeff of w^k
        NFElem pw = NFElem::from_rational(K, Rat(1));
        // binom[k] = C(j,k) center^{j-k}
        std::vector<Int> ch(static_cast<std::size_t>(j) + 1);
        ch[0] = 1;
        for (int k = 1; k <= j; ++k) ch[static_cast<std::size_t>(k)] = ch[static_cast<std::size_t>(k) - 1] * (j - k + 1) / k;
        for (int k = j; k >= 0; --k) {
            binom[static_cast<std::size_t>(k)] =
                NFElem::from_rational(K, Rat(ch[static_cast<std::size_t>(k)])) * pw;
            if (k > 0) pw = pw * center;
        }
        for (int k = 0; k <= j; ++k) ladd(out, i, k, cf * binom[static_cast<std::size_t>(k)]);
    }
    return out;
}

// multiplicity of w = 0 in G(0, w); requires G(0, .) nonzero
int fiber_multiplicity(const LPoly& G) {
    int mu = -1;
    for (const auto& [m, c] : G)
        if (m.first == 0) mu = (mu < 0) ? m.second : std::min(mu, m.second);
    if (mu < 0) throw error("internal: local equation divisible by the base variable");
    return mu;
}

struct Leaf {
    int e = 1;        // ramification relative to the node
    int count = 1;    // branches in this class at one center
    int depth = 0;    // polygon levels below the node where the leaf sits
    // data for the residual check (set when the char root is materialized)
    bool have_root = false;
    FieldPtr field;
    NFElem root;
    int e1 = 1, m1 = 1; // first-level edge data at the node that created it
};

struct Edge {
    int j1, i1, j2, i2; // (w-exp, b-exp) endpoints, j1 < j2, i1 > i2
    int e1, m1, length; // slope m1/e1 in lowest terms; length = lattice steps
};

std::vector<Edge> newton_polygon(const LPoly& G, int mu) {
    // lower hull of (j, min_i) between j = 0 and j = mu
    std::map<int, int> min_i;
    for (const auto& [m, c] : G) {
        auto it = min_i.find(m.second);
        if (it == min_i.end() || m.first < it->second) min_i[m.second] = m.first;
    }
    if (!min_i.count(0)) throw unsupported_error("the curve contains a coordinate-line component");
    std::vector<std::pair<int, int>> pts; // (j, i), j ascending, only j <= mu
    for (const auto& [j, i] : min_i)
        if (j <= mu) pts.push_back({j, i});
    // monotone chain, keeping the lower hull
    std::vector<std::pair<int, int>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            long cross = static_cast<long>(b.first - a.first) * (p.second - a.second) -
                         static_cast<long>(b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        int j1 = hull[k].first, i1 = hull[k].second;
        int j2 = hull[k + 1].first, i2 = hull[k + 1].second;
        if (i1 <= i2) continue; // only strictly descending edges carry branches
        int dj = j2 - j1, di = i1 - i2;
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(dj).get_mpz_t(), Int(di).get_mpz_t());
        int gg = static_cast<int>(g.get_si());
        edges.push_back({j1, i1, j2, i2, dj / gg, di / gg, gg});
    }
    return edges;
}

// char polynomial in chat = c^e1 along the edge
NFPoly edge_char_poly(const LPoly& G, const FieldPtr& K, const Edge& e) {
    NFPoly chi(static_cast<std::size_t>(e.length) + 1, NFElem::from_rational(K, Rat(0)));
    for (int t = 0; t <= e.length; ++t) {
        int j = e.j1 + t * e.e1;
        int i = e.i1 - t * e.m1;
        auto it = G.find({i, j});
        if (it != G.end()) chi[static_cast<std::size_t>(t)] = it->second;
    }
    nf_trim(chi);
    return chi;
}

// G(b^e1, b^m1 * (c0 + w)) / b^W over the field of c0
LPoly edge_substitute(const LPoly& G, const FieldPtr& K2, const NFElem& c0, const Edge& e) {
    int W = e.i1 * e.e1 + e.m1 * e.j1;
    LPoly out;
    for (const auto& [m, c] : G) {
        int i = m.first, j = m.second;
        const NFElem& cf = c; // caller lifts G into the field of c0 first
        // (c0 + w)^j
        std::vector<Int> ch(static_cast<std::size_t>(j) + 1);
        ch[0] = 1;
        for (int k = 1; k <= j; ++k) ch[static_cast<std::size_t>(k)] = ch[static_cast<std::size_t>(k) - 1] * (j - k + 1) / k;
        NFElem pw = NFElem::from_rational(K2, Rat(1));
        std::vector<NFElem> binom(static_cast<std::size_t>(j) + 1);
        for (int k = j; k >= 0; --k) {
            binom[static_cast<std::size_t>(k)] = NFElem::from_rational(K2, Rat(ch[static_cast<std::size_t>(k)])) * pw;
            if (k > 0) pw = pw * c0;
        }
        int base = i * e.e1 + j * e.m1 - W;
        for (int k = 0; k <= j; ++k) ladd(out, base, k, cf * binom[static_cast<std::size_t>(k)]);
    }
    return out;
}

std::vector<Leaf> process_node(const LPoly& G, const FieldPtr& K, int depth);

std::vector<Leaf> process_edge(const LPoly& G, const FieldPtr& K, const Edge& e, int depth) {
    std::vector<Leaf> leaves;
    NFPoly chi = edge_char_poly(G, K, e);
    for (const auto& [part, r] : nf_squarefree_decomposition(chi)) {
        for (const NFPoly& H : nf_factor_squarefree(K, part)) {
            int degH = nf_deg(H);
            if (r == 1) {
                Leaf lf;
                lf.e = e.e1;
                lf.count = degH;
                lf.depth = depth;
                lf.e1 = e.e1;
                lf.m1 = e.m1;
                // materialize a root for the residual check when reachable
                if (degH == 1) {
                    lf.field = K;
                    NFElem chat = -H[0] / H[1];
                    if (e.e1 == 1) {
                        lf.root = chat;
                        lf.have_root = true;
                    } else if (K->is_rational()) {
                        // root of c^e1 = chat over Q
                        UniPoly cpoly = UniPoly::monomial(Rat(1), e.e1) - UniPoly(chat.rational_value());
                        UniPoly fac = factor_univariate(cpoly).factors.front().first;
                        FieldPtr K2 = fac.degree() == 1 ? NumberField::rationals()
                                                        : std::make_shared<const NumberField>(fac);
                        lf.field = K2;
                        lf.root = fac.degree() == 1
                                      ? NFElem::from_rational(K2, -fac.coeff(0) / fac.coeff(1))
                                      : NFElem::generator(K2);
                        lf.have_root = true;
                    }
                } else if (K->is_rational()) {
                    // chat generates Q[chat]/H; take an e1-th root when needed
                    std::vector<Rat> hc;
                    for (const NFElem& cc : H) hc.push_back(cc.rep().coeff(0));
                    UniPoly Hq{hc};
                    UniPoly full = Hq;
                    if (e.e1 > 1) {
                        // H(c^e1)
                        BiPoly tmp;
                        for (int k = 0; k <= Hq.degree(); ++k)
                            tmp = tmp + BiPoly::monomial(Hq.coeff(k), k * e.e1, 0);
                        full = tmp.to_unipoly_first();
                    }
                    UniPoly fac = factor_univariate(full).factors.front().first;
                    FieldPtr K2 = std::make_shared<const NumberField>(fac);
                    lf.field = K2;
                    lf.root = NFElem::generator(K2);
                    lf.have_root = true;
                }
                leaves.push_back(std::move(lf));
                continue;
            }
            // multiple characteristic root: recurse below it
            FieldPtr K2 = K;
            NFElem c0;
            if (degH == 1 && e.e1 == 1) {
                c0 = -H[0] / H[1];
            } else if (K->is_rational()) {
                std::vector<Rat> hc;
                for (const NFElem& cc : H) hc.push_back(cc.rep().coeff(0));
                UniPoly Hq{hc};
                UniPoly full = Hq;
                if (e.e1 > 1) {
                    BiPoly tmp;
                    for (int k = 0; k <= Hq.degree(); ++k)
                        tmp = tmp + BiPoly::monomial(Hq.coeff(k), k * e.e1, 0);
                    full = tmp.to_unipoly_first();
                }
                UniPoly fac = factor_univariate(full).factors.front().first;
                if (fac.degree() == 1) {
                    K2 = NumberField::rationals();
                    c0 = NFElem::from_rational(K2, -fac.coeff(0) / fac.coeff(1));
                } else {
                    K2 = std::make_shared<const NumberField>(fac);
                    c0 = NFElem::generator(K2);
                }
            } else {
                throw unsupported_error(
                    "Puiseux expansion needs a tower of two proper extensions; not supported");
            }
            // lift G into K2 when the field grew
            LPoly G2;
            if (K2 == K) {
                G2 = G;
            } else {
                for (const auto& [m, c] : G) ladd(G2, m.first, m.second, NFElem::from_rational(K2, c.rep().coeff(0)));
            }
            LPoly Gsub = edge_substitute(G2, K2, c0, e);
            for (Leaf sub : process_node(Gsub, K2, depth + 1)) {
                sub.e *= e.e1;
                sub.count *= degH;
                sub.depth = depth; // orders reported against this node's first edge
                sub.e1 = e.e1;
                sub.m1 = e.m1;
                sub.have_root = false; // deep-series residual unwinding not kept
                leaves.push_back(std::move(sub));
            }
        }
    }
    return leaves;
}

std::vector<Leaf> process_node(const LPoly& G0, const FieldPtr& K, int depth) {
    if (depth > 48) throw error("Puiseux recursion exceeded its depth bound");
    std::vector<Leaf> leaves;
    LPoly G = G0;
    // A fiber-variable factor means a terminating branch series below the
    // first level; at the top it is a genuine coordinate-line component.
    int wval = -1;
    for (const auto& [m, c] : G) wval = (wval < 0) ? m.second : std::min(wval, m.second);
    if (wval > 0) {
        if (depth == 0) throw unsupported_error("the curve contains a coordinate-line component");
        LPoly shifted;
        for (const auto& [m, c] : G) shifted[{m.first, m.second - wval}] = c;
        G = std::move(shifted);
        for (int k = 0; k < wval; ++k) {
            Leaf lf;
            lf.e = 1;
            lf.count = 1;
            lf.depth = depth;
            leaves.push_back(lf);
        }
    }
    int mu = fiber_multiplicity(G);
    if (mu > 0) {
        for (const Edge& e : newton_polygon(G, mu)) {
            for (Leaf lf : process_edge(G, K, e, depth)) leaves.push_back(std::move(lf));
        }
    }
    int total = 0;
    for (const Leaf& lf : leaves) total += lf.e * lf.count;
    if (total != mu + std::max(wval, 0))
        throw error("internal: branch ramification indices do not sum to the local multiplicity");
    return leaves;
}

// exact residual: develop the branch series and substitute it back into
// the untranslated local chart equation
bool residual_check(const LPoly& Gtop, const FieldPtr& Ktop, const Leaf& lf, int terms) {
    if (!lf.have_root) return false;
    const FieldPtr& K2 = lf.field;
    LPoly G2;
    if (K2 == Ktop) {
        G2 = Gtop;
    } else if (Ktop->is_rational()) {
        for (const auto& [m, c] : Gtop) ladd(G2, m.first, m.second, NFElem::from_rational(K2, c.rep().coeff(0)));
    } else {
        return false;
    }
    // normalize by the minimal (e1, m1)-weight instead of tracking the edge
    int W = -1;
    for (const auto& [m, c] : G2) {
        int w = m.first * lf.e1 + m.second * lf.m1;
        if (W < 0 || w < W) W = w;
    }
    LPoly G1;
    for (const auto& [m, c] : G2) {
        int i = m.first, j = m.second;
        std::vector<Int> ch(static_cast<std::size_t>(j) + 1);
        ch[0] = 1;
        for (int k = 1; k <= j; ++k) ch[static_cast<std::size_t>(k)] = ch[static_cast<std::size_t>(k) - 1] * (j - k + 1) / k;
        NFElem pw = NFElem::from_rational(K2, Rat(1));
        std::vector<NFElem> binom(static_cast<std::size_t>(j) + 1);
        for (int k = j; k >= 0; --k) {
            binom[static_cast<std::size_t>(k)] = NFElem::from_rational(K2, Rat(ch[static_cast<std::size_t>(k)])) * pw;
            if (k > 0) pw = pw * lf.root;
        }
        int base = i * lf.e1 + j * lf.m1 - W;
        for (int k = 0; k <= j; ++k) ladd(G1, base, k, c * binom[static_cast<std::size_t>(k)]);
    }
    // implicit-function series: w(b) = sum a_k b^k with G1(b, w(b)) = 0
    // D = dG1/dw (0,0) is nonzero for a simple characteristic root
    NFElem D = NFElem::from_rational(K2, Rat(0));
    {
        auto it = G1.find({0, 1});
        if (it != G1.end()) D = it->second;
    }
    if (D.is_zero()) return false;
    std::vector<NFElem> w(static_cast<std::size_t>(terms) + 1, NFElem::from_rational(K2, Rat(0)));
    for (int k = 1; k <= terms; ++k) {
        // coefficient of b^k in G1(b, w(b)) with a_k unknown set to zero
        NFElem rho = NFElem::from_rational(K2, Rat(0));
        for (const auto& [m, c] : G1) {
            int i = m.first, j = m.second;
            if (i > k) continue;
            // coefficient of b^(k-i) in w(b)^j
            std::vector<NFElem> pw{NFElem::from_rational(K2, Rat(1))};
            for (int rep = 0; rep < j; ++rep) {
                std::vector<NFElem> nxt(std::min<std::size_t>(pw.size() + w.size() - 1, static_cast<std::size_t>(terms) + 1),
                                        NFElem::from_rational(K2, Rat(0)));
                for (std::size_t aa = 0; aa < pw.size(); ++aa)
                    for (std::size_t bb = 0; bb < w.size() && aa + bb < nxt.size(); ++bb)
                        nxt[aa + bb] = nxt[aa + bb] + pw[aa] * w[bb];
                pw = std::move(nxt);
            }
            std::size_t need = static_cast<std::size_t>(k - i);
            if (need < pw.size()) rho = rho + c * pw[need];
        }
        w[static_cast<std::size_t>(k)] = -(rho / D);
    }
    // substitute the assembled branch into the original translated chart:
    // base = b^e1, fiber = b^m1 * (root + w(b)); order must be >= W + terms
    std::vector<NFElem> fiber(static_cast<std::size_t>(lf.m1), NFElem::from_rational(K2, Rat(0)));
    fiber.push_back(lf.root + w[0]);
    for (int k = 1; k <= terms; ++k) fiber.push_back(w[static_cast<std::size_t>(k)]);
    // truncated series arithmetic
    int order = W + terms;
    std::vector<NFElem> acc(static_cast<std::size_t>(order) + 1, NFElem::from_rational(K2, Rat(0)));
    for (const auto& [m, c] : G2) {
        int i = m.first, j = m.second;
        std::vector<NFElem> term{NFElem::from_rational(K2, Rat(1))};
        for (int rep = 0; rep < j; ++rep) {
            std::vector<NFElem> nxt(std::min<std::size_t>(term.size() + fiber.size() - 1, static_cast<std::size_t>(order) + 1),
                                    NFElem::from_rational(K2, Rat(0)));
            for (std::size_t aa = 0; aa < term.size(); ++aa)
                for (std::size_t bb = 0; bb < fiber.size() && aa + bb < nxt.size(); ++bb)
                    nxt[aa + bb] = nxt[aa + bb] + term[aa] * fiber[bb];
            term = std::move(nxt);
        }
        int shift = i * lf.e1;
        for (std::size_t aa = 0; aa < term.size(); ++aa) {
            std::size_t idx = aa + static_cast<std::size_t>(shift);
            if (idx <= static_cast<std::size_t>(order)) acc[idx] = acc[idx] + c * term[aa];
        }
    }
    for (int k = 0; k < order; ++k)
        if (!acc[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
}

struct CenterClass {
    UniPoly minpoly;        // of the finite coordinate (or X for (inf,inf))
    std::vector<Leaf> leaves;
    FieldPtr field;
    LPoly translated;
};

std::vector<Leaf> branches_for(const BiPoly& chart, const FieldPtr& K, const NFElem& center,
                               LPoly& translated_out) {
    translated_out = translate_chart(chart, K, center);
    return process_node(translated_out, K, 0);
}

} // namespace

std::vector<PlaceAtInfinity> places_at_infinity(const Correspondence& C) {
    std::vector<PlaceAtInfinity> out;

    auto emit = [&](const std::vector<Leaf>& leaves, const FieldPtr& K, const LPoly& translated,
                    const AlgebraicNumber* finite_coord, bool x_inf, bool y_inf) {
        for (const Leaf& lf : leaves) {
            int e = lf.e;
            int m = lf.m1 * (lf.e / lf.e1);
            bool residual = lf.depth == 0 && residual_check(translated, K, lf, std::max(6, e + m + 2));
            for (int copy = 0; copy < lf.count; ++copy) {
                PlaceAtInfinity pl;
                if (x_inf && y_inf) {
                    pl.center = {ProjPoint::infinity(), ProjPoint::infinity(), Evidence::Exact};
                    pl.pole_x = -e;
                    pl.pole_y = -m;
                } else if (x_inf) {
                    pl.center = {ProjPoint::infinity(), ProjPoint::of(*finite_coord), Evidence::Exact};
                    pl.pole_x = -e;
                    pl.my = m;
                } else {
                    pl.center = {ProjPoint::of(*finite_coord), ProjPoint::infinity(), Evidence::Exact};
                    pl.pole_y = -e;
                    pl.mx = m;
                }
                pl.ram = e;
                pl.residual_verified = residual;
                std::ostringstream note;
                note << "branch class of size " << lf.count << ", e = " << e << ", contact order " << m;
                if (!residual && lf.depth > 0) note << ", deep branch (completeness-checked)";
                pl.branch_note = note.str();
                out.push_back(std::move(pl));
            }
        }
    };

    // centers (inf, beta)
    UniPoly phi = C.bihom().fiber_form_x_infinity();
    if (phi.degree() >= 1) {
        BiPoly chart = C.bihom().dehomogenize(Chart::XInfYFin); // (u, v)
        for (const auto& [G, mult] : factor_univariate(squarefree_part(phi)).factors) {
            FieldPtr K = G.degree() == 1 ? NumberField::rationals()
                                         : std::make_shared<const NumberField>(G);
            NFElem center = G.degree() == 1 ? NFElem::from_rational(K, -G.coeff(0) / G.coeff(1))
                                            : NFElem::generator(K);
            LPoly translated;
            std::vector<Leaf> leaves = branches_for(chart, K, center, translated);
            for (const auto& beta : isolate_roots_irreducible(G))
                emit(leaves, K, translated, &beta, true, false);
        }
    }
    // centers (alpha, inf)
    UniPoly psi = C.bihom().fiber_form_y_infinity();
    if (psi.degree() >= 1) {
        BiPoly chart = C.bihom().dehomogenize(Chart::XFinYInf).swap_vars(); // (w, x)
        for (const auto& [G, mult] : factor_univariate(squarefree_part(psi)).factors) {
            FieldPtr K = G.degree() == 1 ? NumberField::rationals()
                                         : std::make_shared<const NumberField>(G);
            NFElem center = G.degree() == 1 ? NFElem::from_rational(K, -G.coeff(0) / G.coeff(1))
                                            : NFElem::generator(K);
            LPoly translated;
            std::vector<Leaf> leaves = branches_for(chart, K, center, translated);
            for (const auto& alpha : isolate_roots_irreducible(G))
                emit(leaves, K, translated, &alpha, false, true);
        }
    }
    // center (inf, inf)
    if (C.bihom().vanishes_at_inf_inf()) {
        BiPoly chart = C.bihom().dehomogenize(Chart::XInfYInf); // (u, w)
        FieldPtr K = NumberField::rationals();
        LPoly translated;
        std::vector<Leaf> leaves = branches_for(chart, K, NFElem::from_rational(K, Rat(0)), translated);
        emit(leaves, K, translated, nullptr, true, true);
    }
    return out;
}

} // namespace corrsolve
