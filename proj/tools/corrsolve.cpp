// corrsolve: exact analysis of algebraic correspondences on P1 x P1.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "corrsolve/errors.hpp"
#include "corrsolve/parser.hpp"
#include "corrsolve/report.hpp"
#include "corrsolve/theta.hpp"

using namespace corrsolve;
using nlohmann::json;

namespace {

unsigned env_precision() {
    const char* v = std::getenv("CORRSOLVE_PRECISION");
    if (!v) return 40;
    long bits = std::atol(v);
    if (bits < 4 || bits > 4096) return 40;
    return static_cast<unsigned>(bits);
}

Rat parse_number(const std::string& s) {
    if (auto r = rat_from_string(s)) return *r;
    // decimal form a.b
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw input_error("bad number: " + s);
        Int scale = pow_int(Int(10), fp.size());
        Int num = Int(ip) * scale + (fp.empty() ? Int(0) : Int(fp));
        Rat q = rat(num, scale);
        return neg ? -q : q;
    }
    throw input_error("bad number: " + s);
}

ProjPoint parse_coordinate(const std::string& text) {
    if (text == "inf" || text == "infty" || text == "oo") return ProjPoint::infinity();
    if (text.rfind("root:", 0) == 0) {
        auto second_colon = text.find(':', 5);
        if (second_colon == std::string::npos)
            throw input_error("coordinate syntax: root:<poly>:box(a,b)");
        std::string poly_text = text.substr(5, second_colon - 5);
        std::string box_text = text.substr(second_colon + 1);
        if (box_text.rfind("box(", 0) != 0 || box_text.back() != ')')
            throw input_error("coordinate syntax: root:<poly>:box(a,b)");
        std::string nums = box_text.substr(4, box_text.size() - 5);
        std::vector<Rat> vals;
        std::size_t pos = 0;
        while (pos < nums.size()) {
            auto comma = nums.find(',', pos);
            std::string tok = nums.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            vals.push_back(parse_number(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (vals.size() != 2 && vals.size() != 4) throw input_error("box needs 2 or 4 numbers");
        BiPoly pp = parse_bipoly(poly_text);
        UniPoly f = pp.depends_on_second() ? pp.to_unipoly_second() : pp.to_unipoly_first();
        Rat half = (vals[1] - vals[0]);
        if (sgn(half) < 0) throw input_error("box endpoints out of order");
        Box region = vals.size() == 4 ? Box{{vals[0], vals[1]}, {vals[2], vals[3]}}
                                      : Box{{vals[0], vals[1]}, {-half, half}};
        std::vector<AlgebraicNumber> roots = isolate_roots(f);
        std::vector<AlgebraicNumber> hits;
        for (auto& r : roots) {
            AlgebraicNumber copy = r;
            Rat target = (vals[1] - vals[0]) / 64;
            if (sgn(target) <= 0) target = rat(1, 1024);
            copy.refine_to_width(target);
            if (!copy.box().disjoint(region)) hits.push_back(copy);
        }
        if (hits.size() != 1)
            throw input_error("box selects " + std::to_string(hits.size()) +
                              " roots of " + f.to_string() + " (need exactly one)");
        return ProjPoint::of(hits.front());
    }
    return ProjPoint::of(parse_number(text));
}

CurvePoint parse_start(const std::string& s) {
    // split at the top-level comma (commas inside box(...) don't count)
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) throw input_error("start point syntax: <x>,<y>");
    return CurvePoint{parse_coordinate(s.substr(0, split)), parse_coordinate(s.substr(split + 1)),
                      Evidence::Exact};
}

json skeleton(const std::string& input) {
    json j;
    j["input"] = input;
    j["hypotheses"] = nullptr;
    j["verdict"] = nullptr;
    j["evidence"] = json::array();
    j["omega"] = nullptr;
    j["orbits"] = json::array();
    j["certificate"] = nullptr;
    j["timing"] = nullptr;
    return j;
}

json orbit_json(const Correspondence& C, const OrbitBundle& b, const OmegaLocus* om,
                bool with_points) {
    json o;
    o["a_poly"] = b.aPoly.to_string("x");
    o["b_poly"] = b.bPoly.to_string("y");
    o["a_inf"] = b.aInf;
    o["b_inf"] = b.bInf;
    o["status"] = b.status == OrbitBundle::Status::Closed ? "closed" : "cap-exceeded";
    o["cap"] = b.cap;
    o["meets_infinity"] = !avoids_infinity(b);
    if (om) o["meets_omega"] = !avoids_omega(*om, b);
    if (b.status == OrbitBundle::Status::Closed && with_points) {
        MaterializedOrbit mat = materialize_points(C, b);
        o["size"] = mat.size;
        json pts = json::array();
        for (const auto& pt : mat.points) pts.push_back(pt.describe());
        o["points"] = pts;
    }
    return o;
}

struct Flags {
    std::string poly;
    bool as_json = false;
    bool assume_irreducible = false;
    int max_n = 8, max_degree = 4096;
    int deg_bound = 8, den_bound = 2;
    int cap = 64;
    long height = 6;
    std::size_t max_orbits = 16;
    std::string start;
};

int finish(const json& j, const std::string& text, bool as_json, int code) {
    if (as_json)
        std::cout << j.dump(2) << std::endl;
    else
        std::cout << text;
    return code;
}

int cmd_analyze(const Flags& fl) {
    BiPoly p = parse_bipoly(fl.poly);
    AnalysisOptions opt;
    opt.max_n = fl.max_n;
    opt.max_degree = fl.max_degree;
    opt.deg_bound = fl.deg_bound;
    opt.den_bound = fl.den_bound;
    opt.assume_irreducible = fl.assume_irreducible;
    AnalysisReport rep = run_analysis(p, opt);
    return finish(analysis_json(rep), analysis_text(rep), fl.as_json, rep.definitive() ? 0 : 2);
}

int cmd_period(const Flags& fl) {
    BiPoly p = parse_bipoly(fl.poly);
    Correspondence C = Correspondence::create(p, fl.assume_irreducible);
    PeriodReport rep = period(C, fl.max_n, fl.max_degree);
    json j = skeleton(print_canonical(p));
    j["hypotheses"] = hypotheses_json(C.report());
    j["verdict"] = rep.outcome == PeriodReport::Outcome::Finite ? "finite" : "inconclusive";
    j["evidence"].push_back({{"kind", "period"}, {"detail", rep.describe()}});
    json trace = json::array();
    for (auto [dx, dy] : rep.degree_trace) trace.push_back({dx, dy});
    j["evidence"].back()["degree_trace"] = trace;
    std::ostringstream os;
    os << "period iteration: " << rep.describe() << "\n";
    os << "degree trace:";
    for (auto [dx, dy] : rep.degree_trace) os << " (" << dx << "," << dy << ")";
    os << "\n";
    return finish(j, os.str(), fl.as_json, rep.outcome == PeriodReport::Outcome::Finite ? 0 : 2);
}

int cmd_finiteness(const Flags& fl) { return cmd_analyze(fl); }

int cmd_orbit(const Flags& fl) {
    BiPoly p = parse_bipoly(fl.poly);
    Correspondence C = Correspondence::create(p, fl.assume_irreducible);
    CurvePoint start = parse_start(fl.start);
    OrbitBundle b = orbit_closure(C, start, fl.cap);
    OmegaLocus om = omega(C);
    materialize_omega_points(C, om);
    json j = skeleton(print_canonical(p));
    j["hypotheses"] = hypotheses_json(C.report());
    j["verdict"] = b.status == OrbitBundle::Status::Closed ? "closed" : "cap-exceeded";
    j["omega"] = omega_json(om, "");
    j["orbits"].push_back(orbit_json(C, b, &om, true));
    std::ostringstream os;
    os << "start: " << start.describe() << "\n";
    os << "status: " << (b.status == OrbitBundle::Status::Closed ? "closed" : "cap-exceeded")
       << "\n";
    os << "a-poly: " << b.aPoly.to_string("x") << (b.aInf ? "  (+ inf)" : "") << "\n";
    os << "b-poly: " << b.bPoly.to_string("y") << (b.bInf ? "  (+ inf)" : "") << "\n";
    if (b.status == OrbitBundle::Status::Closed) {
        MaterializedOrbit mat = materialize_points(C, b);
        os << "orbit size: " << mat.size << "\n";
        for (const auto& pt : mat.points) os << "  " << pt.describe() << "\n";
        os << "meets omega: " << (avoids_omega(om, b) ? "no" : "yes") << "\n";
        os << "meets infinity: " << (avoids_infinity(b) ? "no" : "yes") << "\n";
    }
    return finish(j, os.str(), fl.as_json, 0);
}

int cmd_omega(const Flags& fl) {
    BiPoly p = parse_bipoly(fl.poly);
    Correspondence C = Correspondence::create(p, fl.assume_irreducible);
    OmegaLocus om = omega(C);
    materialize_omega_points(C, om);
    json j = skeleton(print_canonical(p));
    j["hypotheses"] = hypotheses_json(C.report());
    j["omega"] = omega_json(om, "");
    j["omega"]["size_bound"] = omega_size_bound(C).get_str();
    std::ostringstream os;
    os << "x-locus: " << om.xPoly.to_string("x") << "\n";
    os << "y-locus: " << om.yPoly.to_string("y") << "\n";
    os << "size bound: " << omega_size_bound(C).get_str() << "\n";
    os << "points (" << om.points.size() << "):\n";
    for (const auto& pt : om.points) os << "  " << pt.describe() << "\n";
    return finish(j, os.str(), fl.as_json, 0);
}

int cmd_certify(const Flags& fl) {
    BiPoly p = parse_bipoly(fl.poly);
    Correspondence C = Correspondence::create(p, fl.assume_irreducible);
    CertifyPipelineResult r = certify_pipeline(C, Int(fl.height), fl.max_orbits, fl.cap);
    json j = skeleton(print_canonical(p));
    j["hypotheses"] = hypotheses_json(C.report());
    for (const auto& line : r.orbit_log) j["orbits"].push_back(line);
    std::ostringstream os;
    for (const auto& line : r.orbit_log) os << line << "\n";
    if (r.certificate) {
        std::string blob = serialize_certificate(*r.certificate, p);
        // round-trip re-verification from the serialized form alone
        auto [parsed, pp] = parse_certificate(blob);
        if (!verify_certificate(parsed, pp))
            throw inconsistency_error("serialized certificate failed re-verification");
        j["verdict"] = "finite";
        j["certificate"] = blob;
        j["evidence"].push_back(
            {{"kind", "theta-certificate"}, {"detail", r.certificate->describe()}});
        os << "certificate (verified exactly):\n" << r.certificate->describe() << "\n" << blob;
        return finish(j, os.str(), fl.as_json, 0);
    }
    j["verdict"] = "insufficient";
    j["evidence"].push_back({{"kind", "insufficient"}, {"detail", r.reason}});
    os << "insufficient: " << r.reason << "\n";
    return finish(j, os.str(), fl.as_json, 2);
}

int cmd_search_orbits(const Flags& fl) {
    BiPoly p = parse_bipoly(fl.poly);
    Correspondence C = Correspondence::create(p, fl.assume_irreducible);
    OmegaLocus om = omega(C);
    json j = skeleton(print_canonical(p));
    j["hypotheses"] = hypotheses_json(C.report());
    j["omega"] = omega_json(om, "");
    std::ostringstream os;
    std::size_t max_size = 0;
    bool any_closed = false;
    for (long h = 0; h <= fl.height; ++h) {
        for (long num = -h; num <= h; ++num) {
            for (long den = 1; den <= std::max(h, 1L); ++den) {
                Rat q = rat(num, den);
                if (height(q) != h) continue;
                UniPoly fib = C.fiber_poly_first(q);
                if (fib.is_zero() || fib.degree() < 1) continue;
                OrbitBundle b;
                try {
                    b = orbit_closure_from_seed(C, q, fl.cap);
                } catch (const unsupported_error&) {
                    continue;
                }
                json o = orbit_json(C, b, &om, b.status == OrbitBundle::Status::Closed);
                o["seed"] = rat_to_string(q);
                if (b.status == OrbitBundle::Status::Closed) {
                    any_closed = true;
                    std::size_t sz = o["size"].get<std::size_t>();
                    max_size = std::max(max_size, sz);
                    os << "seed " << rat_to_string(q) << ": closed, size " << sz << "\n";
                } else {
                    os << "seed " << rat_to_string(q) << ": cap exceeded\n";
                }
                j["orbits"].push_back(std::move(o));
            }
        }
    }
    j["evidence"].push_back({{"kind", "empirical-max-finite-orbit"},
                             {"detail", any_closed ? std::to_string(max_size) : "none observed"}});
    os << "largest finite orbit observed: "
       << (any_closed ? std::to_string(max_size) : std::string("none")) << "\n";
    return finish(j, os.str(), fl.as_json, 0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"corrsolve: exact analysis of algebraic correspondences on P1 x P1"};
    app.require_subcommand(1);
    Flags fl;
    set_display_precision(env_precision());

    auto add_common = [&](CLI::App* sub, bool needs_start = false) {
        sub->add_option("-p,--poly", fl.poly, "polynomial p(x, y)")->required();
        sub->add_flag("--json", fl.as_json, "machine-readable output");
        sub->add_flag("--assume-irreducible", fl.assume_irreducible,
                      "skip the absolute irreducibility check");
        sub->add_option("--max-n", fl.max_n, "period iteration cap");
        sub->add_option("--max-degree", fl.max_degree, "relation degree cap");
        sub->add_option("--deg-bound", fl.deg_bound, "separated witness degree bound");
        sub->add_option("--den-bound", fl.den_bound, "separated witness denominator bound");
        sub->add_option("--cap", fl.cap, "orbit projection degree cap");
        sub->add_option("--height", fl.height, "seed height bound");
        sub->add_option("--max-orbits", fl.max_orbits, "orbit count cap for certification");
        if (needs_start)
            sub->add_option("--start", fl.start, "start point \"a,b\" (inf or root:<poly>:box(..) coordinates)")
                ->required();
    };

    auto* analyze = app.add_subcommand("analyze", "hypotheses + finiteness battery + omega");
    add_common(analyze);
    auto* per = app.add_subcommand("period", "relation iteration only");
    add_common(per);
    auto* fin = app.add_subcommand("finiteness", "finiteness battery (alias of analyze)");
    add_common(fin);
    auto* orb = app.add_subcommand("orbit", "orbit closure from a start point");
    add_common(orb, true);
    auto* omg = app.add_subcommand("omega", "exceptional locus");
    add_common(omg);
    auto* cert = app.add_subcommand("certify", "theta-divisor certificate search");
    add_common(cert);
    auto* search = app.add_subcommand("search-orbits", "orbit survey over rational seeds");
    add_common(search);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(fl);
        if (per->parsed()) return cmd_period(fl);
        if (fin->parsed()) return cmd_finiteness(fl);
        if (orb->parsed()) return cmd_orbit(fl);
        if (omg->parsed()) return cmd_omega(fl);
        if (cert->parsed()) return cmd_certify(fl);
        if (search->parsed()) return cmd_search_orbits(fl);
    } catch (const inconsistency_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << std::endl;
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 3;
    }
    return 0;
}
