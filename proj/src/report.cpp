#include "corrsolve/report.hpp"

#include <chrono>
#include <sstream>

#include "corrsolve/parser.hpp"

namespace corrsolve {

AnalysisReport run_analysis(const BiPoly& p, const AnalysisOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    AnalysisReport rep;
    rep.input = print_canonical(p);
    Correspondence C = Correspondence::create(p, opt.assume_irreducible);
    rep.hypotheses = C.report();

    EvidenceGuard guard;

    rep.period_outcome = period(C, opt.max_n, opt.max_degree);
    if (rep.period_outcome->outcome == PeriodReport::Outcome::Finite) {
        guard.record_finite(rep.period_outcome->describe());
        rep.evidence.emplace_back("period", rep.period_outcome->describe());
    }
    rep.witness = separated_search(C, opt.deg_bound, opt.den_bound);
    if (rep.witness) {
        guard.record_finite("separated witness " + rep.witness->describe());
        rep.evidence.emplace_back("separated-witness", rep.witness->describe());
    }
    try {
        rep.cyclotomic_witness = cyclotomic_ratio_test(C);
        if (rep.cyclotomic_witness) {
            guard.record_infinite("non-cyclotomic root quotient " +
                                  rep.cyclotomic_witness->to_string("T"));
            rep.evidence.emplace_back("cyclotomic-ratio",
                                      "quotient minimal polynomial " +
                                          rep.cyclotomic_witness->to_string("T") +
                                          " is not cyclotomic");
        }
    } catch (const input_error&) {
        // the ratio test only applies to homogeneous squarefree p
    }

    if (guard.has_finite())
        rep.verdict = "finite";
    else if (guard.has_infinite())
        rep.verdict = "infinite";
    else
        rep.verdict = "inconclusive";

    try {
        rep.omega_locus = omega(C);
        materialize_omega_points(C, *rep.omega_locus);
    } catch (const error& e) {
        rep.omega_locus.reset();
        rep.omega_error = e.what();
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::json hypotheses_json(const HypothesisReport& h) {
    nlohmann::json j;
    j["squarefree"] = h.squarefree;
    j["assumed_irreducible"] = h.assumed_irreducible;
    if (h.absolute_factors >= 0)
        j["absolute_factors"] = h.absolute_factors;
    else
        j["absolute_factors"] = nullptr;
    j["absolutely_irreducible"] = h.absolutely_irreducible;
    j["smooth"] = h.smooth;
    nlohmann::json sing = nlohmann::json::array();
    for (const auto& pt : h.singular_points) sing.push_back(pt.describe());
    j["singular_points"] = sing;
    j["warnings"] = h.warnings;
    return j;
}

nlohmann::json omega_json(const std::optional<OmegaLocus>& om, const std::string& err) {
    if (!om) {
        nlohmann::json j;
        j["error"] = err;
        return j;
    }
    nlohmann::json j;
    j["x_poly"] = om->xPoly.to_string("x");
    j["y_poly"] = om->yPoly.to_string("y");
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& pt : om->points) pts.push_back(pt.describe());
    j["points"] = pts;
    j["points_complete"] = om->points_complete;
    j["notes"] = om->notes;
    return j;
}

nlohmann::json analysis_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["input"] = r.input;
    j["hypotheses"] = hypotheses_json(r.hypotheses);
    j["verdict"] = r.verdict;
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& [kind, detail] : r.evidence) ev.push_back({{"kind", kind}, {"detail", detail}});
    if (r.period_outcome && r.period_outcome->outcome != PeriodReport::Outcome::Finite)
        ev.push_back({{"kind", "period"}, {"detail", r.period_outcome->describe()}});
    if (!r.witness)
        ev.push_back({{"kind", "separated-witness"}, {"detail", "not found within the bounds"}});
    j["evidence"] = ev;
    j["omega"] = omega_json(r.omega_locus, r.omega_error);
    j["orbits"] = nlohmann::json::array();
    j["certificate"] = nullptr;
    j["timing"] = {{"seconds", r.seconds}};
    return j;
}

std::string analysis_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input: " << r.input << "\n";
    os << "hypotheses: squarefree=" << (r.hypotheses.squarefree ? "yes" : "no");
    if (r.hypotheses.absolute_factors >= 0)
        os << ", absolute factors=" << r.hypotheses.absolute_factors;
    else
        os << ", irreducibility asserted";
    os << ", smooth=" << (r.hypotheses.smooth ? "yes" : "no") << "\n";
    for (const auto& w : r.hypotheses.warnings) os << "  warning: " << w << "\n";
    os << "verdict: " << r.verdict << "\n";
    for (const auto& [kind, detail] : r.evidence) os << "  evidence (" << kind << "): " << detail << "\n";
    if (r.period_outcome && r.period_outcome->outcome != PeriodReport::Outcome::Finite)
        os << "  period iteration: " << r.period_outcome->describe() << "\n";
    if (!r.witness) os << "  separated witness: not found within the bounds\n";
    if (r.omega_locus) {
        os << "omega: x-locus " << r.omega_locus->xPoly.to_string("x") << ", y-locus "
           << r.omega_locus->yPoly.to_string("y") << ", " << r.omega_locus->points.size()
           << " point(s)\n";
        for (const auto& pt : r.omega_locus->points) os << "  " << pt.describe() << "\n";
    } else if (!r.omega_error.empty()) {
        os << "omega: " << r.omega_error << "\n";
    }
    os << "time: " << r.seconds << " s\n";
    return os.str();
}

} // namespace corrsolve
