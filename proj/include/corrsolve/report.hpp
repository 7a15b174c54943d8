#ifndef CORRSOLVE_REPORT_HPP
#define CORRSOLVE_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "corrsolve/errors.hpp"
#include "corrsolve/finiteness.hpp"
#include "corrsolve/omega.hpp"
#include "corrsolve/theta.hpp"

namespace corrsolve {

struct AnalysisOptions {
    int max_n = 8;
    int max_degree = 4096;
    int deg_bound = 8;
    int den_bound = 2;
    bool assume_irreducible = false;
};

// Everything cmd_analyze reports: hypothesis checks, the finiteness
// battery (period iteration, separated witness search, cyclotomic ratio
// test) and the exceptional locus. Contradictory evidence never reaches a
// report; the EvidenceGuard throws first.
struct AnalysisReport {
    std::string input;
    HypothesisReport hypotheses;
    std::string verdict; // "finite" | "infinite" | "inconclusive"
    std::vector<std::pair<std::string, std::string>> evidence; // (kind, detail)
    std::optional<PeriodReport> period_outcome;
    std::optional<SeparatedWitness> witness;
    std::optional<UniPoly> cyclotomic_witness;
    std::optional<OmegaLocus> omega_locus;
    std::string omega_error;
    double seconds = 0.0;

    bool definitive() const { return verdict != "inconclusive"; }
};

AnalysisReport run_analysis(const BiPoly& p, const AnalysisOptions& opt);

nlohmann::json hypotheses_json(const HypothesisReport& h);
nlohmann::json omega_json(const std::optional<OmegaLocus>& om, const std::string& err);
nlohmann::json analysis_json(const AnalysisReport& r);
std::string analysis_text(const AnalysisReport& r);

} // namespace corrsolve

#endif
