#ifndef CORRSOLVE_THETA_HPP
#define CORRSOLVE_THETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "corrsolve/omega.hpp"
#include "corrsolve/orbit.hpp"
#include "corrsolve/puiseux.hpp"

namespace corrsolve {

// The rational function prod_(lambda in A) (x - lambda) / prod_(mu in B)
// (y - mu) attached to a closed orbit bundle that avoids Omega and the
// points at infinity. Galois stability of the bundle keeps both products
// rational.
struct Theta {
    UniPoly numerator;   // monic, in x
    UniPoly denominator; // monic, in y
    OrbitBundle source;
    std::optional<Rat> seed; // x-seed that generated the orbit, when known

    std::string describe() const;
    bool operator==(const Theta& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
};

// Rejects bundles that are not closed, meet infinity, or meet Omega.
Theta theta_of_orbit(const Correspondence& C, const OmegaLocus& om, const OrbitBundle& bundle);

struct Lemma1Report {
    bool passed = true;
    std::size_t points_checked = 0;
    std::optional<CurvePoint> counterexample; // a point with p_X = 0 or p_Y = 0
};

// Verifies that p_X and p_Y are nonzero at every point of (A x B) cap C,
// which forces v_P(Theta) = 0 at every finite point.
Lemma1Report check_lemma1(const Correspondence& C, const Theta& t);

// v_place(Theta) from the stored branch orders.
int valuation(const PlaceAtInfinity& place, const Theta& t);

struct DivisorMatrix {
    std::vector<std::vector<int>> rows; // rows[i][j] = v_(place j)(Theta_i)
};

DivisorMatrix divisor_matrix(const std::vector<Theta>& thetas,
                             const std::vector<PlaceAtInfinity>& places);

// Exactly verified relation f0x(X)f0y(Y) - c*g0x(X)g0y(Y) = cofactor * p
// with f0x/g0x nonconstant; witnesses k(x) cap k(y) != k.
struct Certificate {
    UniPoly f0x, f0y; // f0y, g0y live in y
    UniPoly g0x, g0y;
    Rat c;
    BiPoly cofactor;
    std::vector<long> exponents;
    std::vector<Rat> seeds;

    std::string describe() const;
};

struct CertifyOutcome {
    std::optional<Certificate> certificate;
    std::string reason; // set when no certificate was produced
    DivisorMatrix matrix;
};

// Builds the divisor matrix of the thetas over the places, extracts a
// primitive integer kernel vector and assembles the certificate; exact
// verification failures raise inconsistency_error.
CertifyOutcome certify_finite(const Correspondence& C, const std::vector<Theta>& thetas,
                              const std::vector<PlaceAtInfinity>& places);

// (#points at infinity) + omega size bound + (#places at infinity).
Int finite_orbit_count_bound(const Correspondence& C);

// Seed enumeration -> closed avoiding orbits -> thetas -> kernel search.
struct CertifyPipelineResult {
    std::optional<Certificate> certificate;
    std::string reason;
    std::vector<std::string> orbit_log;
    std::size_t orbits_used = 0;
};

CertifyPipelineResult certify_pipeline(const Correspondence& C, const Int& seed_height,
                                       std::size_t max_orbits, int degree_cap);

// Text serialization; a serialized certificate re-verifies on its own.
std::string serialize_certificate(const Certificate& cert, const BiPoly& p);
std::pair<Certificate, BiPoly> parse_certificate(const std::string& text);
bool verify_certificate(const Certificate& cert, const BiPoly& p);

} // namespace corrsolve

#endif
