#ifndef CORRSOLVE_RATIONAL_HPP
#define CORRSOLVE_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>
#include <string_view>

namespace corrsolve {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0
// after canonicalization; every constructor here canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}
inline Rat rat(const Int& n, const Int& d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

inline int sgn(const Rat& q) { return ::sgn(q); }
inline Rat abs_rat(const Rat& q) { return ::abs(q); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Height of a/b in lowest terms: max(|a|, b).
inline Int height(const Rat& q) {
    Int a = ::abs(q.get_num());
    return a > q.get_den() ? a : q.get_den();
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Largest integer n with n <= q.
inline Int floor_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_int(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Round toward -inf / +inf onto the grid of multiples of 2^-bits.
// Used to keep interval endpoints from accumulating huge denominators.
inline Rat round_down_dyadic(const Rat& q, unsigned bits) {
    Int scale = Int(1) << bits;
    Rat s = q * Rat(scale);
    return Rat(floor_int(s), scale);
}
inline Rat round_up_dyadic(const Rat& q, unsigned bits) {
    Int scale = Int(1) << bits;
    Rat s = q * Rat(scale);
    return Rat(ceil_int(s), scale);
}

std::string rat_to_string(const Rat& q);
// Accepts "a" or "a/b" with optional leading '-'; nullopt on malformed input.
std::optional<Rat> rat_from_string(std::string_view s);

// Decimal rendering with the given number of fractional digits (round to nearest).
std::string rat_to_decimal(const Rat& q, int digits);

} // namespace corrsolve

#endif
