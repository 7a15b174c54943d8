#include "corrsolve/rational.hpp"

#include <cctype>

namespace corrsolve {

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

std::optional<Rat> rat_from_string(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = (s[0] == '-');
        i = 1;
    }
    std::string numpart, denpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) numpart += s[i++];
    if (numpart.empty()) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) denpart += s[i++];
        if (denpart.empty() || i != s.size()) return std::nullopt;
    }
    Int n(numpart);
    Int d = denpart.empty() ? Int(1) : Int(denpart);
    if (d == 0) return std::nullopt;
    if (neg) n = -n;
    return rat(n, d);
}

std::string rat_to_decimal(const Rat& q, int digits) {
    Int scale = pow_int(Int(10), static_cast<unsigned long>(digits));
    Rat scaled = q * Rat(scale);
    // round half away from zero
    Int twice_num = 2 * scaled.get_num();
    Int r;
    if (sgn(scaled) >= 0)
        mpz_fdiv_q(r.get_mpz_t(), Int(twice_num + scaled.get_den()).get_mpz_t(),
                   Int(2 * scaled.get_den()).get_mpz_t());
    else
        mpz_cdiv_q(r.get_mpz_t(), Int(twice_num - scaled.get_den()).get_mpz_t(),
                   Int(2 * scaled.get_den()).get_mpz_t());
    bool neg = r < 0;
    Int a = ::abs(r);
    Int ip = a / scale, fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

} // namespace corrsolve
