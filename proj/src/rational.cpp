#include "nonavg/rational.hpp"

#include <cctype>

#include "nonavg/errors.hpp"

namespace nonavg {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt p(s.substr(0, slash));
            BigInt q(s.substr(slash + 1));
            if (q == 0) throw InvalidInput("zero denominator in '" + s + "'");
            Rat r(p, q);
            r.canonicalize();
            return r;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            Rat r(BigInt(s));
            return r;
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") throw InvalidInput("bad rational literal '" + s + "'");
        BigInt p(digits);
        BigInt q = 1;
        for (std::size_t i = 0; i < frac_len; ++i) q *= 10;
        Rat r(p, q);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("bad rational literal '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt rat_floor(const Rat& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

BigInt rat_ceil(const Rat& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rat rat_pow(const Rat& r, unsigned long e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), e);
    Rat out(num, den);
    out.canonicalize();
    return out;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Int bigint_to_int(const BigInt& v) {
    if (!v.fits_slong_p()) throw OverflowError("bignum does not fit int64");
    long x = v.get_si();
    return static_cast<Int>(x);
}

}  // namespace nonavg
