#include "discform/rational.hpp"

#include <stdexcept>

namespace discform {

Rational mod1(const Rational& x) {
    Integer num = x.get_num();
    Integer den = x.get_den();
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational out(r, den);
    out.canonicalize();
    return out;
}

bool is_integer(const Rational& x) {
    return x.get_den() == 1;
}

Integer floor_int(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Integer ceil_int(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rational pow_rational(const Integer& base, long exponent) {
    if (base == 0 && exponent < 0)
        throw std::domain_error("pow_rational: zero base with negative exponent");
    Integer p;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    Rational out;
    if (exponent < 0) {
        out = Rational(1, p);
    } else {
        out = Rational(p);
    }
    out.canonicalize();
    return out;
}

Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");
    // replace unicode minus if present
    std::string t;
    for (size_t i = 0; i < s.size();) {
        if (s.compare(i, 3, "−") == 0) {
            t += '-';
            i += 3;
        } else {
            t += s[i++];
        }
    }
    Rational out;
    if (mpq_set_str(out.get_mpq_t(), t.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    if (out.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    out.canonicalize();
    return out;
}

std::string rational_str(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer lcm_int(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace discform
