#pragma once

#include "discform/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace discform {

unsigned long euler_phi(unsigned long n);

// n-th cyclotomic polynomial, dense integer coefficients c[0..phi(n)], monic
const std::vector<Integer>& cyclotomic_polynomial(unsigned long n);

// Element of Q(zeta_n), zeta_n = e^{2 pi i / n}.  Stored canonically: the
// coefficient polynomial is reduced modulo the n-th cyclotomic polynomial, so
// all exponents are < phi(n) and equality is a coefficient comparison after
// lifting both operands to the lcm of their conductors.
class CycloNum {
public:
    CycloNum() : n_(1) {}
    explicit CycloNum(const Rational& r);
    explicit CycloNum(long r) : CycloNum(Rational(r)) {}

    // e(x) = e^{2 pi i x}; conductor is the denominator of x mod 1
    static CycloNum root_of_unity(const Rational& x);
    static CycloNum zero() { return CycloNum(); }
    static CycloNum one() { return CycloNum(Rational(1)); }
    // built from exponent/coefficient pairs at a given conductor
    static CycloNum from_terms(unsigned long n, std::vector<std::pair<unsigned long, Rational>> terms);

    unsigned long conductor() const { return n_; }
    const std::vector<std::pair<unsigned long, Rational>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    CycloNum conj() const;
    CycloNum inverse() const;  // throws std::domain_error on zero
    CycloNum pow(long e) const;

    // image in Q(zeta_m) for n | m
    CycloNum lifted(unsigned long m) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const Rational& r);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
    friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }

    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    std::string str() const;

private:
    unsigned long n_;  // conductor
    std::vector<std::pair<unsigned long, Rational>> terms_;  // sorted by exponent, zeros dropped

    // reduce a dense length-n_ coefficient vector modulo Phi_{n_} and store
    void set_reduced_(std::vector<Rational>& dense);
};

}  // namespace discform
