#include "discform/numbers.hpp"

#include <stdexcept>

namespace discform {

int jacobi_symbol(const Integer& n, const Integer& modulus) {
    if (modulus <= 0 || mpz_even_p(modulus.get_mpz_t()))
        throw std::domain_error("jacobi_symbol: modulus must be positive and odd");
    return mpz_jacobi(n.get_mpz_t(), modulus.get_mpz_t());
}

bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Integer pollard_rho(const Integer& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor
    Integer c = 1;
    while (true) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](const Integer& v) {
            Integer r = (v * v + c) % n;
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        c += 1;
    }
}

void factor_rec(Integer n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer f = pollard_rho(n);
    factor_rec(f, out);
    factor_rec(n / f, out);
}

}  // namespace

std::map<Integer, int> factorize(const Integer& n) {
    if (n == 0) throw std::domain_error("factorize: zero");
    Integer m = n < 0 ? Integer(-n) : n;
    std::map<Integer, int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    long d = 41;
    while (m > 1 && Integer(d) * d <= m && d < 100000) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            out[Integer(d)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
        d += 2;
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw std::domain_error("squarefree_part: zero");
    auto f = factorize(n);
    Integer s = n < 0 ? -1 : 1;
    for (auto& [p, e] : f)
        if (e % 2) s *= p;
    return s;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    auto f = factorize(n);
    for (auto& [p, e] : f)
        if (e > 1) return false;
    return true;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

namespace {

// (u^2 - 1)/8 mod 2 for odd u
int omega2(const Integer& u) {
    Integer r = ((u * u - 1) / 8) % 2;
    return static_cast<int>(r < 0 ? r + 2 : r) & 1;
}

// (u - 1)/2 mod 2 for odd u
int eps2(const Integer& u) {
    Integer r = ((u - 1) / 2) % 2;
    return static_cast<int>(r < 0 ? r + 2 : r) & 1;
}

}  // namespace

int hilbert_symbol(Integer a, Integer b, const Integer& p) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: zero argument");
    if (p == 0) {
        // real place
        return (a < 0 && b < 0) ? -1 : 1;
    }
    if (!is_prime(p)) throw std::domain_error("hilbert_symbol: p must be prime or 0");
    long alpha = 0, beta = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) { a /= p; ++alpha; }
    while (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) { b /= p; ++beta; }
    if (p == 2) {
        int e = (eps2(a) * eps2(b) + alpha * omega2(b) + beta * omega2(a)) & 1;
        return e ? -1 : 1;
    }
    // odd p: (-1)^{alpha beta (p-1)/2} (a|p)^beta (b|p)^alpha
    int sign = 1;
    Integer pm = (p - 1) / 2;
    if ((alpha & 1) && (beta & 1) && mpz_odd_p(pm.get_mpz_t())) sign = -sign;
    if (beta & 1) sign *= jacobi_symbol(a, p);
    if (alpha & 1) sign *= jacobi_symbol(b, p);
    return sign;
}

}  // namespace discform
