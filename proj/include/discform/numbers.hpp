#pragma once

#include "discform/rational.hpp"

#include <map>
#include <vector>

namespace discform {

// Jacobi symbol (n / modulus); modulus must be positive and odd.
// Completely multiplicative in n, zero iff gcd(n, modulus) > 1.
int jacobi_symbol(const Integer& n, const Integer& modulus);

bool is_prime(const Integer& n);

// prime factorization of |n|, n != 0
std::map<Integer, int> factorize(const Integer& n);

// largest squarefree divisor class: n = s * t^2 with s squarefree; sign of n kept
Integer squarefree_part(const Integer& n);

bool is_squarefree(const Integer& n);

std::vector<Integer> prime_divisors(const Integer& n);

// Hilbert symbol (a, b)_p over Q_p for p prime, or over R for p = 0.
// a, b nonzero rationals given as nonzero integers (any representative of the square class).
int hilbert_symbol(Integer a, Integer b, const Integer& p);

}  // namespace discform
