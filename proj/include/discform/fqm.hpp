#pragma once

#include "discform/cyclo.hpp"
#include "discform/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace discform {

// element of a finite quadratic module, coordinates w.r.t. the generator
// tuple, reduced into [0, order_i)
struct FqmElement {
    std::vector<long> coords;

    bool operator==(const FqmElement&) const = default;
    bool operator<(const FqmElement& o) const { return coords < o.coords; }
};

struct FqmAutomorphism {
    std::vector<FqmElement> gen_images;
    std::vector<size_t> perm;  // action on the canonical element enumeration
};

// building block of the classification of anisotropic modules:
//   A: (Z/p^k, t x^2 / p^k) for odd p, (Z/2^k, t x^2 / 2^{k+1}) for p = 2
//   B, C: the rank-2 blocks at p = 2
struct JordanComponent {
    long prime = 0;
    int exponent = 1;
    enum class Tag { A, B, C } tag = Tag::A;
    long t = 1;
};

// Finite quadratic module (A, Q) given by generators with orders d_i,
// Q(g_i) mod 1 and bilinear values (g_i, g_j) mod 1.
class Fqm {
public:
    Fqm() = default;  // trivial module
    Fqm(std::vector<long> orders, std::vector<std::vector<Rational>> gram_mod1,
        std::vector<Rational> q_mod1);

    static Fqm trivial() { return Fqm(); }
    // cyclic module (Z/n, Q) with Q(generator) = q
    static Fqm cyclic(long n, const Rational& q);
    static Fqm direct_sum(const Fqm& a, const Fqm& b);

    size_t gen_count() const { return orders_.size(); }
    const std::vector<long>& orders() const { return orders_; }
    const std::vector<Rational>& q_table() const { return q_; }
    const std::vector<std::vector<Rational>>& gram_table() const { return gram_; }
    Integer order() const;
    std::vector<long> elementary_divisors() const;
    long level() const;

    Rational q_value(const FqmElement& e) const;  // in [0, 1)
    Rational bilinear(const FqmElement& e, const FqmElement& f) const;
    long element_order(const FqmElement& e) const;

    FqmElement zero() const { return FqmElement{std::vector<long>(orders_.size(), 0)}; }
    FqmElement reduce(std::vector<long> coords) const;
    FqmElement add(const FqmElement& a, const FqmElement& b) const;
    FqmElement neg(const FqmElement& a) const;
    FqmElement scale(long c, const FqmElement& a) const;

    // canonical enumeration: lexicographic in coordinates, last coordinate fastest
    std::vector<FqmElement> elements() const;
    size_t element_index(const FqmElement& e) const;
    FqmElement element_at(size_t idx) const;

    Fqm dual() const;  // (A, -Q)

    // provenance from a lattice: generator representatives in L' (basis coords)
    bool has_lifts() const { return ambient_dim_ >= 0; }
    size_t ambient_dim() const;
    std::vector<Rational> lift(const FqmElement& e) const;
    void set_lifts(size_t ambient_dim, std::vector<std::vector<Rational>> lifts);

private:
    std::vector<long> orders_;
    std::vector<std::vector<Rational>> gram_;
    std::vector<Rational> q_;
    long ambient_dim_ = -1;
    std::vector<std::vector<Rational>> lifts_;

    void validate_() const;
};

// Q(mu) = 0 only for mu = 0; exhaustive scan, |A| <= 10^6
bool is_anisotropic(const Fqm& a);

// orthogonal decomposition A = sum of p-groups, keyed by p
std::map<long, Fqm> p_primary_decomposition(const Fqm& a);

// match an anisotropic p-group (odd p) against A_p^t or A_p^t + A_p^1,
// exhibiting an explicit isomorphism; t reported in {1, smallest non-residue}
std::vector<JordanComponent> classify_anisotropic(const Fqm& a_p);

// g_d(A) = sum over mu of e(d Q(mu))
CycloNum gauss_sum(const Fqm& a, const Integer& d);

// the unique s mod 8 with g(A) = sqrt(|A|) e(s/8); exact square cross-check
int milgram_signature(const Fqm& a);

// all group automorphisms preserving Q, brute force over generator images
std::vector<FqmAutomorphism> orthogonal_group(const Fqm& a, size_t size_bound = 10000);

// A_{c,x} = { mu : ord(mu) = c and Q(mu) = x mod 1 }
std::set<FqmElement> index_set(const Fqm& a, long c, const Rational& x);

// brute-force isomorphism test of quadratic modules
bool fqm_isomorphic(const Fqm& a, const Fqm& b, size_t size_bound = 10000);

}  // namespace discform
