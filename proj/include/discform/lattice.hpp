#pragma once

#include "discform/fqm.hpp"
#include "discform/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace discform {

class degenerate_lattice_error : public std::runtime_error {
public:
    explicit degenerate_lattice_error(const std::string& what) : std::runtime_error(what) {}
};

// even symmetric integer Gram matrix; rank 0 is allowed (empty lattice)
struct GramMatrix {
    std::vector<std::vector<Integer>> entries;

    size_t rank() const { return entries.size(); }
    void validate() const;  // symmetry, even diagonal, det != 0

    Rational bilinear_q(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    Rational quadratic(const std::vector<Rational>& x) const;  // Q(x) = (x,x)/2
    Integer bilinear_z(const std::vector<Integer>& x, const std::vector<Integer>& y) const;
    Integer quadratic_z(const std::vector<Integer>& x) const;

    static GramMatrix diagonal(const std::vector<Integer>& d);
    static GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);
    static GramMatrix hyperbolic_plane();            // [[0,1],[1,0]]
    static GramMatrix hyperbolic_scaled(long k);     // [[0,k],[k,0]]
    static GramMatrix a2();                          // [[2,-1],[-1,2]]
    static GramMatrix e8();                          // even unimodular definite rank 8
};

struct LatticeProfile {
    long rank = 0;
    long pos = 0, neg = 0;  // signature pair (p, q)
    Integer det = 1;
    Integer disc_order = 1;  // |det|
    Integer level = 1;
    long witt = 0;

    long sig() const { return pos - neg; }
};

// exact congruence diagonalization; returns diagonal entries (all nonzero) or
// throws degenerate_lattice_error
std::vector<Rational> diagonalize_symmetric(const GramMatrix& g);

LatticeProfile lattice_profile(const GramMatrix& g);

// A = L'/L with induced Q mod 1, generators carried as vectors in L'
Fqm discriminant_group(const GramMatrix& g);

// Witt index of L tensor Q, from the complete invariants of the rational
// quadratic form (signature, determinant class, Hasse symbols)
long witt_index(const GramMatrix& g);

struct HyperbolicSplit {
    std::vector<Integer> z, z_prime;  // isotropic pair, (z, z') = 1
    GramMatrix k;                     // Gram of L cap z-perp cap z'-perp
};

// bounded search for a hyperbolic-plane summand; nullopt = not found within
// bound (inconclusive)
std::optional<HyperbolicSplit> find_hyperbolic_split(const GramMatrix& g, long search_bound);

// all lambda in coset + Z^m with Q(lambda) = norm; complete when g is
// positive definite (bound ignored), box-bounded coefficients otherwise
std::vector<std::vector<Rational>> coset_vectors(const GramMatrix& g,
                                                 const std::vector<Rational>& coset,
                                                 const Rational& norm, long bound = 0);

// integer matrix utilities used across modules
Integer det_integer(const std::vector<std::vector<Integer>>& m);
std::vector<std::vector<Rational>> invert_rational(const std::vector<std::vector<Integer>>& m);

// Smith normal form d_1 | d_2 | ... with the right transform: u m v = diag(d),
// returns (diagonal, v)
std::pair<std::vector<Integer>, std::vector<std::vector<Integer>>> smith_normal_form(
    std::vector<std::vector<Integer>> m);

}  // namespace discform
