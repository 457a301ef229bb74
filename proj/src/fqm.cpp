#include "discform/fqm.hpp"

#include "discform/interval.hpp"
#include "discform/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace discform {

namespace {
constexpr unsigned long kScanBound = 1000000;

Integer product_of(const std::vector<long>& v) {
    Integer n = 1;
    for (long d : v) n *= d;
    return n;
}
}  // namespace

Fqm::Fqm(std::vector<long> orders, std::vector<std::vector<Rational>> gram_mod1,
         std::vector<Rational> q_mod1)
    : orders_(std::move(orders)), gram_(std::move(gram_mod1)), q_(std::move(q_mod1)) {
    for (auto& row : gram_)
        for (auto& v : row) v = mod1(v);
    for (auto& v : q_) v = mod1(v);
    validate_();
}

void Fqm::validate_() const {
    const size_t k = orders_.size();
    if (q_.size() != k || gram_.size() != k)
        throw std::invalid_argument("Fqm: inconsistent table sizes");
    for (auto& row : gram_)
        if (row.size() != k) throw std::invalid_argument("Fqm: gram table not square");
    for (size_t i = 0; i < k; ++i) {
        if (orders_[i] < 2) throw std::invalid_argument("Fqm: generator orders must be >= 2");
        for (size_t j = 0; j < k; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("Fqm: gram table not symmetric");
        if (mod1(gram_[i][i] - 2 * q_[i]) != 0)
            throw std::invalid_argument("Fqm: diagonal must equal 2 Q(g_i) mod 1");
        if (mod1(Rational(orders_[i]) * Rational(orders_[i]) * q_[i]) != 0)
            throw std::invalid_argument("Fqm: Q not well defined on Z/d_i");
        for (size_t j = 0; j < k; ++j)
            if (mod1(Rational(orders_[i]) * gram_[i][j]) != 0)
                throw std::invalid_argument("Fqm: bilinear form not well defined");
    }
    // non-degeneracy: (mu, g_j) = 0 mod 1 for all j forces mu = 0
    if (order() <= 200000) {
        for (const auto& e : elements()) {
            bool is_zero = std::all_of(e.coords.begin(), e.coords.end(),
                                       [](long c) { return c == 0; });
            if (is_zero) continue;
            bool all_pair_zero = true;
            for (size_t j = 0; j < k && all_pair_zero; ++j) {
                Rational b(0);
                for (size_t i = 0; i < k; ++i) b += Rational(e.coords[i]) * gram_[i][j];
                if (mod1(b) != 0) all_pair_zero = false;
            }
            if (all_pair_zero)
                throw std::invalid_argument("Fqm: bilinear form is degenerate");
        }
    }
}

Fqm Fqm::cyclic(long n, const Rational& q) {
    if (n == 1) return Fqm();
    std::vector<std::vector<Rational>> gram{{mod1(2 * q)}};
    return Fqm({n}, std::move(gram), {mod1(q)});
}

Fqm Fqm::direct_sum(const Fqm& a, const Fqm& b) {
    std::vector<long> orders = a.orders_;
    orders.insert(orders.end(), b.orders_.begin(), b.orders_.end());
    std::vector<Rational> q = a.q_;
    q.insert(q.end(), b.q_.begin(), b.q_.end());
    const size_t ka = a.gen_count(), kb = b.gen_count();
    std::vector<std::vector<Rational>> gram(ka + kb, std::vector<Rational>(ka + kb, Rational(0)));
    for (size_t i = 0; i < ka; ++i)
        for (size_t j = 0; j < ka; ++j) gram[i][j] = a.gram_[i][j];
    for (size_t i = 0; i < kb; ++i)
        for (size_t j = 0; j < kb; ++j) gram[ka + i][ka + j] = b.gram_[i][j];
    return Fqm(std::move(orders), std::move(gram), std::move(q));
}

Integer Fqm::order() const { return product_of(orders_); }

std::vector<long> Fqm::elementary_divisors() const {
    // redistribute prime powers: sort exponents per prime descending, the
    // j-th divisor (descending) collects the j-th largest power of each prime
    std::map<long, std::vector<int>> exps;
    for (long d : orders_) {
        auto f = factorize(Integer(d));
        for (auto& [p, e] : f) exps[p.get_si()].push_back(e);
    }
    size_t depth = 0;
    for (auto& [p, v] : exps) {
        std::sort(v.rbegin(), v.rend());
        depth = std::max(depth, v.size());
    }
    std::vector<long> desc(depth, 1);
    for (auto& [p, v] : exps)
        for (size_t j = 0; j < v.size(); ++j) {
            long pk = 1;
            for (int t = 0; t < v[j]; ++t) pk *= p;
            desc[j] *= pk;
        }
    std::vector<long> asc(desc.rbegin(), desc.rend());
    return asc;
}

long Fqm::level() const {
    Integer n = 1;
    for (auto& q : q_) n = lcm_int(n, q.get_den());
    for (auto& row : gram_)
        for (auto& v : row) n = lcm_int(n, v.get_den());
    return n.get_si();
}

Rational Fqm::q_value(const FqmElement& e) const {
    Rational acc(0);
    const size_t k = orders_.size();
    for (size_t i = 0; i < k; ++i) {
        if (e.coords[i] == 0) continue;
        acc += Rational(e.coords[i]) * Rational(e.coords[i]) * q_[i];
        for (size_t j = i + 1; j < k; ++j)
            if (e.coords[j] != 0) acc += Rational(e.coords[i]) * Rational(e.coords[j]) * gram_[i][j];
    }
    return mod1(acc);
}

Rational Fqm::bilinear(const FqmElement& e, const FqmElement& f) const {
    Rational acc(0);
    const size_t k = orders_.size();
    for (size_t i = 0; i < k; ++i) {
        if (e.coords[i] == 0) continue;
        for (size_t j = 0; j < k; ++j)
            if (f.coords[j] != 0) acc += Rational(e.coords[i]) * Rational(f.coords[j]) * gram_[i][j];
    }
    return mod1(acc);
}

long Fqm::element_order(const FqmElement& e) const {
    long ord = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long g = std::gcd(orders_[i], e.coords[i]);
        ord = std::lcm(ord, orders_[i] / g);
    }
    return ord;
}

FqmElement Fqm::reduce(std::vector<long> coords) const {
    if (coords.size() != orders_.size())
        throw std::invalid_argument("FqmElement: wrong coordinate count");
    for (size_t i = 0; i < coords.size(); ++i) {
        coords[i] %= orders_[i];
        if (coords[i] < 0) coords[i] += orders_[i];
    }
    return FqmElement{std::move(coords)};
}

FqmElement Fqm::add(const FqmElement& a, const FqmElement& b) const {
    std::vector<long> c(orders_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return reduce(std::move(c));
}

FqmElement Fqm::neg(const FqmElement& a) const {
    std::vector<long> c(orders_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
    return reduce(std::move(c));
}

FqmElement Fqm::scale(long s, const FqmElement& a) const {
    std::vector<long> c(orders_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords[i];
    return reduce(std::move(c));
}

std::vector<FqmElement> Fqm::elements() const {
    Integer n = order();
    if (n > kScanBound) throw std::domain_error("Fqm: module too large to enumerate");
    size_t total = static_cast<size_t>(n.get_ui());
    std::vector<FqmElement> out;
    out.reserve(total);
    for (size_t idx = 0; idx < total; ++idx) out.push_back(element_at(idx));
    return out;
}

size_t Fqm::element_index(const FqmElement& e) const {
    size_t idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i)
        idx = idx * static_cast<size_t>(orders_[i]) + static_cast<size_t>(e.coords[i]);
    return idx;
}

FqmElement Fqm::element_at(size_t idx) const {
    std::vector<long> c(orders_.size(), 0);
    for (size_t i = orders_.size(); i-- > 0;) {
        c[i] = static_cast<long>(idx % static_cast<size_t>(orders_[i]));
        idx /= static_cast<size_t>(orders_[i]);
    }
    return FqmElement{std::move(c)};
}

Fqm Fqm::dual() const {
    Fqm out = *this;
    for (auto& v : out.q_) v = mod1(-v);
    for (auto& row : out.gram_)
        for (auto& v : row) v = mod1(-v);
    return out;
}

size_t Fqm::ambient_dim() const {
    if (!has_lifts()) throw std::logic_error("Fqm: no lattice lifts available");
    return static_cast<size_t>(ambient_dim_);
}

std::vector<Rational> Fqm::lift(const FqmElement& e) const {
    if (!has_lifts()) throw std::logic_error("Fqm: no lattice lifts available");
    std::vector<Rational> v(static_cast<size_t>(ambient_dim_), Rational(0));
    for (size_t i = 0; i < orders_.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) v[j] += Rational(e.coords[i]) * lifts_[i][j];
    return v;
}

void Fqm::set_lifts(size_t ambient_dim, std::vector<std::vector<Rational>> lifts) {
    if (lifts.size() != orders_.size())
        throw std::invalid_argument("Fqm::set_lifts: one lift per generator required");
    for (auto& v : lifts)
        if (v.size() != ambient_dim) throw std::invalid_argument("Fqm::set_lifts: bad lift size");
    ambient_dim_ = static_cast<long>(ambient_dim);
    lifts_ = std::move(lifts);
}

bool is_anisotropic(const Fqm& a) {
    if (a.order() > kScanBound) throw std::domain_error("is_anisotropic: module too large to scan");
    for (const auto& e : a.elements()) {
        bool is_zero = std::all_of(e.coords.begin(), e.coords.end(), [](long c) { return c == 0; });
        if (!is_zero && a.q_value(e) == 0) return false;
    }
    return true;
}

std::map<long, Fqm> p_primary_decomposition(const Fqm& a) {
    std::map<long, Fqm> out;
    if (a.gen_count() == 0) return out;
    auto f = factorize(a.order());
    for (auto& [pz, e] : f) {
        long p = pz.get_si();
        // generators of A_p: (d_i / p^{v_i}) g_i, of order p^{v_i}
        std::vector<long> orders;
        std::vector<FqmElement> gens;
        for (size_t i = 0; i < a.gen_count(); ++i) {
            long d = a.orders()[i];
            long pv = 1;
            while (d % p == 0) {
                pv *= p;
                d /= p;
            }
            if (pv == 1) continue;
            std::vector<long> coords(a.gen_count(), 0);
            coords[i] = d;  // the prime-to-p part
            gens.push_back(a.reduce(std::move(coords)));
            orders.push_back(pv);
        }
        if (orders.empty()) continue;
        std::vector<Rational> q;
        std::vector<std::vector<Rational>> gram(orders.size(), std::vector<Rational>(orders.size()));
        for (size_t i = 0; i < gens.size(); ++i) {
            q.push_back(a.q_value(gens[i]));
            for (size_t j = 0; j < gens.size(); ++j) gram[i][j] = a.bilinear(gens[i], gens[j]);
        }
        Fqm comp(std::move(orders), std::move(gram), std::move(q));
        if (a.has_lifts()) {
            std::vector<std::vector<Rational>> lifts;
            for (auto& g : gens) lifts.push_back(a.lift(g));
            comp.set_lifts(a.ambient_dim(), std::move(lifts));
        }
        out.emplace(p, std::move(comp));
    }
    // sanity: orders multiply up
    Integer prod = 1;
    for (auto& [p, c] : out) prod *= c.order();
    if (prod != a.order())
        throw std::logic_error("p_primary_decomposition: component orders do not multiply up");
    return out;
}

std::vector<JordanComponent> classify_anisotropic(const Fqm& a_p) {
    if (a_p.gen_count() == 0) return {};
    auto f = factorize(a_p.order());
    if (f.size() != 1) throw std::domain_error("classify_anisotropic: not a p-group");
    long p = f.begin()->first.get_si();
    int k = f.begin()->second;
    if (p == 2)
        throw std::domain_error("classify_anisotropic: p = 2 not supported (odd level setting)");
    if (!is_anisotropic(a_p)) throw std::domain_error("classify_anisotropic: module is not anisotropic");

    // smallest quadratic non-residue mod p
    long nqr = 2;
    while (jacobi_symbol(Integer(nqr), Integer(p)) != -1) ++nqr;

    auto try_match = [&](const Fqm& candidate,
                         std::vector<JordanComponent> tags) -> std::optional<std::vector<JordanComponent>> {
        if (fqm_isomorphic(a_p, candidate)) return tags;
        return std::nullopt;
    };

    if (k == 1) {
        for (long t : {1L, nqr}) {
            auto m = try_match(Fqm::cyclic(p, Rational(t, p)),
                               {JordanComponent{p, 1, JordanComponent::Tag::A, t}});
            if (m) return *m;
        }
    } else if (k == 2) {
        for (long t : {1L, nqr}) {
            auto cand = Fqm::direct_sum(Fqm::cyclic(p, Rational(t, p)), Fqm::cyclic(p, Rational(1, p)));
            auto m = try_match(cand, {JordanComponent{p, 1, JordanComponent::Tag::A, t},
                                      JordanComponent{p, 1, JordanComponent::Tag::A, 1}});
            if (m) return *m;
        }
    }
    // anisotropic p-groups at odd p have order p or p^2 and always match above
    throw std::logic_error("classify_anisotropic: no structural match found");
}

CycloNum gauss_sum(const Fqm& a, const Integer& d) {
    if (a.order() > kScanBound) throw std::domain_error("gauss_sum: module too large");
    // collect counts per exponent value of e(d Q(mu))
    std::map<Rational, long> counts;
    Rational dr(d);
    for (const auto& e : a.elements()) counts[mod1(dr * a.q_value(e))] += 1;
    Integer cond = 1;
    for (auto& [x, c] : counts) cond = lcm_int(cond, x.get_den());
    unsigned long n = cond.get_ui();
    std::vector<std::pair<unsigned long, Rational>> terms;
    for (auto& [x, c] : counts) {
        unsigned long k = (x.get_num() * (cond / x.get_den())).get_ui();
        terms.push_back({k, Rational(c)});
    }
    return CycloNum::from_terms(n, std::move(terms));
}

int milgram_signature(const Fqm& a) {
    CycloNum g = gauss_sum(a, 1);
    Integer n = a.order();
    // unitarity g conj(g) = |A| rules out degenerate forms
    if (g * g.conj() != CycloNum(Rational(n)))
        throw std::domain_error("milgram_signature: |g(A)|^2 != |A| (degenerate form)");
    // exact: g^2 = |A| e(s/4) pins s mod 4
    CycloNum g2 = g * g;
    int s4 = -1;
    for (int s = 0; s < 4; ++s) {
        if (g2 == CycloNum::root_of_unity(Rational(s, 4)) * Rational(n)) {
            s4 = s;
            break;
        }
    }
    if (s4 < 0) throw std::logic_error("milgram_signature: g^2 is not |A| times a 4th root of unity");
    // numeric: decide between s4 and s4 + 4 (antipodal candidates, gap 2 sqrt|A|)
    for (mpfr_prec_t prec = 128; prec <= 2048; prec *= 2) {
        ComplexInterval emb = embed_complex(g, prec);
        RealInterval root(Rational(n), prec);
        root = root.sqrt();
        for (int s : {s4, s4 + 4}) {
            ComplexInterval target = unit_circle_point(Rational(s, 8), prec);
            target = ComplexInterval(target.re * root, target.im * root);
            ComplexInterval diff = emb - target;
            double dist = diff.abs_upper_d();
            double half_gap = root.lower_d();
            if (dist < half_gap) return s;
        }
    }
    throw std::runtime_error("milgram_signature: could not certify sign at 2048 bits");
}

namespace {

// DFS over generator images; used by orthogonal_group and fqm_isomorphic
template <typename OnLeaf>
void image_search(const Fqm& a, const Fqm& b, OnLeaf&& on_leaf) {
    const size_t k = a.gen_count();
    auto b_elems = b.elements();
    std::vector<std::vector<FqmElement>> candidates(k);
    for (size_t i = 0; i < k; ++i) {
        for (const auto& e : b_elems) {
            if (b.element_order(e) == a.orders()[i] && b.q_value(e) == a.q_table()[i])
                candidates[i].push_back(e);
        }
        if (candidates[i].empty()) return;
    }
    std::vector<FqmElement> chosen;
    chosen.reserve(k);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == k) return on_leaf(chosen);
        for (const auto& cand : candidates[i]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j)
                if (b.bilinear(cand, chosen[j]) != a.gram_table()[i][j]) ok = false;
            if (!ok) continue;
            chosen.push_back(cand);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0);
}

// permutation induced by generator images, or nullopt if not bijective
std::optional<std::vector<size_t>> induced_permutation(const Fqm& a, const Fqm& b,
                                                       const std::vector<FqmElement>& images) {
    size_t total = static_cast<size_t>(a.order().get_ui());
    std::vector<size_t> perm(total);
    std::vector<bool> seen(total, false);
    for (size_t idx = 0; idx < total; ++idx) {
        FqmElement e = a.element_at(idx);
        FqmElement img = b.zero();
        for (size_t i = 0; i < images.size(); ++i)
            img = b.add(img, b.scale(e.coords[i], images[i]));
        size_t j = b.element_index(img);
        if (seen[j]) return std::nullopt;
        seen[j] = true;
        perm[idx] = j;
    }
    return perm;
}

}  // namespace

std::vector<FqmAutomorphism> orthogonal_group(const Fqm& a, size_t size_bound) {
    if (a.order() > Integer(static_cast<unsigned long>(size_bound)))
        throw std::domain_error("orthogonal_group: module exceeds size bound");
    std::vector<FqmAutomorphism> out;
    image_search(a, a, [&](const std::vector<FqmElement>& images) {
        auto perm = induced_permutation(a, a, images);
        if (perm) out.push_back(FqmAutomorphism{images, std::move(*perm)});
        return false;  // collect all
    });
    // closure under composition (inverses follow: every element of a finite
    // composition-closed set containing id has finite order)
    std::set<std::vector<size_t>> perms;
    for (auto& s : out) perms.insert(s.perm);
    if (out.size() <= 64 && a.order() <= 2000) {
        for (auto& s1 : out)
            for (auto& s2 : out) {
                std::vector<size_t> comp(s1.perm.size());
                for (size_t i = 0; i < comp.size(); ++i) comp[i] = s1.perm[s2.perm[i]];
                if (!perms.count(comp))
                    throw std::logic_error("orthogonal_group: set not closed under composition");
            }
    }
    return out;
}

std::set<FqmElement> index_set(const Fqm& a, long c, const Rational& x) {
    if (c < 1) throw std::domain_error("index_set: c must be positive");
    std::set<FqmElement> out;
    Rational xm = mod1(x);
    for (const auto& e : a.elements())
        if (a.element_order(e) == c && a.q_value(e) == xm) out.insert(e);
    return out;
}

bool fqm_isomorphic(const Fqm& a, const Fqm& b, size_t size_bound) {
    if (a.order() != b.order()) return false;
    if (a.order() > Integer(static_cast<unsigned long>(size_bound)))
        throw std::domain_error("fqm_isomorphic: modules exceed size bound");
    if (a.elementary_divisors() != b.elementary_divisors()) return false;
    bool found = false;
    image_search(a, b, [&](const std::vector<FqmElement>& images) {
        if (induced_permutation(a, b, images)) {
            found = true;
            return true;  // stop
        }
        return false;
    });
    return found;
}

}  // namespace discform
