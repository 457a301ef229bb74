#include "discform/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace discform {

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// exact division of integer polynomials, divisor monic
std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Integer> q(dn - dd + 1);
    for (size_t i = dn + 1; i-- > dd;) {
        Integer c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return q;
}

std::map<unsigned long, std::vector<Integer>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<Integer> compute_cyclotomic(unsigned long n) {
    // x^n - 1 divided by Phi_d for all proper divisors d of n
    std::vector<Integer> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d == 0) poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long n) {
    {
        std::lock_guard<std::mutex> lk(g_phi_mutex);
        auto it = g_phi_cache.find(n);
        if (it != g_phi_cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

CycloNum::CycloNum(const Rational& r) : n_(1) {
    if (r != 0) terms_.push_back({0, r});
}

void CycloNum::set_reduced_(std::vector<Rational>& dense) {
    const auto& phi = cyclotomic_polynomial(n_);
    const size_t deg = phi.size() - 1;
    for (size_t i = dense.size(); i-- > deg;) {
        if (dense[i] == 0) continue;
        Rational c = dense[i];
        for (size_t j = 0; j <= deg; ++j) {
            if (phi[j] != 0) dense[i - deg + j] -= c * Rational(phi[j]);
        }
    }
    terms_.clear();
    for (size_t k = 0; k < deg && k < dense.size(); ++k) {
        if (dense[k] != 0) terms_.push_back({static_cast<unsigned long>(k), dense[k]});
    }
}

CycloNum CycloNum::root_of_unity(const Rational& x) {
    Rational r = mod1(x);
    CycloNum out;
    out.n_ = static_cast<unsigned long>(r.get_den().get_ui());
    std::vector<Rational> dense(out.n_, Rational(0));
    dense[static_cast<size_t>(r.get_num().get_ui() % out.n_)] = 1;
    out.set_reduced_(dense);
    return out;
}

CycloNum CycloNum::from_terms(unsigned long n, std::vector<std::pair<unsigned long, Rational>> terms) {
    if (n == 0) throw std::domain_error("CycloNum: conductor must be positive");
    CycloNum out;
    out.n_ = n;
    std::vector<Rational> dense(n, Rational(0));
    for (auto& [k, c] : terms) dense[k % n] += c;
    out.set_reduced_(dense);
    return out;
}

bool CycloNum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

std::optional<Rational> CycloNum::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
    return std::nullopt;
}

CycloNum CycloNum::conj() const {
    std::vector<std::pair<unsigned long, Rational>> t;
    t.reserve(terms_.size());
    for (auto& [k, c] : terms_) t.push_back({k == 0 ? 0 : n_ - k, c});
    return from_terms(n_, std::move(t));
}

CycloNum CycloNum::lifted(unsigned long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::domain_error("CycloNum::lifted: target not a multiple of conductor");
    unsigned long f = m / n_;
    std::vector<std::pair<unsigned long, Rational>> t;
    t.reserve(terms_.size());
    for (auto& [k, c] : terms_) t.push_back({k * f, c});
    return from_terms(m, std::move(t));
}

CycloNum CycloNum::operator-() const {
    CycloNum out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    unsigned long m = std::lcm(n_, o.n_);
    CycloNum a = lifted(m), b = o.lifted(m);
    // both reduced below phi(m); merge
    std::vector<std::pair<unsigned long, Rational>> merged;
    merged.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
            merged.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
            merged.push_back(b.terms_[j++]);
        } else {
            Rational c = a.terms_[i].second + b.terms_[j].second;
            if (c != 0) merged.push_back({a.terms_[i].first, c});
            ++i;
            ++j;
        }
    }
    n_ = m;
    terms_ = std::move(merged);
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    return *this += -o;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    if (is_zero() || o.is_zero()) {
        n_ = 1;
        terms_.clear();
        return *this;
    }
    unsigned long m = std::lcm(n_, o.n_);
    CycloNum a = lifted(m), b = o.lifted(m);
    std::vector<Rational> dense(m, Rational(0));
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) dense[(ka + kb) % m] += ca * cb;
    n_ = m;
    set_reduced_(dense);
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
    if (r == 0) {
        n_ = 1;
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= r;
    return *this;
}

bool CycloNum::operator==(const CycloNum& o) const {
    unsigned long m = std::lcm(n_, o.n_);
    CycloNum a = lifted(m), b = o.lifted(m);
    return a.terms_ == b.terms_;
}

namespace {

// polynomial arithmetic over Q for the extended Euclid below
using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    qp_trim(c);
    return c;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// division with remainder
std::pair<QPoly, QPoly> qp_divmod(QPoly num, const QPoly& den) {
    QPoly q;
    if (num.size() < den.size()) return {q, num};
    q.assign(num.size() - den.size() + 1, Rational(0));
    Rational lead = den.back();
    for (size_t i = num.size(); i-- >= den.size() && i + 1 >= den.size();) {
        if (i + 1 < den.size()) break;
        Rational c = num[i] / lead;
        q[i - (den.size() - 1)] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= c * den[j];
    }
    qp_trim(num);
    return {q, num};
}

}  // namespace

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum::inverse: division by zero");
    // extended Euclid of f against Phi_n over Q[x]; Phi_n irreducible so gcd = 1
    const auto& phi_z = cyclotomic_polynomial(n_);
    QPoly modp(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i) modp[i] = Rational(phi_z[i]);
    QPoly f(terms_.empty() ? 1 : terms_.back().first + 1, Rational(0));
    for (auto& [k, c] : terms_) f[k] = c;
    qp_trim(f);

    QPoly r0 = modp, r1 = f;
    QPoly t0 = {}, t1 = {Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r2] = qp_divmod(r0, r1);
        QPoly t2 = qp_sub(t0, qp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw std::logic_error("CycloNum::inverse: unexpected zero remainder");
    // r1 is a nonzero constant: inverse = t1 / r1[0]
    Rational scale = Rational(1) / r1[0];
    std::vector<std::pair<unsigned long, Rational>> t;
    for (size_t k = 0; k < t1.size(); ++k)
        if (t1[k] != 0) t.push_back({static_cast<unsigned long>(k), t1[k] * scale});
    return from_terms(n_, std::move(t));
}

CycloNum CycloNum::pow(long e) const {
    CycloNum base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    CycloNum out = one();
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::string CycloNum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_str(c);
        if (k > 0) os << "*z" << n_ << "^" << k;
    }
    return os.str();
}

}  // namespace discform
