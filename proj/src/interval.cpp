#include "discform/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace discform {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const Rational& x, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, x.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::exact(long v, mpfr_prec_t prec) {
    RealInterval out(prec);
    mpfr_set_si(out.lo_, v, MPFR_RNDD);
    mpfr_set_si(out.hi_, v, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::exact_double(double v, mpfr_prec_t prec) {
    RealInterval out(prec);
    mpfr_set_d(out.lo_, v, MPFR_RNDD);
    mpfr_set_d(out.hi_, v, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::two_pi(mpfr_prec_t prec) {
    RealInterval out(prec);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    mpfr_mul_ui(out.lo_, out.lo_, 2, MPFR_RNDD);
    mpfr_mul_ui(out.hi_, out.hi_, 2, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
    RealInterval out(std::max(prec_, o.prec_));
    mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    RealInterval out(std::max(prec_, o.prec_));
    mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    RealInterval out(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, out.prec_);
    mpfr_mul(out.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
    mpfr_mul(out.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return out;
}

RealInterval RealInterval::operator-() const {
    RealInterval out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::recip() const {
    if (contains_zero()) throw std::domain_error("RealInterval::recip: interval contains zero");
    RealInterval out(prec_);
    mpfr_ui_div(out.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(out.hi_, 1, lo_, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("RealInterval::sqrt: negative endpoint");
    RealInterval out(prec_);
    mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::exp() const {
    RealInterval out(prec_);
    mpfr_exp(out.lo_, lo_, MPFR_RNDD);
    mpfr_exp(out.hi_, hi_, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    RealInterval out(prec_);
    mpfr_set_zero(out.lo_, 1);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, out.hi_) > 0) mpfr_set(out.hi_, hi_, MPFR_RNDU);
    return out;
}

RealInterval RealInterval::mul_rational(const Rational& r) const {
    return *this * RealInterval(r, prec_);
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::contains(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool RealInterval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealInterval::strictly_negative() const { return mpfr_sgn(hi_) < 0; }

double RealInterval::lower_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::upper_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RealInterval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

double RealInterval::abs_upper_d() const {
    return std::max(std::abs(lower_d()), std::abs(upper_d()));
}

std::string RealInterval::str(size_t digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%zuRg", digits);
    char buf_lo[512], buf_hi[512];
    mpfr_snprintf(buf_lo, sizeof(buf_lo), fmt, lo_);
    mpfr_snprintf(buf_hi, sizeof(buf_hi), fmt, hi_);
    return std::string("[") + buf_lo + ", " + buf_hi + "]";
}

ComplexInterval ComplexInterval::recip() const {
    RealInterval d = re * re + im * im;
    if (d.contains_zero())
        throw std::domain_error("ComplexInterval::recip: interval may contain zero");
    RealInterval dinv = d.recip();
    return {re * dinv, (-im) * dinv};
}

double ComplexInterval::abs_upper_d() const {
    double r = re.abs_upper_d(), i = im.abs_upper_d();
    return std::sqrt(r * r + i * i) * (1.0 + 1e-14) + 1e-300;
}

std::string ComplexInterval::str(size_t digits) const {
    return re.str(digits) + " + i*" + im.str(digits);
}

namespace {

// cos or sin over an angle enclosure: endpoint values padded by the interval
// width (|f'| <= 1), clamped to [-1, 1]
RealInterval trig_enclose(const RealInterval& angle, bool is_sin) {
    mpfr_prec_t prec = angle.prec();
    RealInterval out(prec);
    mpfr_t a, b, w, t;
    mpfr_init2(a, prec);
    mpfr_init2(b, prec);
    mpfr_init2(w, prec);
    mpfr_init2(t, prec);
    mpfr_sub(w, angle.hi(), angle.lo(), MPFR_RNDU);

    if (is_sin) {
        mpfr_sin(a, angle.lo(), MPFR_RNDD);
        mpfr_sin(b, angle.hi(), MPFR_RNDD);
    } else {
        mpfr_cos(a, angle.lo(), MPFR_RNDD);
        mpfr_cos(b, angle.hi(), MPFR_RNDD);
    }
    mpfr_min(t, a, b, MPFR_RNDD);
    mpfr_sub(out.lo_mut(), t, w, MPFR_RNDD);

    if (is_sin) {
        mpfr_sin(a, angle.lo(), MPFR_RNDU);
        mpfr_sin(b, angle.hi(), MPFR_RNDU);
    } else {
        mpfr_cos(a, angle.lo(), MPFR_RNDU);
        mpfr_cos(b, angle.hi(), MPFR_RNDU);
    }
    mpfr_max(t, a, b, MPFR_RNDU);
    mpfr_add(out.hi_mut(), t, w, MPFR_RNDU);

    if (mpfr_cmp_si(out.lo(), -1) < 0) mpfr_set_si(out.lo_mut(), -1, MPFR_RNDD);
    if (mpfr_cmp_si(out.hi(), 1) > 0) mpfr_set_si(out.hi_mut(), 1, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
    mpfr_clear(w);
    mpfr_clear(t);
    return out;
}

}  // namespace

RealInterval cos2pi(const Rational& x, mpfr_prec_t prec) {
    return trig_enclose(RealInterval::two_pi(prec).mul_rational(x), false);
}

RealInterval sin2pi(const Rational& x, mpfr_prec_t prec) {
    return trig_enclose(RealInterval::two_pi(prec).mul_rational(x), true);
}

ComplexInterval unit_circle_point(const Rational& x, mpfr_prec_t prec) {
    return {cos2pi(x, prec), sin2pi(x, prec)};
}

ComplexInterval embed_complex(const CycloNum& z, mpfr_prec_t precision_bits) {
    if (precision_bits < 53) throw std::domain_error("embed_complex: precision must be >= 53 bits");
    ComplexInterval acc(precision_bits);
    const long n = static_cast<long>(z.conductor());
    for (auto& [k, c] : z.terms()) {
        Rational x(static_cast<long>(k), n);
        x.canonicalize();
        acc = acc + unit_circle_point(x, precision_bits).mul_rational(c);
    }
    return acc;
}

ComplexInterval e_ntau(const Rational& n, const ComplexInterval& tau) {
    mpfr_prec_t prec = tau.re.prec();
    // e(n(u+iv)) = exp(-2 pi n v) (cos(2 pi n u) + i sin(2 pi n u))
    RealInterval two_pi_n = RealInterval::two_pi(prec).mul_rational(n);
    RealInterval radius = (-(two_pi_n * tau.im)).exp();
    RealInterval angle = two_pi_n * tau.re;
    return {radius * trig_enclose(angle, false), radius * trig_enclose(angle, true)};
}

}  // namespace discform
