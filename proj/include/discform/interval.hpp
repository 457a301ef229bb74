#pragma once

#include "discform/cyclo.hpp"
#include "discform/rational.hpp"

#include <mpfr.h>

#include <string>

namespace discform {

// Closed interval [lo, hi] with outward-rounded endpoints.  All operations
// return enclosures of the exact image set.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec = 128);
    RealInterval(const Rational& x, mpfr_prec_t prec);
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(const RealInterval& o);
    RealInterval& operator=(RealInterval&& o) noexcept;
    ~RealInterval();

    static RealInterval exact(long v, mpfr_prec_t prec);
    static RealInterval exact_double(double v, mpfr_prec_t prec);
    static RealInterval two_pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }

    RealInterval operator+(const RealInterval& o) const;
    RealInterval operator-(const RealInterval& o) const;
    RealInterval operator*(const RealInterval& o) const;
    RealInterval operator-() const;
    RealInterval recip() const;  // throws if the interval contains 0
    RealInterval sqrt() const;   // requires lo >= 0
    RealInterval exp() const;
    RealInterval abs() const;
    RealInterval mul_rational(const Rational& r) const;

    bool contains_zero() const;
    bool contains(const Rational& x) const;
    bool strictly_positive() const;
    bool strictly_negative() const;

    double lower_d() const;  // rounded down
    double upper_d() const;  // rounded up
    double width_d() const;  // rounded up
    double abs_upper_d() const;

    std::string str(size_t digits = 20) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

struct ComplexInterval {
    RealInterval re, im;

    explicit ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexInterval from_rational(const Rational& r, mpfr_prec_t prec) {
        return {RealInterval(r, prec), RealInterval(Rational(0), prec)};
    }
    static ComplexInterval from_doubles(double r, double i, mpfr_prec_t prec) {
        return {RealInterval::exact_double(r, prec), RealInterval::exact_double(i, prec)};
    }

    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    ComplexInterval operator-(const ComplexInterval& o) const { return {re - o.re, im - o.im}; }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexInterval operator-() const { return {-re, -im}; }
    ComplexInterval conj() const { return {re, -im}; }
    ComplexInterval recip() const;  // throws if 0 may be contained
    ComplexInterval mul_rational(const Rational& r) const {
        return {re.mul_rational(r), im.mul_rational(r)};
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    double abs_upper_d() const;

    std::string str(size_t digits = 20) const;
};

// enclosures of cos(2 pi x), sin(2 pi x)
RealInterval cos2pi(const Rational& x, mpfr_prec_t prec);
RealInterval sin2pi(const Rational& x, mpfr_prec_t prec);

// enclosure of e(x) = e^{2 pi i x}
ComplexInterval unit_circle_point(const Rational& x, mpfr_prec_t prec);

// guaranteed enclosure of the complex embedding zeta_n -> e^{2 pi i / n}
ComplexInterval embed_complex(const CycloNum& z, mpfr_prec_t precision_bits);

// enclosure of e(n tau) for tau in the upper half plane
ComplexInterval e_ntau(const Rational& n, const ComplexInterval& tau);

}  // namespace discform
