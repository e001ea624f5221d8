#ifndef P3R_GAUSSIAN_RATIONAL_HPP
#define P3R_GAUSSIAN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "p3r/complexmp.hpp"

namespace p3r {

using Rational = mp::number<mp::gmp_rational, mp::et_off>;

// Exact complex rational a + b i; the carrier for the parameter m and for
// Umemura polynomial coefficients.  GMP keeps denominators reduced.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(const Rational& r) : re(r) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long num, long den) : re(Rational(num) / den) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re; im += o.im; return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re; im -= o.im; return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = r; im = i; return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational d = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / d;
        Rational i = (im * o.re - re * o.im) / d;
        re = r; im = i; return *this;
    }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // value at the ambient working precision
    Complex to_complex() const { return {Real(re), Real(im)}; }

    std::string str() const;

    // "a/b" or "a/b,c/d" (imaginary part after the comma)
    static GaussianRational parse(const std::string& text);
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

// true if m is of the form k + 1/2, k integer
bool is_half_integer(const GaussianRational& m);

} // namespace p3r

#endif
