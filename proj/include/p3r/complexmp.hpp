#ifndef P3R_COMPLEXMP_HPP
#define P3R_COMPLEXMP_HPP

#include <iosfwd>
#include <sstream>
#include <string>

#include "p3r/real.hpp"

namespace p3r {

// Complex number over the arbitrary-precision Real.  std::complex is not
// usable with a dynamic-precision backend, so the few operations we need are
// spelled out here.  Principal branches throughout (cut on the negative real
// axis); contour code that needs other cuts builds them from these.
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(const Real& r) : re(r) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(double r) : re(r) {}
    Complex(double r, double i) : re(r), im(i) {}
    Complex(int r) : re(r) {}

    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        Real i = re * o.im + im * o.re;
        re = r; im = i;
        return *this;
    }
    Complex& operator/=(const Complex& o);

    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Complex& o) const { return !(*this == o); }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex& Complex::operator/=(const Complex& o) {
    // Smith's algorithm, robust against overflow of |o|^2
    if (abs(o.re) >= abs(o.im)) {
        Real t = o.im / o.re;
        Real d = o.re + o.im * t;
        Real r = (re + im * t) / d;
        Real i = (im - re * t) / d;
        re = r; im = i;
    } else {
        Real t = o.re / o.im;
        Real d = o.re * t + o.im;
        Real r = (re * t + im) / d;
        Real i = (im * t - re) / d;
        re = r; im = i;
    }
    return *this;
}

inline Complex operator/(Complex a, const Complex& b) { return a /= b; }

inline Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
inline Complex operator+(const Real& a, const Complex& b) { return {a + b.re, b.im}; }
inline Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
inline Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }

inline Complex operator*(const Complex& a, int b) { return {a.re * b, a.im * b}; }
inline Complex operator*(int a, const Complex& b) { return {a * b.re, a * b.im}; }
inline Complex operator/(const Complex& a, int b) { return {a.re / b, a.im / b}; }
inline Complex operator/(int a, const Complex& b) { return Complex(Real(a)) / b; }
inline Complex operator+(const Complex& a, int b) { return {a.re + b, a.im}; }
inline Complex operator+(int a, const Complex& b) { return {a + b.re, b.im}; }
inline Complex operator-(const Complex& a, int b) { return {a.re - b, a.im}; }
inline Complex operator-(int a, const Complex& b) { return {a - b.re, -b.im}; }

inline const Complex I_unit{Real(0), Real(1)};

inline Complex sqrt(const Complex& z) {
    if (z.im == 0) {
        if (z.re >= 0) return {sqrt(z.re), Real(0)};
        return {Real(0), sqrt(-z.re)};
    }
    Real r = abs(z);
    Real u = sqrt((r + abs(z.re)) / 2);
    Real v = z.im / (2 * u);
    if (z.re >= 0) return {u, v};
    // Re z < 0: principal root has sign(Im z) on the real part of v-swap
    if (z.im >= 0) return {abs(v), u};
    return {abs(v), -u};
}

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex pow(const Complex& z, const Complex& q) { return exp(q * log(z)); }

inline Complex pow_int(Complex z, long n) {
    if (n < 0) return Complex(1) / pow_int(z, -n);
    Complex r(1);
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

inline Complex cos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

inline Complex sin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline std::string to_string(const Complex& z, unsigned digits = 25) {
    std::ostringstream os;
    os.precision(digits);
    os << z.re;
    if (z.im >= 0) os << "+";
    os << z.im << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Complex& z);

} // namespace p3r

#endif
