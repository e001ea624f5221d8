#ifndef P3R_DENSITY_HPP
#define P3R_DENSITY_HPP

#include "p3r/elliptic.hpp"

namespace p3r {

// Limiting pole/zero density rho(y) = |grad K1 x grad K2| / (2 pi^2) on the
// right half of the eye, its small-|y| profile h(theta), and the comparison
// of n^2 * integral(rho) with counted exact roots.  Note rho takes no m:
// K1 and K2 are functions of y alone.

struct DensitySample {
    Complex y;
    Real rho;
    Real gradK1[2];  // d/d(Re y), d/d(Im y)
    Real gradK2[2];
};

DensitySample rho(const Complex& y, const Real& h_step = Real(0));

// cross-check value from the differentiated contour integrals in polar form
Real rho_contour(const Complex& y);

// h(theta): r * rho(r e^{i theta}) -> h(theta) as r -> 0
Real h_profile(const Real& theta);

struct CountResult {
    Real expected;       // n^2 * integral of rho over the rectangle
    long observed_zeros;
    long observed_poles;
};

// rectangle [a,b] x [c,d] strictly inside E_R in the y = x/n variable
CountResult count_vs_integral(int n, const GaussianRational& m,
                              const Real& a, const Real& b,
                              const Real& c, const Real& d);

} // namespace p3r

#endif
