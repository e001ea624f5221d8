#ifndef P3R_ROOTS_HPP
#define P3R_ROOTS_HPP

#include <vector>

#include "p3r/complexmp.hpp"

namespace p3r {

// All roots (with multiplicity) of the polynomial with the given coefficients
// in ascending degree order.  Aberth-Ehrlich simultaneous iteration started
// on a circle of Fujiwara-bound radius; refined until the largest Newton
// correction |p(r)/p'(r)| drops below 2^(-precision_bits/2).
std::vector<Complex> find_roots_poly(const std::vector<Complex>& coeffs,
                                     unsigned precision_bits);

// Horner evaluation of p and p' at z.
void poly_eval2(const std::vector<Complex>& coeffs, const Complex& z,
                Complex& p, Complex& dp);

} // namespace p3r

#endif
