#ifndef P3R_THETA_HPP
#define P3R_THETA_HPP

#include "p3r/complexmp.hpp"

namespace p3r {

// Riemann theta series Theta(z,B) = sum_k exp(k z + B k^2/2), Re B < 0.
// Truncated symmetrically once the next term bound falls below 1e-30 of the
// accumulated sum.
Complex theta(const Complex& z, const Complex& B);

// distance from z to the period lattice 2 pi i Z + B Z
Real lattice_distance(const Complex& z, const Complex& B);

// real decomposition z = 2 pi i alpha + B beta (Re B != 0)
void lattice_decompose(const Complex& z, const Complex& B, Real& alpha, Real& beta);

} // namespace p3r

#endif
