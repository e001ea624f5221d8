#ifndef P3R_UMEMURA_HPP
#define P3R_UMEMURA_HPP

#include <vector>

#include "p3r/exact_poly.hpp"

namespace p3r {

// Exact construction of the Umemura polynomials s_n(x;m) and the rational
// solutions u_n(x;m) built from them.  This module is the ground truth the
// asymptotic modules are tested against.

// s_{-1}, s_0, ..., s_{n_max}; index i holds s_{i-1}
std::vector<ExactPolynomial> build_sequence(int n_max, const GaussianRational& m);

// the four polynomial factors of u_n (n >= 1):
//   u_n = s_n(x;m-1) s_{n-1}(x;m) / ( s_n(x;m) s_{n-1}(x;m-1) )
struct FactorSet {
    ExactPolynomial s_n_mm1;    // s_n(x;m-1), zeros of u_n (filled)
    ExactPolynomial s_nm1_m;    // s_{n-1}(x;m), zeros of u_n (open)
    ExactPolynomial s_n_m;      // s_n(x;m), poles of u_n (filled)
    ExactPolynomial s_nm1_mm1;  // s_{n-1}(x;m-1), poles of u_n (open)
};
const FactorSet& factors(int n, const GaussianRational& m);

Complex eval_un(const Complex& x, int n, const GaussianRational& m);

// LHS - RHS of the Painleve-III equation at x, with Theta_0 = n+m and
// Theta_inf = m-n+1; derivatives taken symbolically through the factors.
Complex piii_residual(int n, const GaussianRational& m, const Complex& x);

struct RationalSolution {
    int n;
    GaussianRational m;
    FactorSet factor_polys;
    std::vector<Complex> zero_roots_filled;  // roots of s_n(x;m-1)
    std::vector<Complex> zero_roots_open;    // roots of s_{n-1}(x;m)
    std::vector<Complex> pole_roots_filled;  // roots of s_n(x;m)
    std::vector<Complex> pole_roots_open;    // roots of s_{n-1}(x;m-1)
};
RationalSolution classified_roots(int n, const GaussianRational& m,
                                  unsigned precision_bits = 512);

// numeric fallback for arbitrary complex m (no exactness guarantee)
std::vector<std::vector<Complex>> build_sequence_numeric(int n_max, const Complex& m);
Complex eval_un_numeric(const Complex& x, int n, const Complex& m);

// origin behavior, exact: order of vanishing at x = 0 of the numerator and
// denominator products; the difference is +1 for a simple zero of u_n at the
// origin and -1 for a simple pole
long numerator_order_at_zero(int n, const GaussianRational& m);
long denominator_order_at_zero(int n, const GaussianRational& m);

} // namespace p3r

#endif
