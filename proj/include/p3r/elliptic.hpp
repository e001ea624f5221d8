#ifndef P3R_ELLIPTIC_HPP
#define P3R_ELLIPTIC_HPP

#include "p3r/gaussian_rational.hpp"
#include "p3r/spectral.hpp"
#include "p3r/theta.hpp"

namespace p3r {

// Genus-1 apparatus on the interior spectral curve: Abel-map values, the
// b-period B, the real constants K1/K2, the derived constants eta, nu,
// gamma-tilde, delta, kappa, N, and the interior approximation u-dot.

// m-independent part, cached per y
struct EllipticCore {
    SpectralCurve curve;
    Complex Ia;        // a-cycle of dl/R, counterclockwise around cut1
    Complex A_inf, A_0, A_kappa;
    Complex B;         // Re B < 0
    Real K1, K2;
    Complex eta;       // -i K2 + i K1 B / (2 pi i)
    Complex nu;        // 8 pi / (y Ia)
    Complex kappa;     // (lam0+lam1)/(1+lam0 lam1)
    Complex N;
    Complex I0, J1, J2;  // gamma-tilde ingredients (m-weights applied later)
};

const EllipticCore& elliptic_core(const Complex& y);

struct EllipticData {
    EllipticCore core;
    GaussianRational m;
    Complex gamma_tilde;
    Complex delta;
};

EllipticData elliptic_data(const SpectralCurve& curve, const GaussianRational& m);
EllipticData elliptic_data(const Complex& y, const GaussianRational& m);

// s_n(y,w,m) = -delta - i w nu - n eta
Complex phase_s(const EllipticData& d, int n, const Complex& w);

// Abel map of a single point (or infinity via lambda = nullptr semantics)
Complex abel_map(const Complex& lambda, const SpectralCurve& curve);
Complex abel_map_infinity(const SpectralCurve& curve);

enum class Regime { outer, elliptic, halfint_layer, equilibrium_outside_tube };

struct ApproxValue {
    Complex value;
    Regime regime = Regime::elliptic;
    Real carveout{0};       // min lattice distance of the four theta arguments
    bool near_divisor = false;
    std::string regime_detail;
};

// Theorem-2 interior approximation; y in E_L is routed through the
// u_n(-(ny+w);-m) = 1/u-dot symmetry
ApproxValue udot_elliptic(int n, const Complex& y, const Complex& w,
                          const GaussianRational& m);

// |(d p-dot/d w)^2 - (16/y^2) P(p-dot)| with p-dot = -i u-dot, central differences
Real ode_residual_w(int n, const Complex& y, const Complex& w,
                    const GaussianRational& m, const Real& h);

struct QuantIndices {
    // zeros of u-dot: quantities A_inf +- A_kappa -+ s_n
    Real alpha0_p, beta0_p, alpha0_m, beta0_m;
    // singularities: A_0 +- A_kappa -+ s_n
    Real alphaInf_p, betaInf_p, alphaInf_m, betaInf_m;
};

QuantIndices quantization_indices(int n, const Complex& y, const Complex& w,
                                  const GaussianRational& m);

// carve-out radius below which values are flagged
Real carveout_epsilon();

} // namespace p3r

#endif
