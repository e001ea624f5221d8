#ifndef P3R_HALFINT_HPP
#define P3R_HALFINT_HPP

#include "p3r/elliptic.hpp"
#include "p3r/landscape.hpp"

namespace p3r {

// Approximations of u_n(ny; m) for half-integer m = +-(k+1/2): equilibrium
// branches away from the distinguished eyebrow, layered trigonometric
// formulas inside the tube T, the pole/zero curves, and the exact k=0
// contour-integral oracle.

enum class LayerCase {
    equilibrium_outside_tube,  // Theorem-4 branch formula
    UU,                        // Mobius family G_ell (ell = 0..k)
    UL,                        // interleaved family (ell = 1..k)
};

struct LayerRegime {
    int k = 0;
    LayerCase tag = LayerCase::UU;
    int ell = 0;
    Real coordinate;  // c = Re V(p(y)^{-1}; y)
};

LayerRegime classify_layer(int n, int k, const Complex& y, const TubeParams& tube = {});

// m = -(k+1/2) when sign < 0 (right eyebrow); m = +(k+1/2) via the exact
// symmetry (reciprocal at -y, left eyebrow) when sign > 0.
ApproxValue udot_halfint(int n, int k, int sign, const Complex& y,
                         const TubeParams& tube = {});

// evaluation of a specific layer formula (used by the boundary-agreement tests)
Complex layer_formula_UU(int n, int k, int ell, const Complex& y);
Complex layer_formula_UL(int n, int k, int ell, const Complex& y);

struct EyebrowCurve {
    int id = 0;               // left-to-right position, 0-based
    bool is_zero = false;     // zero curve vs pole curve
    std::string provenance;   // layer family the curve comes from
    Path curve;               // sampled polyline in the y-plane
};

// the 4k+2 Theorem-7 curves near the right eyebrow
std::vector<EyebrowCurve> eyebrow_curves(int n, int k, int samples = 120,
                                         const TubeParams& tube = {});

// exact u_n(ny; -1/2) from the two contour integrals (k = 0 closed form)
Complex exact_k0_oracle(int n, const Complex& y);

} // namespace p3r

#endif
