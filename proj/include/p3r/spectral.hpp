#ifndef P3R_SPECTRAL_HPP
#define P3R_SPECTRAL_HPP

#include <array>

#include "p3r/path.hpp"
#include "p3r/quadrature.hpp"

namespace p3r {

// Quartic spectral curve P(lambda; y, C), the Boutroux conditions fixing
// C = C(y) on the right half of the eye, and the two-cut square root
// R(lambda; y) with R/lambda^2 -> iy/2 at infinity.

Complex quartic_P(const Complex& lambda, const Complex& y, const Complex& C);

// the degenerate exterior value C for which P has two double roots p, 1/p
Complex exterior_C(const Complex& y);

// sqrt((lambda-a)(lambda-b)) with branch cut exactly on the segment [a,b]
// and value ~ (lambda - (a+b)/2) at infinity
struct SegmentSqrt {
    Complex a, b, mid, half;
    SegmentSqrt() = default;
    SegmentSqrt(const Complex& a_, const Complex& b_)
        : a(a_), b(b_), mid((a_ + b_) / 2), half((b_ - a_) / 2) {}
    Complex operator()(const Complex& lambda) const;
    // boundary value on the open cut: t in (-1,1) parametrizes
    // lambda = mid + t*half; side=+1 is the left of the a->b direction
    Complex side(const Real& t, int side_sign) const;
    Complex point(const Real& t) const { return mid + t * half; }
};

enum class CurveRegime { interior, exterior_double_double };

struct SpectralCurve {
    Complex y;
    Complex C;
    // labeled roots: lam0 adjacent to infinity on the Stokes graph,
    // lam1 adjacent to lam0; cuts are [lam0,lam1] and [lam1_inv,lam0_inv]
    Complex lam0, lam1, lam1_inv, lam0_inv;
    SegmentSqrt cut1, cut2;
    CurveRegime regime = CurveRegime::interior;

    Real root_separation() const;
};

// R(lambda) with cuts on the two stored segments; OnCut within a hair of a cut
Complex R_eval(const Complex& lambda, const SpectralCurve& curve);
// boundary value on cut index 1 or 2 at parameter t, from the given side
Complex R_eval_side(const SpectralCurve& curve, int cut_index, const Real& t, int side_sign);

struct BoutrouxResidual {
    Real Ba;  // Re of the a-cycle integral of mu dlambda
    Real Bb;  // Re of the b-cycle integral
};

// closed polyline encircling cut1 only (counterclockwise)
Path make_a_loop(const SpectralCurve& curve);
// polyline from lam1 to lam1_inv between the cuts (both ends are branch points)
Path make_b_path(const SpectralCurve& curve, int elbow_side = +1);

// integral of f over make_b_path with sqrt substitutions at both endpoints
Complex integrate_b_path(const Integrand& f, const SpectralCurve& curve,
                         const QuadOptions& opt = {}, int elbow_side = +1);

// assemble a labeled curve from (y, C); throws DegenerateCurve when roots
// collide within separation 1e-8
SpectralCurve make_curve(const Complex& y, const Complex& C);

BoutrouxResidual boutroux_residual(const Complex& y, const Complex& C);
BoutrouxResidual boutroux_residual(const SpectralCurve& curve);

// d(Ba,Bb)/d(Re C, Im C) determinant (strictly negative at interior solutions)
Real boutroux_jacobian_det(const SpectralCurve& curve);

// C-tilde solving the r=0 renormalized Boutroux system at angle theta
// (C = y * C_tilde in the small-|y| limit); theta = 0 by bisection of J,
// other theta by Newton continuation from 0
Complex solve_smallY_seed(const Real& theta);

// the scalar J whose unique positive root is C_tilde(theta=0)
Real smallY_J(const Real& c_tilde);

// residuals of the r=0 renormalized system at general (C_tilde, theta)
std::array<Real, 2> smallY_residuals(const Complex& c_tilde, const Real& theta);

// Boutroux solve at y in the right half of the eye, by radial continuation
// from the small-|y| seed; results cached per ray
SpectralCurve solve_boutroux(const Complex& y);

} // namespace p3r

#endif
