#ifndef P3R_LANDSCAPE_HPP
#define P3R_LANDSCAPE_HPP

#include "p3r/path.hpp"

namespace p3r {

// Phase V(lambda;y) = -log(lambda) - i y (lambda - 1/lambda), the equilibrium
// branches p(y), the eye E bounded by the two eyebrows, and the tubular
// neighborhood T of the right eyebrow.

// principal-log V; Re V is branch independent
Complex V_eval(const Complex& lambda, const Complex& y);
Real re_V(const Complex& lambda, const Complex& y);

// lambda - 1/lambda
Complex phi(const Complex& lambda);

enum class BranchTag {
    outer,              // analytic on C minus the segment I = [-i/2, i/2]
    blue_continuation,  // p^0: analytic except on the left eyebrow, zero at 0
    red_continuation,   // p^inf: analytic except on the right eyebrow, pole at 0
};

Complex p_branch(const Complex& y, BranchTag tag);

struct EyeGeometry {
    Path right_eyebrow;               // from -i/2 through the positive reals to +i/2
    Path left_eyebrow;                // reflection through the origin
    std::vector<Real> thetas;         // sample angles of the right eyebrow
    std::vector<Real> radii;          // r(theta) on the right eyebrow
    Real real_halfwidth{0};           // r(0), about 0.3314
    Complex corner_top{Real(0), Real(1) / 2};
    Complex corner_bottom{Real(0), Real(-1) / 2};

    // radius of the eye boundary along direction theta in (-pi/2, pi/2),
    // linearly interpolated between samples
    Real boundary_radius(const Real& theta) const;
    bool inside_eye(const Complex& y) const;
    Real distance_to_eye(const Complex& y) const;
};

// Bisection of Re V(p(r e^{i theta}); r e^{i theta}) = 0 over a theta grid.
EyeGeometry trace_eye_boundary(int samples = 400);

// single boundary crossing radius along the ray of angle theta, bisected to
// 1e-10 (the right eyebrow for |theta| < pi/2; the left one by reflection)
Real eye_crossing_radius(const Real& theta);

// shared geometry at default resolution
const EyeGeometry& eye();

struct TubeParams {
    Real delta1 = Real("0.2");
    Real delta2 = Real("0.08");
};

struct TubeResult {
    bool inside;
    Real coordinate;  // Re V(p(y)^{-1}; y): negative inside the eye
};

TubeResult in_tube(const Complex& y, const TubeParams& params = {});

} // namespace p3r

#endif
