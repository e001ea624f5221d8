#ifndef P3R_QUADRATURE_HPP
#define P3R_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "p3r/path.hpp"

namespace p3r {

using Integrand = std::function<Complex(const Complex&)>;

// Gauss-Legendre nodes/weights on [-1,1], computed once per (n, precision)
// by Newton refinement of the Legendre recurrence.
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussRule& gauss_rule(unsigned n);

struct QuadOptions {
    Real tol = Real("1e-12");   // absolute error target per segment
    int max_depth = 20;
};

// Adaptive line integral of f over one straight segment [a,b].
Complex integrate_segment(const Integrand& f, const Complex& a, const Complex& b,
                          const QuadOptions& opt = {});

// As above but with an inverse-square-root integrable endpoint singularity
// (f ~ c/sqrt(lambda-a) or a branch-point zero of the same order); the
// endpoint is folded out by the substitution lambda = a + (b-a) s^2.
Complex integrate_segment_sqrt(const Integrand& f, const Complex& a, const Complex& b,
                               bool sqrt_at_a, bool sqrt_at_b,
                               const QuadOptions& opt = {});

// Line integral along a polyline, segment by segment.  Error target is per
// segment; throws NonConvergence past the refinement depth cap.
Complex integrate_path(const Integrand& f, const Path& path, const Real& tol);
Complex integrate_path(const Integrand& f, const Path& path, const QuadOptions& opt = {});

// Integral over the outward ray from q to infinity in direction q/|q|,
// mapped to a finite interval via lambda = q/t.  Requires f decaying at
// least like 1/lambda^2.
Complex integrate_ray_to_infinity(const Integrand& f, const Complex& q,
                                  const QuadOptions& opt = {});

} // namespace p3r

#endif
