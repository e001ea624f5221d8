#include "p3r/landscape.hpp"

#include <mutex>

#include "p3r/errors.hpp"

namespace p3r {

Complex phi(const Complex& lambda) { return lambda - Complex(1) / lambda; }

Complex V_eval(const Complex& lambda, const Complex& y) {
    if (lambda.re == 0 && lambda.im == 0)
        throw UsageError("V_eval: lambda must be nonzero");
    return -log(lambda) - I_unit * y * phi(lambda);
}

Real re_V(const Complex& lambda, const Complex& y) {
    Complex f = I_unit * y * phi(lambda);
    return -log(abs(lambda)) - f.re;
}

namespace {

// closed-form continuation through the right eyebrow, valid for Re y > 0 or
// |Im y| > 1/2 (principal square roots cut leftward from +-i/2)
Complex p_blue_formula(const Complex& y) {
    Complex half_i(Real(0), Real(1) / 2);
    Complex s = sqrt(y - half_i) * sqrt(y + half_i);
    return (I_unit / 2 - I_unit * s) / y;
}

// continuation through the left eyebrow, valid for Re y < 0 or |Im y| > 1/2
// (cuts extend rightward from +-i/2)
Complex p_red_formula(const Complex& y) {
    Complex half_i(Real(0), Real(1) / 2);
    Complex s = sqrt(-(y - half_i)) * sqrt(-(y + half_i));
    return (I_unit / 2 + I_unit * s) / y;
}

} // namespace

Complex p_branch(const Complex& y, BranchTag tag) {
    if (y.re == 0 && y.im == 0) {
        if (tag == BranchTag::blue_continuation) return Complex(0);
        throw OnBranchCut("p_branch: y = 0");
    }
    switch (tag) {
    case BranchTag::blue_continuation: {
        if (y.re >= 0 || abs(y.im) > Real(1) / 2) return p_blue_formula(y);
        // left half of the eye strip: reciprocate the valid branch inside E
        Complex v = p_red_formula(y);
        return (re_V(v, y) < 0) ? Complex(1) / v : v;
    }
    case BranchTag::red_continuation: {
        if (y.re <= 0 || abs(y.im) > Real(1) / 2) return p_red_formula(y);
        Complex v = p_blue_formula(y);
        return (re_V(v, y) > 0) ? Complex(1) / v : v;
    }
    case BranchTag::outer:
        if (y.re == 0 && abs(y.im) <= Real(1) / 2)
            throw OnBranchCut("p_branch: y on the branch cut I");
        return (y.re >= 0) ? p_blue_formula(y) : p_red_formula(y);
    }
    throw UsageError("p_branch: bad tag");
}

namespace {

Real boundary_radius_at(const Real& theta) {
    // Re V(p(y);y) > 0 inside E_R, < 0 outside; bisect along the ray
    Complex dir(cos(theta), sin(theta));
    auto f = [&](const Real& r) {
        Complex y = r * dir;
        return re_V(p_branch(y, BranchTag::outer), y);
    };
    Real lo("0.05"), hi("0.6");
    Real flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw BracketFailure("eye boundary: no sign change on the ray");
    for (int it = 0; it < 200; ++it) {
        Real mid = (lo + hi) / 2;
        if (hi - lo < Real("1e-10") * (1 + mid)) return mid;
        Real fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

} // namespace

Real eye_crossing_radius(const Real& theta) { return boundary_radius_at(theta); }

EyeGeometry trace_eye_boundary(int samples) {
    if (samples < 16) throw UsageError("trace_eye_boundary: samples must be >= 16");
    EyeGeometry g;
    Real half_pi = pi() / 2;
    std::vector<Complex> right;
    right.push_back(g.corner_bottom);
    g.thetas.reserve(samples);
    g.radii.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        // open grid in (-pi/2, pi/2); corners appended exactly
        Real theta = half_pi * (2 * Real(i + 1) / (samples + 1) - 1);
        Real r = boundary_radius_at(theta);
        g.thetas.push_back(theta);
        g.radii.push_back(r);
        right.push_back(r * Complex(cos(theta), sin(theta)));
    }
    right.push_back(g.corner_top);
    std::vector<Complex> left(right.size());
    for (std::size_t i = 0; i < right.size(); ++i) left[i] = -right[i];
    g.right_eyebrow = Path(std::move(right));
    g.left_eyebrow = Path(std::move(left));
    g.real_halfwidth = boundary_radius_at(Real(0));
    return g;
}

const EyeGeometry& eye() {
    static std::mutex m;
    static EyeGeometry g;
    static bool built = false;
    std::lock_guard<std::mutex> lock(m);
    if (!built) {
        g = trace_eye_boundary(400);
        built = true;
    }
    return g;
}

Real EyeGeometry::boundary_radius(const Real& theta) const {
    Real half_pi = pi() / 2;
    Real at = abs(theta);
    if (at >= half_pi) return Real(1) / 2;
    // reflection symmetry across the imaginary axis handles |theta| > pi/2 upstream
    if (theta <= thetas.front()) {
        // interpolate toward the corner at -i/2 (radius 1/2)
        Real t = (theta + half_pi) / (thetas.front() + half_pi);
        return Real(1) / 2 + t * (radii.front() - Real(1) / 2);
    }
    if (theta >= thetas.back()) {
        Real t = (half_pi - theta) / (half_pi - thetas.back());
        return Real(1) / 2 + t * (radii.back() - Real(1) / 2);
    }
    std::size_t lo = 0, hi = thetas.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (thetas[mid] <= theta) lo = mid; else hi = mid;
    }
    Real t = (theta - thetas[lo]) / (thetas[hi] - thetas[lo]);
    return radii[lo] + t * (radii[hi] - radii[lo]);
}

bool EyeGeometry::inside_eye(const Complex& y) const {
    Real r = abs(y);
    if (r == 0) return true;
    Real theta = arg(y);
    Real half_pi = pi() / 2;
    if (abs(theta) > half_pi) theta = (theta > 0 ? pi() : -pi()) - theta;
    return r < boundary_radius(theta);
}

Real EyeGeometry::distance_to_eye(const Complex& y) const {
    if (inside_eye(y)) return Real(0);
    Real d = point_path_distance(y, right_eyebrow);
    Real dl = point_path_distance(y, left_eyebrow);
    if (dl < d) d = dl;
    // the eye boundary also includes nothing else: E is bounded by the two
    // eyebrows meeting at +-i/2
    return d;
}

TubeResult in_tube(const Complex& y, const TubeParams& params) {
    if (y.re == 0 && y.im == 0) throw UsageError("in_tube: y must be nonzero");
    Complex p = p_branch(y, BranchTag::outer);
    Real c_boundary = re_V(p, y);             // zero exactly on the eyebrows
    Real coordinate = re_V(Complex(1) / p, y);  // = -c_boundary
    bool inside = abs(arg(y)) <= pi() / 2 - params.delta1 &&
                  abs(c_boundary) <= params.delta2;
    return {inside, coordinate};
}

} // namespace p3r
