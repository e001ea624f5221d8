#include "p3r/spectral.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "p3r/errors.hpp"
#include "p3r/landscape.hpp"
#include "p3r/newton.hpp"
#include "p3r/roots.hpp"

namespace p3r {

Complex quartic_P(const Complex& lambda, const Complex& y, const Complex& C) {
    Complex y2_4 = y * y / 4;
    Complex iy_2 = I_unit * y / 2;
    // Horner in lambda
    return (((-y2_4 * lambda + iy_2) * lambda + C) * lambda + iy_2) * lambda - y2_4;
}

Complex exterior_C(const Complex& y) { return -(2 * y * y - Complex(1)) / 4; }

Complex SegmentSqrt::operator()(const Complex& lambda) const {
    Complex zeta = (lambda - mid) / half;
    Complex inv2 = Complex(1) / (zeta * zeta);
    return half * zeta * sqrt(Complex(1) - inv2);
}

Complex SegmentSqrt::side(const Real& t, int side_sign) const {
    // principal sqrt of (1 - 1/zeta^2) approached from Im(zeta) = side*0+
    // collapses to i * side * half * sqrt(1-t^2) for every t in (-1,1)
    return I_unit * side_sign * half * sqrt(1 - t * t);
}

Real SpectralCurve::root_separation() const {
    const Complex r[4] = {lam0, lam1, lam1_inv, lam0_inv};
    Real best(-1);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Real d = abs(r[i] - r[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

Complex R_eval(const Complex& lambda, const SpectralCurve& curve) {
    Real scale = std::max(abs(curve.cut1.half), abs(curve.cut2.half));
    Real hair = scale * pow2(-(long)current_precision_bits() / 2);
    if (point_segment_distance(lambda, curve.cut1.a, curve.cut1.b) < hair ||
        point_segment_distance(lambda, curve.cut2.a, curve.cut2.b) < hair)
        throw OnCut("R_eval: lambda on a branch cut; use R_eval_side");
    return (I_unit * curve.y / 2) * curve.cut1(lambda) * curve.cut2(lambda);
}

Complex R_eval_side(const SpectralCurve& curve, int cut_index, const Real& t, int side_sign) {
    const SegmentSqrt& on = (cut_index == 1) ? curve.cut1 : curve.cut2;
    const SegmentSqrt& off = (cut_index == 1) ? curve.cut2 : curve.cut1;
    return (I_unit * curve.y / 2) * on.side(t, side_sign) * off(on.point(t));
}

namespace {

// involution-pair the four roots and label so that cut1 = [lam0, lam1] holds
// the pair continuing the outer (|lambda| > 1 at y > 0) configuration
std::array<Complex, 4> label_roots(std::vector<Complex> roots,
                                   const std::array<Complex, 4>* prev) {
    if (roots.size() != 4) throw DegenerateCurve("quartic does not have 4 roots");
    if (prev) {
        // nearest matching against the previous labels
        std::array<Complex, 4> out;
        std::array<bool, 4> used{};
        for (int k = 0; k < 4; ++k) {
            int best = -1;
            Real bd(0);
            for (int j = 0; j < 4; ++j) {
                if (used[j]) continue;
                Real d = abs(roots[j] - (*prev)[k]);
                if (best < 0 || d < bd) { best = j; bd = d; }
            }
            used[best] = true;
            out[k] = roots[best];
        }
        return out;
    }
    // pair reciprocals greedily
    int partner_of_0 = 1;
    Real best(-1);
    for (int j = 1; j < 4; ++j) {
        Real d = abs(roots[0] * roots[j] - Complex(1));
        if (best < 0 || d < best) { best = d; partner_of_0 = j; }
    }
    int others[2], oi = 0;
    for (int j = 1; j < 4; ++j)
        if (j != partner_of_0) others[oi++] = j;
    // outer member of each pair (larger modulus) goes to cut1
    auto outer_inner = [](const Complex& a, const Complex& b) {
        return abs(a) >= abs(b) ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    auto [o1, i1] = outer_inner(roots[0], roots[partner_of_0]);
    auto [o2, i2] = outer_inner(roots[others[0]], roots[others[1]]);
    // lam0 = larger of the outer members
    if (abs(o1) < abs(o2)) { std::swap(o1, o2); std::swap(i1, i2); }
    return {o1, o2, Complex(1) / o2, Complex(1) / o1};
}

std::vector<Complex> quartic_roots(const Complex& y, const Complex& C) {
    std::vector<Complex> coeffs = {-y * y / 4, I_unit * y / 2, C, I_unit * y / 2, -y * y / 4};
    auto roots = find_roots_poly(coeffs, current_precision_bits());
    // polish with plain Newton at ambient precision
    for (auto& r : roots) {
        for (int it = 0; it < 4; ++it) {
            Complex p, dp;
            poly_eval2(coeffs, r, p, dp);
            if (abs(dp) == 0) break;
            r -= p / dp;
        }
    }
    return roots;
}

SpectralCurve curve_from_labels(const Complex& y, const Complex& C,
                                const std::array<Complex, 4>& lab) {
    SpectralCurve c;
    c.y = y;
    c.C = C;
    c.lam0 = lab[0];
    c.lam1 = lab[1];
    c.lam1_inv = lab[2];
    c.lam0_inv = lab[3];
    c.cut1 = SegmentSqrt(c.lam0, c.lam1);
    c.cut2 = SegmentSqrt(c.lam1_inv, c.lam0_inv);
    c.regime = CurveRegime::interior;
    return c;
}

} // namespace

SpectralCurve make_curve(const Complex& y, const Complex& C) {
    auto roots = quartic_roots(y, C);
    auto lab = label_roots(roots, nullptr);
    SpectralCurve c = curve_from_labels(y, C, lab);
    if (c.root_separation() < Real("1e-8"))
        throw DegenerateCurve("roots of P closer than 1e-8");
    return c;
}

namespace {

// distance from the origin to the nearest cut fixes the local scale for
// keeping contours away from the integrand's pole at 0
Real origin_clearance(const SpectralCurve& c) {
    Real d1 = point_segment_distance(Complex(0), c.cut1.a, c.cut1.b);
    Real d2 = point_segment_distance(Complex(0), c.cut2.a, c.cut2.b);
    return std::min(d1, d2) / 2;
}

bool segment_clear(const Complex& a, const Complex& b, const SpectralCurve& c,
                   const Real& clear, bool skip_cut1_end = false, bool skip_cut2_end = false) {
    // shrink obstacle segments slightly when an endpoint is shared
    auto shrunk = [](const Complex& p, const Complex& q, const Real& f) {
        Complex d = q - p;
        return std::make_pair(p + f * d, q - f * d);
    };
    Real f("0.02");
    auto [c1a, c1b] = skip_cut1_end ? shrunk(c.cut1.a, c.cut1.b, f)
                                    : std::make_pair(c.cut1.a, c.cut1.b);
    auto [c2a, c2b] = skip_cut2_end ? shrunk(c.cut2.a, c.cut2.b, f)
                                    : std::make_pair(c.cut2.a, c.cut2.b);
    if (segments_intersect(a, b, c1a, c1b)) return false;
    if (segments_intersect(a, b, c2a, c2b)) return false;
    if (point_segment_distance(Complex(0), a, b) < clear) return false;
    return true;
}

} // namespace

Path make_a_loop(const SpectralCurve& c) {
    // rectangle around cut1 in the cut frame; the margin is half the frame
    // distance of the nearest excluded point (the other cut's endpoints and
    // the origin), so the loop encircles cut1 and nothing else
    Complex h = c.cut1.half, m = c.cut1.mid;
    Real margin("0.45");
    for (const Complex& q : {c.cut2.a, c.cut2.b, Complex(0)}) {
        Complex zeta = (q - m) / h;
        Real excess = std::max(abs(zeta.re) - 1, abs(zeta.im));
        if (excess <= 0)
            throw PathBlocked("make_a_loop: excluded point on the cut axis");
        margin = std::min(margin, excess / 2);
    }
    Complex u = h * (1 + margin), v = I_unit * h * margin;
    std::vector<Complex> pts = {m - u - v, m + u - v, m + u + v, m - u + v};
    for (int i = 0; i < 4; ++i) {
        const Complex& a = pts[i];
        const Complex& b = pts[(i + 1) % 4];
        if (segments_intersect(a, b, c.cut2.a, c.cut2.b))
            throw PathBlocked("make_a_loop: rectangle touches the second cut");
    }
    // counterclockwise orientation via the shoelace sign
    Real area(0);
    for (int i = 0; i < 4; ++i) {
        const Complex& a = pts[i];
        const Complex& b = pts[(i + 1) % 4];
        area += a.re * b.im - b.re * a.im;
    }
    if (area < 0) std::reverse(pts.begin(), pts.end());
    return Path::closed(std::move(pts));
}

Path make_b_path(const SpectralCurve& c, int elbow_side) {
    Complex a = c.lam1, b = c.lam1_inv;
    Complex dir = (b - a) / abs(b - a);
    Complex nrm = I_unit * dir * elbow_side;
    Complex mid = (a + b) / 2;
    Real len = abs(b - a);
    Real clear = origin_clearance(c);
    for (int k = 0; k < 40; ++k) {
        Real rho = len * Real("0.6") * pow(Real("0.75"), k);
        Complex elbow = mid + rho * nrm;
        if (segment_clear(a, elbow, c, clear, true, false) &&
            segment_clear(elbow, b, c, clear, false, true))
            return Path({a, elbow, b});
    }
    throw PathBlocked("make_b_path: no clear elbow between the cuts");
}

Complex integrate_b_path(const Integrand& f, const SpectralCurve& c,
                         const QuadOptions& opt, int elbow_side) {
    Path p = make_b_path(c, elbow_side);
    const auto& n = p.nodes();
    Complex total(0);
    for (std::size_t i = 0; i + 1 < n.size(); ++i)
        total += integrate_segment_sqrt(f, n[i], n[i + 1], i == 0, i + 2 == n.size(), opt);
    return total;
}

namespace {

struct CycleIntegrals {
    Complex a_mu, b_mu;    // cycle integrals of mu = R/lambda^2
    Complex a_inv, b_inv;  // cycle integrals of 1/R
};

CycleIntegrals cycle_integrals(const SpectralCurve& c, const Real& tol) {
    QuadOptions opt;
    opt.tol = tol;
    Path loop = make_a_loop(c);
    auto mu = [&](const Complex& l) { return R_eval(l, c) / (l * l); };
    auto inv = [&](const Complex& l) { return Complex(1) / R_eval(l, c); };
    CycleIntegrals ci;
    ci.a_mu = integrate_path(mu, loop, opt);
    ci.a_inv = integrate_path(inv, loop, opt);
    ci.b_mu = 2 * integrate_b_path(mu, c, opt);
    ci.b_inv = 2 * integrate_b_path(inv, c, opt);
    return ci;
}

} // namespace

BoutrouxResidual boutroux_residual(const SpectralCurve& curve) {
    auto ci = cycle_integrals(curve, Real("1e-13"));
    return {ci.a_mu.re, ci.b_mu.re};
}

BoutrouxResidual boutroux_residual(const Complex& y, const Complex& C) {
    return boutroux_residual(make_curve(y, C));
}

Real boutroux_jacobian_det(const SpectralCurve& curve) {
    auto ci = cycle_integrals(curve, Real("1e-13"));
    // quarter of Im(Ia * conj(Ib)) over a canonical basis; the stored b path
    // (lam1 -> lam1_inv east of the cuts) intersects the counterclockwise
    // a loop with index -1, so the canonical cycle is its reversal
    return -(ci.a_inv * conj(ci.b_inv)).im / 4;
}

// ---------------------------------------------------------------------------
// small-|y| seed

Real smallY_J(const Real& ct) {
    // J(ct) = int_0^T (t-ct) dt / (sqrt(t) sqrt(1+2ct t-t^2)), T = ct+sqrt(ct^2+1);
    // substitution t = T sin^2(phi) removes both endpoint singularities
    Real T = ct + sqrt(ct * ct + 1);
    Real Tm = ct - sqrt(ct * ct + 1);
    auto f = [&](const Complex& phi_c) -> Complex {
        Real phi = phi_c.re;
        Real s = sin(phi);
        Real t = T * s * s;
        return Complex(2 * (t - ct) / sqrt(t - Tm));
    };
    return integrate_segment(f, Complex(0), Complex(pi() / 2)).re;
}

std::array<Real, 2> smallY_residuals(const Complex& ct, const Real& theta) {
    // mu0 = e^{i(theta+pi/2)/2} (lambda - i ct) / sqrt(lambda (lambda-lp)(lambda-lm));
    // residuals are Re of the integrals from 0 to the two roots lp, lm
    Complex ict = I_unit * ct;
    Complex s = sqrt(ct * ct + Complex(1));
    Complex lp = I_unit * (ct + s), lm = I_unit * (ct - s);
    Complex phase = exp(I_unit * (theta + pi() / 2) / 2);

    auto leg = [&](const Complex& target, const Complex& other) -> Complex {
        // frame-fixed branches along the segment lambda = t * target
        Complex sq_t = sqrt(target);        // sqrt(lambda) = sqrt(target) sqrt(t)
        Complex sq_mt = sqrt(-target);      // sqrt(lambda-target) = sqrt(-target) sqrt(1-t)
        // sqrt(lambda - other): values trace the segment [-other, target-other];
        // anchor a continuous log at the segment's closest point to the origin
        Complex w0 = -other, w1 = target - other;
        Complex dw = w1 - w0;
        Real tt = -(w0.re * dw.re + w0.im * dw.im) / norm(dw);
        if (tt < 0) tt = 0;
        if (tt > 1) tt = 1;
        Real phi0 = arg(w0 + tt * dw);
        auto sqrt_about = [phi0](const Complex& w) {
            Real a = phi0 + arg(w * exp(Complex(Real(0), -phi0)));
            return exp(Complex(log(abs(w)) / 2, a / 2));
        };
        auto f = [&](const Complex& tc) -> Complex {
            const Complex& t = tc;
            Complex lam = t * target;
            Complex den = sq_t * sqrt(t) * sq_mt * sqrt(Complex(1) - t) * sqrt_about(lam - other);
            return phase * (lam - ict) / den * target;  // dlambda = target dt
        };
        return integrate_segment_sqrt(f, Complex(0), Complex(1), true, true);
    };
    Complex to_lm = leg(lm, lp);
    Complex to_lp = leg(lp, lm);
    return {to_lm.re, to_lp.re};
}

namespace {

std::mutex seed_mutex;
std::map<std::string, Complex> seed_cache;

Complex seed_theta0() {
    Real lo("1e-6"), hi("4");
    Real flo = smallY_J(lo), fhi = smallY_J(hi);
    if ((flo > 0) == (fhi > 0))
        throw BracketFailure("smallY seed: J has no sign change on (0,4)");
    for (int it = 0; it < 220; ++it) {
        Real mid = (lo + hi) / 2;
        Real fm = smallY_J(mid);
        if (abs(fm) < Real("1e-30") || hi - lo < Real("1e-30")) return Complex(mid);
        if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; }
        else hi = mid;
    }
    return Complex((lo + hi) / 2);
}

} // namespace

Complex solve_smallY_seed(const Real& theta) {
    Real half_pi = pi() / 2;
    if (abs(abs(theta) - half_pi) <= Real("0.02"))
        throw ContinuationStall("smallY seed: theta too close to +-pi/2");
    std::string key;
    {
        std::ostringstream os;
        os.precision(30);
        os << theta;
        key = os.str();
    }
    {
        std::lock_guard<std::mutex> lock(seed_mutex);
        auto it = seed_cache.find(key);
        if (it != seed_cache.end()) return it->second;
    }
    // anchor at theta = 0, or at theta = +-pi via the lambda -> -lambda,
    // C~ -> -C~ symmetry of the r = 0 system
    Complex ct = seed_theta0();
    Real cur(0);
    if (abs(theta) > half_pi) {
        ct = -ct;
        cur = theta > 0 ? pi() : -pi();
    }
    Real target = theta;
    Real step = target >= cur ? Real("0.1") : Real("-0.1");
    auto correct = [&](Complex guess, const Real& th) {
        Fn2 F = [&th](const Vec2& x) -> Vec2 {
            auto r = smallY_residuals(Complex(x[0], x[1]), th);
            return {r[0], r[1]};
        };
        Vec2 sol = newton2(F, fd_jacobian(F, Real("1e-20")), {guess.re, guess.im}, Real("1e-24"));
        return Complex(sol[0], sol[1]);
    };
    if (theta != cur) {
        while (abs(target - cur) > Real("1e-40")) {
            Real h = step;
            if (abs(target - cur) < abs(h)) h = target - cur;
            bool ok = false;
            for (int halve = 0; halve < 12 && !ok; ++halve, h /= 2) {
                try {
                    ct = correct(ct, cur + h);
                    cur = cur + h;
                    ok = true;
                } catch (const NumericError&) {
                }
            }
            if (!ok) throw ContinuationStall("smallY seed: theta continuation stalled");
        }
    }
    std::lock_guard<std::mutex> lock(seed_mutex);
    seed_cache.emplace(key, ct);
    return ct;
}

// ---------------------------------------------------------------------------
// radial continuation

namespace {

struct RayCache {
    // sorted by r
    std::vector<Real> r;
    std::vector<Complex> C;
    std::vector<std::array<Complex, 4>> labels;
};

std::mutex ray_mutex;
std::map<std::string, RayCache> ray_cache;

// solved points for warm-starting nearby solves (grid sweeps, FD stencils)
struct SolvedPoint {
    Complex y;
    Complex C;
    std::array<Complex, 4> labels;
};
std::vector<SolvedPoint> solved_points;

std::string theta_key(const Real& theta) {
    std::ostringstream os;
    os.precision(34);
    os << theta;
    return os.str();
}

SpectralCurve labeled_curve(const Complex& y, const Complex& C,
                            const std::array<Complex, 4>* prev) {
    auto roots = quartic_roots(y, C);
    auto lab = label_roots(roots, prev);
    return curve_from_labels(y, C, lab);
}

Complex newton_correct(const Complex& y, Complex C, std::array<Complex, 4>& labels,
                       const Real& tol) {
    Fn2 F = [&](const Vec2& x) -> Vec2 {
        SpectralCurve c = labeled_curve(y, Complex(x[0], x[1]), &labels);
        if (c.root_separation() < Real("1e-9"))
            throw DegenerateCurve("roots collided during Newton");
        auto ci = cycle_integrals(c, Real("1e-13"));
        return {ci.a_mu.re, ci.b_mu.re};
    };
    Jac2 J = [&](const Vec2& x) -> Mat2 {
        SpectralCurve c = labeled_curve(y, Complex(x[0], x[1]), &labels);
        auto ci = cycle_integrals(c, Real("1e-13"));
        // dBa/du = Re(Ia)/2, dBa/dv = -Im(Ia)/2 with Ia the a-cycle of dl/R
        return {{{ci.a_inv.re / 2, -ci.a_inv.im / 2},
                 {ci.b_inv.re / 2, -ci.b_inv.im / 2}}};
    };
    Vec2 sol = newton2(F, J, {C.re, C.im}, tol);
    Complex Cs(sol[0], sol[1]);
    SpectralCurve c = labeled_curve(y, Cs, &labels);
    labels = {c.lam0, c.lam1, c.lam1_inv, c.lam0_inv};
    return Cs;
}

} // namespace

SpectralCurve solve_boutroux(const Complex& y) {
    if (!(y.re > 0))
        throw OutsideDomain("solve_boutroux: Re y must be positive (E_L via symmetry)");
    {
        Complex p = p_branch(y, BranchTag::outer);
        if (!(re_V(p, y) > 0))
            throw OutsideDomain("solve_boutroux: y outside the eye");
    }
    Real theta = arg(y);
    Real r_target = abs(y);
    Complex dir = y / r_target;

    // warm start from the nearest previously solved point when close enough
    {
        SolvedPoint near;
        bool have = false;
        Real best(0);
        {
            std::lock_guard<std::mutex> lock(ray_mutex);
            for (const auto& sp : solved_points) {
                Real d = abs(sp.y - y);
                if (!have || d < best) {
                    best = d;
                    near = sp;
                    have = true;
                }
            }
        }
        if (have && best < Real("0.04")) {
            try {
                auto labels = near.labels;
                Complex C = newton_correct(y, near.C, labels, Real("1e-11"));
                SpectralCurve out = labeled_curve(y, C, &labels);
                if (out.root_separation() >= Real("1e-8")) {
                    std::lock_guard<std::mutex> lock(ray_mutex);
                    if (solved_points.size() < 20000)
                        solved_points.push_back({y, C, labels});
                    return out;
                }
            } catch (const NumericError&) {
                // fall through to the radial continuation
            }
        }
    }

    std::string key = theta_key(theta);
    RayCache local;
    {
        std::lock_guard<std::mutex> lock(ray_mutex);
        local = ray_cache[key];
    }

    Real r0 = std::min(Real("0.02"), r_target);
    Complex C;
    std::array<Complex, 4> labels;
    Real r_cur;

    // resume from the longest cached prefix at or below r_target
    int resume = -1;
    for (std::size_t i = 0; i < local.r.size(); ++i)
        if (local.r[i] <= r_target + Real("1e-30")) resume = static_cast<int>(i);
    if (resume >= 0) {
        r_cur = local.r[resume];
        C = local.C[resume];
        labels = local.labels[resume];
    } else {
        Complex ct = solve_smallY_seed(theta);
        r_cur = r0;
        Complex y0 = r0 * dir;
        C = y0 * ct;
        SpectralCurve c0 = labeled_curve(y0, C, nullptr);
        labels = {c0.lam0, c0.lam1, c0.lam1_inv, c0.lam0_inv};
        C = newton_correct(y0, C, labels, Real("1e-11"));
        local.r.push_back(r_cur);
        local.C.push_back(C);
        local.labels.push_back(labels);
    }

    Real dr_full("0.01");
    Complex C_prev = C;
    Real r_prev = r_cur;
    while (r_cur < r_target - Real("1e-30")) {
        Real h = std::min(dr_full, r_target - r_cur);
        bool ok = false;
        for (int halve = 0; halve < 14 && !ok; ++halve) {
            Real r_next = r_cur + h;
            // linear prediction along the ray
            Complex guess = C;
            if (r_cur > r_prev)
                guess = C + (C - C_prev) * Real((r_next - r_cur) / (r_cur - r_prev));
            try {
                auto trial_labels = labels;
                Complex Cn = newton_correct(r_next * dir, guess, trial_labels, Real("1e-11"));
                C_prev = C;
                r_prev = r_cur;
                C = Cn;
                labels = trial_labels;
                r_cur = r_next;
                ok = true;
            } catch (const NumericError&) {
                h /= 2;
                if (h < Real("1e-6"))
                    throw ContinuationStall("solve_boutroux: radial continuation stalled near the eye boundary");
            }
        }
        if (!ok)
            throw ContinuationStall("solve_boutroux: radial continuation stalled");
        local.r.push_back(r_cur);
        local.C.push_back(C);
        local.labels.push_back(labels);
    }

    {
        std::lock_guard<std::mutex> lock(ray_mutex);
        auto& entry = ray_cache[key];
        if (entry.r.size() < local.r.size()) entry = local;
        if (solved_points.size() < 20000) solved_points.push_back({y, C, labels});
    }
    SpectralCurve out = labeled_curve(y, C, &labels);
    if (out.root_separation() < Real("1e-8"))
        throw DegenerateCurve("solve_boutroux: near-degenerate curve at target y");
    return out;
}

} // namespace p3r
