#include "p3r/elliptic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "p3r/errors.hpp"
#include "p3r/landscape.hpp"

namespace p3r {

namespace {

constexpr int kBElbowSide = +1;  // side of the path realizing the b cycle

Real quad_tol() { return Real("1e-13"); }

// ---- generic route finding in the cut complement ----

bool route_clear(const Complex& a, const Complex& b, const SpectralCurve& c,
                 const Real& clear) {
    if (segments_intersect(a, b, c.cut1.a, c.cut1.b)) return false;
    if (segments_intersect(a, b, c.cut2.a, c.cut2.b)) return false;
    if (point_segment_distance(c.cut1.a, a, b) < clear) return false;
    if (point_segment_distance(c.cut1.b, a, b) < clear) return false;
    if (point_segment_distance(c.cut2.a, a, b) < clear) return false;
    if (point_segment_distance(c.cut2.b, a, b) < clear) return false;
    return true;
}

// polyline from src to dst avoiding both cuts; tries direct, then one
// waypoint on surrounding rings, then two.  Clearance is a hair above zero:
// targets may legitimately sit close to a cut (kappa under the second cut),
// and the integrands are analytic up to the cuts themselves.
std::vector<Complex> find_route(const Complex& src, const Complex& dst,
                                const SpectralCurve& c) {
    Real clear = Real("1e-3") * abs(c.cut2.half);
    if (route_clear(src, dst, c, clear)) return {src, dst};
    Real ring = 0;
    for (const Complex& p : {c.lam0, c.lam1, c.lam1_inv, c.lam0_inv, src, dst})
        ring = std::max(ring, abs(p));
    ring *= Real("1.5");
    const int K = 24;
    std::vector<Complex> cand;
    for (const char* frac : {"1", "0.5", "0.33", "0.15", "0.08"})
        for (int i = 0; i < K; ++i) {
            Real a = 2 * pi() * i / K + Real("0.1");
            cand.push_back(ring * Real(frac) * Complex(cos(a), sin(a)));
        }
    for (const Complex& w : cand)
        if (route_clear(src, w, c, clear) && route_clear(w, dst, c, clear))
            return {src, w, dst};
    for (const Complex& w1 : cand)
        for (const Complex& w2 : cand)
            if (route_clear(src, w1, c, clear) && route_clear(w1, w2, c, clear) &&
                route_clear(w2, dst, c, clear))
                return {src, w1, w2, dst};
    throw PathBlocked("find_route: no clearance-respecting polyline found");
}

// ---- Abel-type integrals ----

// integral of 1/R from lam0 to a finite target, peeling the branch point
Complex int_invR_from_lam0(const SpectralCurve& c, const Complex& target) {
    auto f = [&](const Complex& l) { return Complex(1) / R_eval(l, c); };
    QuadOptions opt;
    opt.tol = quad_tol();
    // leave lam0 along the continuation of the cut direction
    Complex out_dir = c.lam0 - c.lam1;
    Complex q0 = c.lam0 + Real("0.5") * out_dir;
    Complex total = integrate_segment_sqrt(f, c.lam0, q0, true, false, opt);
    auto route = find_route(q0, target, c);
    for (std::size_t i = 0; i + 1 < route.size(); ++i)
        total += integrate_segment(f, route[i], route[i + 1], opt);
    return total;
}

Complex int_invR_from_lam0_to_infinity(const SpectralCurve& c) {
    auto f = [&](const Complex& l) { return Complex(1) / R_eval(l, c); };
    QuadOptions opt;
    opt.tol = quad_tol();
    Complex out_dir = c.lam0 - c.lam1;
    Complex q0 = c.lam0 + Real("0.5") * out_dir;
    Real far = 0;
    for (const Complex& p : {c.lam0, c.lam1, c.lam1_inv, c.lam0_inv})
        far = std::max(far, abs(p));
    far = std::max(far * 3, Real(3));
    Complex q_far = q0 / abs(q0) * far;
    Complex total = integrate_segment_sqrt(f, c.lam0, q0, true, false, opt);
    auto route = find_route(q0, q_far, c);
    for (std::size_t i = 0; i + 1 < route.size(); ++i)
        total += integrate_segment(f, route[i], route[i + 1], opt);
    total += integrate_ray_to_infinity(f, q_far, opt);
    return total;
}

// boundary-value integral over a cut: integrand(lambda, R_plus) with the
// side(+1) boundary value, orientation a -> b of the stored segment,
// sqrt-endpoint substitutions at both ends (in the t parameter)
Complex cut_boundary_integral(const SpectralCurve& c, int cut_index,
                              const std::function<Complex(const Complex&, const Complex&)>& g) {
    const SegmentSqrt& cut = (cut_index == 1) ? c.cut1 : c.cut2;
    auto f = [&](const Complex& tc) -> Complex {
        Real t = tc.re;
        Complex lam = cut.point(t);
        Complex Rp = R_eval_side(c, cut_index, t, +1);
        return g(lam, Rp) * cut.half;  // dlambda = half dt
    };
    QuadOptions opt;
    opt.tol = quad_tol();
    return integrate_segment_sqrt(f, Complex(-1), Complex(1), true, true, opt);
}

// the junction adjacent to the origin is lam0_inv; the arc into 0 threads
// the gap between them, which the straight segment realizes
Complex int_invR_junction_to_zero(const SpectralCurve& c) {
    auto f = [&](const Complex& l) { return Complex(1) / R_eval(l, c); };
    QuadOptions opt;
    opt.tol = quad_tol();
    return integrate_segment_sqrt(f, c.lam0_inv, Complex(0), true, false, opt);
}

// branch of arg continuous along a cut, stabilized by the cut midpoint frame
Real framed_arg(const Complex& lambda, const Complex& frame_point) {
    Real phi0 = arg(frame_point);
    return phi0 + arg(lambda * exp(Complex(Real(0), -phi0)));
}

std::mutex core_mutex;
std::map<std::string, EllipticCore> core_cache;

std::string y_key(const Complex& y) {
    std::ostringstream os;
    os.precision(34);
    os << y.re << "_" << y.im;
    return os.str();
}

EllipticCore build_core(const SpectralCurve& curve) {
    EllipticCore core;
    core.curve = curve;
    const Complex& y = curve.y;
    QuadOptions opt;
    opt.tol = quad_tol();

    auto invR = [&](const Complex& l) { return Complex(1) / R_eval(l, curve); };
    auto mu_like = [&](const Complex& l) { return R_eval(l, curve) / (l * l); };

    Path a_loop = make_a_loop(curve);
    core.Ia = integrate_path(invR, a_loop, opt);

    Complex two_pi_i(Real(0), 2 * pi());
    core.A_inf = two_pi_i / core.Ia * int_invR_from_lam0_to_infinity(curve);
    core.A_0 = two_pi_i / core.Ia * int_invR_from_lam0(curve, Complex(0));

    core.kappa = (curve.lam0 + curve.lam1) / (Complex(1) + curve.lam0 * curve.lam1);
    core.A_kappa = two_pi_i / core.Ia * int_invR_from_lam0(curve, core.kappa);

    Complex b_seg = integrate_b_path(invR, curve, opt, kBElbowSide);
    core.B = Complex(0, -4 * pi()) / core.Ia * b_seg;

    // hyperelliptic sheet of kappa fixed by the lattice identity
    // 2 A(inf) + 2 A(kappa) == -B  (mod 2 pi i Z + B Z)
    {
        Real period = std::min(2 * pi(), abs(core.B));
        Real d_plus = lattice_distance(2 * core.A_inf + 2 * core.A_kappa + core.B, core.B);
        if (d_plus > Real("0.1") * period) {
            Real d_minus =
                lattice_distance(2 * core.A_inf - 2 * core.A_kappa + core.B, core.B);
            if (d_minus < d_plus) core.A_kappa = -core.A_kappa;
        }
    }

    // the g-function jump constants, from the same cycles that define B:
    // i K1 = -(a-cycle of R/l^2 dl), i K2 = 2 int over the b path of R/l^2 dl.
    // Realness of both is the Boutroux condition itself.
    Complex a_mu = integrate_path(mu_like, a_loop, opt);
    Complex b_mu = 2 * integrate_b_path(mu_like, curve, opt, kBElbowSide);
    core.K1 = -a_mu.im;
    core.K2 = b_mu.im;

    core.eta = -I_unit * core.K2 + I_unit * core.K1 * core.B / Complex(Real(0), 2 * pi());
    core.nu = 8 * pi() / (y * core.Ia);

    // gamma-tilde ingredients; sign classes of the boundary-value integrals
    // are pinned by oint_a dl/R = -2 int_{cut1,+} = +2 int_{cut2,+}
    Complex i1 = cut_boundary_integral(curve, 1, [](const Complex&, const Complex& Rp) {
        return Complex(1) / Rp;
    });
    Complex i2 = cut_boundary_integral(curve, 2, [](const Complex&, const Complex& Rp) {
        return Complex(1) / Rp;
    });
    int sign1 = (abs(i1 + core.Ia / 2) < abs(i1 - core.Ia / 2)) ? +1 : -1;
    int sign2 = (abs(i2 - core.Ia / 2) < abs(i2 + core.Ia / 2)) ? +1 : -1;

    Complex mid1 = curve.cut1.mid, mid2 = curve.cut2.mid;
    Complex j1 = cut_boundary_integral(curve, 1, [&](const Complex& l, const Complex& Rp) {
        Complex lg(log(abs(l)), framed_arg(l, mid1));
        return lg / Rp;
    });
    Complex j2 = cut_boundary_integral(curve, 2, [&](const Complex& l, const Complex& Rp) {
        Complex lg(log(abs(l)), framed_arg(l, mid2) + pi());
        return lg / Rp;
    });
    core.I0 = int_invR_junction_to_zero(curve);
    core.J1 = sign1 * j1;
    core.J2 = sign2 * j2;

    // N(y) from the four reference theta values
    Complex ipi(Real(0), pi());
    Complex zb = core.A_0 + core.A_kappa + ipi + core.B / 2;
    Complex zc = core.A_0 - core.A_kappa - ipi - core.B / 2;
    Complex wb = core.A_inf + core.A_kappa + ipi + core.B / 2;
    Complex wc = core.A_inf - core.A_kappa - ipi - core.B / 2;
    core.N = I_unit / core.kappa * (theta(zb, core.B) * theta(zc, core.B)) /
             (theta(wb, core.B) * theta(wc, core.B));
    return core;
}

} // namespace

const EllipticCore& elliptic_core(const Complex& y) {
    std::string key = y_key(y);
    {
        std::lock_guard<std::mutex> lock(core_mutex);
        auto it = core_cache.find(key);
        if (it != core_cache.end()) return it->second;
    }
    SpectralCurve curve = solve_boutroux(y);
    EllipticCore core = build_core(curve);
    std::lock_guard<std::mutex> lock(core_mutex);
    return core_cache.emplace(key, std::move(core)).first->second;
}

Complex abel_map(const Complex& lambda, const SpectralCurve& curve) {
    QuadOptions opt;
    opt.tol = quad_tol();
    auto invR = [&](const Complex& l) { return Complex(1) / R_eval(l, curve); };
    Path a_loop = make_a_loop(curve);
    Complex Ia = integrate_path(invR, a_loop, opt);
    return Complex(Real(0), 2 * pi()) / Ia * int_invR_from_lam0(curve, lambda);
}

Complex abel_map_infinity(const SpectralCurve& curve) {
    QuadOptions opt;
    opt.tol = quad_tol();
    auto invR = [&](const Complex& l) { return Complex(1) / R_eval(l, curve); };
    Path a_loop = make_a_loop(curve);
    Complex Ia = integrate_path(invR, a_loop, opt);
    return Complex(Real(0), 2 * pi()) / Ia * int_invR_from_lam0_to_infinity(curve);
}

EllipticData elliptic_data(const SpectralCurve& curve, const GaussianRational& m) {
    if (is_half_integer(m))
        throw HalfIntegerM("elliptic_data: delta is undefined for half-integer m");
    if (curve.regime != CurveRegime::interior)
        throw DegenerateCurve("elliptic_data: interior curve required");
    EllipticData d;
    d.core = elliptic_core(curve.y);
    d.m = m;
    Complex mc = m.to_complex();
    Complex weight = Complex(0, 2 * pi()) * (mc + Real(1) / 2);
    d.gamma_tilde = 2 / d.core.Ia *
                    (weight * d.core.I0 + (mc + 1) * (d.core.J1 + d.core.J2));
    Complex c = -2 * cos(pi() * mc);
    d.delta = log(c) + d.gamma_tilde;
    return d;
}

EllipticData elliptic_data(const Complex& y, const GaussianRational& m) {
    return elliptic_data(elliptic_core(y).curve, m);
}

Complex phase_s(const EllipticData& d, int n, const Complex& w) {
    return -d.delta - I_unit * w * d.core.nu - Real(n) * d.core.eta;
}

Real carveout_epsilon() { return Real("0.05"); }

ApproxValue udot_elliptic(int n, const Complex& y, const Complex& w,
                          const GaussianRational& m) {
    if (y.re < 0) {
        // E_L through u_n(-(n y' + w'); -m) = 1 / u-dot_n(y', w'; m)
        ApproxValue inner = udot_elliptic(n, -y, -w, -m);
        inner.value = Complex(1) / inner.value;
        return inner;
    }
    EllipticData d = elliptic_data(y, m);
    const EllipticCore& c = d.core;
    Complex s = phase_s(d, n, w);
    Complex ipi(Real(0), pi());
    Complex half_B = c.B / 2;

    Complex z_open = c.A_inf + c.A_kappa + ipi + half_B - s;   // Z-circle factor
    Complex z_fill = c.A_inf - c.A_kappa - ipi - half_B + s;   // Z-dot factor
    Complex p_fill = c.A_0 + c.A_kappa + ipi + half_B - s;     // P-dot factor
    Complex p_open = c.A_0 - c.A_kappa - ipi - half_B + s;     // P-circle factor

    ApproxValue out;
    out.regime = Regime::elliptic;
    out.regime_detail = "elliptic";
    out.value = c.N * (theta(z_fill, c.B) * theta(z_open, c.B)) /
                (theta(p_fill, c.B) * theta(p_open, c.B));

    Real carve = lattice_distance(c.A_inf + c.A_kappa - s, c.B);
    carve = std::min(carve, lattice_distance(c.A_inf - c.A_kappa + s, c.B));
    carve = std::min(carve, lattice_distance(c.A_0 + c.A_kappa - s, c.B));
    carve = std::min(carve, lattice_distance(c.A_0 - c.A_kappa + s, c.B));
    out.carveout = carve;
    out.near_divisor = carve < carveout_epsilon();
    return out;
}

Real ode_residual_w(int n, const Complex& y, const Complex& w,
                    const GaussianRational& m, const Real& h) {
    auto pdot = [&](const Complex& ww) {
        return -I_unit * udot_elliptic(n, y, ww, m).value;
    };
    Complex d = (pdot(w + h) - pdot(w - h)) / (2 * h);
    Complex p = pdot(w);
    // C(y) is shared across the E_L map (p,C,y,w) -> (-1/p, C, -y, -w)
    Complex C = elliptic_core(y.re < 0 ? -y : y).curve.C;
    Complex rhs = 16 / (y * y) * quartic_P(p, y, C);
    return abs(d * d - rhs);
}

QuantIndices quantization_indices(int n, const Complex& y, const Complex& w,
                                  const GaussianRational& m) {
    EllipticData d = elliptic_data(y, m);
    const EllipticCore& c = d.core;
    Complex s = phase_s(d, n, w);
    QuantIndices q;
    lattice_decompose(c.A_inf + c.A_kappa - s, c.B, q.alpha0_p, q.beta0_p);
    lattice_decompose(c.A_inf - c.A_kappa + s, c.B, q.alpha0_m, q.beta0_m);
    lattice_decompose(c.A_0 + c.A_kappa - s, c.B, q.alphaInf_p, q.betaInf_p);
    lattice_decompose(c.A_0 - c.A_kappa + s, c.B, q.alphaInf_m, q.betaInf_m);
    return q;
}

} // namespace p3r
