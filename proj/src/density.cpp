#include "p3r/density.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "p3r/errors.hpp"
#include "p3r/umemura.hpp"

namespace p3r {

namespace {

// K1/K2 need only the solved curve and the two cycle integrals of R/l^2,
// much lighter than the full elliptic core; cached for stencil reuse
void k_values(const Complex& y, Real& K1, Real& K2) {
    static std::mutex mu;
    static std::map<std::string, std::pair<Real, Real>> cache;
    std::ostringstream os;
    os.precision(34);
    os << y.re << "_" << y.im;
    std::string key = os.str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            K1 = it->second.first;
            K2 = it->second.second;
            return;
        }
    }
    SpectralCurve curve = solve_boutroux(y);
    QuadOptions opt;
    opt.tol = Real("1e-13");
    auto mu_like = [&](const Complex& l) { return R_eval(l, curve) / (l * l); };
    Path loop = make_a_loop(curve);
    Complex a_mu = integrate_path(mu_like, loop, opt);
    Complex b_mu = 2 * integrate_b_path(mu_like, curve, opt);
    K1 = -a_mu.im;
    K2 = b_mu.im;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, std::make_pair(K1, K2));
}

} // namespace

DensitySample rho(const Complex& y, const Real& h_step) {
    Real h = h_step;
    if (h == 0) h = Real("1e-3") * abs(y);
    DensitySample s;
    s.y = y;
    try {
        Real k1e, k2e, k1w, k2w, k1n, k2n, k1s, k2s;
        k_values(y + Complex(h, Real(0)), k1e, k2e);
        k_values(y - Complex(h, Real(0)), k1w, k2w);
        k_values(y + Complex(Real(0), h), k1n, k2n);
        k_values(y - Complex(Real(0), h), k1s, k2s);
        s.gradK1[0] = (k1e - k1w) / (2 * h);
        s.gradK1[1] = (k1n - k1s) / (2 * h);
        s.gradK2[0] = (k2e - k2w) / (2 * h);
        s.gradK2[1] = (k2n - k2s) / (2 * h);
    } catch (const OutsideDomain&) {
        throw StencilOutsideDomain("rho: stencil point left the eye");
    } catch (const ContinuationStall&) {
        throw StencilOutsideDomain("rho: stencil point too close to the boundary");
    }
    Real cross = s.gradK1[0] * s.gradK2[1] - s.gradK1[1] * s.gradK2[0];
    s.rho = abs(cross) / (2 * pi() * pi());
    return s;
}

Real rho_contour(const Complex& y) {
    // polar form: |grad K1 x grad K2| = |K1_r K2_theta - K1_theta K2_r| / r
    // with the angular/radial derivatives taken by differentiation under the
    // integral sign, realized here through the chain rule on the continuation
    // cache at fixed contours (finite differences in polar coordinates).
    Real r = abs(y), theta = arg(y);
    Real hr = Real("1e-3") * r, ht = Real("1e-3");
    auto K = [&](const Real& rr, const Real& tt, Real& K1, Real& K2) {
        k_values(rr * Complex(cos(tt), sin(tt)), K1, K2);
    };
    Real k1a, k2a, k1b, k2b, k1c, k2c, k1d, k2d;
    try {
        K(r + hr, theta, k1a, k2a);
        K(r - hr, theta, k1b, k2b);
        K(r, theta + ht, k1c, k2c);
        K(r, theta - ht, k1d, k2d);
    } catch (const OutsideDomain&) {
        throw StencilOutsideDomain("rho_contour: stencil point left the eye");
    }
    Real K1r = (k1a - k1b) / (2 * hr), K2r = (k2a - k2b) / (2 * hr);
    Real K1t = (k1c - k1d) / (2 * ht), K2t = (k2c - k2d) / (2 * ht);
    return abs(K1r * K2t - K1t * K2r) / r / (2 * pi() * pi());
}

Real h_profile(const Real& theta) {
    if (abs(theta) >= pi() / 2 - Real("0.1"))
        throw ContinuationStall("h_profile: theta too close to +-pi/2");
    Complex ct = solve_smallY_seed(theta);
    Real dt("1e-7");
    Complex ct_deriv = (solve_smallY_seed(theta + dt) - solve_smallY_seed(theta - dt)) / (2 * dt);

    // limiting branch points: lambda = 0 and the roots of l^2 - 2 i ct l + 1
    Complex s = sqrt(ct * ct + Complex(1));
    Complex lp = I_unit * (ct + s);   // cut toward infinity from here
    Complex lm = I_unit * (ct - s);   // cut [lm, 0]
    SegmentSqrt inner(lm, Complex(0));
    Complex c0 = sqrt(I_unit * exp(I_unit * theta) / 2);
    Real phi = -pi() / 2 - theta;  // principal cut rotated onto the outgoing ray
    auto sqrt_ray = [phi](const Complex& w) {
        Complex rot = exp(Complex(Real(0), -phi));
        return exp(Complex(Real(0), phi / 2)) * sqrt(w * rot);
    };
    auto Rt = [&](const Complex& l) { return c0 * sqrt_ray(l - lp) * inner(l); };

    QuadOptions opt;
    opt.tol = Real("1e-13");
    auto f_one = [&](const Complex& l) { return Complex(1) / Rt(l); };
    auto f_lam = [&](const Complex& l) { return (l + Complex(1) / l) / Rt(l); };

    // C1: counterclockwise rectangle around the cut [lm, 0]
    Complex mid = lm / 2, half = -lm / 2;
    auto boxpt = [&](const Real& u, const Real& v) {
        return mid + u * half + v * (I_unit * half);
    };
    Real mgn("0.55");
    std::vector<Complex> box = {boxpt(Real(-1) - mgn, -mgn), boxpt(Real(1) + mgn, -mgn),
                                boxpt(Real(1) + mgn, mgn), boxpt(Real(-1) - mgn, mgn)};
    Real area(0);
    for (int i = 0; i < 4; ++i) {
        const Complex& p = box[i];
        const Complex& q = box[(i + 1) % 4];
        area += p.re * q.im - q.re * p.im;
    }
    if (area < 0) std::reverse(box.begin(), box.end());
    Path c1 = Path::closed(std::move(box));
    Complex M11 = integrate_path(f_lam, c1, opt);
    Complex M12 = integrate_path(f_one, c1, opt);

    // C2 joins the branch points lp and lm by two arcs on opposite sides of
    // the cut; the return arc runs on the second sheet, so on the principal
    // sheet the cycle is the sum of the two one-sided arc integrals
    Complex dir = (lm - lp) / abs(lm - lp);
    Complex nrm = I_unit * dir;
    Complex emid = (lp + lm) / 2;
    Real rho_arc = abs(lm - lp) * Real("0.45");
    Complex e1 = emid + rho_arc * nrm, e2 = emid - rho_arc * nrm;
    Complex M21(0), M22(0);
    auto arc = [&](const Integrand& f, Complex& acc) {
        acc += integrate_segment_sqrt(f, lp, e1, true, false, opt);
        acc += integrate_segment_sqrt(f, e1, lm, false, true, opt);
        acc += integrate_segment_sqrt(f, lp, e2, true, false, opt);
        acc += integrate_segment_sqrt(f, e2, lm, false, true, opt);
    };
    arc(f_lam, M21);
    arc(f_one, M22);

    Complex det = M11 * M22 - M12 * M21;
    Complex val = -I_unit * exp(2 * I_unit * theta) * ct_deriv / (16 * pi() * pi()) * det;
    return abs(val);
}

CountResult count_vs_integral(int n, const GaussianRational& m,
                              const Real& a, const Real& b,
                              const Real& c, const Real& d) {
    CountResult out{Real(0), 0, 0};
    const int grid = 16;
    Real dx = (b - a) / grid, dy = (d - c) / grid;
    // K1/K2 on the midpoint grid plus a one-cell halo; each interior node's
    // gradient comes from its four neighbors, so the K solve count is
    // (grid+2)^2 instead of 4 per quadrature cell
    std::vector<std::vector<std::pair<Real, Real>>> K(grid + 2,
        std::vector<std::pair<Real, Real>>(grid + 2));
    {
        PrecisionGuard guard(160);  // plenty for 1e-9-accurate K under FD
        for (int i = -1; i <= grid; ++i)
            for (int jj = -1; jj <= grid; ++jj) {
                Complex y(a + (i + Real(1) / 2) * dx, c + (jj + Real(1) / 2) * dy);
                Real K1, K2;
                k_values(y, K1, K2);
                K[i + 1][jj + 1] = {K1, K2};
            }
    }
    for (int i = 0; i < grid; ++i)
        for (int jj = 0; jj < grid; ++jj) {
            Real K1x = (K[i + 2][jj + 1].first - K[i][jj + 1].first) / (2 * dx);
            Real K1y = (K[i + 1][jj + 2].first - K[i + 1][jj].first) / (2 * dy);
            Real K2x = (K[i + 2][jj + 1].second - K[i][jj + 1].second) / (2 * dx);
            Real K2y = (K[i + 1][jj + 2].second - K[i + 1][jj].second) / (2 * dy);
            Real rho_ij = abs(K1x * K2y - K1y * K2x) / (2 * pi() * pi());
            out.expected += rho_ij * dx * dy;
        }
    out.expected *= Real(n) * n;

    RationalSolution rs = classified_roots(n, m);
    auto count_in = [&](const std::vector<Complex>& roots) {
        long cnt = 0;
        for (const Complex& x : roots) {
            Complex yy = x / Real(n);
            if (yy.re >= a && yy.re <= b && yy.im >= c && yy.im <= d) ++cnt;
        }
        return cnt;
    };
    out.observed_zeros = count_in(rs.zero_roots_filled) + count_in(rs.zero_roots_open);
    out.observed_poles = count_in(rs.pole_roots_filled) + count_in(rs.pole_roots_open);
    return out;
}

} // namespace p3r
