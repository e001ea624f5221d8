#include "p3r/halfint.hpp"

#include <algorithm>

#include "p3r/errors.hpp"
#include "p3r/quadrature.hpp"

namespace p3r {

namespace {

Real factorial(int n) {
    Real f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// V''(lambda;y) at a critical point of V simplifies to (l^2-1)/(l^2(l^2+1))
Complex Vpp(const Complex& lambda, const Complex& y) {
    Complex l2 = lambda * lambda;
    return Complex(1) / l2 + 2 * I_unit * y / (l2 * lambda);
}

// e^{2 n V(p^{-1};y)}; single-valued since n is an integer
Complex exp_2nV(int n, const Complex& y, const Complex& p_inv) {
    Complex V = V_eval(p_inv, y);
    return exp(2 * Real(n) * V);
}

struct LayerIngredients {
    Complex p, p_inv, E;
    Complex sum;   // p^{-1} + p
    Complex diff;  // p^{-1} - p
};

LayerIngredients ingredients(int n, const Complex& y) {
    LayerIngredients g;
    g.p = p_branch(y, BranchTag::outer);
    g.p_inv = Complex(1) / g.p;
    g.E = exp_2nV(n, y, g.p_inv);
    g.sum = g.p_inv + g.p;
    g.diff = g.p_inv - g.p;
    return g;
}

struct MobiusValue {
    Complex value;
    bool near_singular;  // numerator or denominator nearly cancels
};

// Mobius form shared by every layer formula:
//   prefactor * (E - i c num_p) / (E - i c den_p)
MobiusValue mobius(const Complex& prefactor, const Complex& E, const Complex& c,
                   const Complex& num_p, const Complex& den_p) {
    Complex num = E - I_unit * c * num_p;
    Complex den = E - I_unit * c * den_p;
    Real scale = abs(E) + abs(c) * std::max(abs(num_p), abs(den_p));
    MobiusValue mv;
    mv.near_singular = std::min(abs(num), abs(den)) < Real("0.05") * scale;
    mv.value = prefactor * num / den;
    return mv;
}

MobiusValue layer_UU(int n, int k, int ell, const Complex& y) {
    LayerIngredients g = ingredients(n, y);
    // c = (-1)^ell n^{2l-k} (k-l)!/l! (p^{-1}+p)^{k-2l} (p^{-1}-p)^{6l-3k}
    Real nr(n);
    Complex c = pow_int(g.sum, k - 2 * ell) * pow_int(g.diff, 6 * ell - 3 * k);
    c *= factorial(k - ell) / factorial(ell);
    c *= exp(Real(2 * ell - k) * log(nr));
    if (ell % 2) c = -c;
    return mobius(I_unit * g.p, g.E, c, g.p_inv, g.p);
}

MobiusValue layer_UL(int n, int k, int ell, const Complex& y) {
    LayerIngredients g = ingredients(n, y);
    Real nr(n);
    Complex c = pow_int(g.sum, k - 2 * ell + 1) * pow_int(g.diff, 6 * ell - 3 * k - 3);
    c *= factorial(k - ell) / factorial(ell - 1);
    c *= exp(Real(2 * ell - k - 1) * log(nr));
    if (ell % 2) c = -c;
    return mobius(I_unit * g.p_inv, g.E, c, g.p, g.p_inv);
}

} // namespace

Complex layer_formula_UU(int n, int k, int ell, const Complex& y) {
    return layer_UU(n, k, ell, y).value;
}

Complex layer_formula_UL(int n, int k, int ell, const Complex& y) {
    return layer_UL(n, k, ell, y).value;
}

LayerRegime classify_layer(int n, int k, const Complex& y, const TubeParams& tube) {
    TubeResult t = in_tube(y, tube);
    LayerRegime reg;
    reg.k = k;
    reg.coordinate = t.coordinate;
    if (!t.inside) {
        reg.tag = LayerCase::equilibrium_outside_tube;
        return reg;
    }
    if (k == 0) {
        reg.tag = LayerCase::UU;
        reg.ell = 0;
        return reg;
    }
    Real L = log(Real(n)) / (2 * n);
    Real x = t.coordinate / L;
    // UU(0) for x <= -k+1/2; then alternately UL(l) on
    // [2l-k-3/2, 2l-k-1/2] and UU(l) on [2l-k-1/2, 2l-k+1/2]; UU(k) beyond
    if (x <= Real(-k) + Real(1) / 2) {
        reg.tag = LayerCase::UU;
        reg.ell = 0;
        return reg;
    }
    for (int ell = 1; ell <= k; ++ell) {
        if (x <= Real(2 * ell - k) - Real(1) / 2) {
            reg.tag = LayerCase::UL;
            reg.ell = ell;
            return reg;
        }
        if (x <= Real(2 * ell - k) + Real(1) / 2) {
            reg.tag = LayerCase::UU;
            reg.ell = ell;
            return reg;
        }
    }
    reg.tag = LayerCase::UU;
    reg.ell = k;
    return reg;
}

ApproxValue udot_halfint(int n, int k, int sign, const Complex& y, const TubeParams& tube) {
    if (k < 0) throw UsageError("udot_halfint: k must be >= 0");
    if (sign > 0) {
        // u_n(ny; k+1/2) = 1 / u_n(-ny; -(k+1/2))
        ApproxValue inner = udot_halfint(n, k, -1, -y, tube);
        inner.value = Complex(1) / inner.value;
        return inner;
    }
    LayerRegime reg = classify_layer(n, k, y, tube);
    ApproxValue out;
    out.carveout = Real(1);
    if (reg.tag == LayerCase::equilibrium_outside_tube) {
        out.regime = Regime::equilibrium_outside_tube;
        out.regime_detail = "equilibrium_outside_T";
        out.value = I_unit * p_branch(y, BranchTag::red_continuation);
        return out;
    }
    out.regime = Regime::halfint_layer;
    MobiusValue mv = (reg.tag == LayerCase::UU) ? layer_UU(n, k, reg.ell, y)
                                                : layer_UL(n, k, reg.ell, y);
    out.value = mv.value;
    out.near_divisor = mv.near_singular;
    out.regime_detail = (reg.tag == LayerCase::UU ? "UU(" : "UL(") +
                        std::to_string(reg.ell) + ")";
    return out;
}

std::vector<EyebrowCurve> eyebrow_curves(int n, int k, int samples, const TubeParams& tube) {
    if (n < 2) throw UsageError("eyebrow_curves: n must be >= 2");
    struct Spec {
        bool is_zero;
        int a_fact, b_fact;  // (a_fact)! / (b_fact)!
        int pow_sum, pow_n, pow_diff, pow_p;
        std::string provenance;
    };
    std::vector<Spec> specs;
    // left-to-right per the ordering theorem
    specs.push_back({false, k, 0, k, k, 3 * k, +1, "UU(0)"});
    specs.push_back({true, k, 0, k, k, 3 * k, -1, "UU(0)"});
    for (int ell = 1; ell <= k; ++ell) {
        std::string ul = "UL(" + std::to_string(ell) + ")";
        std::string uu = "UU(" + std::to_string(ell) + ")";
        specs.push_back({true, k - ell, ell - 1, k - 2 * ell + 1, k - 2 * ell + 1,
                         3 * k - 6 * ell + 3, +1, ul});
        specs.push_back({false, k - ell, ell - 1, k - 2 * ell + 1, k - 2 * ell + 1,
                         3 * k - 6 * ell + 3, -1, ul});
        specs.push_back({false, k - ell, ell, k - 2 * ell, k - 2 * ell,
                         3 * k - 6 * ell, +1, uu});
        specs.push_back({true, k - ell, ell, k - 2 * ell, k - 2 * ell,
                         3 * k - 6 * ell, -1, uu});
    }

    Real half_pi = pi() / 2;
    Real theta_max = half_pi - tube.delta1;
    std::vector<EyebrowCurve> out;
    int id = 0;
    for (const Spec& sp : specs) {
        std::vector<Complex> pts;
        for (int i = 0; i < samples; ++i) {
            Real theta = theta_max * (2 * Real(i) / (samples - 1) - 1);
            Complex dir(cos(theta), sin(theta));
            // F(r) = 2 n c(y) - log RHS(|p(y)|); bisect the tube's r-window
            auto F = [&](const Real& r) -> Real {
                Complex y = r * dir;
                Complex p = p_branch(y, BranchTag::outer);
                Real c = re_V(Complex(1) / p, y);
                Real lp = log(abs(p));
                Real ls = log(abs(Complex(1) / p + p));
                Real ld = log(abs(Complex(1) / p - p));
                Real logrhs = log(factorial(sp.a_fact)) - log(factorial(sp.b_fact)) +
                              sp.pow_sum * ls - sp.pow_n * log(Real(n)) -
                              sp.pow_diff * ld + sp.pow_p * lp;
                return 2 * n * c - logrhs;
            };
            // bracket around the eyebrow radius
            Real r_mid = eye().boundary_radius(theta);
            Real lo = r_mid * Real("0.7"), hi = std::min(r_mid * Real("1.5"), Real("0.6"));
            Real flo = F(lo), fhi = F(hi);
            if ((flo > 0) == (fhi > 0)) continue;  // off the tube at this angle
            for (int it = 0; it < 120; ++it) {
                Real mid = (lo + hi) / 2;
                if (hi - lo < Real("1e-9")) break;
                Real fm = F(mid);
                if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; }
                else hi = mid;
            }
            Real r = (lo + hi) / 2;
            pts.push_back(r * dir);
        }
        if (pts.size() < 2)
            throw BracketFailure("eyebrow_curves: curve " + sp.provenance + " not bracketed");
        EyebrowCurve ec;
        ec.id = id++;
        ec.is_zero = sp.is_zero;
        ec.provenance = sp.provenance;
        ec.curve = Path(std::move(pts));
        out.push_back(std::move(ec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact k = 0 oracle

namespace {

struct TrackedNode {
    Complex z;
    Real theta;  // continuously tracked argument
};

// append point continuing the tracked argument (increments below pi)
void push_tracked(std::vector<TrackedNode>& nodes, const Complex& z) {
    if (nodes.empty()) {
        nodes.push_back({z, arg(z)});
        return;
    }
    const TrackedNode& prev = nodes.back();
    Real dth = arg(z / prev.z);
    nodes.push_back({z, prev.theta + dth});
}

} // namespace

Complex exact_k0_oracle(int n, const Complex& y) {
    Real r = abs(y), theta = arg(y);
    if (r == 0) throw UsageError("exact_k0_oracle: y must be nonzero");
    Complex p = p_branch(y, BranchTag::outer);
    Complex q = Complex(1) / p;

    // saddle crossing directions from the anchored square roots of V''/2
    Complex w2p = -sqrt(Vpp(p, y) / 2);      // negative real at y = 0.331372
    Complex w1p = sqrt(Vpp(q, y) / 2);       // positive imaginary there
    Complex d1 = Complex(1) / w1p;
    d1 /= abs(d1);
    Complex d2 = Complex(1) / w2p;
    d2 /= abs(d2);

    // scale for the incoming ray: make the tail beyond R_far negligible
    Real R_far(10);
    while (n * (r * R_far - log(R_far)) < 130) R_far *= Real("1.3");
    Complex u_inf = exp(Complex(Real(0), pi() / 2 - theta));
    Complex u_zero = exp(Complex(Real(0), theta + pi() / 2));
    Real eps_cut = n * r / 110;
    if (eps_cut > abs(p) / 4) eps_cut = abs(p) / 4;

    Real rho1 = abs(q - p) / 4;
    Real rho2 = std::min(abs(q - p) / 4, abs(p) / 2);
    Real rho0 = abs(p) * Real("0.45");

    std::vector<TrackedNode> nodes;
    push_tracked(nodes, R_far * u_inf);
    push_tracked(nodes, q - rho1 * d1);  // enter the north saddle against d1
    push_tracked(nodes, q + rho1 * d1);
    push_tracked(nodes, p - rho2 * d2);  // east of the south saddle (d2 ~ -1)
    push_tracked(nodes, p + rho2 * d2);
    // clockwise hook around the origin to the incoming direction at 0
    {
        Real a_start = nodes.back().theta;
        Real a_end = theta - 3 * pi() / 2;
        // walk downward in tracked angle
        Real step = pi() / 4;
        Real a = a_start;
        while (a - a_end > step) {
            a -= step;
            push_tracked(nodes, rho0 * Complex(cos(a), sin(a)));
        }
        push_tracked(nodes, rho0 * u_zero);
    }
    push_tracked(nodes, eps_cut * u_zero);

    QuadOptions opt;
    opt.tol = Real("1e-14");
    Complex niy = Real(n) * I_unit * y;
    auto make_integrand = [&](const Real& qpow, const Real& theta_a, const Complex& za) {
        return [qpow, theta_a, za, niy, n](const Complex& lam) -> Complex {
            Real th = theta_a + arg(lam / za);
            Complex lq = exp(qpow * Complex(log(abs(lam)), th));
            Complex ex = exp(niy * (lam - Complex(1) / lam));
            return lq * pow_int(lam, n) * ex;
        };
    };

    Complex I_half(0), I_three(0);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const TrackedNode& a = nodes[i];
        const TrackedNode& b = nodes[i + 1];
        I_half += integrate_segment(make_integrand(Real(-1) / 2, a.theta, a.z), a.z, b.z, opt);
        I_three += integrate_segment(make_integrand(Real(-3) / 2, a.theta, a.z), a.z, b.z, opt);
    }
    if (abs(I_three) == 0)
        throw NonConvergence("exact_k0_oracle: denominator integral vanished");
    return I_unit * I_half / I_three;
}

} // namespace p3r
