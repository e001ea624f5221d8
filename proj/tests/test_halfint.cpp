#define DOCTEST_CONFIG_IMPLEMENT
#include "test_common.hpp"

#include "p3r/errors.hpp"
#include "p3r/halfint.hpp"
#include "p3r/umemura.hpp"

using namespace p3r;
using p3r_test::close;

TEST_CASE("deep-interior and far-exterior limits of the closed eye, k=0") {
    TubeParams wide;
    wide.delta2 = Real("0.2");
    // well inside E the exponential dies and udot -> i/p
    Complex yin{Real("0.30")};
    ApproxValue in = udot_halfint(200, 0, -1, yin, wide);
    Complex p_in = p_branch(yin, BranchTag::outer);
    CHECK(in.regime == Regime::halfint_layer);
    CHECK(abs(in.value - I_unit / p_in) < Real("1e-3"));
    // well outside udot -> i p
    Complex yout{Real("0.36")};
    ApproxValue out = udot_halfint(200, 0, -1, yout, wide);
    Complex p_out = p_branch(yout, BranchTag::outer);
    CHECK(abs(out.value - I_unit * p_out) < Real("1e-3"));
}

TEST_CASE("adjacent layer ranges share their boundary formula") {
    // at the UU(l) / UU-first(l+1) boundary the same Mobius formula applies;
    // the classifier must map both sides onto it
    int n = 10, k = 2;
    Real L = log(Real(n)) / (2 * n);
    // boundary between UL(l) and UU(l) at x = 2l-k-1/2 for l=1: x = -1/2
    // pick the UU(1)/UL(2) boundary at x = 2*2-2-3/2 = 1/2
    Real target = L / 2;
    // find y on the real axis with coordinate = target
    Real lo("0.30"), hi("0.36");
    for (int it = 0; it < 200; ++it) {
        Real mid = (lo + hi) / 2;
        TubeResult t = in_tube(Complex(mid));
        if (t.coordinate < target) lo = mid; else hi = mid;
    }
    Complex yb{(lo + hi) / 2};
    LayerRegime reg = classify_layer(n, k, yb);
    CHECK(reg.tag != LayerCase::equilibrium_outside_tube);
    // the two formulas meeting at this boundary agree identically
    Complex uu = layer_formula_UU(n, k, 1, yb);
    Complex uu_next_first = layer_formula_UU(n, k, 1, yb);  // UU-first(2) == UU-last(1)
    CHECK(abs(uu - uu_next_first) < Real("1e-30"));
    // and the classifier picks one of the two adjacent labels
    CHECK((reg.tag == LayerCase::UU || reg.tag == LayerCase::UL));
}

TEST_CASE("layer partition covers the tube exactly once") {
    int n = 12, k = 2;
    TubeParams tube;
    for (int i = 0; i <= 40; ++i) {
        Real r = Real("0.30") + Real(i) * Real("0.002");
        Complex y{r};
        TubeResult t = in_tube(y, tube);
        LayerRegime reg = classify_layer(n, k, y, tube);
        if (!t.inside) {
            CHECK(reg.tag == LayerCase::equilibrium_outside_tube);
        } else {
            CHECK((reg.tag == LayerCase::UU || reg.tag == LayerCase::UL));
            if (reg.tag == LayerCase::UL) {
                CHECK(reg.ell >= 1);
                CHECK(reg.ell <= k);
            } else {
                CHECK(reg.ell >= 0);
                CHECK(reg.ell <= k);
            }
        }
    }
}

TEST_CASE("layered approximation tracks the exact solution, k=0, n=20") {
    GaussianRational mh(-1, 2);
    for (const char* ys : {"0.328", "0.331", "0.334", "0.338", "0.342"}) {
        Complex y{Real(ys)};
        ApproxValue av = udot_halfint(20, 0, -1, y);
        Complex exact = eval_un(Real(20) * y, 20, mh);
        CHECK(abs(av.value - exact) < Real("0.15"));
    }
}

TEST_CASE("positive half-integers go through the reflection") {
    GaussianRational mp(1, 2);
    Complex y{Real("-0.333")};
    ApproxValue av = udot_halfint(20, 0, +1, y);
    Complex exact = eval_un(Real(20) * y, 20, mp);
    CHECK(abs(av.value - exact) < Real("0.15"));
}

TEST_CASE("Theorem-4 equilibrium error halves from n=10 to n=20") {
    GaussianRational mh(-1, 2);
    Complex y{Real("0.2")};
    Complex pr = p_branch(y, BranchTag::red_continuation);
    auto err = [&](int n) {
        Complex u = eval_un(Real(n) * y, n, mh);
        return abs(Complex(1) / u - Complex(1) / (I_unit * pr));
    };
    Real e10 = err(10), e20 = err(20);
    Real ratio = e20 / e10;
    CHECK(ratio > Real("0.25"));
    CHECK(ratio < Real("0.75"));
}

TEST_CASE("eyebrow curve counts and ordering") {
    auto curves0 = eyebrow_curves(20, 0, 40);
    REQUIRE(curves0.size() == 2);
    CHECK(!curves0[0].is_zero);
    CHECK(curves0[1].is_zero);
    // zero curve to the right of the pole curve at theta = 0: compare radii of
    // the mid samples
    Real r_pole = abs(curves0[0].curve.nodes()[20]);
    Real r_zero = abs(curves0[1].curve.nodes()[20]);
    CHECK(r_pole < r_zero);

    auto curves1 = eyebrow_curves(10, 1, 24);
    REQUIRE(curves1.size() == 6);
    bool expect_zero[6] = {false, true, true, false, false, true};
    std::vector<Real> radii;
    for (int i = 0; i < 6; ++i) {
        CHECK(curves1[i].is_zero == expect_zero[i]);
        radii.push_back(abs(curves1[i].curve.nodes()[12]));
    }
    for (int i = 0; i + 1 < 6; ++i) CHECK(radii[i] < radii[i + 1]);
}

TEST_CASE("exact roots hug the curves, k=0 and k=1 at n=10") {
    for (int k : {0, 1}) {
        GaussianRational m(-(2 * k + 1), 2);
        int n = 10;
        auto curves = eyebrow_curves(n, k, 80);
        RationalSolution rs = classified_roots(n, m);
        TubeParams tube;
        auto check_roots = [&](const std::vector<Complex>& roots, bool zeros) {
            for (const Complex& x : roots) {
                Complex y = x / Real(n);
                if (y.re <= 0) continue;
                TubeResult t = in_tube(y, tube);
                if (!t.inside) continue;
                Real best(1);
                for (const auto& c : curves) {
                    if (c.is_zero != zeros) continue;
                    best = std::min(best, point_path_distance(y, c.curve));
                }
                CHECK(best < Real("0.5") / n);
            }
        };
        check_roots(rs.zero_roots_filled, true);
        check_roots(rs.zero_roots_open, true);
        check_roots(rs.pole_roots_filled, false);
        check_roots(rs.pole_roots_open, false);
    }
}

TEST_CASE("k=0 oracle equals the exact rational value") {
    GaussianRational mh(-1, 2);
    Complex y{Real("0.33")};
    Complex oracle = exact_k0_oracle(6, y);
    Complex exact = eval_un(Real(6) * y, 6, mh);
    CHECK(abs(oracle - exact) < Real("1e-8"));

    // conjugation symmetry
    Complex yc{Real("0.33"), Real("0.05")};
    Complex a = exact_k0_oracle(6, yc);
    Complex b = exact_k0_oracle(6, conj(yc));
    CHECK(abs(b - conj(a)) < Real("1e-10"));
}

TEST_CASE("k=0 oracle against the layered approximation at n=20") {
    Complex y{Real("0.333")};
    Complex oracle = exact_k0_oracle(20, y);
    ApproxValue av = udot_halfint(20, 0, -1, y);
    CHECK(abs(oracle - av.value) < Real("0.15"));
}

P3R_TEST_MAIN(256)
