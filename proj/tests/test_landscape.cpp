#define DOCTEST_CONFIG_IMPLEMENT
#include "test_common.hpp"

#include "p3r/errors.hpp"
#include "p3r/landscape.hpp"

using namespace p3r;
using p3r_test::close;

TEST_CASE("V at lambda = 1 with the principal log") {
    CHECK(abs(V_eval(Complex(1), Complex(Real("0.37"), Real("0.21")))) == Real(0));
}

TEST_CASE("Re V flips sign under lambda -> 1/lambda") {
    p3r_test::Rng rng(3);
    for (int i = 0; i < 8; ++i) {
        Complex lam = rng.complex_in_box(0.2, 1.7);
        Complex y = rng.complex_in_box(-1.0, 1.0);
        Real s = re_V(lam, y) + re_V(Complex(1) / lam, y);
        CHECK(abs(s) < Real("1e-70"));
    }
}

TEST_CASE("p(y) is a critical point of V") {
    Complex y(Real("0.7"));
    Complex p = p_branch(y, BranchTag::outer);
    Real h("1e-20");
    Complex d = (V_eval(p + Complex(h), y) - V_eval(p - Complex(h), y)) / (2 * h);
    CHECK(abs(d) < Real("1e-10"));
}

TEST_CASE("outer branch values") {
    Complex p_far = p_branch(Complex(1000000), BranchTag::outer);
    CHECK(abs(p_far - Complex(0, -1)) < Real("1e-6"));

    Complex y(Real("0.7"));
    Complex p = p_branch(y, BranchTag::outer);
    CHECK(abs(p + Complex(1) / p - I_unit / y) < Real("1e-70"));

    Complex pi_ax = p_branch(Complex(Real(0), Real("0.8")), BranchTag::outer);
    CHECK(abs(abs(pi_ax) - Real(1)) < Real("1e-70"));
}

TEST_CASE("blue continuation has a simple zero at the origin") {
    Complex y(Real("1e-6"));
    Complex p = p_branch(y, BranchTag::blue_continuation);
    CHECK(abs(p - Complex(Real(0), Real("-1e-6"))) < Real("1e-12"));
}

TEST_CASE("branch agreement outside the eye, reciprocity inside") {
    p3r_test::Rng rng(5);
    int outside = 0;
    while (outside < 10) {
        Complex y = rng.complex_in_box(-2.0, 2.0);
        if (abs(y) < 0.8) continue;
        ++outside;
        Complex a = p_branch(y, BranchTag::outer);
        Complex b = p_branch(y, BranchTag::blue_continuation);
        Complex c = p_branch(y, BranchTag::red_continuation);
        CHECK(abs(a - b) < Real("1e-70"));
        CHECK(abs(a - c) < Real("1e-70"));
    }
    for (const Complex& y : {Complex(Real("0.15"), Real("0.1")), Complex(Real("0.2")),
                             Complex(Real("-0.1"), Real("0.2"))}) {
        Complex b = p_branch(y, BranchTag::blue_continuation);
        Complex c = p_branch(y, BranchTag::red_continuation);
        CHECK(abs(b * c - Complex(1)) < Real("1e-70"));
    }
}

TEST_CASE("outer branch rejects the segment I") {
    CHECK_THROWS_AS(p_branch(Complex(Real(0), Real("0.3")), BranchTag::outer), OnBranchCut);
}

TEST_CASE("eye boundary crossings match the reported radii") {
    const EyeGeometry& g = eye();
    CHECK(abs(g.real_halfwidth - Real("0.331372")) < Real("1e-5"));
    // the left-eyebrow crossing at arg(-3pi/4) reflects to arg(pi/4) here
    Real r_diag = g.boundary_radius(pi() / 4);
    CHECK(abs(r_diag - Real("0.364768")) < Real("1e-4"));
    CHECK(abs(g.corner_top - Complex(Real(0), Real(1) / 2)) == Real(0));
    CHECK(abs(g.corner_bottom + Complex(Real(0), Real(1) / 2)) == Real(0));
    CHECK(g.real_halfwidth > Real("0.3"));
    CHECK(g.real_halfwidth < Real("0.36"));
}

TEST_CASE("eyebrows are conjugation symmetric") {
    const EyeGeometry& g = eye();
    for (int i = 0; i < 6; ++i) {
        Real theta = Real(2 * i + 1) / 13;
        CHECK(abs(g.boundary_radius(theta) - g.boundary_radius(-theta)) < Real("1e-8"));
    }
    // Re V(p(conj y); conj y) = Re V(p(y); y) on a small grid
    p3r_test::Rng rng(9);
    for (int i = 0; i < 6; ++i) {
        Complex y = rng.complex_in_box(0.1, 0.45);
        Complex yc = conj(y);
        Real a = re_V(p_branch(y, BranchTag::outer), y);
        Real b = re_V(p_branch(yc, BranchTag::outer), yc);
        CHECK(abs(a - b) < Real("1e-60"));
    }
}

TEST_CASE("tube membership and the layer coordinate") {
    TubeParams params;
    params.delta1 = Real("0.2");
    params.delta2 = Real("0.05");
    TubeResult mid = in_tube(Complex(Real("0.331372")), params);
    CHECK(mid.inside);
    CHECK(abs(mid.coordinate) < Real("1e-5"));

    TubeResult far = in_tube(Complex(Real("0.5")), params);
    CHECK(!far.inside);

    // exactly on the eyebrow the coordinate vanishes
    const EyeGeometry& g = eye();
    Real theta("0.3");
    Real r = g.boundary_radius(theta);
    // refine the crossing beyond the interpolation error
    Complex dir(cos(theta), sin(theta));
    Real lo = r - Real("0.01"), hi = r + Real("0.01");
    for (int it = 0; it < 120; ++it) {
        Real m = (lo + hi) / 2;
        Real v = re_V(p_branch(m * dir, BranchTag::outer), m * dir);
        if (v > 0) lo = m; else hi = m;
    }
    Complex y_on = ((lo + hi) / 2) * dir;
    CHECK(abs(in_tube(y_on, params).coordinate) < Real("1e-9"));
}

TEST_CASE("distance to the eye") {
    const EyeGeometry& g = eye();
    CHECK(g.distance_to_eye(Complex(Real("0.2"))) == Real(0));
    Real d = g.distance_to_eye(Complex(Real("0.6")));
    CHECK(d > Real("0.2"));
    CHECK(d < Real("0.3"));
}

P3R_TEST_MAIN(256)
