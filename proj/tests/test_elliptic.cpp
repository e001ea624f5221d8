#define DOCTEST_CONFIG_IMPLEMENT
#include "test_common.hpp"

#include "p3r/elliptic.hpp"
#include "p3r/errors.hpp"
#include "p3r/landscape.hpp"
#include "p3r/umemura.hpp"

using namespace p3r;
using p3r_test::close;

TEST_CASE("theta series basics") {
    Complex B(Real(-1), Real("0.3"));
    p3r_test::Rng rng(23);
    for (int i = 0; i < 4; ++i) {
        Complex z = rng.complex_in_box(-1.5, 1.5);
        // automorphic relations
        CHECK(abs(theta(z + Complex(Real(0), 2 * pi()), B) - theta(z, B)) < Real("1e-12"));
        CHECK(abs(theta(-z, B) - theta(z, B)) < Real("1e-25"));
        Complex lhs = theta(z + B, B);
        Complex rhs = exp(-B / 2) * exp(-z) * theta(z, B);
        CHECK(abs(lhs - rhs) < Real("1e-20") * abs(rhs));
    }
    // simple zero at i pi + B/2
    CHECK(abs(theta(Complex(Real(0), pi()) + B / 2, B)) < Real("1e-12"));
    // frozen direct-summation reference value (50-term oracle)
    CHECK(abs(theta(Complex(0), Complex(-1)) -
              Complex(Real("2.50662828804290554483"))) < Real("1e-18"));
    CHECK_THROWS_AS(theta(Complex(0), Complex(1)), DivergentParameter);
}

TEST_CASE("lattice decomposition is a left inverse") {
    Complex B(Real("-11.9"), Real("-6.3"));
    p3r_test::Rng rng(5);
    for (int i = 0; i < 6; ++i) {
        Complex z = rng.complex_in_box(-8, 8);
        Real al, be;
        lattice_decompose(z, B, al, be);
        Complex back = Complex(Real(0), 2 * pi()) * al + B * be;
        CHECK(abs(back - z) < Real("1e-30"));
    }
}

TEST_CASE("core constants at real y") {
    const EllipticCore& c = elliptic_core(Complex(Real("0.25")));
    // B real and strictly negative (up to the 2 pi i class absorbed by the
    // four-factor combination)
    Real imB = c.B.im;
    Real reduced = imB - 2 * pi() * floor(imB / (2 * pi()) + Real(1) / 2);
    CHECK(abs(reduced) < Real("1e-9"));
    CHECK(c.B.re < Real(0));
    // eta re-substituted into its defining equation
    QuadOptions opt;
    opt.tol = Real("1e-13");
    auto invR = [&](const Complex& l) { return Complex(1) / R_eval(l, c.curve); };
    Complex half_b_inv = integrate_b_path(invR, c.curve, opt);
    Complex resid = I_unit * c.K1 * half_b_inv +
                    (I_unit * c.K2 + c.eta) * (c.Ia / 2);
    CHECK(abs(resid) < Real("1e-10"));
    // nu against its defining normalization (cut2 integral = Ia/2)
    CHECK(abs(c.nu * c.curve.y * (c.Ia / 2) - 4 * pi()) < Real("1e-10"));
}

TEST_CASE("lattice identities and separations on a y grid") {
    for (const Complex& y : {Complex(Real("0.25")), Complex(Real("0.2"), Real("0.25")),
                             Complex(Real("0.18"), Real("-0.12"))}) {
        const EllipticCore& c = elliptic_core(y);
        CHECK(lattice_distance(2 * c.A_inf + 2 * c.A_kappa + c.B, c.B) < Real("1e-8"));
        CHECK(lattice_distance(2 * c.A_0 - 2 * c.A_kappa - Complex(Real(0), 2 * pi()), c.B) <
              Real("1e-8"));
        // Lemma 2: none of the four combinations sits on the lattice
        CHECK(lattice_distance(2 * c.A_inf, c.B) > Real("1e-6"));
        CHECK(lattice_distance(2 * c.A_0, c.B) > Real("1e-6"));
        CHECK(lattice_distance(c.A_inf - c.A_0, c.B) > Real("1e-6"));
        CHECK(lattice_distance(c.A_inf + c.A_0, c.B) > Real("1e-6"));
    }
}

TEST_CASE("interior approximation against the exact solution") {
    GaussianRational m0(0);
    Complex y{Real("0.2")};
    ApproxValue a20 = udot_elliptic(20, y, Complex(0), m0);
    REQUIRE(a20.carveout >= Real("0.1"));
    Complex exact = eval_un(Real(20) * y, 20, m0);
    CHECK(abs(a20.value - exact) < Real("0.1"));
}

TEST_CASE("left half of the eye via the reciprocal symmetry") {
    GaussianRational m(1, 4);
    Complex y{Real("-0.21")};
    Complex w{Real("0.1")};
    ApproxValue left = udot_elliptic(9, y, w, m);
    ApproxValue right = udot_elliptic(9, -y, -w, -m);
    CHECK(abs(left.value * right.value - Complex(1)) < Real("1e-12"));
}

TEST_CASE("w shift by the lattice period leaves the value invariant") {
    GaussianRational m0(0);
    Complex y{Real("0.25")};
    const EllipticCore& c = elliptic_core(y);
    Complex period = 2 * pi() / c.nu;
    Complex w{Real("0.17")};
    ApproxValue v1 = udot_elliptic(7, y, w, m0);
    ApproxValue v2 = udot_elliptic(7, y, w + period, m0);
    CHECK(abs(v1.value - v2.value) < Real("1e-10") * (1 + abs(v1.value)));
}

TEST_CASE("the w ODE is satisfied to central-difference accuracy") {
    GaussianRational m0(0);
    Complex y{Real("0.25")};
    Complex w{Real("0.3")};
    Real h("1e-5");
    Real res = ode_residual_w(7, y, w, m0, h);
    CHECK(res < Real("1e-6"));
    Real res_half = ode_residual_w(7, y, w, m0, h / 2);
    Real ratio = res_half / res;
    CHECK(ratio < Real("0.4"));
    CHECK(ratio > Real("0.15"));
}

TEST_CASE("exterior analogue of the ODE is trivial") {
    // p-dot = p(y) constant: both sides vanish at the exterior double root
    Complex y{Real("0.7")};
    Complex p = p_branch(y, BranchTag::outer);
    CHECK(abs(quartic_P(p, y, exterior_C(y))) < Real("1e-70"));
}

TEST_CASE("quantization indices reconstruct and shift linearly in n") {
    GaussianRational m(1, 4);
    Complex y{Real("0.2"), Real("0.25")};
    Complex w{Real("0.05")};
    const EllipticCore& c = elliptic_core(y);
    QuantIndices q0 = quantization_indices(0, y, w, m);
    QuantIndices q5 = quantization_indices(5, y, w, m);
    // alpha^{0,+}(n) - alpha^{0,+}(0) = -n K2/(2 pi); the matching beta shift
    // under the Re/Im decomposition of eta is +n K1/(2 pi)
    Real expected_a = -5 * c.K2 / (2 * pi());
    Real expected_b = 5 * c.K1 / (2 * pi());
    CHECK(abs((q5.alpha0_p - q0.alpha0_p) - expected_a) < Real("1e-20"));
    CHECK(abs((q5.beta0_p - q0.beta0_p) - expected_b) < Real("1e-20"));
    CHECK(abs((q5.alpha0_m - q0.alpha0_m) + expected_a) < Real("1e-20"));
    CHECK(abs((q5.alphaInf_p - q0.alphaInf_p) - expected_a) < Real("1e-20"));

    // reconstruction identity
    EllipticData d = elliptic_data(y, m);
    Complex s = phase_s(d, 5, w);
    Complex X = c.A_inf + c.A_kappa - s;
    Complex back = Complex(Real(0), 2 * pi()) * q5.alpha0_p + c.B * q5.beta0_p;
    CHECK(abs(back - X) < Real("1e-25"));
}

TEST_CASE("indices are integers at a located zero of the Z factor") {
    GaussianRational m0(0);
    Complex y{Real("0.25")};
    const EllipticCore& c = elliptic_core(y);
    EllipticData d = elliptic_data(y, m0);
    Complex ipi(Real(0), pi());
    int n = 6;
    // the factor Theta(A_inf+A_kappa+ipi+B/2-s) vanishes when the phase sits
    // on the zero lattice; solve s(w*) = A_inf + A_kappa for w directly
    Complex w = (-d.delta - Real(n) * c.eta - c.A_inf - c.A_kappa) /
                (I_unit * c.nu);
    Complex zval = theta(c.A_inf + c.A_kappa + ipi + c.B / 2 - phase_s(d, n, w), c.B);
    REQUIRE(abs(zval) < Real("1e-25"));
    QuantIndices q = quantization_indices(n, y, w, m0);
    CHECK(abs(q.alpha0_p - floor(q.alpha0_p + Real(1) / 2)) < Real("1e-6"));
    CHECK(abs(q.beta0_p - floor(q.beta0_p + Real(1) / 2)) < Real("1e-6"));
}

TEST_CASE("half-integer m is rejected") {
    CHECK_THROWS_AS(elliptic_data(Complex(Real("0.25")), GaussianRational(1, 2)),
                    HalfIntegerM);
}

TEST_CASE("error decay from n=10 to n=20 on safe samples") {
    GaussianRational m0(0);
    int improved = 0, total = 0;
    for (int j = 0; j < 6; ++j) {
        Complex y(Real("0.18") + Real(j) * Real("0.012"), Real("0.05"));
        ApproxValue a10, a20;
        try {
            a10 = udot_elliptic(10, y, Complex(0), m0);
            a20 = udot_elliptic(20, y, Complex(0), m0);
        } catch (const NumericError&) {
            continue;
        }
        if (a10.carveout < Real("0.1") || a20.carveout < Real("0.1")) continue;
        Real e10 = abs(a10.value - eval_un(Real(10) * y, 10, m0));
        Real e20 = abs(a20.value - eval_un(Real(20) * y, 20, m0));
        ++total;
        if (e20 < e10) ++improved;
    }
    REQUIRE(total >= 3);
    CHECK(improved * 3 >= total * 2);
}

P3R_TEST_MAIN(256)
