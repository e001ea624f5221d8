#define DOCTEST_CONFIG_IMPLEMENT
#include "test_common.hpp"

#include "p3r/density.hpp"
#include "p3r/errors.hpp"
#include "p3r/outer.hpp"
#include "p3r/umemura.hpp"

#include <type_traits>

using namespace p3r;
using p3r_test::close;

// the density takes no m: K1 and K2 are functions of y alone
static_assert(std::is_same_v<decltype(&rho), DensitySample (*)(const Complex&, const Real&)>);

TEST_CASE("rho is positive and decreases toward the right eyebrow") {
    DensitySample a = rho(Complex(Real("0.15")));
    DensitySample b = rho(Complex(Real("0.20")));
    DensitySample c = rho(Complex(Real("0.30")));
    CHECK(a.rho > Real(0));
    CHECK(b.rho > Real(0));
    CHECK(c.rho > Real(0));
    CHECK(c.rho < b.rho);
    CHECK(b.rho < a.rho);
}

TEST_CASE("finite differences agree with the polar contour route") {
    for (const char* ys : {"0.15", "0.22"}) {
        Complex y{Real(ys)};
        DensitySample s = rho(y);
        Real rc = rho_contour(y);
        CHECK(abs(rc - s.rho) / s.rho < Real("0.01"));
    }
}

TEST_CASE("stencil leaving the domain is reported") {
    CHECK_THROWS_AS(rho(Complex(Real("0.45"))), StencilOutsideDomain);
}

TEST_CASE("h profile is positive, even, and matches r*rho") {
    Real h0 = h_profile(Real(0));
    CHECK(h0 > Real(0));
    Real hp = h_profile(Real("0.4"));
    Real hm = h_profile(Real("-0.4"));
    CHECK(hp > Real(0));
    CHECK(abs(hp - hm) < Real("1e-6"));
    // r rho(r) approaches h(0) from r = 0.04 to 0.02
    Real v4 = Real("0.04") * rho(Complex(Real("0.04"))).rho;
    Real v2 = Real("0.02") * rho(Complex(Real("0.02"))).rho;
    CHECK(abs(v2 - h0) / h0 < Real("0.15"));
    CHECK(abs(v4 - h0) / h0 < Real("0.25"));
    CHECK(abs(v2 - h0) < abs(v4 - h0));
}

TEST_CASE("outer approximation matches at infinity and derivatives transfer") {
    // p -> -i far away, so u -> 1
    Complex far = udot_outer(Complex(Real(1000000)), 0, 10);
    CHECK(abs(far - Complex(1)) < Real("2e-6"));

    GaussianRational m0(0);
    Complex y = Real(5) * exp(Complex(Real(0), pi() / 4));
    Complex d1 = udot_outer(y, 1, 20);
    Real h("1e-6");
    Complex fd = (eval_un(Real(20) * y + Complex(h), 20, m0) -
                  eval_un(Real(20) * y - Complex(h), 20, m0)) / (2 * h);
    CHECK(abs(d1 - fd) < Real("1e-2"));
}

TEST_CASE("no zeros or poles of u_n on an exterior grid") {
    GaussianRational m0(0);
    p3r_test::Rng rng(31);
    int count = 0;
    while (count < 30) {
        Complex y = rng.complex_in_box(-1.2, 1.2);
        if (eye().distance_to_eye(y) < Real("0.1")) continue;
        if (abs(y) < Real("0.45")) continue;
        ++count;
        for (int n : {10, 20}) {
            Complex u = eval_un(Real(n) * y, n, m0);
            Real mag = abs(u);
            CHECK(mag > Real("0.2"));
            CHECK(mag < Real(5));
        }
    }
}

TEST_CASE("too-close-to-eye requests for derivatives are rejected") {
    CHECK_THROWS_AS(udot_outer(Complex(Real("0.33")), 1, 10), OutsideDomain);
}

P3R_TEST_MAIN(256)
