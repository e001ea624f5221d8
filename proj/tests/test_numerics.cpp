#define DOCTEST_CONFIG_IMPLEMENT
#include "test_common.hpp"

#include "p3r/errors.hpp"
#include "p3r/newton.hpp"
#include "p3r/quadrature.hpp"
#include "p3r/roots.hpp"

using namespace p3r;
using p3r_test::close;

TEST_CASE("constant integrand over a straight segment") {
    Path p({Complex(0), Complex(1)});
    Complex v = integrate_path([](const Complex&) { return Complex(1); }, p, Real("1e-20"));
    CHECK(close(v, Complex(1), Real("1e-25")));
}

TEST_CASE("residue of 1/lambda over a closed loop") {
    Path square = Path::closed({Complex(1), Complex(0, 1), Complex(-1), Complex(0, -1)});
    Complex v = integrate_path([](const Complex& z) { return Complex(1) / z; }, square,
                               Real("1e-20"));
    CHECK(close(v, Complex(Real(0), 2 * pi()), Real("1e-22")));
}

TEST_CASE("antiderivative of lambda to 1+i") {
    Path p({Complex(0), Complex(1, 1)});
    Complex v = integrate_path([](const Complex& z) { return z; }, p, Real("1e-20"));
    CHECK(close(v, Complex(0, 1), Real("1e-25")));
}

TEST_CASE("path integral is additive and flips under orientation reversal") {
    auto f = [](const Complex& z) { return exp(z) * z; };
    Path whole({Complex(0), Complex(1, 2)});
    Path first({Complex(0), Complex(Real("0.5"), Real(1))});
    Path second({Complex(Real("0.5"), Real(1)), Complex(1, 2)});
    Real tol("1e-25");
    Complex w = integrate_path(f, whole, tol);
    Complex split = integrate_path(f, first, tol) + integrate_path(f, second, tol);
    CHECK(close(w, split, Real("1e-22")));
    Complex rev = integrate_path(f, whole.reversed(), tol);
    CHECK(close(w, -rev, Real("1e-22")));
}

TEST_CASE("sqrt-endpoint substitution integrates an inverse square root") {
    // int_0^1 dx/sqrt(x) = 2
    auto f = [](const Complex& z) { return Complex(1) / sqrt(z); };
    Complex v = integrate_segment_sqrt(f, Complex(0), Complex(1), true, false);
    CHECK(close(v, Complex(2), Real("1e-20")));
}

TEST_CASE("roots of lambda^2+1") {
    auto roots = find_roots_poly({Complex(1), Complex(0), Complex(1)}, 256);
    REQUIRE(roots.size() == 2);
    Real d1 = std::min(abs(roots[0] - Complex(0, 1)), abs(roots[0] - Complex(0, -1)));
    Real d2 = std::min(abs(roots[1] - Complex(0, 1)), abs(roots[1] - Complex(0, -1)));
    CHECK(d1 < Real("1e-35"));
    CHECK(d2 < Real("1e-35"));
    CHECK(abs(roots[0] + roots[1]) < Real("1e-35"));
}

TEST_CASE("double root of lambda^2-2lambda+1") {
    auto roots = find_roots_poly({Complex(1), Complex(-2), Complex(1)}, 256);
    REQUIRE(roots.size() == 2);
    CHECK(abs(roots[0] - Complex(1)) < Real("1e-18"));
    CHECK(abs(roots[1] - Complex(1)) < Real("1e-18"));
}

TEST_CASE("product of roots matches the coefficient ratio") {
    p3r_test::Rng rng(7);
    std::vector<Complex> coeffs;
    for (int i = 0; i < 9; ++i) coeffs.push_back(rng.complex_in_box(-2, 2));
    coeffs.push_back(Complex(1));
    auto roots = find_roots_poly(coeffs, 256);
    Complex prod(1);
    for (const auto& r : roots) prod *= r;
    Complex expect = coeffs[0];  // (-1)^9 * a0/a9 with a9 = 1
    CHECK(abs(prod + expect) / abs(expect) < Real("1e-20"));
}

TEST_CASE("newton2 on an affine system") {
    Fn2 F = [](const Vec2& x) -> Vec2 { return {x[0] - 1, x[1] - 2}; };
    Vec2 sol = newton2(F, fd_jacobian(F, Real("1e-10")), {Real(0), Real(0)}, Real("1e-30"));
    CHECK(close(sol[0], Real(1), Real("1e-30")));
    CHECK(close(sol[1], Real(2), Real("1e-30")));
}

TEST_CASE("newton2 on a quadratic system") {
    Fn2 F = [](const Vec2& x) -> Vec2 { return {x[0] * x[0] - x[1], x[1] - 4}; };
    Vec2 sol = newton2(F, fd_jacobian(F, Real("1e-10")), {Real(1), Real(3)}, Real("1e-30"));
    CHECK(close(sol[0], Real(2), Real("1e-28")));
    CHECK(close(sol[1], Real(4), Real("1e-28")));
    // re-running from the solution barely moves it
    Vec2 again = newton2(F, fd_jacobian(F, Real("1e-10")), sol, Real("1e-30"));
    CHECK(abs(again[0] - sol[0]) < Real("1e-30"));
}

TEST_CASE("quadrature depth cap reports NonConvergence") {
    // integrand with a pole on the path
    auto f = [](const Complex& z) { return Complex(1) / (z - Complex(Real("0.5"))); };
    Path p({Complex(0), Complex(1)});
    CHECK_THROWS_AS(integrate_path(f, p, Real("1e-12")), NonConvergence);
}

P3R_TEST_MAIN(256)
