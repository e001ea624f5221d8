#include "p3r/theta.hpp"

#include "p3r/errors.hpp"

namespace p3r {

Complex theta(const Complex& z, const Complex& B) {
    if (!(B.re < 0))
        throw DivergentParameter("theta: Re B must be negative");
    Complex sum(1);  // k = 0 term
    Complex ez = exp(z), emz = exp(-z);
    Complex ep(1), em(1);
    Real bound("1e-30");
    for (long k = 1; k < 100000; ++k) {
        Complex q = exp(B * (Real(k) * k / 2));
        ep *= ez;
        em *= emz;
        Complex term = q * (ep + em);
        sum += term;
        // remaining-tail bound: |q_{k+1}| (|e^z|^{k+1} + |e^-z|^{k+1}) decays
        // super-geometrically; stop once the next term alone is negligible
        Real next = exp(B.re * (Real(k + 1) * (k + 1) / 2)) *
                    (exp(abs(z.re) * (k + 1)) * 2);
        if (next < bound * (abs(sum) + 1)) break;
    }
    return sum;
}

void lattice_decompose(const Complex& z, const Complex& B, Real& alpha, Real& beta) {
    // z = 2 pi i alpha + B beta; Re gives beta, then Im(conj(B) z) gives alpha
    beta = z.re / B.re;
    alpha = (conj(B) * z).im / (2 * pi() * B.re);
}

Real lattice_distance(const Complex& z, const Complex& B) {
    Real alpha, beta;
    lattice_decompose(z, B, alpha, beta);
    Real best(-1);
    Real fa = floor(alpha), fb = floor(beta);
    for (int da = 0; da <= 1; ++da)
        for (int db = 0; db <= 1; ++db) {
            Complex lat = Complex(0, 2 * pi() * (fa + da)) + B * (fb + db);
            Real d = abs(z - lat);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

} // namespace p3r
