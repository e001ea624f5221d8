#include "p3r/roots.hpp"

#include <algorithm>

#include "p3r/errors.hpp"

namespace p3r {

void poly_eval2(const std::vector<Complex>& coeffs, const Complex& z,
                Complex& p, Complex& dp) {
    p = Complex(0);
    dp = Complex(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + coeffs[i];
    }
}

namespace {

// trim (exactly) zero leading coefficients; degree-0 factor x=0 roots for
// zero trailing coefficients are peeled off by the caller loop below
std::size_t effective_degree(const std::vector<Complex>& c) {
    std::size_t d = c.size() - 1;
    while (d > 0 && c[d].re == 0 && c[d].im == 0) --d;
    return d;
}

Real fujiwara_radius(const std::vector<Complex>& c, std::size_t deg) {
    // 2 * max_k |a_{deg-k}/a_deg|^{1/k}
    Real lead = abs(c[deg]);
    Real best(0);
    for (std::size_t k = 1; k <= deg; ++k) {
        Real mag = abs(c[deg - k]) / lead;
        if (mag > 0) {
            Real r = exp(log(mag) / (int)k);
            if (r > best) best = r;
        }
    }
    if (best == 0) best = 1;
    return 2 * best;
}

} // namespace

std::vector<Complex> find_roots_poly(const std::vector<Complex>& coeffs,
                                     unsigned precision_bits) {
    if (coeffs.size() < 2)
        throw UsageError("find_roots_poly: degree must be >= 1");
    std::size_t deg = effective_degree(coeffs);
    if (deg == 0)
        throw UsageError("find_roots_poly: leading coefficient is zero");

    PrecisionGuard guard(precision_bits);
    std::vector<Complex> c(coeffs.begin(), coeffs.begin() + deg + 1);
    // re-round inputs at the working precision
    for (auto& a : c) a = Complex(Real(a.re), Real(a.im));

    std::vector<Complex> roots;
    // peel exact roots at the origin
    std::size_t shift = 0;
    while (shift < deg && c[shift].re == 0 && c[shift].im == 0) ++shift;
    for (std::size_t i = 0; i < shift; ++i) roots.push_back(Complex(0));
    if (shift) c.erase(c.begin(), c.begin() + shift);
    std::size_t d = c.size() - 1;
    if (d == 0) return roots;

    Real rad = fujiwara_radius(c, d);
    std::vector<Complex> z(d);
    Real two_pi = 2 * pi();
    for (std::size_t i = 0; i < d; ++i) {
        // irrational-ish angular offset avoids symmetry locking
        Real ang = two_pi * (int)i / (int)d + Real("0.41");
        z[i] = rad * Complex(cos(ang), sin(ang));
    }

    Real target = pow2(-(long)(precision_bits / 2));
    const int max_iter = 600;
    bool done = false;
    for (int iter = 0; iter < max_iter && !done; ++iter) {
        done = true;
        for (std::size_t i = 0; i < d; ++i) {
            Complex p, dp;
            poly_eval2(c, z[i], p, dp);
            if (abs(p) == 0) continue;
            Complex newton;
            if (abs(dp) == 0) {
                // exact critical point hit; nudge off
                newton = Complex(target, target);
            } else {
                newton = p / dp;
            }
            Complex sum(0);
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += Complex(1) / (z[i] - z[j]);
            Complex denom = Complex(1) - newton * sum;
            Complex step = (abs(denom) == 0) ? newton : newton / denom;
            z[i] -= step;
            if (abs(newton) > target) done = false;
        }
    }
    if (!done) {
        // final verification pass: accept if every Newton correction meets the
        // target now (the loop flag is one sweep stale)
        for (std::size_t i = 0; i < d; ++i) {
            Complex p, dp;
            poly_eval2(c, z[i], p, dp);
            if (abs(dp) == 0) continue;
            if (abs(p / dp) > target)
                throw NonConvergence("find_roots_poly: root clustering beyond working precision");
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

} // namespace p3r
