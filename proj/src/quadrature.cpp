#include "p3r/quadrature.hpp"

#include <map>
#include <mutex>

#include "p3r/errors.hpp"

namespace p3r {

namespace {

// Legendre P_n and P_n' by the three-term recurrence
void legendre(unsigned n, const Real& x, Real& p, Real& dp) {
    Real p0 = 1, p1 = x;
    for (unsigned k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1);
}

GaussRule make_rule(unsigned n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    Real eps = pow2(-(long)current_precision_bits() + 8);
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-like initial guess, then Newton
        Real x(std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5)));
        Real p, dp;
        for (int it = 0; it < 200; ++it) {
            legendre(n, x, p, dp);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        legendre(n, x, p, dp);
        Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2) {
        rule.nodes[n / 2] = 0;
        Real p, dp;
        legendre(n, Real(0), p, dp);
        rule.weights[n / 2] = 2 / (dp * dp);
    }
    return rule;
}

std::mutex rule_mutex;

} // namespace

const GaussRule& gauss_rule(unsigned n) {
    // keyed by (n, precision) because node accuracy must match the ambient
    // working precision
    static std::map<std::pair<unsigned, unsigned>, GaussRule> cache;
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto key = std::make_pair(n, Real::default_precision());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, make_rule(n)).first;
    return it->second;
}

namespace {

Complex gauss_apply(const Integrand& f, const Complex& a, const Complex& b,
                    const GaussRule& rule) {
    Complex mid = (a + b) / 2, half = (b - a) / 2;
    Complex sum(0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + rule.nodes[i] * half);
    return sum * half;
}

Complex adapt(const Integrand& f, const Complex& a, const Complex& b,
              const Real& tol, int depth, int max_depth,
              const GaussRule& lo, const GaussRule& hi) {
    Complex coarse = gauss_apply(f, a, b, lo);
    Complex fine = gauss_apply(f, a, b, hi);
    if (abs(fine - coarse) <= tol)
        return fine;
    if (depth >= max_depth)
        throw NonConvergence("quadrature depth cap exceeded (integrand singular on or near path?)");
    Complex mid = (a + b) / 2;
    return adapt(f, a, mid, tol / 2, depth + 1, max_depth, lo, hi) +
           adapt(f, mid, b, tol / 2, depth + 1, max_depth, lo, hi);
}

} // namespace

Complex integrate_segment(const Integrand& f, const Complex& a, const Complex& b,
                          const QuadOptions& opt) {
    const GaussRule& lo = gauss_rule(10);
    const GaussRule& hi = gauss_rule(21);
    return adapt(f, a, b, opt.tol, 0, opt.max_depth, lo, hi);
}

Complex integrate_segment_sqrt(const Integrand& f, const Complex& a, const Complex& b,
                               bool sqrt_at_a, bool sqrt_at_b, const QuadOptions& opt) {
    if (sqrt_at_a && sqrt_at_b) {
        Complex mid = (a + b) / 2;
        QuadOptions half = opt;
        half.tol = opt.tol / 2;
        return integrate_segment_sqrt(f, a, mid, true, false, half) +
               integrate_segment_sqrt(f, mid, b, false, true, half);
    }
    if (sqrt_at_b) {
        // reverse the traversal so the singular end comes first
        return -integrate_segment_sqrt(f, b, a, true, false, opt);
    }
    if (!sqrt_at_a)
        return integrate_segment(f, a, b, opt);
    // lambda = a + (b-a) s^2, s in [0,1]: d lambda = 2 s (b-a) ds removes the
    // endpoint singularity / branch-point zero at a
    Complex d = b - a;
    auto g = [&](const Complex& s) {
        return f(a + d * (s * s)) * (2 * s * d);
    };
    return integrate_segment(g, Complex(0), Complex(1), opt);
}

Complex integrate_path(const Integrand& f, const Path& path, const QuadOptions& opt) {
    Complex total(0);
    for (std::size_t i = 0; i < path.segments(); ++i)
        total += integrate_segment(f, path.segment_start(i), path.segment_end(i), opt);
    return total;
}

Complex integrate_path(const Integrand& f, const Path& path, const Real& tol) {
    QuadOptions opt;
    opt.tol = tol;
    return integrate_path(f, path, opt);
}

Complex integrate_ray_to_infinity(const Integrand& f, const Complex& q,
                                  const QuadOptions& opt) {
    // lambda = q/t, t in (0,1]; d lambda = -q/t^2 dt; integrand must be
    // O(lambda^-2) so g(t) = f(q/t) q/t^2 extends continuously by 0 to t=0
    auto g = [&](const Complex& t) -> Complex {
        if (t.re == 0 && t.im == 0) return Complex(0);
        Complex tt = t * t;
        return f(q / t) * (q / tt);
    };
    return integrate_segment(g, Complex(0), Complex(1), opt);
}

} // namespace p3r
