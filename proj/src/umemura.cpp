#include "p3r/umemura.hpp"

#include <map>
#include <mutex>

#include "p3r/errors.hpp"
#include "p3r/roots.hpp"

namespace p3r {

namespace {

// s_{n+1} = [ (4x+2m+1) s_n^2 - s_n s_n' - x (s_n s_n'' - (s_n')^2) ] / (2 s_{n-1})
ExactPolynomial step(const ExactPolynomial& sn, const ExactPolynomial& snm1,
                     const GaussianRational& m) {
    ExactPolynomial dsn = sn.derivative();
    ExactPolynomial ddsn = dsn.derivative();
    ExactPolynomial lin({m * 2 + GaussianRational(1, 2) * 2, GaussianRational(4)});
    ExactPolynomial num = lin * (sn * sn) - sn * dsn - shift_up(sn * ddsn - dsn * dsn);
    return num.divide_exact(snm1 * GaussianRational(2));
}

struct SeqKey {
    std::string m;
    bool operator<(const SeqKey& o) const { return m < o.m; }
};

std::mutex cache_mutex;
std::map<SeqKey, std::vector<ExactPolynomial>> seq_cache;
std::map<std::pair<int, std::string>, FactorSet> factor_cache;

const std::vector<ExactPolynomial>& sequence_cached(int n_max, const GaussianRational& m) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    SeqKey key{m.str()};
    auto& seq = seq_cache[key];
    if (seq.empty()) {
        seq.push_back(ExactPolynomial::constant(GaussianRational(1)));  // s_{-1}
        seq.push_back(ExactPolynomial::constant(GaussianRational(1)));  // s_0
    }
    while (static_cast<int>(seq.size()) < n_max + 2)
        seq.push_back(step(seq[seq.size() - 1], seq[seq.size() - 2], m));
    return seq;
}

} // namespace

std::vector<ExactPolynomial> build_sequence(int n_max, const GaussianRational& m) {
    if (n_max < 0) throw UsageError("build_sequence: n_max must be >= 0");
    const auto& seq = sequence_cached(n_max, m);
    return std::vector<ExactPolynomial>(seq.begin(), seq.begin() + n_max + 2);
}

const FactorSet& factors(int n, const GaussianRational& m) {
    if (n < 1) throw UsageError("factors: n must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = factor_cache.find({n, m.str()});
        if (it != factor_cache.end()) return it->second;
    }
    GaussianRational mm1 = m - GaussianRational(1);
    const auto seq_m = build_sequence(n, m);
    const auto seq_mm1 = build_sequence(n, mm1);
    FactorSet fs{seq_mm1[n + 1], seq_m[n], seq_m[n + 1], seq_mm1[n]};
    std::lock_guard<std::mutex> lock(cache_mutex);
    return factor_cache.emplace(std::make_pair(n, m.str()), std::move(fs)).first->second;
}

namespace {

Real pole_threshold(const FactorSet& fs, const Complex& x) {
    // crude magnitude scale of the denominator polynomials at |x|
    Real ax = abs(x), mag(0), xp(1);
    for (std::size_t k = 0; k <= fs.s_n_m.coeffs().size(); ++k) {
        if (k < fs.s_n_m.coeffs().size())
            mag += abs(fs.s_n_m.coeff(k).to_complex()) * xp;
        if (k < fs.s_nm1_mm1.coeffs().size())
            mag += abs(fs.s_nm1_mm1.coeff(k).to_complex()) * xp;
        xp *= ax;
    }
    if (mag == 0) mag = 1;
    return mag * pow2(-(long)current_precision_bits() + 24);
}

} // namespace

Complex eval_un(const Complex& x, int n, const GaussianRational& m) {
    if (n == 0) return Complex(1);
    if (n < 0) return Complex(1) / eval_un(x, -n, m);
    const FactorSet& fs = factors(n, m);
    Complex num = fs.s_n_mm1.eval(x) * fs.s_nm1_m.eval(x);
    Complex den = fs.s_n_m.eval(x) * fs.s_nm1_mm1.eval(x);
    if (abs(den) < pole_threshold(fs, x))
        throw PoleAt("eval_un: denominator underflow at x=" + to_string(x, 8));
    return num / den;
}

Complex piii_residual(int n, const GaussianRational& m, const Complex& x) {
    Complex theta0 = m.to_complex() + n;
    Complex thetai = m.to_complex() - n + 1;
    if (n == 0) return Complex(0);  // u == 1 solves the equation identically
    bool neg = n < 0;
    int nn = neg ? -n : n;
    const FactorSet& fs = factors(nn, m);
    const ExactPolynomial* ps[4] = {&fs.s_n_mm1, &fs.s_nm1_m, &fs.s_n_m, &fs.s_nm1_mm1};
    // u = P0 P1 / (P2 P3); for n<0 the reciprocal (signs of the log-derivative flip)
    Complex u(1), lg(0), dlg(0);
    for (int k = 0; k < 4; ++k) {
        const ExactPolynomial& p = *ps[k];
        Complex v = p.eval(x);
        Complex dv = p.derivative().eval(x);
        Complex ddv = p.derivative().derivative().eval(x);
        if (abs(v) == 0) throw PoleAt("piii_residual: x is a root of a factor");
        int sign = (k < 2) ? 1 : -1;
        if (neg) sign = -sign;
        if (sign > 0) u *= v; else u /= v;
        lg += sign * (dv / v);
        dlg += sign * ((ddv * v - dv * dv) / (v * v));
    }
    // residual = u'' - [ (u')^2/u - u'/x + (4 Th0 u^2 + 4(1-Thi))/x + 4u^3 - 4/u ]
    //          = u dlg + u lg / x - (4 Th0 u^2 + 4(1-Thi))/x - 4 u^3 + 4/u
    return u * dlg + u * lg / x - (4 * theta0 * u * u + 4 * (Complex(1) - thetai)) / x
           - 4 * u * u * u + 4 / u;
}

RationalSolution classified_roots(int n, const GaussianRational& m, unsigned precision_bits) {
    if (n < 1) throw UsageError("classified_roots: n must be >= 1");
    const FactorSet& fs = factors(n, m);
    RationalSolution rs{n, m, fs, {}, {}, {}, {}};
    auto solve = [&](const ExactPolynomial& p) -> std::vector<Complex> {
        if (p.degree() < 1) return {};
        PrecisionGuard guard(precision_bits);
        return find_roots_poly(p.to_complex_coeffs(), precision_bits);
    };
    rs.zero_roots_filled = solve(fs.s_n_mm1);
    rs.zero_roots_open = solve(fs.s_nm1_m);
    rs.pole_roots_filled = solve(fs.s_n_m);
    rs.pole_roots_open = solve(fs.s_nm1_mm1);
    return rs;
}

namespace {
long order_at_zero(const ExactPolynomial& p) {
    long ord = 0;
    while (ord <= p.degree() && p.coeff(ord).is_zero()) ++ord;
    return ord;
}
} // namespace

long numerator_order_at_zero(int n, const GaussianRational& m) {
    const FactorSet& fs = factors(n, m);
    return order_at_zero(fs.s_n_mm1) + order_at_zero(fs.s_nm1_m);
}

long denominator_order_at_zero(int n, const GaussianRational& m) {
    const FactorSet& fs = factors(n, m);
    return order_at_zero(fs.s_n_m) + order_at_zero(fs.s_nm1_mm1);
}

namespace {

// numeric polynomial helpers for the fallback mode
using CPoly = std::vector<Complex>;

CPoly cmul(const CPoly& a, const CPoly& b) {
    CPoly r(a.size() + b.size() - 1, Complex(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

CPoly cderiv(const CPoly& a) {
    if (a.size() <= 1) return {Complex(0)};
    CPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (int)i;
    return r;
}

CPoly cdiv_drop_rem(const CPoly& num, const CPoly& den) {
    long dd = (long)num.size() - (long)den.size();
    if (dd < 0) return {Complex(0)};
    CPoly rem = num, quot(dd + 1, Complex(0));
    for (long k = dd; k >= 0; --k) {
        Complex q = rem[k + den.size() - 1] / den.back();
        quot[k] = q;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[k + j] -= q * den[j];
    }
    return quot;
}

} // namespace

std::vector<std::vector<Complex>> build_sequence_numeric(int n_max, const Complex& m) {
    std::vector<CPoly> seq;
    seq.push_back({Complex(1)});
    seq.push_back({Complex(1)});
    CPoly lin = {2 * m + Complex(1), Complex(4)};
    for (int n = 0; n < n_max; ++n) {
        const CPoly& sn = seq.back();
        const CPoly& snm1 = seq[seq.size() - 2];
        CPoly dsn = cderiv(sn), ddsn = cderiv(dsn);
        CPoly a = cmul(lin, cmul(sn, sn));
        CPoly b = cmul(sn, dsn);
        CPoly c = cmul(sn, ddsn);
        CPoly d = cmul(dsn, dsn);
        std::size_t len = std::max({a.size(), b.size(), c.size() + 1, d.size() + 1});
        CPoly num(len, Complex(0));
        for (std::size_t i = 0; i < a.size(); ++i) num[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) num[i] -= b[i];
        for (std::size_t i = 0; i < c.size(); ++i) num[i + 1] -= c[i];  // -x * sn sn''
        for (std::size_t i = 0; i < d.size(); ++i) num[i + 1] += d[i];  // +x * (sn')^2
        CPoly den = snm1;
        for (auto& v : den) v *= 2;
        seq.push_back(cdiv_drop_rem(num, den));
    }
    return seq;
}

Complex eval_un_numeric(const Complex& x, int n, const Complex& m) {
    if (n == 0) return Complex(1);
    if (n < 0) return Complex(1) / eval_un_numeric(x, -n, m);
    auto horner = [](const CPoly& p, const Complex& z) {
        Complex v(0);
        for (std::size_t i = p.size(); i-- > 0;) v = v * z + p[i];
        return v;
    };
    auto seq_m = build_sequence_numeric(n, m);
    auto seq_mm1 = build_sequence_numeric(n, m - Complex(1));
    Complex num = horner(seq_mm1[n + 1], x) * horner(seq_m[n], x);
    Complex den = horner(seq_m[n + 1], x) * horner(seq_mm1[n], x);
    return num / den;
}

} // namespace p3r
