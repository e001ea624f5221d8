#include "p3r/exact_poly.hpp"

#include "p3r/errors.hpp"

namespace p3r {

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    std::vector<GaussianRational> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
    std::vector<GaussianRational> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    if (is_zero() || o.is_zero()) return ExactPolynomial();
    std::vector<GaussianRational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::operator*(const GaussianRational& c) const {
    std::vector<GaussianRational> r = coeffs_;
    for (auto& a : r) a *= c;
    return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (coeffs_.size() == 1) return ExactPolynomial();
    std::vector<GaussianRational> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r[i - 1] = coeffs_[i] * GaussianRational(static_cast<long>(i));
    return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::divide_exact(const ExactPolynomial& divisor) const {
    if (divisor.is_zero()) throw InexactDivision("division by the zero polynomial");
    if (is_zero()) return ExactPolynomial();
    long dd = degree() - divisor.degree();
    if (dd < 0) throw InexactDivision("degree of dividend below divisor");
    std::vector<GaussianRational> rem = coeffs_;
    std::vector<GaussianRational> quot(dd + 1);
    const auto& dc = divisor.coeffs();
    const GaussianRational& lead = dc.back();
    for (long k = dd; k >= 0; --k) {
        GaussianRational q = rem[k + divisor.degree()] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < dc.size(); ++j)
            rem[k + j] -= q * dc[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            throw InexactDivision("nonzero polynomial remainder");
    return ExactPolynomial(std::move(quot));
}

ExactPolynomial ExactPolynomial::reflect() const {
    std::vector<GaussianRational> r = coeffs_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return ExactPolynomial(std::move(r));
}

Complex ExactPolynomial::eval(const Complex& x) const {
    Complex p(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        p = p * x + coeffs_[i].to_complex();
    return p;
}

GaussianRational ExactPolynomial::eval_exact(const GaussianRational& x) const {
    GaussianRational p;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        p = p * x + coeffs_[i];
    return p;
}

std::vector<Complex> ExactPolynomial::to_complex_coeffs() const {
    std::vector<Complex> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i].to_complex();
    return r;
}

ExactPolynomial shift_up(const ExactPolynomial& p) {
    if (p.is_zero()) return p;
    std::vector<GaussianRational> r(p.coeffs().size() + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r[i + 1] = p.coeffs()[i];
    return ExactPolynomial(std::move(r));
}

} // namespace p3r
