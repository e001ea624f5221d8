#ifndef P3R_EXACT_POLY_HPP
#define P3R_EXACT_POLY_HPP

#include <vector>

#include "p3r/gaussian_rational.hpp"

namespace p3r {

// Dense polynomial over Gaussian rationals, ascending degree.  Arithmetic is
// exact; the Umemura recurrence depends on division leaving zero remainder.
class ExactPolynomial {
public:
    ExactPolynomial() : coeffs_(1) {}
    explicit ExactPolynomial(std::vector<GaussianRational> coeffs)
        : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
        trim();
    }
    static ExactPolynomial constant(const GaussianRational& c) {
        return ExactPolynomial({c});
    }

    long degree() const {                 // -1 for the zero polynomial
        if (coeffs_.size() == 1 && coeffs_[0].is_zero()) return -1;
        return static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const { return degree() < 0; }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    const GaussianRational& coeff(std::size_t k) const {
        static const GaussianRational zero;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const GaussianRational& c) const;
    bool operator==(const ExactPolynomial& o) const { return coeffs_ == o.coeffs_; }

    ExactPolynomial derivative() const;

    // exact quotient; throws InexactDivision if a nonzero remainder appears
    ExactPolynomial divide_exact(const ExactPolynomial& divisor) const;

    // p(-x)
    ExactPolynomial reflect() const;

    Complex eval(const Complex& x) const;
    GaussianRational eval_exact(const GaussianRational& x) const;

    // coefficients rounded to the ambient precision (cached by caller)
    std::vector<Complex> to_complex_coeffs() const;

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<GaussianRational> coeffs_;
};

// multiply by the monomial x (degree shift)
ExactPolynomial shift_up(const ExactPolynomial& p);

} // namespace p3r

#endif
