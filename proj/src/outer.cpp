#include "p3r/outer.hpp"

#include "p3r/errors.hpp"

namespace p3r {

Complex udot_outer(const Complex& y, int j, int n) {
    if (j < 0) throw UsageError("udot_outer: derivative order must be >= 0");
    Complex p = p_branch(y, BranchTag::outer);
    if (j == 0) return I_unit * p;
    Real dist = eye().distance_to_eye(y);
    if (dist <= 0)
        throw OutsideDomain("udot_outer: y must be bounded away from the eye");
    Real radius = std::min(dist / 2, abs(y) / 2);
    // p^{(j)}(y) = j!/(2 pi r^j) * average of p(y + r e^{i phi}) e^{-i j phi};
    // 64 trapezoid nodes give spectral accuracy for the periodic integrand
    const int nodes = 64;
    Complex acc(0);
    Real fact(1);
    for (int i = 2; i <= j; ++i) fact *= i;
    for (int k = 0; k < nodes; ++k) {
        Real phiK = 2 * pi() * k / nodes;
        Complex e(cos(phiK), sin(phiK));
        Complex pk = p_branch(y + radius * e, BranchTag::outer);
        acc += pk * exp(Complex(Real(0), -j * phiK));
    }
    Complex deriv = fact * acc / nodes / exp(Real(j) * log(radius));
    Complex scale = exp(-Real(j) * log(Real(n)));
    return I_unit * scale * deriv;
}

} // namespace p3r
