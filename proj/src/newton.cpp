#include "p3r/newton.hpp"

#include "p3r/errors.hpp"

namespace p3r {

namespace {
Real sup_norm(const Vec2& v) { return std::max(abs(v[0]), abs(v[1])); }
} // namespace

Vec2 newton2(const Fn2& F, const Jac2& J, const Vec2& start, const Real& tol) {
    Vec2 x = start;
    Vec2 fx = F(x);
    for (int iter = 0; iter < 50; ++iter) {
        if (sup_norm(fx) < tol) return x;
        Mat2 j = J(x);
        Real det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        Real scale = std::max(std::max(abs(j[0][0]), abs(j[0][1])),
                              std::max(abs(j[1][0]), abs(j[1][1])));
        if (scale == 0 || abs(det) < scale * scale * pow2(-(long)current_precision_bits() + 16))
            throw SingularJacobian("newton2: Jacobian numerically singular");
        Vec2 step = {(j[1][1] * fx[0] - j[0][1] * fx[1]) / det,
                     (j[0][0] * fx[1] - j[1][0] * fx[0]) / det};
        Real lambda = 1;
        for (int halvings = 0; halvings <= 40; ++halvings) {
            Vec2 trial = {x[0] - lambda * step[0], x[1] - lambda * step[1]};
            Vec2 ft = F(trial);
            if (sup_norm(ft) < sup_norm(fx) || sup_norm(ft) < tol) {
                x = trial;
                fx = ft;
                break;
            }
            lambda /= 2;
            if (halvings == 40)
                throw NonConvergence("newton2: damping failed to reduce the residual");
        }
    }
    if (sup_norm(fx) < tol) return x;
    throw NonConvergence("newton2: 50 damped iterations exhausted");
}

Jac2 fd_jacobian(const Fn2& F, const Real& h) {
    return [F, h](const Vec2& x) {
        Mat2 j;
        for (int k = 0; k < 2; ++k) {
            Vec2 xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            Vec2 fp = F(xp), fm = F(xm);
            j[0][k] = (fp[0] - fm[0]) / (2 * h);
            j[1][k] = (fp[1] - fm[1]) / (2 * h);
        }
        return j;
    };
}

} // namespace p3r
