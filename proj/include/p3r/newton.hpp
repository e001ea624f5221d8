#ifndef P3R_NEWTON_HPP
#define P3R_NEWTON_HPP

#include <array>
#include <functional>

#include "p3r/real.hpp"

namespace p3r {

using Vec2 = std::array<Real, 2>;
using Mat2 = std::array<std::array<Real, 2>, 2>;

using Fn2 = std::function<Vec2(const Vec2&)>;
using Jac2 = std::function<Mat2(const Vec2&)>;

// Damped Newton for a 2x2 real system: full step first, halved while the sup
// norm of F does not decrease.  Throws SingularJacobian / NonConvergence.
Vec2 newton2(const Fn2& F, const Jac2& J, const Vec2& start, const Real& tol);

// finite-difference Jacobian helper for callers without an analytic one
Jac2 fd_jacobian(const Fn2& F, const Real& h);

} // namespace p3r

#endif
