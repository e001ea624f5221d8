#ifndef P3R_OUTER_HPP
#define P3R_OUTER_HPP

#include "p3r/landscape.hpp"

namespace p3r {

// Theorem-1 equilibrium approximation outside the eye and its x-derivatives
// through the Cauchy integral: d^j u_n/dx^j (ny) ~ i n^{-j} p^{(j)}(y).
Complex udot_outer(const Complex& y, int j, int n);

} // namespace p3r

#endif
