#ifndef P3R_TEST_COMMON_HPP
#define P3R_TEST_COMMON_HPP

#include <cstdint>

#include "doctest.h"
#include "p3r/complexmp.hpp"

namespace p3r_test {

using p3r::Complex;
using p3r::Real;

inline bool close(const Real& a, const Real& b, const Real& tol) {
    return abs(a - b) <= tol;
}

inline bool close(const Complex& a, const Complex& b, const Real& tol) {
    return abs(a - b) <= tol;
}

// deterministic xorshift for reproducible sample points
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : s_(seed) {}
    double uniform() {  // in (0,1)
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return static_cast<double>(s_ % 1000000007ull) / 1000000007.0;
    }
    Complex complex_in_box(double lo, double hi) {
        double re = lo + (hi - lo) * uniform();
        double im = lo + (hi - lo) * uniform();
        return Complex(re, im);
    }
private:
    std::uint64_t s_;
};

} // namespace p3r_test

#define P3R_TEST_MAIN(bits)                                        \
    int main(int argc, char** argv) {                              \
        p3r::set_precision_bits(bits);                             \
        doctest::Context ctx;                                      \
        ctx.applyCommandLine(argc, argv);                          \
        return ctx.run();                                          \
    }

#endif
