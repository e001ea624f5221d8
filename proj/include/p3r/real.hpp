#ifndef P3R_REAL_HPP
#define P3R_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

namespace p3r {

namespace mp = boost::multiprecision;

// Arbitrary-precision real.  Precision is a thread-local ambient setting;
// every freshly constructed value picks it up.  Expression templates are off
// so that Complex below can hold plain members.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline unsigned digits_for_bits(unsigned bits) {
    // ceil(bits * log10(2)) plus a couple of guard digits
    return static_cast<unsigned>(bits * 0.30103) + 3;
}

inline void set_precision_bits(unsigned bits) {
    Real::default_precision(digits_for_bits(bits));
}

inline unsigned current_precision_bits() {
    return static_cast<unsigned>(Real::default_precision() / 0.30103);
}

// Scoped precision change (e.g. root refinement at 512 bits inside a
// 256-bit computation).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
private:
    unsigned saved_;
};

inline Real pi() {
    return 4 * atan(Real(1));
}

// 2^-k at ambient precision
inline Real pow2(long k) { return ldexp(Real(1), static_cast<int>(k)); }

} // namespace p3r

#endif
