#include "p3r/gaussian_rational.hpp"

#include <sstream>

#include "p3r/errors.hpp"

namespace p3r {

std::string GaussianRational::str() const {
    std::ostringstream os;
    os << re;
    if (im != 0) os << "," << im;
    return os.str();
}

GaussianRational GaussianRational::parse(const std::string& text) {
    auto parse_one = [](const std::string& s) -> Rational {
        if (s.empty()) throw UsageError("empty rational literal");
        try {
            return Rational(s);
        } catch (const std::exception&) {
            throw UsageError("bad rational literal '" + s + "' (expected p or p/q)");
        }
    };
    auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_one(text)};
    return {parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

bool is_half_integer(const GaussianRational& m) {
    if (m.im != 0) return false;
    Rational twice = m.re * 2;
    return denominator(twice) == 1 && numerator(twice) % 2 != 0;
}

} // namespace p3r
