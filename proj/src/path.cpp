#include "p3r/path.hpp"

#include <ostream>

namespace p3r {

std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << "(" << z.re << ", " << z.im << ")";
}

Real point_segment_distance(const Complex& z, const Complex& a, const Complex& b) {
    Complex d = b - a;
    Real len2 = norm(d);
    if (len2 == 0) return abs(z - a);
    // projection parameter clamped to [0,1]
    Real t = ((z.re - a.re) * d.re + (z.im - a.im) * d.im) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return abs(z - (a + t * d));
}

namespace {
int orient(const Complex& a, const Complex& b, const Complex& c) {
    Real v = (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}
bool on_segment(const Complex& a, const Complex& b, const Complex& p) {
    return std::min(a.re, b.re) <= p.re && p.re <= std::max(a.re, b.re) &&
           std::min(a.im, b.im) <= p.im && p.im <= std::max(a.im, b.im);
}
} // namespace

bool segments_intersect(const Complex& a, const Complex& b,
                        const Complex& c, const Complex& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

Real point_path_distance(const Complex& z, const Path& path) {
    Real best = abs(z - path.nodes()[0]);
    for (std::size_t i = 0; i + 1 < path.nodes().size(); ++i) {
        Real d = point_segment_distance(z, path.nodes()[i], path.nodes()[i + 1]);
        if (d < best) best = d;
    }
    return best;
}

} // namespace p3r
