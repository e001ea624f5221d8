#ifndef P3R_PATH_HPP
#define P3R_PATH_HPP

#include <initializer_list>
#include <vector>

#include "p3r/complexmp.hpp"
#include "p3r/errors.hpp"

namespace p3r {

// Oriented polyline in the complex plane.  Carrier for homology cycles,
// branch cuts and integration contours.
class Path {
public:
    Path() = default;
    Path(std::initializer_list<Complex> pts, bool forward = true)
        : nodes_(pts), forward_(forward) { validate(); }
    explicit Path(std::vector<Complex> pts, bool forward = true)
        : nodes_(std::move(pts)), forward_(forward) { validate(); }

    const std::vector<Complex>& nodes() const { return nodes_; }
    bool forward() const { return forward_; }
    std::size_t segments() const { return nodes_.size() - 1; }

    Complex segment_start(std::size_t i) const {
        return forward_ ? nodes_[i] : nodes_[nodes_.size() - 1 - i];
    }
    Complex segment_end(std::size_t i) const {
        return forward_ ? nodes_[i + 1] : nodes_[nodes_.size() - 2 - i];
    }

    Path reversed() const { return Path(nodes_, !forward_, 0); }

    // closed polygon helper; appends the first node at the end
    static Path closed(std::vector<Complex> pts) {
        pts.push_back(pts.front());
        return Path(std::move(pts));
    }

private:
    Path(std::vector<Complex> pts, bool fwd, int) : nodes_(std::move(pts)), forward_(fwd) {}
    void validate() const {
        if (nodes_.size() < 2)
            throw UsageError("Path requires at least 2 nodes");
        for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
            if (nodes_[i] == nodes_[i + 1])
                throw UsageError("Path has coincident consecutive nodes");
    }
    std::vector<Complex> nodes_;
    bool forward_ = true;
};

// distance from point z to segment [a,b]
Real point_segment_distance(const Complex& z, const Complex& a, const Complex& b);

// true if segments [a,b] and [c,d] intersect (closed endpoints)
bool segments_intersect(const Complex& a, const Complex& b,
                        const Complex& c, const Complex& d);

Real point_path_distance(const Complex& z, const Path& path);

} // namespace p3r

#endif
