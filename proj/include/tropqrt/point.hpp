#pragma once

#include <string>

#include "tropqrt/rational.hpp"

namespace tropqrt {

/// A point of the plane with finite exact-rational coordinates.
struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// "x,y" with rationals in lowest terms; diagnostics and CLI output.
inline std::string point_to_string(const Point& p) {
    return rational_to_string(p.x) + "," + rational_to_string(p.y);
}

/// Closed axis-aligned rectangle.
struct Box {
    Rat xmin;
    Rat ymin;
    Rat xmax;
    Rat ymax;

    bool nonempty() const { return xmin < xmax && ymin < ymax; }
    bool contains(const Point& p) const {
        return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
    }
};

/// Closed segment between two rational points.
struct Segment {
    Point a;
    Point b;

    friend bool operator==(const Segment& s, const Segment& t) {
        return s.a == t.a && s.b == t.b;
    }
};

/// Exact membership test, endpoints included.
bool point_on_segment(const Segment& seg, const Point& p);

}  // namespace tropqrt
