#include "tropqrt/line.hpp"

#include <algorithm>

namespace tropqrt {

TropLine line_through(const Point& p, const Point& q) {
    return {std::max(p.y, q.y), std::max(p.x, q.x), std::max(p.x + q.y, q.x + p.y)};
}

Point vertex_of(const TropLine& l) {
    return {l.constant - l.x_coeff, l.constant - l.y_coeff};
}

bool point_on_line(const TropLine& l, const Point& p) {
    const Rat tx = l.x_coeff + p.x;
    const Rat ty = l.y_coeff + p.y;
    const Rat m = std::max({tx, ty, l.constant});
    int ties = (tx == m) + (ty == m) + (l.constant == m);
    return ties >= 2;
}

}  // namespace tropqrt
