#pragma once

#include "tropqrt/point.hpp"

namespace tropqrt {

/// A tropical line: the corner locus of max(x_coeff + x, y_coeff + y,
/// constant). Three rays leave the vertex (constant - x_coeff,
/// constant - y_coeff) in directions (0,-1), (-1,0), (1,1). Lines are
/// stored by coefficients; the vertex is derived.
struct TropLine {
    Rat x_coeff;
    Rat y_coeff;
    Rat constant;
};

/// The unique line through p and q:
///   x_coeff = max(p.y, q.y), y_coeff = max(p.x, q.x),
///   constant = max(p.x + q.y, q.x + p.y).
/// Both points always lie on the result. When the segment pq is parallel
/// to an axis the vertex lands on the coordinate-wise larger point (the
/// rays point down and left); when parallel to y = x it lands on the
/// smaller one (that ray points up-right); for p == q the vertex is p.
TropLine line_through(const Point& p, const Point& q);

/// (constant - x_coeff, constant - y_coeff).
Point vertex_of(const TropLine& l);

/// True iff at least two of the three terms attain the maximum at p.
bool point_on_line(const TropLine& l, const Point& p);

}  // namespace tropqrt
