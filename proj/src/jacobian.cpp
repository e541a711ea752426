#include "tropqrt/jacobian.hpp"

#include <optional>
#include <stdexcept>

#include "tropqrt/errors.hpp"
#include "tropqrt/group_law.hpp"

namespace tropqrt {

namespace {

// Offset t of p along edge e (p = vertex[e] + t*dir[e]), or no value.
// Straight edges are rejected by a coordinate comparison before any
// arithmetic; directions have entries in {-1, 0, 1}.
std::optional<Rat> edge_offset(const CycleChart& chart, int e, const Point& p) {
    const Point& v = chart.vertices[static_cast<size_t>(e)];
    const auto [dx, dy] = CycleChart::directions[static_cast<size_t>(e)];
    Rat t;
    if (dx == 0) {
        if (p.x != v.x) return std::nullopt;
        t = dy > 0 ? p.y - v.y : v.y - p.y;
    } else if (dy == 0) {
        if (p.y != v.y) return std::nullopt;
        t = dx > 0 ? p.x - v.x : v.x - p.x;
    } else {
        Rat ex = p.x - v.x;
        if (ex != p.y - v.y) return std::nullopt;
        t = dx > 0 ? std::move(ex) : Rat(-ex);
    }
    if (t < 0 || t > chart.edge_lengths[static_cast<size_t>(e)]) return std::nullopt;
    return t;
}

}  // namespace

ArcParam arc_param(const CycleChart& chart, const Point& p) {
    for (int e = 0; e < 6; ++e)
        if (auto t = edge_offset(chart, e, p))
            return reduce_mod(chart.cum[static_cast<size_t>(e)] + *t, chart.total);
    throw NotOnCycleError(point_to_string(p), {},
                          "point (" + point_to_string(p) + ") is not on the cycle");
}

Point arc_point(const CycleChart& chart, const Rat& s) {
    Rat r = reduce_mod(s, chart.total);
    for (int e = 0; e < 6; ++e) {
        if (r >= chart.cum[static_cast<size_t>(e) + 1]) continue;
        const Rat t = r - chart.cum[static_cast<size_t>(e)];
        const Point& v = chart.vertices[static_cast<size_t>(e)];
        const auto [dx, dy] = CycleChart::directions[static_cast<size_t>(e)];
        return {v.x + t * dx, v.y + t * dy};
    }
    return chart.vertices[0];  // unreachable: r < total
}

Rat calibrate_constant(const CurveParams& c, const CycleChart& chart) {
    Point centroid{0, 0};
    for (const Point& v : chart.vertices) {
        centroid.x += v.x;
        centroid.y += v.y;
    }
    centroid.x /= 6;
    centroid.y /= 6;

    Rat min_edge = chart.edge_lengths[0];
    for (const Rat& l : chart.edge_lengths) min_edge = std::min(min_edge, l);

    auto hits_vertex = [&](const ExitTriple& exits) {
        for (const Point& vtx : chart.vertices)
            if (exits.r1 == vtx || exits.r2 == vtx || exits.r3 == vtx) return true;
        return false;
    };

    Rat eps = min_edge / 16;
    Point v = centroid;
    for (int attempt = 0; attempt < 64; ++attempt) {
        ExitTriple exits = ray_exits(c, v);
        if (!hits_vertex(exits))
            return reduce_mod(arc_param(chart, exits.r1) + arc_param(chart, exits.r2) +
                                  arc_param(chart, exits.r3),
                              chart.total);
        Point shifted{centroid.x + eps, centroid.y + 2 * eps};
        if (!region_contains(chart, shifted)) {
            eps /= 2;
            continue;
        }
        v = shifted;
        eps /= 2;
    }
    throw std::logic_error("calibration could not find a vertex with generic exits");
}

Point third_point_oracle(const CycleChart& chart, const Rat& ccal, const Point& p,
                         const Point& q) {
    return arc_point(chart, ccal - arc_param(chart, p) - arc_param(chart, q));
}

}  // namespace tropqrt
