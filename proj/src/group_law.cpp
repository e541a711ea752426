#include "tropqrt/group_law.hpp"

#include <array>
#include <string>

#include "tropqrt/errors.hpp"
#include "tropqrt/jacobian.hpp"

namespace tropqrt {

namespace detail {

ExitTriple ray_exits_unchecked(const CurveParams& c, const Point& v) {
    const Rat& a1 = c.a(1).value();
    const Rat& a2 = c.a(2).value();
    const Rat& a3 = c.a(3).value();
    const Rat& a4 = c.a(4).value();
    const Rat& a5 = c.a(5).value();
    const Rat& a7 = c.a(7).value();
    const Rat& a8 = c.a(8).value();

    ExitTriple out;
    out.r1.x = v.x;
    out.r1.y = std::max<Rat>(a1 - a4, v.x + a3 - a4);
    out.r2.x = std::max<Rat>(a2 - a4, v.y + a5 - a4);
    out.r2.y = v.y;
    out.r3.x = std::min<Rat>(a4 - a7, v.x - v.y + a4 - a8);
    out.r3.y = std::min<Rat>(a4 - a8, v.y - v.x + a4 - a7);
    return out;
}

}  // namespace detail

ExitTriple ray_exits(const CurveParams& c, const Point& v) {
    if (!region_contains(c, v)) {
        throw VertexOutsideRegionError("vertex (" + point_to_string(v) +
                                       ") is outside the dominance region of the "
                                       "x+y term; the exit formulas do not apply");
    }
    return detail::ray_exits_unchecked(c, v);
}

void ensure_on_cycle(const CurveParams& c, const Point& p, std::string_view label) {
    if (on_cycle(c, p)) {
        return;
    }
    auto eval = eval_poly(c.polynomial(), p);
    throw NotOnCycleError(point_to_string(p), eval.argmax,
                          std::string(label) + " (" + point_to_string(p) +
                              ") is not on the cycle");
}

namespace {

/// Index of the exit left over after matching {p, q} against the triple
/// as a sub-multiset, or -1 if it is not one. Handles p == q: both
/// copies must be matched by distinct exits. When the match succeeds the
/// line meets the cycle exactly in the three exits, so the residual
/// intersection r1 + r2 + r3 - p - q collapses to the remaining exit.
int leftover_exit(const ExitTriple& e, const Point& p, const Point& q) {
    const std::array<const Point*, 3> r = {&e.r1, &e.r2, &e.r3};
    for (int i = 0; i < 3; ++i) {
        if (!(*r[i] == p)) {
            continue;
        }
        for (int j = 0; j < 3; ++j) {
            if (j != i && *r[j] == q) {
                return 3 - i - j;
            }
        }
    }
    return -1;
}

}  // namespace

namespace detail {

ChordEngine::ChordEngine(const CurveParams& c, const CycleChart& chart,
                         const Rat& ccal, bool use_chart_region)
    : curve_(c), chart_(chart), ccal_(ccal), chart_region_(use_chart_region) {
    const Rat& a1 = c.a(1).value();
    const Rat& a2 = c.a(2).value();
    const Rat& a3 = c.a(3).value();
    const Rat& a4 = c.a(4).value();
    const Rat& a5 = c.a(5).value();
    const Rat& a7 = c.a(7).value();
    const Rat& a8 = c.a(8).value();
    y_floor_ = a1 - a4;
    x_floor_ = a2 - a4;
    y_slope_ = a3 - a4;
    x_slope_ = a5 - a4;
    x_cap_ = a4 - a7;
    y_cap_ = a4 - a8;
    diag_lo_ = chart.vertices[1].y - chart.vertices[1].x;
    diag_hi_ = chart.vertices[5].y - chart.vertices[5].x;
}

bool ChordEngine::vertex_in_region() {
    if (!chart_region_) {
        return region_contains(curve_, v_);
    }
    const Point& lo = chart_.vertices[0];
    const Point& hi = chart_.vertices[3];
    if (v_.x < lo.x || v_.y < lo.y || v_.x > hi.x || v_.y > hi.y) {
        return false;
    }
    t1_ = v_.y - v_.x;
    return t1_ >= diag_lo_ && t1_ <= diag_hi_;
}

void ChordEngine::compute_exits() {
    exits_.r1.x = v_.x;
    t1_ = v_.x + y_slope_;
    exits_.r1.y = std::max(y_floor_, t1_);
    t1_ = v_.y + x_slope_;
    exits_.r2.x = std::max(x_floor_, t1_);
    exits_.r2.y = v_.y;
    t1_ = v_.x - v_.y;
    t2_ = t1_ + y_cap_;
    exits_.r3.x = std::min(x_cap_, t2_);
    t2_ = x_cap_ - t1_;
    exits_.r3.y = std::min(y_cap_, t2_);
}

ChordStep ChordEngine::step(const Point& p, const std::optional<Rat>& s_p,
                            const Point& q, const std::optional<Rat>& s_q) {
    ChordStep out;
    // Doubling always goes through the arc route: tangency is undefined
    // for the chord construction.
    if (!(p == q)) {
        t1_ = p.x + q.y;
        t2_ = q.x + p.y;
        const Rat& c0 = std::max(t1_, t2_);
        v_.x = c0 - std::max(p.y, q.y);
        v_.y = c0 - std::max(p.x, q.x);
        if (vertex_in_region()) {
            compute_exits();
            int k = leftover_exit(exits_, p, q);
            if (k >= 0) {
                out.point = k == 0 ? exits_.r1 : k == 1 ? exits_.r2 : exits_.r3;
                out.formula_path = true;
                return out;
            }
        }
    }
    Rat s = reduce_mod(ccal_ - (s_p ? *s_p : arc_param(chart_, p)) -
                           (s_q ? *s_q : arc_param(chart_, q)),
                       chart_.total);
    out.point = arc_point(chart_, s);
    out.arc = std::move(s);
    out.formula_path = false;
    return out;
}

ChordStep chord_step(const CurveParams& c, const CycleChart& chart, const Rat& ccal,
                     const Point& p, const std::optional<Rat>& s_p, const Point& q,
                     const std::optional<Rat>& s_q, bool use_chart_region) {
    ChordEngine engine(c, chart, ccal, use_chart_region);
    return engine.step(p, s_p, q, s_q);
}

ThirdPointResult third_point_trusted(const CurveParams& c, const CycleChart& chart,
                                     const Rat& ccal, const Point& p, const Point& q,
                                     bool use_chart_region) {
    ChordStep step =
        chord_step(c, chart, ccal, p, std::nullopt, q, std::nullopt, use_chart_region);
    ThirdPointResult out;
    out.point = std::move(step.point);
    out.formula_path = step.formula_path;
    return out;
}

}  // namespace detail

ThirdPointResult third_point_detail(const CurveParams& c, const CycleChart& chart,
                                    const Rat& ccal, const Point& p, const Point& q) {
    ensure_on_cycle(c, p);
    ensure_on_cycle(c, q);
    return detail::third_point_trusted(c, chart, ccal, p, q, false);
}

Point third_point(const CurveParams& c, const CycleChart& chart, const Point& p,
                  const Point& q) {
    Rat ccal = calibrate_constant(c, chart);
    return third_point_detail(c, chart, ccal, p, q).point;
}

Point negate(const CycleChart& chart, const Point& theta, const Point& p) {
    Rat s_theta = arc_param(chart, theta);
    Rat s_p = arc_param(chart, p);
    return arc_point(chart, 2 * s_theta - s_p);
}

Point add_with(const CurveParams& c, const CycleChart& chart, const Rat& ccal,
               const Point& theta, const Point& p, const Point& q) {
    ensure_on_cycle(c, p);
    ensure_on_cycle(c, q);
    ensure_on_cycle(c, theta, "theta");
    detail::ChordEngine engine(c, chart, ccal, false);
    auto chord = engine.step(p, std::nullopt, q, std::nullopt);
    return engine.step(chord.point, chord.arc, theta, std::nullopt).point;
}

Point add(const CurveParams& c, const CycleChart& chart, const Point& theta,
          const Point& p, const Point& q) {
    Rat ccal = calibrate_constant(c, chart);
    return add_with(c, chart, ccal, theta, p, q);
}

}  // namespace tropqrt
