#include "tropqrt/qrt.hpp"

#include <stdexcept>

#include "tropqrt/errors.hpp"
#include "tropqrt/group_law.hpp"

namespace tropqrt {

Point qrt_step_with(const CurveParams& c, const CycleChart& chart, const Rat& ccal,
                    const Point& theta, const Point& t, const Point& p) {
    return add_with(c, chart, ccal, theta, p, t);
}

Point qrt_step(const CurveParams& c, const CycleChart& chart, const Point& theta,
               const Point& t, const Point& p) {
    return qrt_step_with(c, chart, calibrate_constant(c, chart), theta, t, p);
}

Rat translation_length(const CycleChart& chart, const Rat& ccal, const Point& theta,
                       const Point& t) {
    const Rat s_t = arc_param(chart, t);
    const Rat s_theta = arc_param(chart, theta);
    // One step at arc position 0: chord through t, then chord through
    // theta. The sign of the result is whatever the composed map does.
    Rat mid = reduce_mod(ccal - s_t, chart.total);
    return reduce_mod(ccal - mid - s_theta, chart.total);
}

long long period_of(const CycleChart& chart, const Rat& delta) {
    Rat r = reduce_mod(delta, chart.total);
    if (r == 0) {
        return 1;
    }
    Rat ratio = r / chart.total;  // canonical, so the denominator is the order
    const mpz_class& den = ratio.get_den();
    if (!den.fits_slong_p()) {
        throw std::overflow_error("orbit period does not fit a machine integer");
    }
    return den.get_si();
}

Point elliptic_value(const CycleChart& chart, const Point& p0, const Rat& delta,
                     long long n) {
    return arc_point(chart, arc_param(chart, p0) + Rat(static_cast<long>(n)) * delta);
}

OrbitRecord orbit(const Scenario& s) {
    if (s.steps < 0) {
        throw std::invalid_argument("orbit: steps must be nonnegative");
    }
    CycleChart chart = cycle_chart(s.curve);
    ensure_on_cycle(s.curve, s.theta, "theta");
    ensure_on_cycle(s.curve, s.t, "t");
    ensure_on_cycle(s.curve, s.p0, "p0");

    const Rat ccal = calibrate_constant(s.curve, chart);
    // When the chart is exactly the cycle, dominance tests reduce to the
    // chart's half-planes and chart membership (established by arc_param
    // succeeding) already implies on_cycle; both shortcuts keep the orbit
    // loop off the ten-term scan.
    const bool chart_exact = chart_is_cycle(s.curve);

    OrbitRecord rec;
    rec.delta = translation_length(chart, ccal, s.theta, s.t);
    const size_t count = static_cast<size_t>(s.steps) + 1;
    rec.points.reserve(count);
    rec.arcs.reserve(count);
    rec.on_cycle_flags.reserve(count);

    const Rat s_t = arc_param(chart, s.t);
    const Rat s_theta = arc_param(chart, s.theta);
    detail::ChordEngine engine(s.curve, chart, ccal, chart_exact);

    Point p = s.p0;
    for (long long n = 0;; ++n) {
        rec.arcs.push_back(arc_param(chart, p));
        rec.on_cycle_flags.push_back(chart_exact ? true : on_cycle(s.curve, p));
        rec.points.push_back(std::move(p));
        if (!rec.period && n > 0 && rec.points.back() == rec.points.front()) {
            rec.period = n;
        }
        if (n == s.steps) {
            break;
        }
        auto half = engine.step(rec.points.back(), rec.arcs.back(), s.t, s_t);
        auto full = engine.step(half.point, half.arc, s.theta, s_theta);
        p = std::move(full.point);
    }
    return rec;
}

}  // namespace tropqrt
