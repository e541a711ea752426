#pragma once

#include <optional>
#include <vector>

#include "tropqrt/curve.hpp"
#include "tropqrt/jacobian.hpp"

namespace tropqrt {

/// One run of the map: a curve, the zero point theta, the translation
/// point t, a start point p0, and a step count. theta, t and p0 must all
/// lie on the cycle; orbit() verifies this before iterating. bbox, when
/// present, only drives plotting.
struct Scenario {
    CurveParams curve;
    Point theta;
    Point t;
    Point p0;
    long long steps = 0;
    std::optional<Box> bbox;
};

/// Points P(0..steps) of an orbit together with their arc coordinates.
/// arcs[k+1] - arcs[k] is the same residue delta mod total for every k.
/// period is the first k > 0 with points[k] == points[0], when one occurs
/// within the recorded steps. on_cycle_flags records the invariant of the
/// map: every entry is expected to be true.
struct OrbitRecord {
    std::vector<Point> points;
    std::vector<ArcParam> arcs;
    Rat delta;
    std::optional<long long> period;
    std::vector<bool> on_cycle_flags;
};

/// One step of the map: P |-> P + t with zero theta, realized as two
/// chord constructions (through P and t, then through the result and
/// theta), each with the degeneracy fallback of third_point. theta, t, p
/// must be on the cycle.
Point qrt_step(const CurveParams& c, const CycleChart& chart, const Point& theta,
               const Point& t, const Point& p);

/// qrt_step with a precomputed collinear-sum constant.
Point qrt_step_with(const CurveParams& c, const CycleChart& chart, const Rat& ccal,
                    const Point& theta, const Point& t, const Point& p);

/// Iterates qrt_step s.steps times from s.p0, recording every point.
/// Throws NotOnCycleError if theta, t or p0 is off the cycle, and
/// propagates it if an iterate ever leaves the chart (which indicates a
/// fault: the map is closed on the cycle).
OrbitRecord orbit(const Scenario& s);

/// The per-step arc translation delta in [0, total): one step moves every
/// point by delta along the cycle. Computed by composing the two chord
/// constructions in arc coordinates at a generic start, so the
/// orientation sign comes from the actual map rather than a convention:
/// the composition sends s to s + s(t) - s(theta).
Rat translation_length(const CycleChart& chart, const Rat& ccal, const Point& theta,
                       const Point& t);

/// Minimal n >= 1 with n * delta divisible by chart.total: the exact
/// orbit period. With delta/total = u/w in lowest terms the answer is w,
/// and 1 when delta is a multiple of total.
long long period_of(const CycleChart& chart, const Rat& delta);

/// Closed form of the orbit: P(n) = arc_point(s(p0) + n * delta), for any
/// integer n including negative (the inverse map). Equals n iterations of
/// qrt_step without iterating.
Point elliptic_value(const CycleChart& chart, const Point& p0, const Rat& delta,
                     long long n);

}  // namespace tropqrt
