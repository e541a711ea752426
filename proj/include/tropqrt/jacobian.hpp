#pragma once

#include "tropqrt/curve.hpp"

namespace tropqrt {

/// Arc coordinate on the cycle: the lattice length travelled from the
/// chart basepoint, counterclockwise, reduced into [0, total).
using ArcParam = Rat;

/// Cumulative lattice length from the basepoint to p. Membership is
/// decided through the chart's edges, so the whole arc-length route is
/// independent of the exit-point formulas it is used to check. Throws
/// NotOnCycleError when p lies on no edge.
ArcParam arc_param(const CycleChart& chart, const Point& p);

/// Inverse of arc_param: walks the edges until the cumulative length
/// reaches s (s is reduced mod total first, so any rational is accepted).
Point arc_point(const CycleChart& chart, const Rat& s);

/// The collinear-sum constant: the residue mod total of
/// s(r1) + s(r2) + s(r3) for the exits of any line vertex inside the
/// (1,1)-dominance region. Computed at the centroid of the chart; if an
/// exit lands on a chart vertex the centroid is nudged by (eps, 2*eps),
/// eps = (min edge length)/16, halving eps while the nudge leaves the
/// region. Independent of the vertex chosen.
Rat calibrate_constant(const CurveParams& c, const CycleChart& chart);

/// The third collinear point, in arc coordinates:
///   s(result) = ccal - s(p) - s(q)  (mod total).
/// This is the oracle route: it covers every configuration, including
/// lines that overlap a cycle edge, where the exit-point formulas do not
/// apply.
Point third_point_oracle(const CycleChart& chart, const Rat& ccal, const Point& p,
                         const Point& q);

}  // namespace tropqrt
