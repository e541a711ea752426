#pragma once

#include <optional>
#include <string_view>

#include "tropqrt/curve.hpp"
#include "tropqrt/line.hpp"

namespace tropqrt {

/// The three points where the rays of a line vertex leave the cycle:
/// r1 straight down, r2 straight left, r3 along (1,1).
struct ExitTriple {
    Point r1;
    Point r2;
    Point r3;
};

/// Exit points for a vertex v in the closed (1,1)-dominance region:
///   r1 = (v.x, max(a1-a4, v.x + a3-a4))
///   r2 = (max(a2-a4, v.y + a5-a4), v.y)
///   r3 = (min(a4-a7, v.x-v.y+a4-a8), min(a4-a8, v.y-v.x+a4-a7)).
/// Throws VertexOutsideRegionError when v is outside; the formulas are
/// meaningless there.
ExitTriple ray_exits(const CurveParams& c, const Point& v);

struct ThirdPointResult {
    Point point;
    /// True when the exit triple of the chord vertex contained both
    /// inputs (with multiplicity) and the coordinate-sum rule was used;
    /// false when the arc-length fallback decided the result.
    bool formula_path;
};

/// The third intersection of the line through p and q with the cycle.
///
/// Formula route: take the vertex of the line through p and q, compute
/// its exit triple, and return (sum of exit coordinates) - p - q. The
/// route is valid only when the exit multiset contains both inputs; when
/// the line overlaps a cycle edge (p and q on one edge parallel to a line
/// ray, or p == q) the exits omit an input and the rule would leave the
/// cycle. Those configurations fall back to the arc-length oracle
///   s(result) = ccal - s(p) - s(q)  (mod total),
/// which is the same collinear-sum law stated in arc coordinates.
///
/// Both inputs must satisfy on_cycle; throws NotOnCycleError otherwise.
ThirdPointResult third_point_detail(const CurveParams& c, const CycleChart& chart,
                                    const Rat& ccal, const Point& p, const Point& q);

/// third_point_detail with the collinear-sum constant calibrated on the
/// spot. Prefer the detail overload when iterating.
Point third_point(const CurveParams& c, const CycleChart& chart, const Point& p,
                  const Point& q);

/// Throws NotOnCycleError (carrying p and its argmax) unless on_cycle(c, p).
/// `label` names the point in the message, e.g. "theta" or "p0".
void ensure_on_cycle(const CurveParams& c, const Point& p,
                     std::string_view label = "point");

namespace detail {

/// ray_exits without the region precondition; the caller guarantees v is
/// in the closed dominance region.
ExitTriple ray_exits_unchecked(const CurveParams& c, const Point& v);

/// third_point_detail without input validation; callers guarantee both
/// points are on the cycle. With use_chart_region the dominance test for
/// the chord vertex uses the chart's half-planes instead of a term scan,
/// which is valid exactly when chart_is_cycle(c) holds and saves most of
/// the per-step cost in orbit loops.
ThirdPointResult third_point_trusted(const CurveParams& c, const CycleChart& chart,
                                     const Rat& ccal, const Point& p, const Point& q,
                                     bool use_chart_region);

/// third_point_trusted for iteration: input arc coordinates may be passed
/// in when the caller already knows them, sparing the fallback its
/// arc_param walks, and the result carries its own arc coordinate when
/// the arc route produced it (the formula route copies an exit point and
/// leaves the arc unmeasured).
struct ChordStep {
    Point point;
    std::optional<Rat> arc;
    bool formula_path;
};

/// Chord construction with per-curve state hoisted out of the loop: the
/// exit-ray offsets and region bounds are derived from the coefficients
/// once, and scratch rationals are reused across calls instead of being
/// reallocated. One engine serves any number of steps on its curve.
class ChordEngine {
public:
    ChordEngine(const CurveParams& c, const CycleChart& chart, const Rat& ccal,
                bool use_chart_region);

    ChordStep step(const Point& p, const std::optional<Rat>& s_p, const Point& q,
                   const std::optional<Rat>& s_q);

private:
    bool vertex_in_region();
    void compute_exits();

    const CurveParams& curve_;
    const CycleChart& chart_;
    Rat ccal_;
    bool chart_region_;
    Rat y_floor_, x_floor_, y_slope_, x_slope_, x_cap_, y_cap_;
    Rat diag_lo_, diag_hi_;
    Point v_;
    ExitTriple exits_;
    Rat t1_, t2_;
};

ChordStep chord_step(const CurveParams& c, const CycleChart& chart, const Rat& ccal,
                     const Point& p, const std::optional<Rat>& s_p, const Point& q,
                     const std::optional<Rat>& s_q, bool use_chart_region);

}  // namespace detail

/// Inverse with respect to the zero theta:
///   s(result) = 2*s(theta) - s(p)  (mod total),
/// so that add(p, negate(p)) = theta.
Point negate(const CycleChart& chart, const Point& theta, const Point& p);

/// Addition with zero theta: the third intersection of the line through
/// third_point(p, q) and theta. Associative, commutative, with identity
/// theta and inverses given by negate; closed on the cycle.
Point add(const CurveParams& c, const CycleChart& chart, const Point& theta,
          const Point& p, const Point& q);

/// add with a precomputed collinear-sum constant.
Point add_with(const CurveParams& c, const CycleChart& chart, const Rat& ccal,
               const Point& theta, const Point& p, const Point& q);

}  // namespace tropqrt
