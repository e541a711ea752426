#pragma once

#include <array>
#include <vector>

#include "tropqrt/tropical.hpp"

namespace tropqrt {

/// Coefficients of the degree-3 family
///   max(a0, x+a1, y+a2, 2x+a3, x+y+a4, 2y+a5, 3x+a6, 2x+y+a7, x+2y+a8, 3y+a9).
/// a0, a6, a9 may be -inf; the other seven must be finite (every cycle
/// and group-law formula uses them). Construction enforces this.
class CurveParams {
public:
    explicit CurveParams(std::array<TropScalar, 10> coeffs);

    const TropScalar& a(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::array<TropScalar, 10>& coeffs() const { return coeffs_; }

    /// Exponent pair (xexp, yexp) of slot i.
    static std::pair<int, int> exponents(int i);

    /// The ten terms as a polynomial; -inf slots are dropped (they never
    /// participate in any maximum).
    TropPolynomial polynomial() const;

private:
    std::array<TropScalar, 10> coeffs_;
};

/// One comparison of the smoothness chains. `skipped` marks a comparison
/// whose left side is the permitted -inf slot a0; a -inf right side is
/// vacuously satisfied and reported as holding.
struct ChainComparison {
    int chain;  // 0..5
    const char* lhs;
    const char* rhs;
    bool holds;
    bool skipped;
};

struct StrictReport {
    std::vector<ChainComparison> comparisons;
    bool pass;  // all non-skipped comparisons hold
};

/// Checks the six strict inequality chains
///   a0>a1>a3>a6, a0>a2>a5>a9, a1>a4>a8, a2>a4>a7, a3>a7, a5>a8.
/// Diagnostic only: a failing report does not prevent chart construction,
/// and a passing one does not guarantee positive edge lengths. The two
/// conditions are independent; the group law gates on the chart.
StrictReport validate_strict(const CurveParams& c);

/// The hexagonal bounded cycle: the boundary of the region where the
/// x+y+a4 term dominates. Vertices are listed counterclockwise starting
/// at the bottom-left vertex (a2-a4, a1-a4); edge directions, in order,
/// are (1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1). Edge lengths are
/// lattice lengths: the scalar t with endpoint difference t*direction.
/// Arc coordinates along the cycle are measured in this metric from the
/// basepoint vertices[0].
struct CycleChart {
    std::array<Point, 6> vertices;
    std::array<Rat, 6> edge_lengths;
    std::array<Rat, 7> cum;  // cum[0] = 0, cum[6] = total
    Rat total;

    static constexpr std::array<std::pair<int, int>, 6> directions = {
        {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
};

/// Builds the chart from the tie lines of the (1,1) term with its six
/// neighbours. Throws DegenerateCycleError when an edge lattice length is
/// <= 0, which is exactly when the group law is undefined.
CycleChart cycle_chart(const CurveParams& c);

/// True iff p is on the curve: at least two terms attain the maximum.
bool on_curve(const CurveParams& c, const Point& p);

/// True iff p is on the bounded cycle: the (1,1) term attains the
/// maximum and at least one other term ties with it. Chart vertices are
/// included.
bool on_cycle(const CurveParams& c, const Point& p);

/// True iff the (1,1) term attains the maximum at p, i.e. p lies in the
/// closed region bounded by the cycle.
bool region_contains(const CurveParams& c, const Point& p);

/// Same region, decided purely from the chart's six bounding half-planes.
/// Agrees with the eval route exactly when chart_is_cycle holds.
bool region_contains(const CycleChart& chart, const Point& p);

/// True when the hexagonal chart is exactly the cycle of the curve, i.e.
/// none of the corner terms reaches past its hexagon corner:
///   a0 <= a1 + a2 - a4,  a6 <= a3 + a7 - a4,  a9 <= a5 + a8 - a4
/// (-inf corner coefficients satisfy their bound trivially). When this
/// fails the chart still builds, but near the offending corner its edges
/// leave the curve and the arc machinery stops describing the true cycle.
bool chart_is_cycle(const CurveParams& c);

/// All one-dimensional pieces of the corner locus of f clipped to bbox:
/// for every pair of terms, the points where both attain the maximum.
/// Pieces that clip to a single point are dropped. The union of the
/// returned segments is V(f) within bbox.
std::vector<Segment> corner_locus(const TropPolynomial& f, const Box& bbox);
std::vector<Segment> corner_locus(const CurveParams& c, const Box& bbox);

}  // namespace tropqrt
