#include "tropqrt/curve.hpp"

#include <optional>
#include <stdexcept>

#include "tropqrt/errors.hpp"

namespace tropqrt {

namespace {

constexpr std::array<std::pair<int, int>, 10> kExponents = {
    {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}};

constexpr std::array<const char*, 6> kEdgeNames = {
    "bottom", "lower-right diagonal", "right", "top", "upper-left diagonal", "left"};

Rat term_value(const CurveParams& c, int i, const Point& p) {
    auto [xe, ye] = kExponents[static_cast<size_t>(i)];
    Rat v = c.a(i).value();
    for (int k = 0; k < xe; ++k) v += p.x;
    for (int k = 0; k < ye; ++k) v += p.y;
    return v;
}

// Scans the ten slots once; reports the max, whether the (1,1) term
// attains it, and whether the argmax has >= 2 elements.
struct MaxScan {
    Rat best;
    int count = 0;
    bool a4_attains = false;
};

MaxScan scan_terms(const CurveParams& c, const Point& p) {
    MaxScan scan;
    bool have = false;
    for (int i = 0; i < 10; ++i) {
        if (!c.a(i).is_finite()) continue;
        Rat v = term_value(c, i, p);
        if (!have || v > scan.best) {
            scan.best = v;
            scan.count = 1;
            scan.a4_attains = (i == 4);
            have = true;
        } else if (v == scan.best) {
            ++scan.count;
            if (i == 4) scan.a4_attains = true;
        }
    }
    return scan;
}

}  // namespace

CurveParams::CurveParams(std::array<TropScalar, 10> coeffs) : coeffs_(std::move(coeffs)) {
    for (int i : {1, 2, 3, 4, 5, 7, 8})
        if (!coeffs_[static_cast<size_t>(i)].is_finite())
            throw std::invalid_argument("curve coefficient a" + std::to_string(i) +
                                        " must be finite");
}

std::pair<int, int> CurveParams::exponents(int i) {
    return kExponents[static_cast<size_t>(i)];
}

TropPolynomial CurveParams::polynomial() const {
    std::vector<TropMonomial> terms;
    terms.reserve(10);
    for (int i = 0; i < 10; ++i) {
        if (!coeffs_[static_cast<size_t>(i)].is_finite()) continue;
        auto [xe, ye] = kExponents[static_cast<size_t>(i)];
        terms.push_back({xe, ye, coeffs_[static_cast<size_t>(i)]});
    }
    return TropPolynomial(std::move(terms));
}

StrictReport validate_strict(const CurveParams& c) {
    StrictReport report;
    report.pass = true;
    auto check = [&](int chain, int lhs, int rhs, const char* lname, const char* rname) {
        // a0 is the only slot that may sit on the left while -inf; a chain
        // starting there skips its leading comparison. A -inf right side
        // (a6 or a9) is strictly below any finite value, so the plain
        // comparison already reports it as satisfied.
        bool skipped = !c.a(lhs).is_finite();
        bool holds = !skipped && c.a(lhs) > c.a(rhs);
        report.comparisons.push_back({chain, lname, rname, holds, skipped});
        if (!skipped && !holds) report.pass = false;
    };
    check(0, 0, 1, "a0", "a1");
    check(0, 1, 3, "a1", "a3");
    check(0, 3, 6, "a3", "a6");
    check(1, 0, 2, "a0", "a2");
    check(1, 2, 5, "a2", "a5");
    check(1, 5, 9, "a5", "a9");
    check(2, 1, 4, "a1", "a4");
    check(2, 4, 8, "a4", "a8");
    check(3, 2, 4, "a2", "a4");
    check(3, 4, 7, "a4", "a7");
    check(4, 3, 7, "a3", "a7");
    check(5, 5, 8, "a5", "a8");
    return report;
}

CycleChart cycle_chart(const CurveParams& c) {
    const Rat a1 = c.a(1).value(), a2 = c.a(2).value(), a3 = c.a(3).value();
    const Rat a4 = c.a(4).value(), a5 = c.a(5).value(), a7 = c.a(7).value();
    const Rat a8 = c.a(8).value();

    CycleChart chart;
    chart.vertices = {Point{a2 - a4, a1 - a4}, Point{a1 - a3, a1 - a4},
                      Point{a4 - a7, a3 - a7}, Point{a4 - a7, a4 - a8},
                      Point{a5 - a8, a4 - a8}, Point{a2 - a4, a2 - a5}};
    chart.edge_lengths = {(a1 - a3) - (a2 - a4), (a4 - a7) - (a1 - a3),
                          (a4 - a8) - (a3 - a7), (a4 - a7) - (a5 - a8),
                          (a5 - a8) - (a2 - a4), (a2 - a5) - (a1 - a4)};

    chart.cum[0] = 0;
    for (int i = 0; i < 6; ++i) {
        if (chart.edge_lengths[static_cast<size_t>(i)] <= 0)
            throw DegenerateCycleError(
                i, std::string("degenerate cycle: ") + kEdgeNames[static_cast<size_t>(i)] +
                       " edge has lattice length " +
                       rational_to_string(chart.edge_lengths[static_cast<size_t>(i)]));
        chart.cum[static_cast<size_t>(i) + 1] =
            chart.cum[static_cast<size_t>(i)] + chart.edge_lengths[static_cast<size_t>(i)];
    }
    chart.total = chart.cum[6];
    return chart;
}

bool on_curve(const CurveParams& c, const Point& p) {
    return scan_terms(c, p).count >= 2;
}

bool on_cycle(const CurveParams& c, const Point& p) {
    MaxScan scan = scan_terms(c, p);
    return scan.a4_attains && scan.count >= 2;
}

bool region_contains(const CurveParams& c, const Point& p) {
    return scan_terms(c, p).a4_attains;
}

bool chart_is_cycle(const CurveParams& c) {
    const Rat& a1 = c.a(1).value();
    const Rat& a2 = c.a(2).value();
    const Rat& a3 = c.a(3).value();
    const Rat& a4 = c.a(4).value();
    const Rat& a5 = c.a(5).value();
    const Rat& a7 = c.a(7).value();
    const Rat& a8 = c.a(8).value();
    if (c.a(0).is_finite() && c.a(0).value() > a1 + a2 - a4) return false;
    if (c.a(6).is_finite() && c.a(6).value() > a3 + a7 - a4) return false;
    if (c.a(9).is_finite() && c.a(9).value() > a5 + a8 - a4) return false;
    return true;
}

bool region_contains(const CycleChart& chart, const Point& p) {
    const Point& v0 = chart.vertices[0];
    const Point& v1 = chart.vertices[1];
    const Point& v3 = chart.vertices[3];
    const Point& v5 = chart.vertices[5];
    const Rat diag = p.y - p.x;
    return p.x >= v0.x && p.y >= v0.y && p.x <= v3.x && p.y <= v3.y &&
           diag >= v1.y - v1.x && diag <= v5.y - v5.x;
}

std::vector<Segment> corner_locus(const TropPolynomial& f, const Box& bbox) {
    if (!bbox.nonempty()) throw std::invalid_argument("corner_locus: empty bbox");

    const auto& terms = f.terms();
    std::vector<Segment> pieces;

    for (size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].coeff.is_finite()) continue;
        for (size_t j = i + 1; j < terms.size(); ++j) {
            if (!terms[j].coeff.is_finite()) continue;

            // Tie line of terms i and j: nx*x + ny*y = cj - ci,
            // parametrized as p0 + t*d with d perpendicular to (nx, ny).
            const Rat ci = terms[i].coeff.value(), cj = terms[j].coeff.value();
            const int nx = terms[i].xexp - terms[j].xexp;
            const int ny = terms[i].yexp - terms[j].yexp;
            Point p0{0, 0};
            if (nx != 0)
                p0.x = (cj - ci) / nx;
            else
                p0.y = (cj - ci) / ny;
            const int dx = -ny, dy = nx;

            // Clip the parameter t to where term i dominates every other
            // term and the point stays inside bbox. Every constraint is
            // affine in t: A + B*t >= 0.
            std::optional<Rat> lo, hi;
            bool empty = false;
            auto clip = [&](const Rat& A, const Rat& B) {
                if (B == 0) {
                    if (A < 0) empty = true;
                    return;
                }
                Rat bound = -A / B;
                if (B > 0) {
                    if (!lo || bound > *lo) lo = bound;
                } else {
                    if (!hi || bound < *hi) hi = bound;
                }
            };

            for (size_t k = 0; k < terms.size() && !empty; ++k) {
                if (k == i || k == j || !terms[k].coeff.is_finite()) continue;
                const int ex = terms[i].xexp - terms[k].xexp;
                const int ey = terms[i].yexp - terms[k].yexp;
                Rat A = ci - terms[k].coeff.value() + ex * p0.x + ey * p0.y;
                Rat B = Rat(ex * dx + ey * dy);
                clip(A, B);
            }
            clip(p0.x - bbox.xmin, Rat(dx));
            clip(bbox.xmax - p0.x, Rat(-dx));
            clip(p0.y - bbox.ymin, Rat(dy));
            clip(bbox.ymax - p0.y, Rat(-dy));

            if (empty || !lo || !hi || !(*lo < *hi)) continue;
            pieces.push_back({Point{p0.x + *lo * dx, p0.y + *lo * dy},
                              Point{p0.x + *hi * dx, p0.y + *hi * dy}});
        }
    }
    return pieces;
}

std::vector<Segment> corner_locus(const CurveParams& c, const Box& bbox) {
    return corner_locus(c.polynomial(), bbox);
}

bool point_on_segment(const Segment& seg, const Point& p) {
    if (seg.a == seg.b) return p == seg.a;
    const Rat ux = seg.b.x - seg.a.x, uy = seg.b.y - seg.a.y;
    const Rat vx = p.x - seg.a.x, vy = p.y - seg.a.y;
    if (ux * vy != uy * vx) return false;
    const Rat dot = vx * ux + vy * uy;
    return dot >= 0 && dot <= ux * ux + uy * uy;
}

}  // namespace tropqrt
