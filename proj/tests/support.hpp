#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tropqrt/curve.hpp"

namespace tropqrt::test {

inline TropScalar fin(int v) { return TropScalar(v); }
inline TropScalar fin(const Rat& v) { return TropScalar(v); }
inline TropScalar ninf() { return TropScalar::neg_inf(); }

/// max(x+0, y+0, 2x-1, x+y, 2y-1, 2x+y-2, x+2y-2): unit hexagon with
/// vertices (0,0),(1,0),(2,1),(2,2),(1,2),(0,1), L = 6.
inline CurveParams example_curve() {
    return CurveParams({ninf(), fin(0), fin(0), fin(-1), fin(0), fin(-1), ninf(),
                        fin(-2), fin(-2), ninf()});
}

/// Passes all strict chains; same unit hexagon shifted to (2,2)..(4,4),
/// L = 6. All three corner coefficients sit exactly on their bounds.
inline CurveParams strict_curve() {
    return CurveParams({fin(5), fin(3), fin(3), fin(0), fin(1), fin(0), fin(-4),
                        fin(-3), fin(-3), fin(-4)});
}

/// Irregular hexagon, edge lengths 3,4,3,3,4,3, L = 20.
inline CurveParams wide_curve() {
    return CurveParams({ninf(), fin(0), fin(0), fin(-2), fin(1), fin(-2), ninf(),
                        fin(-5), fin(-5), ninf()});
}

/// Non-integer coefficients, L = 67/10.
inline CurveParams ragged_curve() {
    return CurveParams({ninf(), fin(Rat(1, 2)), fin(Rat(1, 3)), fin(-1), fin(Rat(1, 5)),
                        fin(-1), ninf(), fin(-2), fin(Rat(-7, 3)), ninf()});
}

/// Strict chains hold with strict margins; corner coefficients strictly
/// inside their bounds (trivalent corner vertices).
inline CurveParams roomy_curve() {
    return CurveParams({fin(Rat(9, 2)), fin(3), fin(3), fin(0), fin(1), fin(0),
                        fin(Rat(-9, 2)), fin(-3), fin(-3), fin(Rat(-9, 2))});
}

/// Top edge has lattice length 0: no cycle.
inline CurveParams degenerate_curve() {
    return CurveParams({ninf(), fin(0), fin(0), fin(-1), fin(0), fin(-1), ninf(),
                        fin(-2), fin(-3), ninf()});
}

inline std::vector<CurveParams> fixture_curves() {
    return {example_curve(), strict_curve(), wide_curve(), ragged_curve(), roomy_curve()};
}

inline Rat random_rat(std::mt19937_64& rng, int lo, int hi, int max_den = 12) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    int den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(static_cast<long>(lo) * den,
                                                 static_cast<long>(hi) * den);
    Rat r(num_dist(rng), den);
    r.canonicalize();
    return r;
}

/// Uniform-ish arc position: k/denominator of the way around the cycle.
inline Rat random_arc(std::mt19937_64& rng, const Rat& total) {
    std::uniform_int_distribution<long> num(0, 720 - 1);
    return total * num(rng) / 720;
}

/// Random hexagon built from a free base vertex, four free edge lengths
/// (the other two follow from closure) and a free a4; the corner
/// coefficients are -inf or pushed up to at most their swallowing bound.
inline CurveParams random_valid_curve(std::mt19937_64& rng) {
    for (;;) {
        Rat t0 = random_rat(rng, 1, 4), t1 = random_rat(rng, 1, 4);
        Rat t2 = random_rat(rng, 1, 4), t4 = random_rat(rng, 1, 4);
        Rat t3 = t0 + t1 - t4, t5 = t1 + t2 - t4;
        if (t3 <= 0 || t5 <= 0) {
            continue;
        }
        Rat p = random_rat(rng, -3, 3), q = random_rat(rng, -3, 3);
        Rat a4 = random_rat(rng, -2, 2);
        Rat a1 = q + a4, a2 = p + a4;
        Rat a3 = a1 - p - t0;
        Rat a7 = a4 - p - t0 - t1;
        Rat a8 = a4 - q - t1 - t2;
        Rat a5 = a2 - q - t5;

        std::uniform_int_distribution<int> coin(0, 3);
        auto corner = [&](const Rat& bound) {
            if (coin(rng) == 0) {
                return ninf();  // term absent
            }
            if (coin(rng) == 0) {
                return fin(bound);  // exactly at the swallowing bound
            }
            return fin(bound - random_rat(rng, 0, 3));
        };
        return CurveParams({corner(a1 + a2 - a4), fin(a1), fin(a2), fin(a3), fin(a4),
                            fin(a5), corner(a3 + a7 - a4), fin(a7), fin(a8),
                            corner(a5 + a8 - a4)});
    }
}

/// First point along v + t*dir, t >= 0, where some term catches up with
/// the x+y term: the independent oracle for ray_exits. Works term by
/// term with exact catch-up times; no knowledge of the hexagon.
inline Point march_exit(const CurveParams& c, const Point& v, int dx, int dy) {
    const Rat base = c.a(4).value() + v.x + v.y;
    const int rate4 = dx + dy;
    std::optional<Rat> best;
    for (int i = 0; i < 10; ++i) {
        if (i == 4 || !c.a(i).is_finite()) {
            continue;
        }
        auto [xe, ye] = CurveParams::exponents(i);
        const int rate = xe * dx + ye * dy;
        if (rate <= rate4) {
            continue;  // never catches up
        }
        Rat val = c.a(i).value() + xe * v.x + ye * v.y;
        Rat t = (base - val) / (rate - rate4);
        if (t < 0) {
            throw std::logic_error("march_exit: start outside the dominance region");
        }
        if (!best || t < *best) {
            best = t;
        }
    }
    if (!best) {
        throw std::logic_error("march_exit: ray never leaves the region");
    }
    return {v.x + *best * dx, v.y + *best * dy};
}

}  // namespace tropqrt::test
