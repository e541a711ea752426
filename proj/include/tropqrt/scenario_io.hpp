#pragma once

#include <iosfwd>
#include <string>

#include "tropqrt/qrt.hpp"

namespace tropqrt {

/// Parses a scenario document:
///   {"curve": {"a": [10 entries]}, "theta": [x,y], "t": [x,y],
///    "p0": [x,y], "steps": n, "bbox": [xmin,ymin,xmax,ymax]?}
/// Every numeric entry may be a JSON number or a "p/q" string; decimal
/// literals are converted exactly (0.2 becomes 1/5). null stands for
/// -inf and is accepted only at curve slots 0, 6 and 9. Verifies that
/// theta, t and p0 are on the cycle.
/// Throws ParseError for malformed documents and NotOnCycleError (with
/// the offending point and its argmax) for off-cycle named points.
Scenario parse_scenario(const std::string& text);

/// Parses only the "curve" key of a scenario document. Lets diagnostics
/// run on files whose scenario points are absent or off the cycle.
CurveParams parse_curve(const std::string& text);

/// CSV with header "n,x,y,s,on_cycle", one row per iterate, rationals as
/// "p/q", LF line endings, trailing newline. Byte-deterministic.
void emit_orbit_csv(const OrbitRecord& o, std::ostream& sink);

/// Standalone SVG 1.1 of the curve inside bbox: cycle edges with class
/// "cycle", the remaining corner-locus pieces with class "tentacle",
/// and, when an orbit is given, its distinct points as class "orbit"
/// markers labeled by first visit index. Byte-deterministic.
/// Throws std::invalid_argument when bbox is empty.
void emit_svg(const CurveParams& c, const OrbitRecord* orbit, const Box& bbox,
              std::ostream& sink);

}  // namespace tropqrt
