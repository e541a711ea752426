#include "tropqrt/scenario_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "tropqrt/errors.hpp"
#include "tropqrt/group_law.hpp"

namespace tropqrt {

namespace {

using json = nlohmann::json;

// SAX handler that builds a DOM in which every non-integer number keeps
// its raw source token (as a string), so "0.2" can be turned into the
// exact fraction 1/5 instead of the nearest double.
class RawNumberDom {
public:
    json take() { return std::move(root_); }

    bool null() { return place(json(nullptr)), true; }
    bool boolean(bool v) { return place(json(v)), true; }
    bool number_integer(std::int64_t v) { return place(json(v)), true; }
    bool number_unsigned(std::uint64_t v) { return place(json(v)), true; }
    bool number_float(double, const std::string& raw) { return place(json(raw)), true; }
    bool string(std::string& v) { return place(json(v)), true; }
    bool binary(json::binary_t& v) { return place(json(v)), true; }
    bool start_object(std::size_t) { return stack_.push_back(&place(json::object())), true; }
    bool key(std::string& k) { return key_ = k, true; }
    bool end_object() { return stack_.pop_back(), true; }
    bool start_array(std::size_t) { return stack_.push_back(&place(json::array())), true; }
    bool end_array() { return stack_.pop_back(), true; }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
        throw ParseError(std::string("scenario JSON: ") + ex.what());
    }

private:
    json& place(json v) {
        if (stack_.empty()) {
            root_ = std::move(v);
            return root_;
        }
        json& top = *stack_.back();
        if (top.is_object()) {
            return top[key_] = std::move(v);
        }
        top.push_back(std::move(v));
        return top.back();
    }

    json root_;
    std::vector<json*> stack_;  // containers still being filled
    std::string key_;
};

json parse_document(const std::string& text) {
    RawNumberDom dom;
    json::sax_parse(text, &dom);
    json doc = dom.take();
    if (!doc.is_object()) {
        throw ParseError("scenario JSON: top level must be an object");
    }
    return doc;
}

Rat rat_field(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) {
            return Rat(static_cast<long>(v.get<std::int64_t>()));
        }
        if (v.is_number_unsigned()) {
            return Rat(static_cast<unsigned long>(v.get<std::uint64_t>()));
        }
        if (v.is_string()) {
            return parse_rational(v.get<std::string>());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + " must be a number or a \"p/q\" string");
}

const json& require_key(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("scenario is missing \"") + name + "\"");
    }
    return *it;
}

Point point_field(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) {
        throw ParseError(where + " must be a two-element array");
    }
    return {rat_field(v[0], where + "[0]"), rat_field(v[1], where + "[1]")};
}

CurveParams curve_from(const json& curve) {
    if (!curve.is_object()) {
        throw ParseError("\"curve\" must be an object");
    }
    const json& a = require_key(curve, "a");
    if (!a.is_array() || a.size() != 10) {
        throw ParseError("curve.a must be an array of 10 coefficients");
    }
    std::array<TropScalar, 10> coeffs;
    for (int i = 0; i < 10; ++i) {
        const json& entry = a[static_cast<size_t>(i)];
        const std::string where = "curve.a[" + std::to_string(i) + "]";
        if (entry.is_null()) {
            if (i != 0 && i != 6 && i != 9) {
                throw ParseError(where +
                                 " must be finite; null is only allowed at indices 0, 6, 9");
            }
            coeffs[static_cast<size_t>(i)] = TropScalar::neg_inf();
        } else {
            coeffs[static_cast<size_t>(i)] = TropScalar(rat_field(entry, where));
        }
    }
    return CurveParams(coeffs);
}

}  // namespace

CurveParams parse_curve(const std::string& text) {
    json doc = parse_document(text);
    return curve_from(require_key(doc, "curve"));
}

Scenario parse_scenario(const std::string& text) {
    json doc = parse_document(text);
    CurveParams curve = curve_from(require_key(doc, "curve"));
    Point theta = point_field(require_key(doc, "theta"), "theta");
    Point t = point_field(require_key(doc, "t"), "t");
    Point p0 = point_field(require_key(doc, "p0"), "p0");

    const json& steps = require_key(doc, "steps");
    if (!(steps.is_number_integer() || steps.is_number_unsigned()) ||
        steps.get<std::int64_t>() < 0) {
        throw ParseError("steps must be a nonnegative integer");
    }

    std::optional<Box> bbox;
    if (auto it = doc.find("bbox"); it != doc.end() && !it->is_null()) {
        if (!it->is_array() || it->size() != 4) {
            throw ParseError("bbox must be [xmin, ymin, xmax, ymax]");
        }
        bbox = Box{rat_field((*it)[0], "bbox[0]"), rat_field((*it)[1], "bbox[1]"),
                   rat_field((*it)[2], "bbox[2]"), rat_field((*it)[3], "bbox[3]")};
    }

    Scenario s{std::move(curve), theta, t, p0, steps.get<std::int64_t>(), bbox};
    ensure_on_cycle(s.curve, s.theta, "theta");
    ensure_on_cycle(s.curve, s.t, "t");
    ensure_on_cycle(s.curve, s.p0, "p0");
    return s;
}

void emit_orbit_csv(const OrbitRecord& o, std::ostream& sink) {
    sink << "n,x,y,s,on_cycle\n";
    for (size_t n = 0; n < o.points.size(); ++n) {
        sink << n << ',' << rational_to_string(o.points[n].x) << ','
             << rational_to_string(o.points[n].y) << ',' << rational_to_string(o.arcs[n])
             << ',' << (o.on_cycle_flags[n] ? "true" : "false") << '\n';
    }
}

namespace {

constexpr int kScale = 100;
constexpr int kMargin = 20;

struct Viewport {
    Rat xmin, ymax;
    std::string x(const Rat& v) const { return decimal_string(kMargin + (v - xmin) * kScale); }
    std::string y(const Rat& v) const { return decimal_string(kMargin + (ymax - v) * kScale); }
};

bool segment_on_cycle(const CurveParams& c, const Segment& seg) {
    // Corner-locus pieces live on single tie lines, and every line meets
    // the cycle's edges in at most one sub-segment, so endpoints plus the
    // midpoint decide membership exactly.
    Point mid{(seg.a.x + seg.b.x) / 2, (seg.a.y + seg.b.y) / 2};
    return on_cycle(c, seg.a) && on_cycle(c, seg.b) && on_cycle(c, mid);
}

}  // namespace

void emit_svg(const CurveParams& c, const OrbitRecord* orbit, const Box& bbox,
              std::ostream& sink) {
    if (!bbox.nonempty()) {
        throw std::invalid_argument("emit_svg: bbox is empty");
    }
    Viewport vp{bbox.xmin, bbox.ymax};
    std::string width = decimal_string((bbox.xmax - bbox.xmin) * kScale + 2 * kMargin);
    std::string height = decimal_string((bbox.ymax - bbox.ymin) * kScale + 2 * kMargin);

    sink << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
         << width << ' ' << height << "\" width=\"" << width << "\" height=\"" << height
         << "\">\n";
    sink << "<style>\n"
            ".cycle { stroke: #1a1a1a; stroke-width: 4; stroke-linecap: round; }\n"
            ".tentacle { stroke: #8a8a8a; stroke-width: 1.5; stroke-linecap: round; }\n"
            ".orbit { fill: #c0392b; }\n"
            ".orbit-label { font: 14px sans-serif; fill: #c0392b; }\n"
            "</style>\n";

    std::vector<Segment> tentacles;
    std::vector<Segment> cycle_pieces;
    for (const Segment& seg : corner_locus(c, bbox)) {
        (segment_on_cycle(c, seg) ? cycle_pieces : tentacles).push_back(seg);
    }
    for (const Segment& seg : tentacles) {
        sink << "<line class=\"tentacle\" x1=\"" << vp.x(seg.a.x) << "\" y1=\""
             << vp.y(seg.a.y) << "\" x2=\"" << vp.x(seg.b.x) << "\" y2=\"" << vp.y(seg.b.y)
             << "\"/>\n";
    }
    for (const Segment& seg : cycle_pieces) {
        sink << "<line class=\"cycle\" x1=\"" << vp.x(seg.a.x) << "\" y1=\"" << vp.y(seg.a.y)
             << "\" x2=\"" << vp.x(seg.b.x) << "\" y2=\"" << vp.y(seg.b.y) << "\"/>\n";
    }

    if (orbit != nullptr) {
        std::vector<std::pair<Point, size_t>> marks;  // distinct points, first index
        for (size_t n = 0; n < orbit->points.size(); ++n) {
            bool seen = false;
            for (const auto& m : marks) {
                if (m.first == orbit->points[n]) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                marks.emplace_back(orbit->points[n], n);
            }
        }
        for (const auto& [p, n] : marks) {
            sink << "<circle class=\"orbit\" cx=\"" << vp.x(p.x) << "\" cy=\"" << vp.y(p.y)
                 << "\" r=\"5\"/>\n";
            sink << "<text class=\"orbit-label\" x=\"" << decimal_string(
                        kMargin + (p.x - bbox.xmin) * kScale + 8)
                 << "\" y=\"" << decimal_string(kMargin + (bbox.ymax - p.y) * kScale - 8)
                 << "\">" << n << "</text>\n";
        }
    }
    sink << "</svg>\n";
}

}  // namespace tropqrt
