#include "tropqrt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tropqrt/errors.hpp"
#include "tropqrt/group_law.hpp"
#include "tropqrt/scenario_io.hpp"

namespace tropqrt {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Point parse_point_arg(const std::string& text, const char* flag) {
    size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw ParseError(std::string(flag) + " must be X,Y");
    }
    try {
        return {parse_rational(text.substr(0, comma)),
                parse_rational(text.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(flag) + ": " + e.what());
    }
}

void write_or_print(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << bytes;
    if (!out.flush()) {
        throw Error("cannot write file: " + path);
    }
}

int cmd_validate(const std::string& file) {
    CurveParams c = parse_curve(read_file(file));
    StrictReport report = validate_strict(c);
    for (const ChainComparison& cmp : report.comparisons) {
        std::cout << cmp.lhs << '>' << cmp.rhs << ": "
                  << (cmp.skipped ? "skipped (-inf left side)"
                                  : (cmp.holds ? "ok" : "FAIL"))
                  << '\n';
    }
    std::cout << "strict chains: " << (report.pass ? "PASS" : "FAIL") << '\n';
    try {
        CycleChart chart = cycle_chart(c);
        std::cout << "cycle: OK (L = " << rational_to_string(chart.total) << ")\n";
    } catch (const DegenerateCycleError& e) {
        std::cout << "cycle: DEGENERATE (" << e.what() << ")\n";
        return 1;
    }
    return 0;
}

int cmd_cycle(const std::string& file) {
    Scenario s = parse_scenario(read_file(file));
    CycleChart chart = cycle_chart(s.curve);
    Rat ccal = calibrate_constant(s.curve, chart);
    Rat delta = translation_length(chart, ccal, s.theta, s.t);

    std::cout << "vertices:";
    for (const Point& v : chart.vertices) {
        std::cout << " (" << point_to_string(v) << ")";
    }
    std::cout << "\nedge lengths:";
    for (const Rat& l : chart.edge_lengths) {
        std::cout << ' ' << rational_to_string(l);
    }
    std::cout << "\nL = " << rational_to_string(chart.total) << '\n';
    std::cout << "ccal = " << rational_to_string(ccal) << '\n';
    std::cout << "delta = " << rational_to_string(delta) << '\n';
    std::cout << "period = " << period_of(chart, delta) << '\n';
    return 0;
}

int cmd_orbit(const std::string& file, long long steps_override, bool has_steps,
              const std::string& csv_path) {
    Scenario s = parse_scenario(read_file(file));
    if (has_steps) {
        s.steps = steps_override;
    }
    OrbitRecord rec = orbit(s);
    std::ostringstream out;
    emit_orbit_csv(rec, out);
    write_or_print(csv_path, out.str());
    return 0;
}

int cmd_plot(const std::string& file, const std::string& svg_path, bool with_orbit) {
    Scenario s = parse_scenario(read_file(file));
    CycleChart chart = cycle_chart(s.curve);
    Box bbox;
    if (s.bbox) {
        bbox = *s.bbox;
    } else {
        // Chart extent plus one unit of margin; vertices 0 and 3 are the
        // bottom-left and top-right corners.
        bbox = Box{chart.vertices[0].x - 1, chart.vertices[0].y - 1,
                   chart.vertices[3].x + 1, chart.vertices[3].y + 1};
    }
    std::ostringstream out;
    if (with_orbit) {
        OrbitRecord rec = orbit(s);
        emit_svg(s.curve, &rec, bbox, out);
    } else {
        emit_svg(s.curve, nullptr, bbox, out);
    }
    write_or_print(svg_path, out.str());
    return 0;
}

int cmd_add(const std::string& file, const std::string& p_text, const std::string& q_text) {
    Scenario s = parse_scenario(read_file(file));
    CycleChart chart = cycle_chart(s.curve);
    Point p = parse_point_arg(p_text, "--p");
    Point q = parse_point_arg(q_text, "--q");
    std::cout << point_to_string(add(s.curve, chart, s.theta, p, q)) << '\n';
    return 0;
}

int cmd_neg(const std::string& file, const std::string& p_text) {
    Scenario s = parse_scenario(read_file(file));
    CycleChart chart = cycle_chart(s.curve);
    Point p = parse_point_arg(p_text, "--p");
    ensure_on_cycle(s.curve, p, "--p");
    std::cout << point_to_string(negate(chart, s.theta, p)) << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"tropical elliptic curves and the QRT translation map"};
    app.require_subcommand(1);

    std::string file;
    long long steps = 0;
    std::string csv_path, svg_path, p_text, q_text;
    bool with_orbit = false;

    CLI::App* validate = app.add_subcommand("validate", "strict-chain and cycle diagnostics");
    validate->add_option("file", file, "scenario file")->required();

    CLI::App* cycle = app.add_subcommand("cycle", "cycle geometry and translation data");
    cycle->add_option("file", file, "scenario file")->required();

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "iterate the map, emit CSV");
    orbit_cmd->add_option("file", file, "scenario file")->required();
    CLI::Option* steps_opt = orbit_cmd->add_option("--steps", steps, "override step count");
    orbit_cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");

    CLI::App* plot = app.add_subcommand("plot", "emit an SVG of the curve");
    plot->add_option("file", file, "scenario file")->required();
    plot->add_option("--svg", svg_path, "write SVG here instead of stdout");
    plot->add_flag("--orbit", with_orbit, "include orbit markers");

    CLI::App* add_cmd = app.add_subcommand("add", "add two cycle points");
    add_cmd->add_option("file", file, "scenario file")->required();
    add_cmd->add_option("--p", p_text, "first point X,Y")->required();
    add_cmd->add_option("--q", q_text, "second point X,Y")->required();

    CLI::App* neg_cmd = app.add_subcommand("neg", "negate a cycle point");
    neg_cmd->add_option("file", file, "scenario file")->required();
    neg_cmd->add_option("--p", p_text, "point X,Y")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(file);
        if (app.got_subcommand(cycle)) return cmd_cycle(file);
        if (app.got_subcommand(orbit_cmd))
            return cmd_orbit(file, steps, steps_opt->count() > 0, csv_path);
        if (app.got_subcommand(plot)) return cmd_plot(file, svg_path, with_orbit);
        if (app.got_subcommand(add_cmd)) return cmd_add(file, p_text, q_text);
        if (app.got_subcommand(neg_cmd)) return cmd_neg(file, p_text);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}

}  // namespace tropqrt
