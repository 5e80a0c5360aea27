#include "igeo/cli.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "igeo/report.hpp"
#include "igeo/shapes.hpp"
#include "igeo/svg.hpp"
#include "indiv/dsl.hpp"
#include "indiv/oracle.hpp"
#include "indiv/solids.hpp"
#include "indiv/transforms.hpp"

namespace igeo {

using nlohmann::ordered_json;

namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string pad(std::string s, std::size_t width)
{
    s.append(s.size() < width ? width - s.size() : 1, ' ');
    return s;
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw InputError("cannot read '" + path + "'");
    }
    return ss.str();
}

// Text or JSON Lines output for one command.
class Output {
public:
    Output(std::ostream& out, std::ostream& err, bool report, std::string command, ordered_json inputs)
        : out_(out), err_(err)
    {
        if (report) {
            writer_.emplace(out, std::move(command), std::move(inputs));
        }
    }

    bool report() const { return writer_.has_value(); }

    void record(std::string_view type, ordered_json fields)
    {
        if (writer_) {
            writer_->record(type, std::move(fields));
        }
    }

    int fail(int code, std::string_view kind, const std::string& message, ordered_json extra = ordered_json::object())
    {
        err_ << "igeo: " << message << '\n';
        if (writer_) {
            ordered_json fields{{"kind", kind}, {"message", message}};
            for (auto& [k, v] : extra.items()) {
                fields[k] = std::move(v);
            }
            writer_->record("error", std::move(fields));
            writer_->summary(code, false);
        }
        return code;
    }

    int finish(bool pass)
    {
        const int code = pass ? exit_ok : exit_check_failed;
        if (writer_) {
            writer_->summary(code, pass);
        }
        return code;
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    std::optional<ReportWriter> writer_;
};

// Maps library and input failures onto exit codes.
int guarded(Output& o, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const InputError& e) {
        return o.fail(exit_io, "io", e.what());
    } catch (const indiv::GeometryError& e) {
        return o.fail(exit_geometry, "geometry", e.what());
    }
}

// ---- check ----------------------------------------------------------------

struct CheckOptions {
    std::string script;
    std::string format = "text";
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err)
{
    Output o(out, err, opt.format == "report", "check", {{"script", opt.script}});
    std::string source;
    try {
        source = read_text(opt.script);
    } catch (const InputError& e) {
        return o.fail(exit_io, "io", e.what());
    }

    indiv::dsl::RunReport run;
    try {
        run = indiv::dsl::run_script(source);
    } catch (const indiv::dsl::ParseError& e) {
        return o.fail(exit_usage, "parse", opt.script + ":" + std::to_string(e.line()) + ":" +
                                               std::to_string(e.column()) + ": expected " + e.expected() +
                                               ", found " + e.found(),
                      {{"line", e.line()}, {"column", e.column()}});
    } catch (const indiv::dsl::EvalError& e) {
        return o.fail(exit_geometry, std::string(to_string(e.kind())), opt.script + ": " + e.what(),
                      {{"line", e.span().line}, {"column", e.span().column}});
    }

    std::size_t failed = 0;
    if (!o.report()) {
        out << pad("where", 10) << pad("left", 20) << pad("right", 20) << pad("|diff|", 14) << pad("tol", 10)
            << "status\n";
    }
    for (const auto& r : run.records) {
        failed += r.pass ? 0 : 1;
        o.record("assertion", {{"line", r.span.line},
                               {"column", r.span.column},
                               {"left", r.left},
                               {"right", r.right},
                               {"difference", r.difference},
                               {"tolerance", r.tolerance},
                               {"pass", r.pass}});
        if (!o.report()) {
            out << pad(std::to_string(r.span.line) + ":" + std::to_string(r.span.column), 10)
                << pad(num(r.left), 20) << pad(num(r.right), 20) << pad(num(r.difference), 14)
                << pad(num(r.tolerance), 10) << (r.pass ? "ok" : "FAIL") << '\n';
        }
    }
    if (!o.report()) {
        out << run.records.size() << " assertions, " << failed << " failed\n";
    }
    return o.finish(run.pass);
}

// ---- bounds ---------------------------------------------------------------

struct BoundsOptions {
    ShapeSpec shape;
    int slices = 1000;
    std::string format = "text";
};

std::string describe(const ShapeSpec& s)
{
    std::string d = s.name + " r=" + num(s.r);
    if (s.name == "cone" || s.name == "hoof") {
        d += " h=" + num(s.h);
    }
    if (s.name == "torus") {
        d += " major=" + num(s.major);
    }
    return d;
}

int cmd_bounds(const BoundsOptions& opt, std::ostream& out, std::ostream& err)
{
    Output o(out, err, opt.format == "report", "bounds",
             {{"shape", opt.shape.name}, {"r", opt.shape.r}, {"h", opt.shape.h}, {"slices", opt.slices}});
    return guarded(o, [&] {
        const indiv::MeasureInterval m = certified_bounds(opt.shape, opt.slices);
        const double exact = closed_form(opt.shape);
        const bool pass = m.contains(exact);
        const std::string measure = is_planar(opt.shape) ? "area" : "volume";
        o.record("interval", {{"name", measure},
                              {"lo", m.lo},
                              {"hi", m.hi},
                              {"width", m.width()},
                              {"slabs", m.slabs},
                              {"method", to_string(m.method)},
                              {"closed_form", exact},
                              {"pass", pass}});
        if (!o.report()) {
            out << pad("shape", 10) << describe(opt.shape) << '\n'
                << pad("measure", 10) << measure << '\n'
                << pad("slices", 10) << m.slabs << '\n'
                << pad("method", 10) << to_string(m.method) << '\n'
                << pad("lo", 10) << num(m.lo) << '\n'
                << pad("hi", 10) << num(m.hi) << '\n'
                << pad("width", 10) << num(m.width()) << '\n'
                << pad("closed", 10) << num(exact) << '\n'
                << pad("encloses", 10) << (pass ? "yes" : "NO") << '\n';
        }
        return o.finish(pass);
    });
}

// ---- guldin ---------------------------------------------------------------

struct GuldinOptions {
    std::string profile;
    bool verify = false;
    std::uint64_t seed = 42;
    std::uint64_t samples = 1000000;
    std::string format = "text";
};

constexpr int surface_quadrature_n = 4096;

int cmd_guldin(const GuldinOptions& opt, std::ostream& out, std::ostream& err)
{
    ordered_json inputs{{"profile", opt.profile}, {"verify", opt.verify}};
    if (opt.verify) {
        inputs["seed"] = opt.seed;
        inputs["samples"] = opt.samples;
    }
    Output o(out, err, opt.format == "report", "guldin", std::move(inputs));
    return guarded(o, [&] {
        const ProfileFile file = read_profile_file(opt.profile);
        const indiv::Profile profile{indiv::Polygon(file.points)};
        const indiv::Curve edge = indiv::boundary(profile.region());
        const indiv::Point2 c = indiv::centroid_region(profile.region());
        const indiv::Point2 cb = indiv::centroid_curve(edge);
        const double vol = indiv::guldin_volume(profile);
        const double surf = indiv::guldin_surface(edge, indiv::revolution_axis());

        const std::pair<const char*, double> values[] = {
            {"area", indiv::area(profile.region())},
            {"perimeter", indiv::perimeter(edge)},
            {"centroid_rho", c.x},
            {"centroid_z", c.y},
            {"boundary_centroid_rho", cb.x},
            {"boundary_centroid_z", cb.y},
            {"guldin_volume", vol},
            {"guldin_surface", surf},
        };
        if (!o.report()) {
            out << pad("profile", 24) << (file.name.empty() ? opt.profile : file.name) << '\n';
        }
        for (const auto& [name, value] : values) {
            o.record("value", {{"name", name}, {"value", value}});
            if (!o.report()) {
                out << pad(name, 24) << num(value) << '\n';
            }
        }

        bool pass = true;
        if (opt.verify) {
            const indiv::Solid solid = indiv::SolidOfRevolution{profile};
            const indiv::oracle::Estimate e = indiv::oracle::mc_volume(
                [&](indiv::Point3 p) { return indiv::contains(solid, p); }, indiv::bounding_box(solid), opt.samples,
                opt.seed);
            const bool vol_ok = std::abs(e.mean - vol) <= 5.0 * e.standard_error;
            const double q = indiv::oracle::boundary_integral(
                edge, [](indiv::Point2 p) { return 2.0 * indiv::pi * p.x; }, surface_quadrature_n);
            const bool surf_ok = std::abs(q - surf) <= 1e-6 * std::max(1.0, std::abs(surf));
            pass = vol_ok && surf_ok;
            o.record("estimate", {{"name", "volume"},
                                  {"mean", e.mean},
                                  {"standard_error", e.standard_error},
                                  {"samples", e.samples},
                                  {"seed", e.seed},
                                  {"reference", vol},
                                  {"pass", vol_ok}});
            o.record("quadrature", {{"name", "surface"},
                                    {"value", q},
                                    {"n", surface_quadrature_n},
                                    {"reference", surf},
                                    {"pass", surf_ok}});
            if (!o.report()) {
                out << pad("mc_volume", 24) << num(e.mean) << " +- " << num(e.standard_error) << " ("
                    << e.samples << " samples, seed " << e.seed << ") " << (vol_ok ? "ok" : "FAIL") << '\n'
                    << pad("quadrature_surface", 24) << num(q) << ' ' << (surf_ok ? "ok" : "FAIL") << '\n';
            }
        }
        return o.finish(pass);
    });
}

// ---- oracle ---------------------------------------------------------------

struct OracleOptions {
    ShapeSpec shape;
    std::string method = "mc";
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    std::string format = "text";
};

indiv::Solid oracle_solid(const ShapeSpec& s)
{
    if (s.name == "sphere") {
        return indiv::Sphere{s.r};
    }
    if (s.name == "hoof") {
        return indiv::Hoof{s.r, s.h};
    }
    if (!(s.major >= s.r)) {
        throw indiv::GeometryError(indiv::ErrorKind::AxisCrossing, "torus needs major >= r");
    }
    return indiv::SolidOfRevolution{indiv::Profile(indiv::Disk{{s.major, 0.0}, s.r})};
}

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err)
{
    ordered_json inputs{{"shape", opt.shape.name}, {"r", opt.shape.r}, {"method", opt.method},
                        {"samples", opt.samples}};
    if (opt.shape.name == "hoof") {
        inputs["h"] = opt.shape.h;
    }
    if (opt.shape.name == "torus") {
        inputs["major"] = opt.shape.major;
    }
    if (opt.method == "mc") {
        inputs["seed"] = opt.seed;
    }
    Output o(out, err, opt.format == "report", "oracle", std::move(inputs));
    return guarded(o, [&] {
        const double exact = closed_form(opt.shape);
        const std::string measure = is_planar(opt.shape) ? "area" : "volume";
        if (opt.method == "riemann") {
            if (opt.samples > static_cast<std::uint64_t>(INT_MAX)) {
                throw indiv::GeometryError(indiv::ErrorKind::InvalidArgument, "too many slabs for riemann");
            }
            const int n = static_cast<int>(opt.samples);
            const double v = is_planar(opt.shape)
                                 ? indiv::oracle::riemann_area(disk_width(opt.shape.r), n)
                                 : indiv::oracle::riemann_volume(indiv::SectionFunction(slice_function(opt.shape)), n);
            const bool pass = std::abs(v - exact) <= 1e-6 * std::max(1.0, std::abs(exact));
            o.record("quadrature",
                     {{"name", measure}, {"value", v}, {"n", n}, {"reference", exact}, {"pass", pass}});
            if (!o.report()) {
                out << pad("shape", 12) << describe(opt.shape) << '\n'
                    << pad("method", 12) << "riemann midpoint, n=" << n << '\n'
                    << pad(measure, 12) << num(v) << '\n'
                    << pad("closed", 12) << num(exact) << '\n'
                    << pad("error", 12) << num(v - exact) << '\n';
            }
            return o.finish(pass);
        }

        indiv::oracle::Estimate e;
        if (is_planar(opt.shape)) {
            const indiv::PlanarRegion disk = indiv::Disk{{}, opt.shape.r};
            e = indiv::oracle::mc_area([&](indiv::Point2 p) { return indiv::contains(disk, p); },
                                       indiv::bounding_box(disk), opt.samples, opt.seed);
        } else {
            const indiv::Solid solid = oracle_solid(opt.shape);
            e = indiv::oracle::mc_volume([&](indiv::Point3 p) { return indiv::contains(solid, p); },
                                         indiv::bounding_box(solid), opt.samples, opt.seed);
        }
        const bool pass = std::abs(e.mean - exact) <= 5.0 * e.standard_error;
        o.record("estimate", {{"name", measure},
                              {"mean", e.mean},
                              {"standard_error", e.standard_error},
                              {"samples", e.samples},
                              {"seed", e.seed},
                              {"reference", exact},
                              {"pass", pass}});
        if (!o.report()) {
            out << pad("shape", 12) << describe(opt.shape) << '\n'
                << pad("method", 12) << "monte carlo, " << e.samples << " samples, seed " << e.seed << '\n'
                << pad(measure, 12) << num(e.mean) << " +- " << num(e.standard_error) << '\n'
                << pad("closed", 12) << num(exact) << '\n'
                << pad("within 5se", 12) << (pass ? "yes" : "NO") << '\n';
        }
        return o.finish(pass);
    });
}

// ---- svg ------------------------------------------------------------------

struct SvgOptions {
    std::string construction;
    std::string out_path;
    ShapeSpec shape{"disk"};
    int n = 16;
    int slices = 12;
    std::string profile;
    std::string format = "text";
};

constexpr double svg_width_px = 640.0;

SvgDocument draw_unroll(const SvgOptions& opt)
{
    const double r = opt.shape.r;
    const indiv::Disk disk{{}, r};
    const indiv::Sawtooth saw = indiv::sawtooth(disk, opt.n);
    const double length = saw.baseline_length();
    const indiv::Box2 window{{-2.4 * r, -0.8 * r}, {length + 0.2 * r, 1.6 * r}};
    SvgDocument doc(window, svg_width_px / (window.hi.x - window.lo.x), "disk unrolled into " +
                                                                              std::to_string(opt.n) + " teeth");
    doc.circle({-1.2 * r, 0.5 * r}, r, "disk");
    for (const indiv::Polygon& tooth : saw.teeth) {
        doc.polygon(tooth.vertices(), "tooth");
    }
    doc.line({0.0, 0.0}, {length, 0.0}, "baseline");
    doc.text({0.0, -0.5 * r}, "baseline " + num(length) + " = " + std::to_string(opt.n) + " chords", "label");
    return doc;
}

SvgDocument draw_bounds(const SvgOptions& opt)
{
    const indiv::PiecewiseMonotone f = slice_function(opt.shape);
    const std::vector<double> t = indiv::slab_boundaries(f, opt.slices);
    const double a = f.lower();
    const double b = f.upper();
    const std::string title = describe(opt.shape) + ", " + std::to_string(t.size() - 1) + " slabs";

    if (is_planar(opt.shape)) {
        const double r = opt.shape.r;
        const indiv::Box2 window{{-1.15 * r, -1.15 * r}, {1.15 * r, 1.15 * r}};
        SvgDocument doc(window, svg_width_px / (window.hi.x - window.lo.x), title);
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const double hi = std::max(f(t[i]), f(t[i + 1])) / 2.0;
            doc.rect({-hi, t[i]}, {hi, t[i + 1]}, "outer");
        }
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const double lo = std::min(f(t[i]), f(t[i + 1])) / 2.0;
            doc.rect({-lo, t[i]}, {lo, t[i + 1]}, "inner");
        }
        doc.circle({}, r, "curve");
        return doc;
    }

    constexpr int samples = 200;
    std::vector<indiv::Point2> graph;
    double top = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double x = a + (b - a) * i / samples;
        graph.push_back({x, f(x)});
        top = std::max(top, graph.back().y);
    }
    const double margin = 0.08 * std::max(b - a, top);
    const indiv::Box2 window{{a - margin, -margin}, {b + margin, top + margin}};
    SvgDocument doc(window, svg_width_px / (window.hi.x - window.lo.x), title);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        doc.rect({t[i], 0.0}, {t[i + 1], std::max(f(t[i]), f(t[i + 1]))}, "outer");
    }
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        doc.rect({t[i], 0.0}, {t[i + 1], std::min(f(t[i]), f(t[i + 1]))}, "inner");
    }
    doc.polyline(graph, "curve");
    doc.line({a, 0.0}, {b, 0.0}, "axis");
    return doc;
}

SvgDocument draw_guldin(const SvgOptions& opt)
{
    const ProfileFile file = read_profile_file(opt.profile);
    const indiv::Profile profile{indiv::Polygon(file.points)};
    const indiv::Box2 box = indiv::bounding_box(profile.region());
    const double span = std::max(box.hi.x, box.hi.y - box.lo.y);
    const double margin = 0.1 * span;
    const indiv::Box2 window{{-margin, box.lo.y - margin}, {box.hi.x + margin, box.hi.y + margin}};
    SvgDocument doc(window, svg_width_px / (window.hi.x - window.lo.x),
                    "meridian section " + (file.name.empty() ? opt.profile : file.name));
    doc.line({0.0, window.lo.y}, {0.0, window.hi.y}, "axis");
    doc.polygon(std::get<indiv::Polygon>(profile.region()).vertices(), "profile");
    const indiv::Point2 c = indiv::centroid_region(profile.region());
    const indiv::Point2 cb = indiv::centroid_curve(indiv::boundary(profile.region()));
    doc.circle(c, 0.02 * span, "centroid");
    doc.circle(cb, 0.03 * span, "boundary-centroid");
    return doc;
}

int cmd_svg(const SvgOptions& opt, std::ostream& out, std::ostream& err)
{
    ordered_json inputs{{"construction", opt.construction}, {"out", opt.out_path}};
    if (opt.construction == "unroll") {
        inputs["r"] = opt.shape.r;
        inputs["n"] = opt.n;
    } else if (opt.construction == "bounds") {
        inputs["shape"] = opt.shape.name;
        inputs["r"] = opt.shape.r;
        inputs["h"] = opt.shape.h;
        inputs["slices"] = opt.slices;
    } else {
        inputs["profile"] = opt.profile;
    }
    Output o(out, err, opt.format == "report", "svg", std::move(inputs));
    return guarded(o, [&] {
        SvgDocument doc = opt.construction == "unroll"   ? draw_unroll(opt)
                          : opt.construction == "bounds" ? draw_bounds(opt)
                                                         : draw_guldin(opt);
        const std::string bytes = doc.str();
        {
            std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
            if (!file || !(file << bytes) || !file.flush()) {
                throw InputError("cannot write '" + opt.out_path + "'");
            }
        }
        ordered_json elements = ordered_json::object();
        for (const auto& [cls, count] : doc.counts()) {
            elements[cls] = count;
        }
        o.record("file", {{"path", opt.out_path}, {"bytes", bytes.size()}, {"elements", elements}});
        if (!o.report()) {
            out << "wrote " << opt.out_path << " (" << bytes.size() << " bytes)\n";
        }
        return o.finish(true);
    });
}

} // namespace

ProfileFile read_profile_file(const std::string& path)
{
    const std::string text = read_text(path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON");
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        throw InputError("'" + path + "' needs a \"points\" array");
    }
    ProfileFile file;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw InputError("'" + path + "': \"name\" must be a string");
        }
        file.name = doc["name"].get<std::string>();
    }
    for (const auto& p : doc["points"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw InputError("'" + path + "': each point must be [rho, z]");
        }
        const indiv::Point2 q{p[0].get<double>(), p[1].get<double>()};
        if (!std::isfinite(q.x) || !std::isfinite(q.y)) {
            throw InputError("'" + path + "': coordinates must be finite");
        }
        file.points.push_back(q);
    }
    if (file.points.size() < 3) {
        throw InputError("'" + path + "': a profile needs at least 3 points");
    }
    if (file.points.front() == file.points.back()) {
        throw InputError("'" + path + "': the polyline closes implicitly; drop the repeated last point");
    }
    return file;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Measures of plane figures and solids by slicing, with certified bounds and oracles", "igeo"};
    app.require_subcommand(1);
    // --h is the height option, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", std::string(tool_version()));
    const auto formats = CLI::IsMember({"text", "report"});

    CheckOptions check;
    auto* c = app.add_subcommand("check", "Run a construction script and report its assertions");
    c->add_option("script", check.script, "Script file (.igeo)")->required();
    c->add_option("--format", check.format, "text or report (JSON Lines)")->check(formats);

    BoundsOptions bounds;
    auto* b = app.add_subcommand("bounds", "Certified inner/outer slab bounds for a standard shape");
    b->add_option("--shape", bounds.shape.name, "disk, sphere, cone or hoof")
        ->required()
        ->check(CLI::IsMember(bounds_shapes()));
    b->add_option("--r", bounds.shape.r, "Radius")->check(CLI::PositiveNumber);
    b->add_option("--h", bounds.shape.h, "Height (cone, hoof)")->check(CLI::PositiveNumber);
    b->add_option("--slices", bounds.slices, "Number of uniform slabs")->check(CLI::Range(1, 100000000));
    b->add_option("--format", bounds.format)->check(formats);

    GuldinOptions guldin;
    auto* g = app.add_subcommand("guldin", "Volume and surface of revolution of a profile file");
    g->add_option("profile", guldin.profile, "Profile file (JSON)")->required();
    g->add_flag("--verify", guldin.verify, "Cross-check against Monte Carlo and quadrature oracles");
    g->add_option("--seed", guldin.seed, "Oracle seed");
    g->add_option("--samples", guldin.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    g->add_option("--format", guldin.format)->check(formats);

    OracleOptions oracle;
    auto* r = app.add_subcommand("oracle", "Brute-force estimate of a standard measure");
    r->add_option("--shape", oracle.shape.name, "disk, sphere, hoof or torus")
        ->required()
        ->check(CLI::IsMember(oracle_shapes()));
    r->add_option("--method", oracle.method, "mc or riemann")->check(CLI::IsMember({"mc", "riemann"}));
    r->add_option("--samples", oracle.samples, "Samples (mc) or slabs (riemann)")->check(CLI::PositiveNumber);
    r->add_option("--seed", oracle.seed, "Monte Carlo seed");
    r->add_option("--r", oracle.shape.r, "Radius (tube radius for the torus)")->check(CLI::PositiveNumber);
    r->add_option("--h", oracle.shape.h, "Hoof height")->check(CLI::PositiveNumber);
    r->add_option("--major", oracle.shape.major, "Torus centre-line radius")->check(CLI::PositiveNumber);
    r->add_option("--format", oracle.format)->check(formats);

    SvgOptions svg;
    auto* s = app.add_subcommand("svg", "Draw a construction as SVG");
    s->add_option("--construction", svg.construction, "unroll, bounds or guldin")
        ->required()
        ->check(CLI::IsMember({"unroll", "bounds", "guldin"}));
    s->add_option("--out", svg.out_path, "Output file")->required();
    s->add_option("--r", svg.shape.r, "Radius")->check(CLI::PositiveNumber);
    s->add_option("--h", svg.shape.h, "Height (cone, hoof)")->check(CLI::PositiveNumber);
    s->add_option("--n", svg.n, "Teeth (unroll)")->check(CLI::Range(3, 4096));
    s->add_option("--shape", svg.shape.name, "Shape (bounds)")->check(CLI::IsMember(bounds_shapes()));
    s->add_option("--slices", svg.slices, "Slabs (bounds)")->check(CLI::Range(1, 4096));
    s->add_option("--profile", svg.profile, "Profile file (guldin)");
    s->add_option("--format", svg.format)->check(formats);

    std::vector<std::string> argv_storage{"igeo"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& a : argv_storage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (s->parsed() && svg.construction == "guldin" && svg.profile.empty()) {
            throw CLI::RequiredError("--profile");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (c->parsed()) {
        return cmd_check(check, out, err);
    }
    if (b->parsed()) {
        return cmd_bounds(bounds, out, err);
    }
    if (g->parsed()) {
        return cmd_guldin(guldin, out, err);
    }
    if (r->parsed()) {
        return cmd_oracle(oracle, out, err);
    }
    return cmd_svg(svg, out, err);
}

} // namespace igeo
