#include "indiv/transforms.hpp"

#include <cmath>

#include "indiv/detail/overloaded.hpp"

namespace indiv {

namespace {

using detail::overloaded;

struct ParameterSpec {
    std::set<std::string> required;
    std::set<std::string> optional;
};

const ParameterSpec& parameter_spec(TransformKind kind)
{
    static const std::map<TransformKind, ParameterSpec> specs{
        {TransformKind::Shear2d, {{"shift"}, {"base_x", "base_y", "base_angle"}}},
        {TransformKind::MoveApex, {{"x", "y", "z"}, {}}},
        {TransformKind::UnrollDisk, {{"n"}, {}}},
        {TransformKind::TwistColumn, {{"rate"}, {}}},
        {TransformKind::MeridianUnfold, {{"n"}, {}}},
        {TransformKind::UnfoldRevolution, {{}, {}}},
    };
    return specs.at(kind);
}

int whole(double value, const char* name)
{
    if (!(value == std::floor(value)) || std::abs(value) > 1e9) {
        throw GeometryError(ErrorKind::InvalidArgument, std::string(name) + " must be an integer");
    }
    return static_cast<int>(value);
}

void require_mesh_size(int n, int min, bool even)
{
    if (n < min || (even && n % 2 != 0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "n must be " + std::string(even ? "even and " : "") +
                                                            ">= " + std::to_string(min));
    }
}

[[noreturn]] void wrong_input(TransformKind kind, const char* expected)
{
    throw GeometryError(ErrorKind::InvalidArgument,
                        std::string(to_string(kind)) + " expects " + expected);
}

} // namespace

std::string_view to_string(TransformKind kind) noexcept
{
    switch (kind) {
    case TransformKind::Shear2d: return "shear2d";
    case TransformKind::MoveApex: return "move-apex";
    case TransformKind::UnrollDisk: return "unroll-disk";
    case TransformKind::TwistColumn: return "twist-column";
    case TransformKind::MeridianUnfold: return "meridian-unfold";
    case TransformKind::UnfoldRevolution: return "unfold-revolution";
    }
    return "unknown";
}

std::string_view to_string(Quantity quantity) noexcept
{
    switch (quantity) {
    case Quantity::Area: return "area";
    case Quantity::Volume: return "volume";
    case Quantity::LateralArea: return "lateral-area";
    }
    return "unknown";
}

const std::set<Quantity>& preserved_quantities(TransformKind kind)
{
    static const std::map<TransformKind, std::set<Quantity>> table{
        {TransformKind::Shear2d, {Quantity::Area}},
        {TransformKind::MoveApex, {Quantity::Volume}},
        {TransformKind::UnrollDisk, {Quantity::Area}},
        {TransformKind::TwistColumn, {Quantity::Volume}},
        {TransformKind::MeridianUnfold, {Quantity::Volume, Quantity::LateralArea}},
        {TransformKind::UnfoldRevolution, {Quantity::Volume, Quantity::LateralArea}},
    };
    return table.at(kind);
}

Transform Transform::make(TransformKind kind, std::map<std::string, double> parameters)
{
    const ParameterSpec& spec = parameter_spec(kind);
    for (const auto& [name, value] : parameters) {
        if (!spec.required.contains(name) && !spec.optional.contains(name)) {
            throw GeometryError(ErrorKind::InvalidArgument,
                                "unknown parameter '" + name + "' for " + std::string(to_string(kind)));
        }
        if (!std::isfinite(value)) {
            throw GeometryError(ErrorKind::InvalidArgument, "parameter '" + name + "' must be finite");
        }
    }
    for (const std::string& name : spec.required) {
        if (!parameters.contains(name)) {
            throw GeometryError(ErrorKind::InvalidArgument,
                                "missing parameter '" + name + "' for " + std::string(to_string(kind)));
        }
    }
    if (kind == TransformKind::UnrollDisk) {
        require_mesh_size(whole(parameters.at("n"), "n"), 3, false);
    }
    if (kind == TransformKind::MeridianUnfold) {
        require_mesh_size(whole(parameters.at("n"), "n"), 4, true);
    }
    return Transform{kind, std::move(parameters), preserved_quantities(kind)};
}

double Transform::parameter(const std::string& name) const
{
    const auto it = parameters.find(name);
    return it == parameters.end() ? 0.0 : it->second;
}

Figure apply(const Transform& t, const Figure& figure)
{
    switch (t.kind) {
    case TransformKind::Shear2d: {
        const auto* region = std::get_if<PlanarRegion>(&figure);
        if (region == nullptr) {
            wrong_input(t.kind, "a planar region");
        }
        const double angle = t.parameter("base_angle");
        const Line2 base({t.parameter("base_x"), t.parameter("base_y")}, {std::cos(angle), std::sin(angle)});
        return shear_region(*region, base, t.parameter("shift"));
    }
    case TransformKind::MoveApex: {
        const auto* solid = std::get_if<Solid>(&figure);
        const Cone* cone = solid != nullptr ? std::get_if<Cone>(solid) : nullptr;
        if (cone == nullptr) {
            wrong_input(t.kind, "a cone");
        }
        return Solid{move_apex(*cone, {t.parameter("x"), t.parameter("y"), t.parameter("z")})};
    }
    case TransformKind::UnrollDisk: {
        const auto* region = std::get_if<PlanarRegion>(&figure);
        const Disk* disk = region != nullptr ? std::get_if<Disk>(region) : nullptr;
        if (disk == nullptr) {
            wrong_input(t.kind, "a disk");
        }
        return PlanarRegion{unroll_disk(*disk, static_cast<int>(t.parameter("n")))};
    }
    case TransformKind::TwistColumn: {
        const auto* solid = std::get_if<Solid>(&figure);
        const Cylinder* cyl = solid != nullptr ? std::get_if<Cylinder>(solid) : nullptr;
        if (cyl == nullptr) {
            wrong_input(t.kind, "a cylinder");
        }
        return twist_column(*cyl, t.parameter("rate"));
    }
    case TransformKind::MeridianUnfold: {
        const auto* solid = std::get_if<Solid>(&figure);
        const Sphere* sphere = solid != nullptr ? std::get_if<Sphere>(solid) : nullptr;
        if (sphere == nullptr) {
            wrong_input(t.kind, "a sphere");
        }
        return Solid{meridian_unfold(*sphere, static_cast<int>(t.parameter("n")))};
    }
    case TransformKind::UnfoldRevolution: {
        if (const auto* profile = std::get_if<Profile>(&figure)) {
            return Solid{unfold_revolution(*profile)};
        }
        if (const auto* solid = std::get_if<Solid>(&figure)) {
            if (const auto* rev = std::get_if<SolidOfRevolution>(solid)) {
                return Solid{unfold_revolution(rev->profile)};
            }
        }
        wrong_input(t.kind, "a profile or solid of revolution");
    }
    }
    throw GeometryError(ErrorKind::InvalidArgument, "unknown transform");
}

PlanarRegion shear_region(const PlanarRegion& region, const Line2& base, double shift_per_unit_distance)
{
    const auto* poly = std::get_if<Polygon>(&region);
    if (poly == nullptr) {
        throw GeometryError(ErrorKind::UnsupportedRegion, "shear is only defined for polygons");
    }
    if (!std::isfinite(shift_per_unit_distance)) {
        throw GeometryError(ErrorKind::InvalidArgument, "shift must be finite");
    }
    std::vector<Point2> out;
    out.reserve(poly->size());
    for (const Point2& p : poly->vertices()) {
        out.push_back(p + (shift_per_unit_distance * base.signed_distance(p)) * base.direction());
    }
    return Polygon(std::move(out));
}

Cone move_apex(const Cone& cone, Point3 new_apex)
{
    if (!std::isfinite(new_apex.x) || !std::isfinite(new_apex.y) || !std::isfinite(new_apex.z)) {
        throw GeometryError(ErrorKind::InvalidArgument, "apex must be finite");
    }
    const double old_h = cone.apex.z;
    if (std::abs(new_apex.z - old_h) > 1e-12 * std::abs(old_h)) {
        throw GeometryError(ErrorKind::ApexHeightChanged, "apex must stay in its plane parallel to the base");
    }
    return Cone{cone.base, new_apex};
}

Sawtooth sawtooth(const Disk& disk, int n)
{
    require_mesh_size(n, 3, false);
    if (!std::isfinite(disk.radius) || !(disk.radius > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateRegion, "disk radius must be positive");
    }
    const double half = pi / n;
    Sawtooth saw;
    saw.chord = 2.0 * disk.radius * std::sin(half);
    saw.apothem = disk.radius * std::cos(half);
    saw.teeth.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        saw.teeth.emplace_back(std::vector<Point2>{
            {i * saw.chord, 0.0}, {(i + 1) * saw.chord, 0.0}, {(i + 0.5) * saw.chord, saw.apothem}});
    }
    return saw;
}

Polygon unroll_disk(const Disk& disk, int n)
{
    const Sawtooth saw = sawtooth(disk, n);
    std::vector<Point2> ring;
    ring.reserve(2 * static_cast<std::size_t>(n) + 1);
    ring.push_back({0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        ring.push_back({(i + 0.5) * saw.chord, saw.apothem});
        ring.push_back({(i + 1) * saw.chord, 0.0});
    }
    return Polygon(std::move(ring));
}

std::vector<Polygon> gather_teeth(const Sawtooth& saw, double apex_x)
{
    const Line2 baseline = Line2::horizontal(0.0);
    std::vector<Polygon> out;
    out.reserve(saw.teeth.size());
    for (std::size_t i = 0; i < saw.teeth.size(); ++i) {
        const double tooth_apex = (static_cast<double>(i) + 0.5) * saw.chord;
        const double shift = (apex_x - tooth_apex) / saw.apothem;
        out.push_back(std::get<Polygon>(shear_region(saw.teeth[i], baseline, shift)));
    }
    return out;
}

Solid twist_column(const Cylinder& cylinder, double twist_rate)
{
    if (!std::isfinite(twist_rate)) {
        throw GeometryError(ErrorKind::InvalidArgument, "twist rate must be finite");
    }
    if (twist_rate == 0.0) {
        return cylinder;
    }
    return TwistedColumn{cylinder.base, cylinder.height, twist_rate};
}

UnfoldedSphere meridian_unfold(const Sphere& sphere, int n)
{
    require_mesh_size(n, 4, true);
    if (!std::isfinite(sphere.radius) || !(sphere.radius > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateSolid, "radius must be positive");
    }
    return UnfoldedSphere{sphere.radius, n};
}

HeightFieldCylinder unfold_revolution(const Profile& profile)
{
    return HeightFieldCylinder{profile.region(), 0.0, 2.0 * pi};
}

} // namespace indiv
