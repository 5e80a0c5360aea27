#include "igeo/shapes.hpp"

#include <cmath>

namespace igeo {

using indiv::Monotonicity;
using indiv::pi;

namespace {

double root(double r, double t) { return std::sqrt(std::max(0.0, r * r - t * t)); }

} // namespace

const std::vector<std::string>& bounds_shapes()
{
    static const std::vector<std::string> names{"disk", "sphere", "cone", "hoof"};
    return names;
}

const std::vector<std::string>& oracle_shapes()
{
    static const std::vector<std::string> names{"disk", "sphere", "hoof", "torus"};
    return names;
}

indiv::WidthFunction disk_width(double r)
{
    return {[r](double y) { return 2.0 * root(r, y); }, -r, r, {0.0},
            {Monotonicity::Increasing, Monotonicity::Decreasing}};
}

indiv::SectionFunction sphere_sections(double r)
{
    return {[r](double z) { return pi * std::max(0.0, r * r - z * z); }, -r, r, {0.0},
            {Monotonicity::Increasing, Monotonicity::Decreasing}};
}

indiv::SectionFunction cone_sections(double r, double h)
{
    return {[r, h](double z) {
                const double s = 1.0 - z / h;
                return pi * r * r * s * s;
            },
            0.0, h, {}, {Monotonicity::Decreasing}};
}

// Sections perpendicular to x: a rectangle of width 2 sqrt(r^2 - x^2) and
// height (h / r) x, largest at x = r / sqrt(2).
indiv::SectionFunction hoof_sections(double r, double h)
{
    return {[r, h](double x) { return (h / r) * x * 2.0 * root(r, x); }, 0.0, r, {r / std::sqrt(2.0)},
            {Monotonicity::Increasing, Monotonicity::Decreasing}};
}

// Section at height z is an annulus with radii major -+ sqrt(r^2 - z^2).
indiv::SectionFunction torus_sections(double major, double r)
{
    return {[major, r](double z) { return 4.0 * pi * major * root(r, z); }, -r, r, {0.0},
            {Monotonicity::Increasing, Monotonicity::Decreasing}};
}

double closed_form(const ShapeSpec& s)
{
    if (s.name == "disk") {
        return pi * s.r * s.r;
    }
    if (s.name == "sphere") {
        return 4.0 * pi * s.r * s.r * s.r / 3.0;
    }
    if (s.name == "cone") {
        return pi * s.r * s.r * s.h / 3.0;
    }
    if (s.name == "hoof") {
        return 2.0 * s.r * s.r * s.h / 3.0;
    }
    if (s.name == "torus") {
        return 2.0 * pi * pi * s.major * s.r * s.r;
    }
    throw indiv::GeometryError(indiv::ErrorKind::InvalidArgument, "unknown shape '" + s.name + "'");
}

bool is_planar(const ShapeSpec& shape) { return shape.name == "disk"; }

indiv::PiecewiseMonotone slice_function(const ShapeSpec& s)
{
    if (s.name == "disk") {
        return disk_width(s.r);
    }
    if (s.name == "sphere") {
        return sphere_sections(s.r);
    }
    if (s.name == "cone") {
        return cone_sections(s.r, s.h);
    }
    if (s.name == "hoof") {
        return hoof_sections(s.r, s.h);
    }
    if (s.name == "torus") {
        return torus_sections(s.major, s.r);
    }
    throw indiv::GeometryError(indiv::ErrorKind::InvalidArgument, "unknown shape '" + s.name + "'");
}

indiv::MeasureInterval certified_bounds(const ShapeSpec& s, int slices)
{
    if (is_planar(s)) {
        return indiv::area_bounds(disk_width(s.r), slices);
    }
    const indiv::PiecewiseMonotone f = slice_function(s);
    return indiv::volume_bounds(indiv::SectionFunction(f), slices);
}

} // namespace igeo
